from setuptools import setup, find_packages

setup(
    name='TorusConcordance',
    version='0.1.0',
    description='Exact concordance invariants of torus knots: staircases, Upsilon, and epsilon-order certificates for subgroups with vanishing Upsilon.',
    license="Apache License, Version 2.0",
    packages=find_packages(where='src'),
    package_dir={'': 'src'},
    package_data={'TorusConcordance.schemas': ['*.schema.json']},
    install_requires=[
        'sympy>=1.12',
        'jsonschema>=4.18',
    ],
    extras_require={
        'test': ['pytest>=7.0', 'hypothesis>=6.80'],
    },
    entry_points={
        'console_scripts': [
            'torus-concordance = TorusConcordance.cli.app:main',
        ],
    },
    python_requires=">=3.10",
    classifiers=[
        'Programming Language :: Python :: 3',
        'Operating System :: Unix',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
