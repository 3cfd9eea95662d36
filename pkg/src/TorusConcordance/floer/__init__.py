from .semigroup import TorusKnot, SemigroupView, contains, brute_force_contains, gaps, counting, frobenius_number, apery_set
from .staircase import Staircase, AlexanderExponents, from_torus_knot, alexander_exponents, alexander_polynomial, semigroup_alexander_polynomial, a_tuple, max_entry_bound, has_prefix
