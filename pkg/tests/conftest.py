import os
from math import gcd

from hypothesis import settings

settings.register_profile("default", max_examples=100, deadline=None)
settings.register_profile("ci", max_examples=25, deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("TORUS_CONCORDANCE_PROFILE", "default"))


def coprime_pairs(low: int, high: int) -> list[tuple[int, int]]:
    """All coprime (p, q) with low <= p < q <= high."""
    return [(p, q) for q in range(low, high + 1) for p in range(low, q) if gcd(p, q) == 1]
