"""Independent brute-force helpers shared by the tests.

Nothing here imports fibsym; these are the reference implementations the
library is checked against.
"""

import pytest


def euclid(a, b):
    while b:
        a, b = b, a % b
    return a


def naive_fib(n):
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def naive_lucas(n):
    a, b = 1, 3
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def naive_members(gens, bound):
    """Set of semigroup elements up to ``bound`` by direct closure."""
    found = {0}
    for s in range(1, bound + 1):
        if any(s - d in found for d in gens if s >= d):
            found.add(s)
    return found


def naive_representable(c, x, y):
    return any((c - a * x) % y == 0 for a in range(c // x + 1))


def naive_gaps(gens, bound):
    members = naive_members(gens, bound)
    return [s for s in range(bound + 1) if s not in members]


@pytest.fixture(scope="session")
def fib_6_8_9():
    return {"indices": (6, 8, 9), "gens": (8, 21, 34), "frobenius": 115, "genus": 58}


@pytest.fixture(scope="session")
def lucas_9_15_17():
    return {
        "indices": (9, 15, 17),
        "gens": (76, 1364, 3571),
        "frobenius": 35189,
        "genus": 17595,
    }
