"""Fibonacci and Lucas numbers and their divisibility rules.

Indexing: F_1 = F_2 = 1 and L_1 = 1, L_2 = 3, both continued by
x_{n+1} = x_n + x_{n-1}.  Values are exact Python ints.
"""

from __future__ import annotations

import threading
from math import gcd
from typing import NamedTuple

__all__ = [
    "TwoAdicSplit",
    "fib",
    "lucas",
    "two_adic_split",
    "fib_gcd",
    "lucas_gcd",
    "lucas_is_even",
    "lucas_coprime",
]


class TwoAdicSplit(NamedTuple):
    """``n == 2**exponent * odd_part`` with ``odd_part`` odd."""

    exponent: int
    odd_part: int


class _Sequence:
    """Memoized linear recurrence x_{n+1} = x_n + x_{n-1}, indexed from 1."""

    def __init__(self, first: int, second: int) -> None:
        # slot 0 is padding so that values[n] is the n-th term
        self._values = [second - first, first, second]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        _check_index(n)
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(values) <= n:
                values.append(values[-1] + values[-2])
        return values[n]


def _check_index(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"sequence index must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")


_fib = _Sequence(1, 1)
_lucas = _Sequence(1, 3)


def fib(n: int) -> int:
    """Return F_n (F_1 = F_2 = 1)."""
    return _fib(n)


def lucas(n: int) -> int:
    """Return L_n (L_1 = 1, L_2 = 3)."""
    return _lucas(n)


def two_adic_split(n: int) -> TwoAdicSplit:
    _check_index(n)
    v = (n & -n).bit_length() - 1
    return TwoAdicSplit(v, n >> v)


def fib_gcd(m: int, n: int) -> int:
    """gcd(F_m, F_n) = F_{gcd(m, n)}."""
    _check_index(m)
    _check_index(n)
    return fib(gcd(m, n))


def lucas_gcd(m: int, n: int) -> int:
    """gcd(L_m, L_n) from the 2-adic valuations of the indices.

    Equal valuations give L_{gcd(m, n)}; otherwise the answer is 2 when
    3 divides gcd(m, n) and 1 when it does not.
    """
    a = two_adic_split(m).exponent
    b = two_adic_split(n).exponent
    l = gcd(m, n)
    if a == b:
        return lucas(l)
    return 2 if l % 3 == 0 else 1


def lucas_is_even(m: int) -> bool:
    _check_index(m)
    return m % 3 == 0


def lucas_coprime(m: int, n: int) -> bool:
    a, m_odd = two_adic_split(m)
    b, n_odd = two_adic_split(n)
    if a == b == 0:
        return gcd(m_odd, n_odd) == 1
    if a != b:
        return gcd(3, gcd(m, n)) == 1
    return False
