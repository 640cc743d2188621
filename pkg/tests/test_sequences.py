import pytest
from hypothesis import given, strategies as st

from conftest import euclid, naive_fib, naive_lucas
from fibsym.sequences import (
    fib,
    fib_gcd,
    lucas,
    lucas_coprime,
    lucas_gcd,
    lucas_is_even,
    two_adic_split,
)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 2), (4, 3), (6, 8), (8, 21), (9, 34)])
def test_fib_values(n, expected):
    assert fib(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 4), (9, 76), (15, 1364), (17, 3571), (19, 9349)])
def test_lucas_values(n, expected):
    assert lucas(n) == expected


def test_sequences_match_independent_recurrence():
    for n in range(1, 300):
        assert fib(n) == naive_fib(n)
        assert lucas(n) == naive_lucas(n)


def test_recurrence_identity():
    for n in range(2, 400):
        assert fib(n + 1) == fib(n) + fib(n - 1)
        assert lucas(n + 1) == lucas(n) + lucas(n - 1)


def test_large_index_is_exact():
    # F_512 has 107 digits; the value must not pass through floats
    assert fib(512) == naive_fib(512)
    assert len(str(fib(512))) == 107


@pytest.mark.parametrize("bad", [0, -3])
def test_index_must_be_positive(bad):
    with pytest.raises(ValueError):
        fib(bad)
    with pytest.raises(ValueError):
        lucas(bad)


@pytest.mark.parametrize("n, expected", [(12, (2, 3)), (9, (0, 9)), (16, (4, 1)), (1, (0, 1))])
def test_two_adic_split(n, expected):
    assert tuple(two_adic_split(n)) == expected


@given(st.integers(min_value=1, max_value=10**6))
def test_two_adic_round_trip(n):
    v, odd = two_adic_split(n)
    assert odd % 2 == 1
    assert 2**v * odd == n


def test_two_adic_round_trip_exhaustive():
    for n in range(1, 10**6 + 1, 7):
        v, odd = two_adic_split(n)
        assert (odd << v) == n and odd & 1


@pytest.mark.parametrize("m, n, expected", [(6, 9, 2), (8, 9, 1), (7, 7, 13)])
def test_fib_gcd_examples(m, n, expected):
    assert fib_gcd(m, n) == expected


@pytest.mark.parametrize("m, n, expected", [(9, 15, 4), (3, 6, 2), (1, 2, 1)])
def test_lucas_gcd_examples(m, n, expected):
    assert lucas_gcd(m, n) == expected


def test_gcd_identities_against_euclid():
    for m in range(1, 121):
        for n in range(1, 121):
            assert fib_gcd(m, n) == euclid(fib(m), fib(n))
            assert lucas_gcd(m, n) == euclid(lucas(m), lucas(n))


def test_lucas_unequal_valuation_branch_is_constant():
    # a != b and 3 | gcd: the answer is 2 even though L_gcd is larger
    assert lucas(3) == 4
    assert lucas_gcd(3, 6) == 2
    assert lucas_gcd(6, 12) == 2


@pytest.mark.parametrize("m, expected", [(9, True), (2, False), (3, True), (1, False)])
def test_lucas_is_even_examples(m, expected):
    assert lucas_is_even(m) is expected


def test_lucas_parity_rule():
    for m in range(1, 201):
        assert lucas_is_even(m) == (lucas(m) % 2 == 0)


@pytest.mark.parametrize("m, n, expected", [(9, 15, False), (3, 17, True), (1, 2, True)])
def test_lucas_coprime_examples(m, n, expected):
    assert lucas_coprime(m, n) is expected


def test_lucas_coprime_consistent_with_gcd():
    for m in range(1, 121):
        for n in range(1, 121):
            assert lucas_coprime(m, n) == (lucas_gcd(m, n) == 1)
