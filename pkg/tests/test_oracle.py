import itertools
from dataclasses import replace
from math import gcd

import pytest

from conftest import naive_gaps
from fibsym.errors import BoundTooSmall, OracleInfeasible
from fibsym.kernel import GenSet3, symmetric_closed_forms
from fibsym.oracle import (
    check_equivalence,
    conductor_upper_bound,
    enumerate_semigroup,
    enumerate_within,
    sieve,
)


def test_enumeration_8_21_34():
    r = enumerate_semigroup((8, 21, 34), 200)
    assert (r.frobenius, r.genus, r.symmetric, r.conductor) == (115, 58, True, 116)


def test_two_generator_enumeration():
    r = enumerate_semigroup((2, 3), 16)
    assert r.gaps == (1,)
    assert (r.frobenius, r.genus, r.symmetric) == (1, 1, True)


def test_non_symmetric_enumeration():
    r = enumerate_semigroup((3, 5, 7), 32)
    assert r.gaps == (1, 2, 4)
    assert (r.frobenius, r.genus, r.symmetric) == (4, 3, False)
    assert 2 * r.genus > r.conductor


def test_report_invariants():
    r = enumerate_semigroup((5, 7, 9), 200)
    assert r.frobenius == r.conductor - 1 == max(r.gaps)
    assert r.genus == len(r.gaps)
    assert r.bound_used == 200


def test_bound_too_small():
    with pytest.raises(BoundTooSmall):
        enumerate_semigroup((8, 21, 34), 150)


def test_gcd_must_be_one():
    with pytest.raises(ValueError):
        enumerate_semigroup((4, 6, 10), 100)


def test_sieve_matches_naive_closure():
    for gens in [(3, 5, 7), (4, 9, 11), (8, 21, 34), (6, 10, 15), (7, 11)]:
        members = sieve(gens, 300)
        assert [s for s in range(301) if not members[s]] == naive_gaps(gens, 300)


def test_sieve_idempotent_under_larger_bound():
    for gens in [(5, 7, 9), (8, 21, 34), (13, 21, 55)]:
        b = conductor_upper_bound(gens) + 100
        assert enumerate_semigroup(gens, b).gaps == enumerate_semigroup(gens, 2 * b).gaps


def test_conductor_upper_bound_is_an_upper_bound():
    for gens in itertools.combinations(range(3, 26), 3):
        if gcd(*gens) != 1:
            continue
        gaps = naive_gaps(gens, 700)
        assert max(gaps, default=-1) + 1 <= conductor_upper_bound(gens)


def test_symmetry_dichotomy_on_all_small_triples():
    # reflection test and 2G = C agree, and 2G > C otherwise
    for gens in itertools.combinations(range(3, 22), 3):
        if gcd(*gens) != 1:
            continue
        r = enumerate_within(gens)
        if r.symmetric:
            assert 2 * r.genus == r.conductor
        else:
            assert 2 * r.genus > r.conductor


def test_enumerate_within_ceiling():
    with pytest.raises(OracleInfeasible):
        enumerate_within((233, 377, 611), ceiling=1000)


def test_check_equivalence_examples(fib_6_8_9, lucas_9_15_17):
    for ex, pair in ((fib_6_8_9, (8, 34)), (lucas_9_15_17, (76, 1364))):
        g = GenSet3.of(*ex["gens"])
        cert = symmetric_closed_forms(g, pair)
        assert check_equivalence(g, cert)


def test_check_equivalence_catches_mutation():
    g = GenSet3.of(8, 21, 34)
    cert = symmetric_closed_forms(g, (8, 34))
    assert not check_equivalence(g, replace(cert, frobenius=cert.frobenius + 2))
    assert not check_equivalence(g, replace(cert, genus=cert.genus - 1))
    assert not check_equivalence(g, replace(cert, e2=cert.e2 + 8))


def test_check_equivalence_infeasible():
    g = GenSet3.of(8, 21, 34)
    cert = symmetric_closed_forms(g, (8, 34))
    with pytest.raises(OracleInfeasible):
        check_equivalence(g, cert, ceiling=150)
