"""Symmetry decisions for generic, Fibonacci and Lucas triples.

A minimal triple S(d1, d2, d3) with gcd 1 is symmetric exactly when some
pair of generators has gcd lam > 1 while the third generator is coprime
to lam and lies in the two-generator semigroup of the pair divided by
lam.  For Fibonacci and Lucas triples the pair gcd and the coprimality
test are read off the indices instead of the values.

The same pair conditions still describe the semigroup when a generator is
redundant, so they are tested before the minimality screen.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Iterator, Optional, Sequence

from .errors import NotSymmetric, OracleInfeasible
from .kernel import (
    GenSet2,
    GenSet3,
    SymmetricCertificate,
    find_dependence,
    frobenius2,
    is_minimal_genset,
    pair_orders,
    represent2,
    symmetric_closed_forms,
)
from .oracle import DEFAULT_CEILING, check_equivalence, enumerate_within
from .sequences import TwoAdicSplit, fib, fib_gcd, lucas, lucas_gcd, two_adic_split

__all__ = [
    "Family",
    "Status",
    "Reason",
    "OracleConfidence",
    "IndexTriple",
    "Attempt",
    "Verdict",
    "LucasCaseData",
    "classify",
    "classify_generic",
    "classify_generators",
    "smallest_three_rule",
    "classify_fibonacci",
    "fibonacci_pair_clause",
    "fibonacci_sufficient_inequality",
    "classify_lucas",
    "lucas_pair_clause",
    "lucas_sufficient_inequality",
    "cross_check",
    "SweepRow",
    "sweep",
    "ascending_triples",
]


class Family(str, enum.Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    RAW = "raw"

    @property
    def min_index(self) -> int:
        return {Family.FIBONACCI: 3, Family.LUCAS: 2}.get(self, 1)

    def term(self, n: int) -> int:
        if self is Family.FIBONACCI:
            return fib(n)
        if self is Family.LUCAS:
            return lucas(n)
        raise ValueError("raw triples carry generator values, not indices")


class Status(str, enum.Enum):
    SYMMETRIC = "Symmetric"
    NON_SYMMETRIC = "NonSymmetric"
    NON_MINIMAL = "NonMinimal"
    TWO_GENERATOR = "TwoGenerator"
    NOT_NUMERICAL = "NotNumerical"
    # reserved; every decision procedure here is total
    UNDECIDED = "Undecided"


class Reason(str, enum.Enum):
    # symmetric
    PAIR_CONDITIONS_HOLD = "pair-conditions-hold"
    FIBONACCI_CONDITIONS_HOLD = "fibonacci-conditions-hold"
    LUCAS_EQUAL_EVEN_VALUATION = "lucas-equal-even-valuation"
    LUCAS_ODD_PAIR = "lucas-odd-pair"
    LUCAS_UNEQUAL_VALUATION = "lucas-unequal-valuation"
    TWO_GENERATED = "two-generated"
    # non-symmetric, ordered by how far the test got
    PAIR_GCD_TRIVIAL = "pair-gcd-trivial"
    THIRD_SHARES_PAIR_GCD = "third-shares-pair-gcd"
    CONTAINMENT_FAILS = "containment-fails"
    SMALLEST_GENERATOR_THREE = "smallest-generator-three"
    # screens
    DEPENDENT_GENERATOR = "dependent-generator"
    COMMON_DIVISOR = "common-divisor"


_FAILURE_RANK = {
    Reason.PAIR_GCD_TRIVIAL: 0,
    Reason.THIRD_SHARES_PAIR_GCD: 1,
    Reason.CONTAINMENT_FAILS: 2,
}


class OracleConfidence(str, enum.Enum):
    CONFIRMED = "confirmed"
    DISAGREES = "disagrees"
    SKIPPED = "skipped"
    NOT_APPLICABLE = "n/a"
    DISABLED = "disabled"



@dataclass(frozen=True)
class IndexTriple:
    family: Family
    i1: int
    i2: int
    i3: int

    def __post_init__(self) -> None:
        if self.family is Family.RAW:
            raise ValueError("IndexTriple needs the fibonacci or lucas family")
        lo = self.family.min_index
        if not lo <= self.i1 < self.i2 < self.i3:
            raise ValueError(
                f"{self.family.value} indices must satisfy {lo} <= i1 < i2 < i3, "
                f"got {self.indices}"
            )

    @classmethod
    def of(cls, family: Family | str, *indices: int) -> "IndexTriple":
        family = Family(family)
        if len(indices) != 3 or len(set(indices)) != 3:
            raise ValueError(f"need three distinct indices, got {indices}")
        return cls(family, *sorted(int(i) for i in indices))

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.i1, self.i2, self.i3)

    @property
    def generators(self) -> tuple[int, int, int]:
        return tuple(self.family.term(i) for i in self.indices)


@dataclass(frozen=True)
class Attempt:
    """Outcome of testing one (pair, third) split."""

    pair: tuple[int, int]
    third: int
    lam: int
    reason: Reason
    witness: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class Verdict:
    """Classification result.

    ``pair`` and ``lam`` describe the designated gcd pair (generator values)
    when one was found; for NonMinimal verdicts ``pair`` holds the two
    generators that produce the dependent one and ``witness`` the
    coefficients.  ``pair_indices`` mirrors ``pair`` for index triples.
    ``minimal`` is False when one generator is redundant; a Symmetric verdict
    can still carry a valid certificate in that case.
    """

    family: Family
    indices: Optional[tuple[int, int, int]]
    generators: tuple[int, int, int]
    status: Status
    reason: Reason
    certificate: Optional[SymmetricCertificate] = None
    lam: Optional[int] = None
    pair: Optional[tuple[int, int]] = None
    pair_indices: Optional[tuple[int, int]] = None
    witness: Optional[tuple[int, int]] = None
    frobenius: Optional[int] = None
    genus: Optional[int] = None
    minimal: bool = True
    attempts: tuple[Attempt, ...] = field(default=(), compare=False)

    @property
    def index_gcd(self) -> Optional[int]:
        """gcd of the pair's indices (the Fibonacci lambda, the Lucas l)."""
        if self.pair_indices is None or self.status not in (
            Status.SYMMETRIC,
            Status.NON_SYMMETRIC,
        ):
            return None
        return gcd(*self.pair_indices)

    @property
    def symmetric(self) -> Optional[bool]:
        if self.status in (Status.SYMMETRIC, Status.TWO_GENERATOR):
            return True
        if self.status is Status.NON_SYMMETRIC:
            return False
        return None

    def check(self) -> bool:
        """Internal consistency of the record."""
        if self.status is Status.SYMMETRIC:
            c = self.certificate
            return (
                c is not None
                and c.is_consistent()
                and c.frobenius == self.frobenius
                and c.genus == self.genus
                and c.lam == self.lam
            )
        return self.certificate is None


# -- screens shared by all routes -------------------------------------------------


def _screen(
    g: GenSet3, family: Family, indices: Optional[tuple[int, int, int]]
) -> Optional[Verdict]:
    dep = find_dependence(g.values)
    if dep is not None:
        i, (j, k), rep = dep
        d = g.values
        return Verdict(
            family,
            indices,
            d,
            Status.NON_MINIMAL,
            Reason.DEPENDENT_GENERATOR,
            pair=(d[j], d[k]),
            pair_indices=(indices[j], indices[k]) if indices else None,
            witness=rep,
            minimal=False,
        )
    if g.gcd() != 1:
        return Verdict(family, indices, g.values, Status.NOT_NUMERICAL, Reason.COMMON_DIVISOR)
    return None


def _non_symmetric(
    g: GenSet3,
    family: Family,
    indices: Optional[tuple[int, int, int]],
    attempts: Sequence[Attempt],
) -> Verdict:
    best = max(attempts, key=lambda a: _FAILURE_RANK[a.reason])
    return Verdict(
        family,
        indices,
        g.values,
        Status.NON_SYMMETRIC,
        best.reason,
        lam=best.lam,
        pair=best.pair,
        pair_indices=_indices_of(best.pair, g.values, indices),
        attempts=tuple(attempts),
    )


def _symmetric(
    g: GenSet3,
    family: Family,
    indices: Optional[tuple[int, int, int]],
    cert: SymmetricCertificate,
    reason: Reason,
    attempts: Sequence[Attempt],
) -> Verdict:
    return Verdict(
        family,
        indices,
        g.values,
        Status.SYMMETRIC,
        reason,
        certificate=cert,
        lam=cert.lam,
        pair=cert.pair,
        pair_indices=_indices_of(cert.pair, g.values, indices),
        witness=cert.witness,
        frobenius=cert.frobenius,
        genus=cert.genus,
        minimal=is_minimal_genset(g),
        attempts=tuple(attempts),
    )


def _indices_of(pair, values, indices):
    if indices is None or pair is None:
        return None
    return tuple(indices[values.index(v)] for v in pair)


# -- generic triples ----------------------------------------------------------------


def smallest_three_rule(g: GenSet3) -> Optional[Verdict]:
    """Triples with smallest generator 3.

    S(3, d2, d3) with 3 not dividing d2 and d3 outside S(3, d2) is never
    symmetric.  Returns None when that rule does not apply.
    """
    if g.d1 != 3:
        raise ValueError(f"smallest generator must be 3, got {g.d1}")
    if g.d2 % 3 != 0 and represent2(g.d3, 3, g.d2) is None:
        return Verdict(
            Family.RAW,
            None,
            g.values,
            Status.NON_SYMMETRIC,
            Reason.SMALLEST_GENERATOR_THREE,
        )
    return None


def _generic_attempts(g: GenSet3) -> tuple[Optional[SymmetricCertificate], list[Attempt]]:
    d = g.values
    attempts = []
    for (p, q), r in pair_orders(d):
        pair = (d[p], d[q])
        lam = gcd(*pair)
        if lam == 1:
            attempts.append(Attempt(pair, d[r], lam, Reason.PAIR_GCD_TRIVIAL))
            continue
        if gcd(d[r], lam) != 1:
            attempts.append(Attempt(pair, d[r], lam, Reason.THIRD_SHARES_PAIR_GCD))
            continue
        try:
            cert = symmetric_closed_forms(g, pair)
        except NotSymmetric:
            attempts.append(Attempt(pair, d[r], lam, Reason.CONTAINMENT_FAILS))
            continue
        attempts.append(Attempt(pair, d[r], lam, Reason.PAIR_CONDITIONS_HOLD, cert.witness))
        return cert, attempts
    return None, attempts


def classify_generic(g: GenSet3 | Sequence[int]) -> Verdict:
    if not isinstance(g, GenSet3):
        g = GenSet3.of(*g)
    # the pair conditions come first: when they hold the closed forms are
    # exact even if a generator is redundant
    cert, attempts = _generic_attempts(g)
    if cert is not None:
        return _symmetric(g, Family.RAW, None, cert, Reason.PAIR_CONDITIONS_HOLD, attempts)
    screened = _screen(g, Family.RAW, None)
    if screened is not None:
        return screened
    if g.d1 == 3:
        v = smallest_three_rule(g)
        if v is not None:
            return v
    return _non_symmetric(g, Family.RAW, None, attempts)


def classify_generators(*gens: int) -> Verdict:
    return classify_generic(GenSet3.of(*gens))


def _relabel(v: Verdict, family: Family, indices: tuple[int, int, int]) -> Verdict:
    return Verdict(
        family,
        indices,
        v.generators,
        v.status,
        v.reason,
        certificate=v.certificate,
        lam=v.lam,
        pair=v.pair,
        pair_indices=_indices_of(v.pair, v.generators, indices),
        witness=v.witness,
        frobenius=v.frobenius,
        genus=v.genus,
        minimal=v.minimal,
        attempts=v.attempts,
    )


def _smallest_three_route(g: GenSet3, family: Family, indices) -> Verdict:
    v = smallest_three_rule(g)
    if v is None:
        # a minimal triple always meets the rule, so this is only a safety net
        v = classify_generic(g)
    return _relabel(v, family, indices)


# -- Fibonacci triples --------------------------------------------------------------


def fibonacci_pair_clause(i: int, j: int, k: int) -> Attempt:
    """Test the Fibonacci symmetry conditions for gcd pair (F_i, F_j) and third F_k."""
    pair = (fib(i), fib(j))
    lam = gcd(i, j)
    g = fib_gcd(i, j)
    if lam < 3:
        return Attempt(pair, fib(k), g, Reason.PAIR_GCD_TRIVIAL)
    # gcd(lam, k) in {1, 2} is the same as F_{gcd(lam, k)} == 1
    if fib(gcd(lam, k)) != 1:
        return Attempt(pair, fib(k), g, Reason.THIRD_SHARES_PAIR_GCD)
    rep = represent2(fib(k), pair[0] // g, pair[1] // g)
    if rep is None:
        return Attempt(pair, fib(k), g, Reason.CONTAINMENT_FAILS)
    return Attempt(pair, fib(k), g, Reason.FIBONACCI_CONDITIONS_HOLD, rep)


def _index_splits(indices: Sequence[int], value_gcd) -> list[tuple[int, int, int]]:
    splits = [((0, 1), 2), ((0, 2), 1), ((1, 2), 0)]
    splits.sort(key=lambda s: -value_gcd(indices[s[0][0]], indices[s[0][1]]))
    return [(indices[p], indices[q], indices[r]) for (p, q), r in splits]


def classify_fibonacci(t: IndexTriple | Sequence[int]) -> Verdict:
    if not isinstance(t, IndexTriple):
        t = IndexTriple.of(Family.FIBONACCI, *t)
    if t.family is not Family.FIBONACCI:
        raise ValueError(f"expected a fibonacci triple, got {t.family.value}")
    idx = t.indices
    g = GenSet3.of(*t.generators)
    if t.i1 == 3:
        # F_3 = 2 makes one of the other generators redundant
        if g.gcd() != 1:
            return Verdict(
                Family.FIBONACCI, idx, g.values, Status.NOT_NUMERICAL, Reason.COMMON_DIVISOR,
                minimal=is_minimal_genset(g),
            )
        return _two_generator(g, Family.FIBONACCI, idx)
    if t.i1 == 4:
        return _screen(g, Family.FIBONACCI, idx) or _smallest_three_route(
            g, Family.FIBONACCI, idx
        )
    attempts = []
    for i, j, k in _index_splits(idx, fib_gcd):
        a = fibonacci_pair_clause(i, j, k)
        attempts.append(a)
        if a.reason is Reason.FIBONACCI_CONDITIONS_HOLD:
            cert = symmetric_closed_forms(g, a.pair)
            f_lam = fib(gcd(i, j))
            assert cert.e1 == fib(i) * fib(j) // f_lam and cert.e2 == fib(k) * f_lam
            return _symmetric(g, Family.FIBONACCI, idx, cert, a.reason, attempts)
    return _screen(g, Family.FIBONACCI, idx) or _non_symmetric(
        g, Family.FIBONACCI, idx, attempts
    )


def _two_generator(g: GenSet3, family: Family, indices) -> Verdict:
    i, (j, k), rep = find_dependence(g.values)
    d = g.values
    pair = GenSet2.of(d[j], d[k])
    frob = frobenius2(pair)
    return Verdict(
        family,
        indices,
        d,
        Status.TWO_GENERATOR,
        Reason.TWO_GENERATED,
        pair=(d[j], d[k]),
        pair_indices=(indices[j], indices[k]) if indices else None,
        witness=rep,
        frobenius=frob,
        genus=(frob + 1) // 2,
        minimal=False,
    )


def fibonacci_sufficient_inequality(t: IndexTriple | Sequence[int]) -> bool:
    """The easy-to-check sufficient condition F_k F_lam > lcm(F_i, F_j) - F_i - F_j.

    False when no pair meets the index gcd conditions or when the smallest
    index is below 5.
    """
    if not isinstance(t, IndexTriple):
        t = IndexTriple.of(Family.FIBONACCI, *t)
    if t.i1 < 5:
        return False
    for i, j, k in _index_splits(t.indices, fib_gcd):
        lam = gcd(i, j)
        if lam < 3 or fib(gcd(lam, k)) != 1:
            continue
        fi, fj = fib(i), fib(j)
        if fib(k) * fib(lam) > lcm(fi, fj) - fi - fj:
            return True
    return False


# -- Lucas triples ------------------------------------------------------------------


@dataclass(frozen=True)
class LucasCaseData:
    """2-adic bookkeeping for a Lucas split: pair indices m, n and third index k."""

    k: int
    m: int
    n: int
    split_k: TwoAdicSplit
    split_m: TwoAdicSplit
    split_n: TwoAdicSplit
    l: int
    d: int
    l_prime: int

    @classmethod
    def of(cls, k: int, m: int, n: int) -> "LucasCaseData":
        sk, sm, sn = two_adic_split(k), two_adic_split(m), two_adic_split(n)
        return cls(
            k, m, n, sk, sm, sn,
            l=gcd(m, n),
            d=min(sm.exponent, sn.exponent),
            l_prime=gcd(sm.odd_part, sn.odd_part),
        )

    @property
    def equal_valuation(self) -> bool:
        return self.split_m.exponent == self.split_n.exponent

    @property
    def pair_gcd(self) -> int:
        """gcd(L_m, L_n) read off the case split."""
        if self.equal_valuation:
            return lucas(self.l)
        return 2 if self.l % 3 == 0 else 1


def lucas_pair_clause(k: int, m: int, n: int) -> Attempt:
    """Test the Lucas symmetry conditions for gcd pair (L_m, L_n) and third L_k."""
    data = LucasCaseData.of(k, m, n)
    a, b, c = data.split_m.exponent, data.split_n.exponent, data.split_k.exponent
    pair, third = (lucas(m), lucas(n)), lucas(k)
    eta = data.pair_gcd
    if eta == 1:
        return Attempt(pair, third, eta, Reason.PAIR_GCD_TRIVIAL)
    kl3 = gcd(k, data.l) % 3 != 0
    if a == b != 0:
        ok, reason = a != c and kl3, Reason.LUCAS_EQUAL_EVEN_VALUATION
    elif a == b == 0:
        if c == 0:
            ok = gcd(data.split_k.odd_part, data.l_prime) == 1
        else:
            ok = kl3
        reason = Reason.LUCAS_ODD_PAIR
    else:
        ok, reason = k % 3 != 0, Reason.LUCAS_UNEQUAL_VALUATION
    if not ok:
        return Attempt(pair, third, eta, Reason.THIRD_SHARES_PAIR_GCD)
    rep = represent2(third, pair[0] // eta, pair[1] // eta)
    if rep is None:
        return Attempt(pair, third, eta, Reason.CONTAINMENT_FAILS)
    return Attempt(pair, third, eta, reason, rep)


_LUCAS_SUCCESS = {
    Reason.LUCAS_EQUAL_EVEN_VALUATION,
    Reason.LUCAS_ODD_PAIR,
    Reason.LUCAS_UNEQUAL_VALUATION,
}


def classify_lucas(t: IndexTriple | Sequence[int]) -> Verdict:
    if not isinstance(t, IndexTriple):
        t = IndexTriple.of(Family.LUCAS, *t)
    if t.family is not Family.LUCAS:
        raise ValueError(f"expected a lucas triple, got {t.family.value}")
    idx = t.indices
    g = GenSet3.of(*t.generators)
    if t.i1 == 2:
        return _screen(g, Family.LUCAS, idx) or _smallest_three_route(g, Family.LUCAS, idx)
    attempts = []
    for m, n, k in _index_splits(idx, lucas_gcd):
        a = lucas_pair_clause(k, m, n)
        attempts.append(a)
        if a.reason in _LUCAS_SUCCESS:
            cert = symmetric_closed_forms(g, a.pair)
            assert cert.lam == a.lam == lucas_gcd(m, n)
            return _symmetric(g, Family.LUCAS, idx, cert, a.reason, attempts)
    return _screen(g, Family.LUCAS, idx) or _non_symmetric(g, Family.LUCAS, idx, attempts)


def lucas_sufficient_inequality(t: IndexTriple | Sequence[int]) -> bool:
    """Sufficient condition for all-odd Lucas triples.

    For a pair (m, n) with g = gcd(m, n) > 1 and gcd(m, n, k) = 1, checks
    L_k L_g > L_m L_n / L_g - L_m - L_n.  False when the indices are not all
    odd or no pair qualifies.
    """
    if not isinstance(t, IndexTriple):
        t = IndexTriple.of(Family.LUCAS, *t)
    idx = t.indices
    if any(i % 2 == 0 for i in idx) or t.i1 < 3:
        return False
    for m, n, k in _index_splits(idx, lucas_gcd):
        g = gcd(m, n)
        if g == 1 or gcd(g, k) != 1:
            continue
        lg, lm, ln = lucas(g), lucas(m), lucas(n)
        if lucas(k) * lg > lm * ln // lg - lm - ln:
            return True
    return False


# -- dispatch, oracle cross-check, sweeps -----------------------------------------


def classify(family: Family | str, values: Sequence[int]) -> Verdict:
    """Classify an index triple (fibonacci, lucas) or a generator triple (raw)."""
    family = Family(family)
    if family is Family.FIBONACCI:
        return classify_fibonacci(IndexTriple.of(family, *values))
    if family is Family.LUCAS:
        return classify_lucas(IndexTriple.of(family, *values))
    return classify_generators(*values)


def cross_check(v: Verdict, ceiling: int = DEFAULT_CEILING) -> OracleConfidence:
    """Compare a verdict with the sieve oracle."""
    if v.status is Status.SYMMETRIC:
        try:
            ok = check_equivalence(GenSet3.of(*v.generators), v.certificate, ceiling)
        except OracleInfeasible:
            return OracleConfidence.SKIPPED
        return OracleConfidence.CONFIRMED if ok else OracleConfidence.DISAGREES
    if v.status in (Status.NON_SYMMETRIC, Status.TWO_GENERATOR):
        try:
            rep = enumerate_within(v.generators, ceiling=ceiling)
        except OracleInfeasible:
            return OracleConfidence.SKIPPED
        if v.status is Status.NON_SYMMETRIC:
            ok = not rep.symmetric and 2 * rep.genus > rep.conductor
        else:
            ok = rep.symmetric and rep.frobenius == v.frobenius and rep.genus == v.genus
        return OracleConfidence.CONFIRMED if ok else OracleConfidence.DISAGREES
    return OracleConfidence.NOT_APPLICABLE


@dataclass(frozen=True)
class SweepRow:
    triple: tuple[int, int, int]
    verdict: Verdict
    oracle: OracleConfidence


def ascending_triples(family: Family | str, index_ceiling: int) -> Iterator[tuple[int, int, int]]:
    lo = Family(family).min_index
    for i in range(lo, index_ceiling + 1):
        for j in range(i + 1, index_ceiling + 1):
            for k in range(j + 1, index_ceiling + 1):
                yield (i, j, k)


def _sweep_one(args) -> SweepRow:
    family, triple, ceiling, use_oracle = args
    v = classify(family, triple)
    conf = cross_check(v, ceiling) if use_oracle else OracleConfidence.DISABLED
    return SweepRow(triple, v, conf)


def sweep(
    family: Family | str,
    index_ceiling: int,
    conductor_ceiling: int = DEFAULT_CEILING,
    *,
    oracle: bool = True,
    workers: int = 1,
) -> Iterator[SweepRow]:
    """Classify every ascending index triple up to ``index_ceiling``.

    Rows come out in ascending lexicographic order whatever ``workers`` is.
    """
    family = Family(family)
    if family is Family.RAW:
        raise ValueError("sweeps need the fibonacci or lucas family")
    jobs = ((family, t, conductor_ceiling, oracle) for t in ascending_triples(family, index_ceiling))
    if workers <= 1:
        yield from map(_sweep_one, jobs)
        return
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_sweep_one, jobs, chunksize=8)
