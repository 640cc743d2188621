"""Brute-force ground truth for small numerical semigroups.

Everything here comes from a membership sieve over [0, bound]; nothing
uses the closed forms in :mod:`fibsym.kernel`, so the two can be checked
against each other.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

import numpy as np

from .errors import BoundTooSmall, OracleInfeasible
from .kernel import (
    HILBERT_SLACK,
    GenSet3,
    SymmetricCertificate,
    hilbert_coefficients,
)

__all__ = [
    "OracleReport",
    "DEFAULT_CEILING",
    "sieve",
    "required_run",
    "enumerate_semigroup",
    "conductor_upper_bound",
    "enumerate_within",
    "check_equivalence",
]

log = logging.getLogger(__name__)

DEFAULT_CEILING = 10**6


@dataclass(frozen=True)
class OracleReport:
    generators: tuple[int, ...]
    conductor: int
    frobenius: int
    genus: int
    gaps: tuple[int, ...]
    symmetric: bool
    bound_used: int
    members: np.ndarray = field(repr=False, compare=False)

    def is_member(self, s: int) -> bool:
        if s < 0:
            return False
        if s >= self.conductor:
            return True
        return bool(self.members[s])


def sieve(generators: Sequence[int], bound: int) -> np.ndarray:
    """Boolean membership table of S(generators) on [0, bound]."""
    size = bound + 1
    members = np.zeros(size, dtype=bool)
    members[0] = True
    for d in generators:
        if d >= size:
            continue
        # closing under +d is a running OR along each residue class mod d
        rows = -(-size // d)
        padded = np.zeros(rows * d, dtype=bool)
        padded[:size] = members
        members = np.logical_or.accumulate(padded.reshape(rows, d), axis=0).reshape(-1)[:size]
    return members


def required_run(generators: Sequence[int], bound: int) -> int:
    """Consecutive members needed at the top of the sieve to prove the conductor passed.

    A run as long as the smallest generator already forces every later
    integer in; the extra margin (up to 64) guards against off-by-one bounds.
    """
    return max(min(generators), min(64, bound // 2))


def enumerate_semigroup(
    generators: Sequence[int], bound: int, slack: Optional[int] = None
) -> OracleReport:
    gens = tuple(int(g) for g in generators)
    if not gens or any(g < 1 for g in gens):
        raise ValueError(f"generators must be positive, got {gens}")
    if gcd(*gens) != 1:
        raise ValueError(f"gcd of {gens} is not 1; the complement is infinite")
    if slack is None:
        slack = required_run(gens, bound)
    slack = max(slack, min(gens))
    members = sieve(gens, bound)
    gap_idx = np.flatnonzero(~members)
    frob = int(gap_idx[-1]) if gap_idx.size else -1
    if bound - frob < slack:
        raise BoundTooSmall(
            f"bound {bound} leaves only {bound - frob} trailing members, need {slack}"
        )
    conductor = frob + 1
    if frob >= 0:
        head = members[: frob + 1]
        symmetric = bool(np.all(head != head[::-1]))
    else:
        symmetric = True
    return OracleReport(
        generators=gens,
        conductor=conductor,
        frobenius=frob,
        genus=int(gap_idx.size),
        gaps=tuple(int(x) for x in gap_idx),
        symmetric=symmetric,
        bound_used=bound,
        members=members,
    )


def conductor_upper_bound(generators: Sequence[int]) -> int:
    """A proven upper bound on the conductor of S(generators).

    With a coprime pair the two-generator Frobenius number bounds the whole
    semigroup.  Otherwise gcd(d1, d2) = lam > 1 and, for the reduced pair
    (d1/lam, d2/lam), F(d1, d2, d3) = lam*F(d1/lam, d2/lam, d3) + (lam-1)*d3,
    where the inner Frobenius number is at most that of the reduced pair.
    """
    gens = sorted(set(int(g) for g in generators))
    if 1 in gens:
        return 0
    best = None
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            x, y = gens[i], gens[j]
            if gcd(x, y) == 1:
                c = x * y - x - y + 1
                best = c if best is None else min(best, c)
    if best is not None:
        return best
    if len(gens) != 3:
        raise ValueError(f"cannot bound the conductor of {gens}")
    x, y, z = gens
    lam = gcd(x, y)
    xr, yr = x // lam, y // lam
    inner = max(xr * yr - xr - yr, 0) if min(xr, yr) > 1 else 0
    return lam * inner + (lam - 1) * z + 1


def enumerate_within(
    generators: Sequence[int], ceiling: int = DEFAULT_CEILING, hint: Optional[int] = None
) -> OracleReport:
    """Enumerate with the smallest safe bound, never sieving past ``ceiling``.

    ``hint`` is an optional predicted conductor (e.g. from a closed form); it
    only chooses the first bound tried and cannot make a wrong report pass.
    """
    gens = tuple(int(g) for g in generators)
    proven = conductor_upper_bound(gens)
    pad = max(min(gens), HILBERT_SLACK) + HILBERT_SLACK
    candidates = [proven + pad]
    if hint is not None and hint + pad < candidates[0]:
        candidates.insert(0, hint + pad)
    for bound in candidates:
        bound = min(bound, ceiling)
        try:
            return enumerate_semigroup(gens, bound)
        except BoundTooSmall:
            continue
    # the proven bound exceeded the ceiling; the conductor may still fit
    try:
        return enumerate_semigroup(gens, ceiling)
    except BoundTooSmall:
        raise OracleInfeasible(
            f"conductor of S{gens} not reached within ceiling {ceiling}"
        ) from None


def check_equivalence(
    g: GenSet3, cert: SymmetricCertificate, ceiling: int = DEFAULT_CEILING
) -> bool:
    """True iff the sieve reproduces every value the certificate claims."""
    if cert.conductor + HILBERT_SLACK > ceiling:
        raise OracleInfeasible(
            f"predicted conductor {cert.conductor} exceeds ceiling {ceiling}"
        )
    if sorted(cert.generators) != list(g.values):
        return False
    report = enumerate_within(g.values, ceiling=ceiling, hint=cert.conductor)
    if not (
        report.symmetric
        and report.frobenius == cert.frobenius
        and report.genus == cert.genus
    ):
        log.debug("certificate %s disagrees with oracle %s", cert, report)
        return False
    limit = report.conductor + HILBERT_SLACK
    coeffs = hilbert_coefficients(cert.hilbert, limit)
    truth = np.ones(limit + 1, dtype=np.int64)
    truth[: min(limit + 1, report.members.size)] = report.members[: limit + 1]
    return bool(np.array_equal(coeffs, truth))
