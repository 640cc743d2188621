"""Numerical semigroups with two or three generators.

Membership in two-generator semigroups, minimality of three-generator
sets, the minimal relation matrix, and the closed forms that hold when
a three-generator semigroup is symmetric (Frobenius number, genus and
the Hilbert series numerator).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Optional, Sequence

import numpy as np

from .errors import NonMinimalGenerators, NotSymmetric, TruncationExceeded

__all__ = [
    "GenSet2",
    "GenSet3",
    "RelationMatrix",
    "HilbertForm",
    "SymmetricCertificate",
    "represent2",
    "membership2",
    "frobenius2",
    "find_dependence",
    "is_minimal_genset",
    "johnson_matrix",
    "minimal_relations",
    "symmetric_closed_forms",
    "hilbert_coefficients",
    "hilbert_coefficient",
    "HILBERT_SLACK",
]

# extra degrees past the conductor covered by the default truncation
HILBERT_SLACK = 64


@dataclass(frozen=True)
class GenSet2:
    d1: int
    d2: int

    def __post_init__(self) -> None:
        if not 2 <= self.d1 < self.d2:
            raise ValueError(f"need 2 <= d1 < d2, got ({self.d1}, {self.d2})")
        if gcd(self.d1, self.d2) != 1:
            raise ValueError(f"generators {self.d1}, {self.d2} are not coprime")

    @classmethod
    def of(cls, x: int, y: int) -> "GenSet2":
        return cls(*sorted((x, y)))


@dataclass(frozen=True)
class GenSet3:
    """Three generators in ascending order.

    ``order`` records the caller's order: ``order[i]`` is the position in
    ``values`` of the i-th generator as originally given.
    """

    d1: int
    d2: int
    d3: int
    order: tuple[int, int, int] = (0, 1, 2)

    def __post_init__(self) -> None:
        if not 1 <= self.d1 < self.d2 < self.d3:
            raise ValueError(
                f"generators must be distinct positive integers, got {self.values}"
            )
        if sorted(self.order) != [0, 1, 2]:
            raise ValueError(f"bad order {self.order}")

    @classmethod
    def of(cls, *gens: int) -> "GenSet3":
        if len(gens) != 3:
            raise ValueError(f"expected three generators, got {len(gens)}")
        for g in gens:
            if not isinstance(g, int) or isinstance(g, bool) or g < 1:
                raise ValueError(f"generators must be positive integers, got {g!r}")
        ranked = sorted(range(3), key=lambda i: gens[i])
        values = tuple(gens[i] for i in ranked)
        order = tuple(ranked.index(i) for i in range(3))
        return cls(*values, order=order)

    @property
    def values(self) -> tuple[int, int, int]:
        return (self.d1, self.d2, self.d3)

    @property
    def original(self) -> tuple[int, ...]:
        return tuple(self.values[i] for i in self.order)

    def gcd(self) -> int:
        return gcd(self.d1, self.d2, self.d3)


def represent2(c: int, x: int, y: int) -> Optional[tuple[int, int]]:
    """Return ``(A, B)`` with ``c == A*x + B*y``, A, B >= 0 and A least, else None.

    ``x`` and ``y`` need not be coprime.
    """
    if c < 0:
        return None
    if c == 0:
        return (0, 0)
    g = gcd(x, y)
    if c % g:
        return None
    c, x, y = c // g, x // g, y // g
    # least A >= 0 with A*x == c (mod y)
    a = (c * pow(x, -1, y)) % y if y > 1 else 0
    rest = c - a * x
    if rest < 0:
        return None
    return (a, rest // y)


def membership2(c: int, g: GenSet2) -> bool:
    return represent2(c, g.d1, g.d2) is not None


def frobenius2(g: GenSet2) -> int:
    """Largest integer outside S(d1, d2): d1*d2 - d1 - d2."""
    return g.d1 * g.d2 - g.d1 - g.d2


def find_dependence(gens: Sequence[int]) -> Optional[tuple[int, tuple[int, int], tuple[int, int]]]:
    """Find a generator expressible through the other two.

    Returns ``(i, (j, k), (A, B))`` meaning ``gens[i] == A*gens[j] + B*gens[k]``,
    or None when the set is minimal.  Equal generators count as dependent.
    """
    for i in range(3):
        j, k = (n for n in range(3) if n != i)
        rep = represent2(gens[i], gens[j], gens[k])
        if rep is not None:
            return i, (j, k), rep
    return None


def is_minimal_genset(g: GenSet3) -> bool:
    return find_dependence(g.values) is None


@dataclass(frozen=True)
class RelationMatrix:
    """Unsigned entries of the minimal relation matrix.

    Row i reads ``a[i][i] * d_i == a[i][j] * d_j + a[i][k] * d_k`` with the
    diagonal entry the least value >= 2 for which such a relation exists.
    """

    gens: tuple[int, int, int]
    a: tuple[tuple[int, int, int], ...]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.a[i][j]

    @property
    def diagonal(self) -> tuple[int, int, int]:
        return tuple(self.a[i][i] for i in range(3))

    def rows_are_relations(self) -> bool:
        d = self.gens
        a = self.a
        return all(
            a[i][i] * d[i] == sum(a[i][j] * d[j] for j in range(3) if j != i)
            for i in range(3)
        )

    def rows_primitive(self) -> bool:
        return all(gcd(*row) == 1 for row in self.a)

    def column_sums_hold(self) -> bool:
        a = self.a
        return (
            a[0][0] == a[1][0] + a[2][0]
            and a[1][1] == a[0][1] + a[2][1]
            and a[2][2] == a[0][2] + a[1][2]
        )

    def minors_hold(self) -> bool:
        a = self.a
        d1, d2, d3 = self.gens
        return (
            d1 == a[1][1] * a[2][2] - a[1][2] * a[2][1]
            and d2 == a[0][0] * a[2][2] - a[0][2] * a[2][0]
            and d3 == a[0][0] * a[1][1] - a[0][1] * a[1][0]
        )

    def herzog_identities(self) -> bool:
        """The six identities that tie entries and generators together.

        They hold for non-symmetric triples; in the symmetric case two rows
        are proportional and the minors collapse.
        """
        return self.column_sums_hold() and self.minors_hold()

    def has_zero_off_diagonal(self) -> bool:
        return any(self.a[i][j] == 0 for i in range(3) for j in range(3) if i != j)


def minimal_relations(g: GenSet3) -> RelationMatrix:
    """Rows with the least diagonal entry v >= 2 admitting a relation."""
    if not is_minimal_genset(g):
        raise NonMinimalGenerators(f"{g.values} is not a minimal generating set")
    d = g.values
    rows = []
    for i in range(3):
        j, k = (n for n in range(3) if n != i)
        # v = d_j always works (v*d_i = d_i*d_j), so the search is bounded
        for v in range(2, d[j] * d[k] + 1):
            rep = represent2(v * d[i], d[j], d[k])
            if rep is not None:
                break
        else:  # pragma: no cover - unreachable for positive generators
            raise RuntimeError(f"no relation found for generator {d[i]}")
        row = [0, 0, 0]
        row[i], row[j], row[k] = v, rep[0], rep[1]
        rows.append(tuple(row))
    return RelationMatrix(d, tuple(rows))


def _balanced_relations(d: tuple[int, int, int]) -> Optional[RelationMatrix]:
    # For a symmetric triple two minimal rows are proportional.  Keep the pair
    # row and the third generator's row, and replace the remaining one by
    # their difference so that every column sums to zero.
    for (i, j), k in pair_orders(d):
        lam = gcd(d[i], d[j])
        if lam == 1 or gcd(d[k], lam) != 1:
            continue
        if represent2(d[k], d[i] // lam, d[j] // lam) is None:
            continue
        x, y = represent2(lam * d[k], d[i], d[j])
        a = [[0] * 3 for _ in range(3)]
        a[i][i], a[i][j] = d[j] // lam, d[i] // lam
        a[k][k], a[k][i], a[k][j] = lam, x, y
        a[j][j], a[j][i], a[j][k] = a[i][j] + y, a[i][i] - x, lam
        return RelationMatrix(d, tuple(tuple(r) for r in a))
    return None


def johnson_matrix(g: GenSet3) -> RelationMatrix:
    """Relation matrix satisfying the column-sum and minor identities.

    For non-symmetric triples this is exactly :func:`minimal_relations`.
    For symmetric ones those rows are linearly dependent, so one row is
    swapped for a relation with a larger diagonal; the pair row keeps its
    zero off-diagonal entry.
    """
    m = minimal_relations(g)
    if m.herzog_identities():
        return m
    balanced = _balanced_relations(g.values)
    if balanced is None:  # pragma: no cover - would contradict the gluing structure
        raise RuntimeError(f"no balanced presentation for {g.values}")
    return balanced


@dataclass(frozen=True)
class HilbertForm:
    """H(z) = prod(1 - z^e for e in numerator) / prod(1 - z^d for d in denominator)."""

    numerator_exponents: tuple[int, ...]
    denominator_exponents: tuple[int, ...]

    @property
    def conductor(self) -> int:
        """Conductor implied by a symmetric-type numerator (1-z^e1)(1-z^e2)."""
        return sum(self.numerator_exponents) - sum(self.denominator_exponents) + 1

    def default_limit(self) -> int:
        return max(self.conductor, 0) + HILBERT_SLACK

    def render(self) -> str:
        num = "".join(f"(1-z^{e})" for e in self.numerator_exponents)
        den = "".join(f"(1-z^{d})" for d in self.denominator_exponents)
        return f"{num} / ({den})"


def hilbert_coefficients(h: HilbertForm, limit: int) -> np.ndarray:
    """Exact coefficients of z^0 .. z^limit in the expansion of ``h``."""
    size = limit + 1
    coeffs = np.zeros(size, dtype=np.int64)
    # expand the numerator product term by term
    coeffs[0] = 1
    for e in h.numerator_exponents:
        if e < size:
            coeffs[e:] -= coeffs[: size - e].copy()
    # dividing by (1 - z^d) is a running sum along each residue class mod d
    for d in h.denominator_exponents:
        if d >= size:
            continue
        rows = -(-size // d)
        padded = np.zeros(rows * d, dtype=np.int64)
        padded[:size] = coeffs
        coeffs = np.cumsum(padded.reshape(rows, d), axis=0).reshape(-1)[:size]
    return coeffs


def hilbert_coefficient(h: HilbertForm, degree: int, limit: Optional[int] = None) -> int:
    if limit is None:
        limit = h.default_limit()
    if degree < 0:
        raise ValueError(f"degree must be nonnegative, got {degree}")
    if degree > limit:
        raise TruncationExceeded(f"degree {degree} exceeds truncation limit {limit}")
    return int(hilbert_coefficients(h, degree)[degree])


@dataclass(frozen=True)
class SymmetricCertificate:
    """Closed forms for a symmetric S(d1, d2, d3) with a designated pair.

    ``pair`` holds the two generator values sharing ``lam = gcd(pair) > 1``;
    ``third`` is the remaining generator.
    """

    generators: tuple[int, int, int]
    pair: tuple[int, int]
    third: int
    lam: int
    e1: int
    e2: int
    frobenius: int
    genus: int
    witness: tuple[int, int] = field(default=(0, 0))

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def hilbert(self) -> HilbertForm:
        return HilbertForm(tuple(sorted((self.e1, self.e2))), self.generators)

    def is_consistent(self) -> bool:
        x, y = self.pair
        return (
            sorted((x, y, self.third)) == sorted(self.generators)
            and self.lam == gcd(x, y)
            and self.e1 == lcm(x, y)
            and self.e2 == self.third * self.lam
            and self.frobenius == self.e1 + self.e2 - sum(self.generators)
            and 2 * self.genus == self.frobenius + 1
        )


def symmetric_closed_forms(g: GenSet3, pair: tuple[int, int]) -> SymmetricCertificate:
    """Certificate for ``g`` using the generator values ``pair`` as the gcd pair.

    Raises NotSymmetric unless gcd(pair) = lam > 1, the third generator is
    coprime to lam, and it lies in S(pair[0]/lam, pair[1]/lam).
    """
    x, y = pair
    rest = list(g.values)
    try:
        rest.remove(x)
        rest.remove(y)
    except ValueError:
        raise ValueError(f"pair {pair} is not part of {g.values}") from None
    (third,) = rest
    lam = gcd(x, y)
    if lam == 1:
        raise NotSymmetric(f"gcd({x}, {y}) = 1")
    if gcd(third, lam) != 1:
        raise NotSymmetric(f"gcd({third}, {lam}) != 1")
    rep = represent2(third, x // lam, y // lam)
    if rep is None:
        raise NotSymmetric(f"{third} not in S({x // lam}, {y // lam})")
    e1 = x * y // lam
    e2 = third * lam
    frob = e1 + e2 - sum(g.values)
    return SymmetricCertificate(
        generators=g.values,
        pair=(x, y),
        third=third,
        lam=lam,
        e1=e1,
        e2=e2,
        frobenius=frob,
        genus=(frob + 1) // 2,
        witness=rep,
    )


def pair_orders(values: Sequence[int]) -> list[tuple[tuple[int, int], int]]:
    """All (pair, third) index splits of three items, largest gcd first.

    Ties go to the lexicographically smallest pair of positions.
    """
    splits = [((0, 1), 2), ((0, 2), 1), ((1, 2), 0)]
    return sorted(splits, key=lambda s: -gcd(values[s[0][0]], values[s[0][1]]))

