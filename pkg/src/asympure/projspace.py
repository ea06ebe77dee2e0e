"""Exact line-bundle cohomology on P^n and on P^n x P^n.

Dimensions of H^q(P^n, O(d)) follow the classical three-band closed form
(global sections for d >= 0, top cohomology for d <= -(n+1), nothing in
between); products are handled by the Kunneth convolution.  Everything here
is exact integer arithmetic -- binomials overflow 64 bits quickly at the
scan ranges we care about, so no floats and no fixed-width ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def binomial(p: int, q: int) -> int:
    """Binomial coefficient C(p, q), defined as 0 when q < 0 or p < q.

    No generalized/negative binomials: the cohomology bands are dispatched
    by explicit sign ranges, which keeps the sign conventions out of the
    combinatorics.
    """
    if q < 0 or p < q:
        return 0
    return math.comb(p, q)


def sym_dim(n: int, d: int) -> int:
    """dim Sym^d(C^(n+1)) = C(d+n, n), with negative d giving the zero space."""
    return binomial(d + n, n)


@dataclass(frozen=True)
class DivisorClass:
    """Integer class a1*H1 + a2*H2 in the Neron-Severi lattice of P^n x P^n.

    H1 and H2 are the two hyperplane pullbacks.  Coefficients are
    unrestricted integers; negation and integer scaling stay in the lattice.
    """

    a1: int
    a2: int

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a1, -self.a2)

    def __mul__(self, scale: int) -> "DivisorClass":
        return DivisorClass(scale * self.a1, scale * self.a2)

    __rmul__ = __mul__


@dataclass(frozen=True)
class CohomologyVector:
    """Exact cohomology dimensions (h^0, ..., h^n_ambient) of one sheaf.

    For the line bundles in scope at most one entry is ever nonzero; the
    constructor enforces this along with nonnegativity.
    """

    n_ambient: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_ambient < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.n_ambient}")
        if len(self.values) != self.n_ambient + 1:
            raise ValueError(
                f"need {self.n_ambient + 1} entries, got {len(self.values)}"
            )
        if any(v < 0 for v in self.values):
            raise ValueError("cohomology dimensions must be nonnegative")
        if sum(1 for v in self.values if v) > 1:
            raise ValueError("line bundles in scope have single-index cohomology")

    def __getitem__(self, q: int) -> int:
        """h^q, with indices outside [0, n_ambient] giving 0."""
        if 0 <= q <= self.n_ambient:
            return self.values[q]
        return 0

    def support(self) -> tuple[int, ...]:
        return tuple(q for q, v in enumerate(self.values) if v)

    def euler(self) -> int:
        return sum(v if q % 2 == 0 else -v for q, v in enumerate(self.values))


def bott_cohomology(n: int, d: int) -> CohomologyVector:
    """All cohomology dimensions of O(d) on P^n.

    h^0 = C(n+d, n) for d >= 0, h^n = C(-d-1, n) for d <= -(n+1), and the
    band d in [-n, -1] is acyclic (the zero vector, not an error: scans walk
    straight through it).

    >>> bott_cohomology(2, 3).values
    (10, 0, 0)
    >>> bott_cohomology(2, -1).values
    (0, 0, 0)
    >>> bott_cohomology(2, -4).values
    (0, 0, 3)
    """
    if n < 1:
        raise ValueError(f"projective dimension must be >= 1, got {n}")
    values = [0] * (n + 1)
    if d >= 0:
        values[0] = binomial(n + d, n)
    elif d <= -(n + 1):
        values[n] = binomial(-d - 1, n)
    return CohomologyVector(n, tuple(values))


def kunneth_cohomology(n: int, divisor: DivisorClass) -> CohomologyVector:
    """Cohomology of O(a1, a2) on P^n x P^n by the Kunneth convolution.

    Each factor contributes in at most one index, so the product has at
    most one nonzero entry as well.

    >>> kunneth_cohomology(2, DivisorClass(1, 1)).values
    (9, 0, 0, 0, 0)
    >>> kunneth_cohomology(1, DivisorClass(-2, -2)).values
    (0, 0, 1)
    """
    if n < 1:
        raise ValueError(f"projective dimension must be >= 1, got {n}")
    left = bott_cohomology(n, divisor.a1).values
    right = bott_cohomology(n, divisor.a2).values
    values = [0] * (2 * n + 1)
    for j, x in enumerate(left):
        if not x:
            continue
        for q, y in enumerate(right):
            if y:
                values[j + q] += x * y
    return CohomologyVector(2 * n, tuple(values))


def euler_characteristic(n: int, divisor: DivisorClass) -> int:
    """Alternating sum of the Kunneth cohomology of O(a1, a2).

    Equals the product of the one-factor Euler characteristics; used as a
    consistency check for the exact-sequence bookkeeping downstream.
    """
    return kunneth_cohomology(n, divisor).euler()
