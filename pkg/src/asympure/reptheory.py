"""Representation-theoretic engine for the symmetric-power contraction map.

Decomposes Sym^A (x) Sym^B into two-row SL(n+1) irreducibles via the Pieri
rule, evaluates exact Weyl dimensions, and predicts the kernel/cokernel of
the equivariant contraction (sum_i x_i (x) d_i)^k as a multiset difference
of the source and target decompositions: every component shared by both
sides maps isomorphically (certified by a nonvanishing highest-weight
image), so only the unshared components survive.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

from .projspace import sym_dim


@dataclass(frozen=True)
class IrrepLabel:
    """Two-row partition (lambda1, lambda2) labeling an SL(n+1) irreducible.

    Rows 3..n+1 are implicitly zero.  In fundamental-weight coordinates
    (c1, c2) the same representation is the partition (c1+c2, c2); the
    conversion happens once, at construction, so the dimension formula
    covers n = 1 uniformly.
    """

    lambda1: int
    lambda2: int
    rank_n: int

    def __post_init__(self) -> None:
        if self.rank_n < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank_n}")
        if not self.lambda1 >= self.lambda2 >= 0:
            raise ValueError(
                f"need lambda1 >= lambda2 >= 0, got ({self.lambda1}, {self.lambda2})"
            )

    @classmethod
    def from_fundamental(cls, n: int, c1: int, c2: int) -> "IrrepLabel":
        """Label from fundamental-weight coordinates (c1, c2, 0, ..., 0)."""
        return cls(c1 + c2, c2, n)


def weyl_dimension(n: int, label: IrrepLabel) -> int:
    """Exact dimension of the SL(n+1) irreducible with the given label.

    Product over 1 <= p < q <= n+1 of (lambda_p - lambda_q + q - p)/(q - p)
    with lambda = (lambda1, lambda2, 0, ..., 0); always an exact integer.

    >>> weyl_dimension(2, IrrepLabel(1, 0, 2))
    3
    >>> weyl_dimension(2, IrrepLabel(9, 3, 2))
    154
    """
    if label.rank_n != n:
        raise ValueError(f"label has rank {label.rank_n}, expected {n}")
    lam = (label.lambda1, label.lambda2) + (0,) * (n - 1)
    num = 1
    den = 1
    for p in range(n + 1):
        for q in range(p + 1, n + 1):
            num *= lam[p] - lam[q] + q - p
            den *= q - p
    quotient, remainder = divmod(num, den)
    assert remainder == 0, "Weyl dimension must be an integer"
    return quotient


@dataclass(frozen=True)
class PieriDecomposition:
    """Decomposition of Sym^A (x) Sym^B into two-row irreducibles.

    Component i (for i = 0..min(A, B)) is the partition (A+B-i, i); each
    occurs with multiplicity one.
    """

    A: int
    B: int
    rank_n: int
    components: tuple[IrrepLabel, ...]

    def dimension(self) -> int:
        return sum(weyl_dimension(self.rank_n, c) for c in self.components)


def pieri_decompose(n: int, A: int, B: int) -> PieriDecomposition:
    """Pieri decomposition of Sym^A (x) Sym^B for SL(n+1); symmetric in A, B.

    >>> [(c.lambda1, c.lambda2) for c in pieri_decompose(1, 2, 1).components]
    [(3, 0), (2, 1)]
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    if A < 0 or B < 0:
        raise ValueError(f"symmetric-power exponents must be >= 0, got ({A}, {B})")
    components = tuple(IrrepLabel(A + B - i, i, n) for i in range(min(A, B) + 1))
    return PieriDecomposition(A, B, n, components)


@dataclass(frozen=True)
class MapAnalysis:
    """Predicted kernel/cokernel of one contraction map.

    kernel_labels lists the source components missing from the target
    decomposition, cokernel_labels the reverse; the dims are their Weyl
    dimension sums.  kernel_dim - cokernel_dim always equals
    dim(source) - dim(target).
    """

    kernel_dim: int
    cokernel_dim: int
    kernel_labels: tuple[IrrepLabel, ...]
    cokernel_labels: tuple[IrrepLabel, ...]


def highest_weight_certificate(n: int, k: int, B: int, i: int) -> int:
    """Coefficient of the highest-weight image on the shared component i.

    Equals the falling factorial (B-i)(B-i-1)...(B-k-i+1), i.e.
    (B-i)!/(B-k-i)!, and 0 when B-k-i < 0 -- the semantically correct
    "component not shared" answer rather than an error.  A nonzero value
    certifies that the contraction is injective on that component.

    >>> highest_weight_certificate(2, 1, 3, 0)
    3
    >>> highest_weight_certificate(2, 2, 3, 2)
    0
    """
    if not 0 <= i <= B:
        raise ValueError(f"index i must lie in [0, {B}], got {i}")
    if B - k - i < 0:
        return 0
    product = 1
    for j in range(k):
        product *= B - i - j
    return product


def predict_map_analysis(n: int, k: int, A: int, B: int) -> MapAnalysis:
    """Kernel/cokernel of Sym^A (x) Sym^B -> Sym^(A+k) (x) Sym^(B-k).

    The map is multiplication by the contraction (sum_i x_i (x) d_i)^k.
    Source components run over i in [0, min(A, B)], target components over
    i in [0, min(A+k, B-k)]; the shared range maps isomorphically (Schur
    plus the highest-weight certificates), so the analysis is the multiset
    difference of the two index ranges.

    >>> predict_map_analysis(2, 1, 9, 3).kernel_dim
    154
    >>> predict_map_analysis(2, 1, 2, 4).cokernel_dim
    10
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n, k >= 1, got n={n}, k={k}")
    if A < 0:
        raise ValueError(f"source exponent A must be >= 0, got {A}")
    if B < k:
        raise ValueError(f"need B >= k so the target exponent B-k >= 0, got B={B}, k={k}")
    source_top = min(A, B)
    target_top = min(A + k, B - k)
    total = A + B
    kernel_labels = tuple(
        IrrepLabel(total - i, i, n) for i in range(target_top + 1, source_top + 1)
    )
    cokernel_labels = tuple(
        IrrepLabel(total - i, i, n) for i in range(source_top + 1, target_top + 1)
    )
    return MapAnalysis(
        kernel_dim=sum(weyl_dimension(n, c) for c in kernel_labels),
        cokernel_dim=sum(weyl_dimension(n, c) for c in cokernel_labels),
        kernel_labels=kernel_labels,
        cokernel_labels=cokernel_labels,
    )


def series_exponents(n: int, k: int, a1: int, a2: int, m: int) -> tuple[int, int]:
    """Source exponents (A, B) = (m*a1 - k, m*a2 + k - (n+1)) at multiple m.

    These are the exponents of the twisted restriction sequence for the
    divisor a1*H1 - a2*H2 against the bidegree-(k, k) special fiber; the
    target exponents are (A+k, B-k) = (m*a1, m*a2 - (n+1)).
    """
    return m * a1 - k, m * a2 + k - (n + 1)


def kernel_series_rep(
    n: int, k: int, a1: int, a2: int, m_range: Iterable[int]
) -> list[tuple[int, int, int]]:
    """Predicted (m, kernel_dim, cokernel_dim) rows over a range of multiples.

    Multiples whose exponents are not yet feasible (A < 0 or B < k) are
    dropped with a warning; an empty result after filtering is an error.
    """
    if a1 < 1 or a2 < 1:
        raise ValueError(f"divisor coefficients must be >= 1, got ({a1}, {a2})")
    rows: list[tuple[int, int, int]] = []
    dropped: list[int] = []
    for m in m_range:
        A, B = series_exponents(n, k, a1, a2, m)
        if A < 0 or B < k:
            dropped.append(m)
            continue
        analysis = predict_map_analysis(n, k, A, B)
        rows.append((m, analysis.kernel_dim, analysis.cokernel_dim))
    if dropped:
        warnings.warn(
            f"dropped m={dropped}: exponents not feasible for n={n}, k={k}, "
            f"divisor ({a1}, {a2})",
            stacklevel=2,
        )
    if not rows:
        raise ValueError("no feasible multiple m in the requested range")
    return rows


def source_target_dims(n: int, k: int, A: int, B: int) -> tuple[int, int]:
    """Ambient dimensions of the contraction's source and target."""
    return sym_dim(n, A) * sym_dim(n, B), sym_dim(n, A + k) * sym_dim(n, B - k)
