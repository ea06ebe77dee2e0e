"""Brute-force engine: exact matrices of contraction operators and their ranks.

A contraction operator acts on Sym^A (x) Sym^B by multiplying the first
factor with monomials and differentiating the second; its matrix between
monomial bases has exact integer entries (falling factorials, stored as
Python ints since they outgrow 64 bits for large B).  Ranks are computed
over the rationals: modulo two independent random primes above 2^30, with
an exact fraction-free elimination double-check below a size threshold.
Modular rank can only undershoot the true rank, so two-prime agreement is
certification at desk scale; the primes are logged for audit.

The matrix layout is part of the golden-test contract: bases are ordered
graded-lexicographically (within the fixed degree, exponent tuples in
descending lex order, so x0^d comes first) and a pair basis is indexed
first-factor-major.
"""

from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from pathlib import Path
from typing import Iterable

import numpy as np

from .projspace import sym_dim

logger = logging.getLogger(__name__)

# Exponent tuple of a monomial; its degree is the sum of the entries.
Monomial = tuple[int, ...]

DEFAULT_SIZE_CAP = 200_000
# Exact Bareiss elimination runs alongside the modular ranks whenever both
# matrix dimensions are at or below this; above it, two-prime agreement is
# reported (with the primes logged).  Graded operators split into small
# weight blocks, so the exact pass is cheap at this scale.
DEFAULT_EXACT_LIMIT = 2000

_PRIME_LOW = 2**30 + 1
_PRIME_HIGH = 2**31  # (p-1)^2 < 2^62 keeps int64 elimination overflow-free


class SizeCapError(ValueError):
    """Requested bases exceed the configured size cap."""

    def __init__(self, dim_source: int, dim_target: int, cap: int):
        self.dim_source = dim_source
        self.dim_target = dim_target
        self.cap = cap
        super().__init__(
            f"basis sizes {dim_source} (source) and {dim_target} (target) "
            f"exceed the cap {cap}"
        )


@lru_cache(maxsize=None)
def monomial_basis(n: int, degree: int) -> tuple[Monomial, ...]:
    """Monomial basis of Sym^degree(C^(n+1)) in graded-lex order.

    >>> monomial_basis(1, 2)
    ((2, 0), (1, 1), (0, 2))
    """
    if degree < 0:
        return ()
    if n == 0:
        return ((degree,),)
    out: list[Monomial] = []
    for e in range(degree, -1, -1):
        for tail in monomial_basis(n - 1, degree - e):
            out.append((e, *tail))
    return tuple(out)


@dataclass(frozen=True)
class ContractionOperator:
    """Bihomogeneous operator sum of coeff * x^alpha (x) d^beta of bidegree (k, -k).

    Each term multiplies the first tensor factor by x^alpha and applies the
    differential operator d^beta to the second, with |alpha| = |beta| = k.
    """

    n: int
    k: int
    terms: tuple[tuple[int, Monomial, Monomial], ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise ValueError(f"need n, k >= 1, got n={self.n}, k={self.k}")
        seen: set[tuple[Monomial, Monomial]] = set()
        for coeff, alpha, beta in self.terms:
            if coeff == 0:
                raise ValueError("term coefficients must be nonzero")
            for v in (alpha, beta):
                if len(v) != self.n + 1 or any(e < 0 for e in v):
                    raise ValueError(f"exponent vector {v} must have {self.n + 1} nonnegative entries")
            if sum(alpha) != self.k or sum(beta) != self.k:
                raise ValueError(
                    f"term ({alpha}, {beta}) must have degree {self.k} on both sides"
                )
            if (alpha, beta) in seen:
                raise ValueError(f"duplicate term ({alpha}, {beta})")
            seen.add((alpha, beta))

    def canonical_key(self) -> str:
        """Deterministic, parseable string form; used for cache keys."""
        parts = [
            f"{coeff}*x{'.'.join(map(str, alpha))}d{'.'.join(map(str, beta))}"
            for coeff, alpha, beta in sorted(self.terms, key=lambda t: (t[1], t[2]))
        ]
        return f"n{self.n}k{self.k}:" + "+".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "terms": [
                {"coeff": coeff, "alpha": list(alpha), "beta": list(beta)}
                for coeff, alpha, beta in self.terms
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ContractionOperator":
        try:
            terms = tuple(
                (int(t["coeff"]), tuple(int(e) for e in t["alpha"]), tuple(int(e) for e in t["beta"]))
                for t in data["terms"]
            )
            return cls(int(data["n"]), int(data["k"]), terms)
        except KeyError as exc:
            raise ValueError(f"operator document missing field {exc}") from exc


def load_operator(path: str | Path) -> ContractionOperator:
    """Read a ContractionOperator from a JSON document with fields n, k, terms."""
    with open(path, encoding="utf-8") as handle:
        return ContractionOperator.from_json_dict(json.load(handle))


def special_fiber_operator(n: int, k: int) -> ContractionOperator:
    """The contraction (sum_i x_i (x) d_i)^k: diagonal terms with multinomial coefficients.

    >>> [t[0] for t in special_fiber_operator(1, 2).terms]
    [1, 2, 1]
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n, k >= 1, got n={n}, k={k}")
    terms = tuple(
        (factorial(k) // prod(factorial(e) for e in alpha), alpha, alpha)
        for alpha in monomial_basis(n, k)
    )
    return ContractionOperator(n, k, terms)


def apply_term(
    coeff: int, alpha: Monomial, beta: Monomial, u: Monomial, v: Monomial
) -> tuple[int, Monomial, Monomial] | None:
    """Apply coeff * x^alpha (x) d^beta to the basis element x^u (x) y^v.

    Returns (scale, u + alpha, v - beta) with the falling-factorial scale
    from true differentiation, or None when d^beta kills y^v.

    >>> apply_term(1, (1, 0, 0), (1, 0, 0), (0, 0, 0), (2, 0, 0))
    (2, (1, 0, 0), (1, 0, 0))
    """
    scale = coeff
    for vj, bj in zip(v, beta):
        if bj:
            if vj < bj:
                return None
            for t in range(bj):
                scale *= vj - t
    return (
        scale,
        tuple(a + b for a, b in zip(u, alpha)),
        tuple(a - b for a, b in zip(v, beta)),
    )


@dataclass(frozen=True)
class SparseIntMatrix:
    """Column-major sparse matrix with exact integer entries.

    shape is (rows, cols) = (dim_target, dim_source); column j holds the
    image of the j-th source basis pair.
    """

    shape: tuple[int, int]
    columns: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self.columns)

    def to_dense(self) -> list[list[int]]:
        rows, _ = self.shape
        dense = [[0] * len(self.columns) for _ in range(rows)]
        for j, col in enumerate(self.columns):
            for r, val in col:
                dense[r][j] = val
        return dense


def build_matrix(
    op: ContractionOperator, A: int, B: int, size_cap: int = DEFAULT_SIZE_CAP
) -> SparseIntMatrix:
    """Matrix of op from Sym^A (x) Sym^B to Sym^(A+k) (x) Sym^(B-k).

    B in [0, k) is allowed and yields a matrix with zero rows (the target
    space is zero); that case carries real content for small multiples in
    series scans.  Bases follow the graded-lex contract.
    """
    n, k = op.n, op.k
    if A < 0 or B < 0:
        raise ValueError(f"source exponents must be >= 0, got A={A}, B={B}")
    dim_source = sym_dim(n, A) * sym_dim(n, B)
    dim_target = sym_dim(n, A + k) * sym_dim(n, B - k)
    if dim_source > size_cap or dim_target > size_cap:
        raise SizeCapError(dim_source, dim_target, size_cap)
    target_u = {u: i for i, u in enumerate(monomial_basis(n, A + k))}
    target_v = {v: i for i, v in enumerate(monomial_basis(n, B - k))}
    width = len(target_v)
    columns: list[tuple[tuple[int, int], ...]] = []
    for u in monomial_basis(n, A):
        for v in monomial_basis(n, B):
            image: dict[int, int] = {}
            for coeff, alpha, beta in op.terms:
                hit = apply_term(coeff, alpha, beta, u, v)
                if hit is None:
                    continue
                scale, u2, v2 = hit
                row = target_u[u2] * width + target_v[v2]
                image[row] = image.get(row, 0) + scale
            columns.append(
                tuple((r, val) for r, val in sorted(image.items()) if val != 0)
            )
    return SparseIntMatrix((dim_target, dim_source), tuple(columns))


@dataclass(frozen=True)
class RankResult:
    """Exact rank data for one contraction matrix.

    certified means the modular ranks agreed (and matched the exact
    elimination when it ran); the primes are retained for audit.
    """

    dim_source: int
    dim_target: int
    rank: int
    kernel_dim: int
    cokernel_dim: int
    certified: bool
    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kernel_dim != self.dim_source - self.rank:
            raise ValueError("rank-nullity violated on the source side")
        if self.cokernel_dim != self.dim_target - self.rank:
            raise ValueError("rank-nullity violated on the target side")
        if not 0 <= self.rank <= min(self.dim_source, self.dim_target):
            raise ValueError("rank out of range")


def _is_prime(x: int) -> bool:
    # Miller-Rabin with bases 2, 3, 5, 7 is exact below 3_215_031_751 > 2^31.
    for p in (2, 3, 5, 7):
        if x % p == 0:
            return x == p
    d, s = x - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        y = pow(a, d, x)
        if y in (1, x - 1):
            continue
        for _ in range(s - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def _random_prime(rng: random.Random) -> int:
    while True:
        candidate = rng.randrange(_PRIME_LOW, _PRIME_HIGH) | 1
        while candidate < _PRIME_HIGH and not _is_prime(candidate):
            candidate += 2
        if candidate < _PRIME_HIGH:
            return candidate


def _connected_components(
    matrix: SparseIntMatrix,
) -> list[tuple[list[int], list[int]]]:
    """Partition the support into (rows, cols) blocks with no shared rows.

    Rank is additive across the blocks.  Graded operators decompose into
    many small weight blocks, which keeps the dense eliminations tiny; the
    decomposition is pure sparsity structure, valid for any matrix.
    """
    parent = list(range(len(matrix.columns)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    row_owner: dict[int, int] = {}
    for ci, col in enumerate(matrix.columns):
        for r, _ in col:
            if r in row_owner:
                rx, ry = find(ci), find(row_owner[r])
                if rx != ry:
                    parent[ry] = rx
            else:
                row_owner[r] = ci
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for ci, col in enumerate(matrix.columns):
        if col:
            groups.setdefault(find(ci), ([], []))[1].append(ci)
    for r, owner in row_owner.items():
        groups[find(owner)][0].append(r)
    return [(sorted(rows), cols) for rows, cols in groups.values()]


def _component_entries(
    matrix: SparseIntMatrix, rows: list[int], cols: list[int]
) -> list[tuple[int, int, int]]:
    rmap = {r: i for i, r in enumerate(rows)}
    return [
        (rmap[r], j, val)
        for j, ci in enumerate(cols)
        for r, val in matrix.columns[ci]
    ]


def _rank_mod_p(
    entries: list[tuple[int, int, int]], nrows: int, ncols: int, p: int
) -> int:
    if nrows == 0 or ncols == 0:
        return 0
    a = np.zeros((nrows, ncols), dtype=np.int64)
    for i, j, val in entries:
        a[i, j] = val % p
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        factors = a[r + 1 :, c]
        hot = np.nonzero(factors)[0]
        if hot.size:
            block = a[r + 1 :, c:]
            block[hot] = (block[hot] - factors[hot, None] * a[r, c:]) % p
        r += 1
    return r


def _rank_bareiss(
    entries: list[tuple[int, int, int]], nrows: int, ncols: int
) -> int:
    """Exact rank by fraction-free (Bareiss) elimination over the integers."""
    if nrows == 0 or ncols == 0:
        return 0
    a = [[0] * ncols for _ in range(nrows)]
    for i, j, val in entries:
        a[i][j] = val
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pivot_row = a[r]
        pivot = pivot_row[c]
        for i in range(r + 1, nrows):
            row = a[i]
            lead = row[c]
            for j in range(c + 1, ncols):
                row[j] = (pivot * row[j] - lead * pivot_row[j]) // prev
            row[c] = 0
        prev = pivot
        r += 1
    return r


def exact_rank(
    matrix: SparseIntMatrix,
    *,
    seed: int = 0,
    rng: random.Random | None = None,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
) -> RankResult:
    """Rank of the matrix over the rationals, with kernel/cokernel dimensions.

    Computes the rank modulo two independent random primes > 2^30 (drawn
    from the seeded generator) and, when both matrix dimensions are at most
    exact_limit, also by exact fraction-free elimination, which is then
    authoritative.  certified is True when the routes agree; a disagreement
    between primes (which can only undershoot) triggers fresh primes until
    two agree at the maximum.
    """
    if rng is None:
        rng = random.Random(seed)
    dim_target, dim_source = matrix.shape
    components = [
        (_component_entries(matrix, rows, cols), len(rows), len(cols))
        for rows, cols in _connected_components(matrix)
    ]
    p1 = _random_prime(rng)
    p2 = _random_prime(rng)
    while p2 == p1:
        p2 = _random_prime(rng)
    primes = [p1, p2]
    modular = [
        sum(_rank_mod_p(entries, nr, nc, p) for entries, nr, nc in components)
        for p in primes
    ]
    use_exact = max(matrix.shape) <= exact_limit
    if use_exact:
        rank = sum(_rank_bareiss(entries, nr, nc) for entries, nr, nc in components)
        certified = True
        if any(r != rank for r in modular):
            logger.warning(
                "modular rank undershot the exact rank %d (primes %s)", rank, primes
            )
    elif modular[0] == modular[1]:
        rank = modular[0]
        certified = True
    else:
        # Vanishingly unlikely; modular rank <= true rank, so keep drawing
        # until the running maximum is seen twice.
        seen = sorted(modular)
        for _ in range(6):
            p = _random_prime(rng)
            if p in primes:
                continue
            primes.append(p)
            seen.append(
                sum(_rank_mod_p(entries, nr, nc, p) for entries, nr, nc in components)
            )
            seen.sort()
            if seen[-1] == seen[-2]:
                break
        rank = seen[-1]
        certified = seen[-1] == seen[-2]
    logger.debug(
        "rank %d of %dx%d matrix via primes %s%s",
        rank,
        dim_target,
        dim_source,
        primes,
        " + exact elimination" if use_exact else "",
    )
    return RankResult(
        dim_source=dim_source,
        dim_target=dim_target,
        rank=rank,
        kernel_dim=dim_source - rank,
        cokernel_dim=dim_target - rank,
        certified=certified,
        primes=tuple(primes),
    )


def oracle_series(
    op: ContractionOperator,
    n: int,
    k: int,
    a1: int,
    a2: int,
    m_range: Iterable[int],
    *,
    seed: int = 0,
    size_cap: int = DEFAULT_SIZE_CAP,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
) -> list[tuple[int, RankResult]]:
    """Per-multiple rank results for op along the special-fiber exponent schedule.

    At multiple m the source exponents are (m*a1 - k, m*a2 + k - (n+1));
    multiples where either is negative are skipped.  B in [0, k) is kept:
    the target is the zero space there and the kernel is the whole source.
    """
    if op.n != n or op.k != k:
        raise ValueError(
            f"operator has (n, k) = ({op.n}, {op.k}), expected ({n}, {k})"
        )
    if a1 < 1 or a2 < 1:
        raise ValueError(f"divisor coefficients must be >= 1, got ({a1}, {a2})")
    rng = random.Random(seed)
    out: list[tuple[int, RankResult]] = []
    for m in m_range:
        A = m * a1 - k
        B = m * a2 + k - (n + 1)
        if A < 0 or B < 0:
            continue
        matrix = build_matrix(op, A, B, size_cap=size_cap)
        out.append((m, exact_rank(matrix, rng=rng, exact_limit=exact_limit)))
    if not out:
        raise ValueError("no feasible multiple m in the requested range")
    return out
