"""Cross-check suite: the two engines against each other and against closed forms.

Each check returns (ok, detail) and the runner prints one PASS/FAIL line per
check.  The small suite keeps n <= 2, k <= 2, m <= 8 and finishes in well
under a minute; the full suite extends to m <= 12, the complete exponent
grid, and rank-3 prediction-only identities.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .asymptotics import fit_leading_coefficient, purity_report
from .oracle import (
    ContractionOperator,
    build_matrix,
    exact_rank,
    oracle_series,
    special_fiber_operator,
)
from .projspace import DivisorClass, binomial, bott_cohomology, kunneth_cohomology
from .reptheory import (
    pieri_decompose,
    predict_map_analysis,
    source_target_dims,
    weyl_dimension,
)

Check = tuple[str, Callable[[], tuple[bool, str]]]


def _check_bott_goldens() -> tuple[bool, str]:
    cases = [
        (2, 3, (10, 0, 0)),
        (2, -1, (0, 0, 0)),
        (2, -4, (0, 0, 3)),
        (3, 0, (1, 0, 0, 0)),
    ]
    for n, d, expected in cases:
        got = bott_cohomology(n, d).values
        if got != expected:
            return False, f"bott({n}, {d}) = {got}, expected {expected}"
    return True, f"{len(cases)} spot values"


def _check_serre_duality(n_max: int, d_max: int) -> tuple[bool, str]:
    for n in range(1, n_max + 1):
        for d in range(-d_max, d_max + 1):
            lhs = bott_cohomology(n, d).values
            rhs = bott_cohomology(n, -d - n - 1).values
            if lhs != tuple(reversed(rhs)):
                return False, f"duality fails at n={n}, d={d}"
    return True, f"n <= {n_max}, |d| <= {d_max}"


def _check_kunneth_duality(n_max: int, a_max: int) -> tuple[bool, str]:
    for n in range(1, n_max + 1):
        for a1 in range(-a_max, a_max + 1):
            for a2 in range(-a_max, a_max + 1):
                lhs = kunneth_cohomology(n, DivisorClass(a1, a2)).values
                dual = DivisorClass(-a1 - n - 1, -a2 - n - 1)
                rhs = kunneth_cohomology(n, dual).values
                if lhs != tuple(reversed(rhs)):
                    return False, f"duality fails at n={n}, ({a1}, {a2})"
    return True, f"n <= {n_max}, |a| <= {a_max}"


def _check_pieri_sums(n_max: int, e_max: int) -> tuple[bool, str]:
    for n in range(1, n_max + 1):
        for A in range(e_max + 1):
            for B in range(e_max + 1):
                total = pieri_decompose(n, A, B).dimension()
                expected = binomial(A + n, n) * binomial(B + n, n)
                if total != expected:
                    return False, f"dimension sum fails at n={n}, A={A}, B={B}"
    return True, f"n <= {n_max}, A, B <= {e_max}"


def _check_euler_consistency(n_list: list[int], k_max: int, e_max: int) -> tuple[bool, str]:
    count = 0
    for n in n_list:
        for k in range(1, k_max + 1):
            for A in range(e_max + 1):
                for B in range(k, e_max + 1):
                    analysis = predict_map_analysis(n, k, A, B)
                    src, tgt = source_target_dims(n, k, A, B)
                    if analysis.kernel_dim - analysis.cokernel_dim != src - tgt:
                        return False, f"Euler mismatch at n={n}, k={k}, A={A}, B={B}"
                    count += 1
    return True, f"{count} maps"


def _check_engine_series(m_max: int, seed: int) -> tuple[bool, str]:
    count = 0
    for n in (1, 2):
        for k in (1, 2):
            op = special_fiber_operator(n, k)
            for a1, a2 in ((1, 1), (2, 1), (1, 2)):
                oracle_rows = oracle_series(op, n, k, a1, a2, range(1, m_max + 1), seed=seed)
                for m, result in oracle_rows:
                    A = m * a1 - k
                    B = m * a2 + k - (n + 1)
                    if B < k:
                        predicted = (result.dim_source, 0)  # zero target: all kernel
                    else:
                        analysis = predict_map_analysis(n, k, A, B)
                        predicted = (analysis.kernel_dim, analysis.cokernel_dim)
                    got = (result.kernel_dim, result.cokernel_dim)
                    if got != predicted:
                        return (
                            False,
                            f"engines disagree at n={n}, k={k}, ({a1}, {a2}), m={m}: "
                            f"oracle {got}, predicted {predicted}",
                        )
                    count += 1
    return True, f"{count} multiples agree"


def _check_engine_grid(n_list: list[int], k_max: int, e_max: int, seed: int) -> tuple[bool, str]:
    count = 0
    for n in n_list:
        for k in range(1, k_max + 1):
            op = special_fiber_operator(n, k)
            for A in range(e_max + 1):
                for B in range(k, e_max + 1):
                    analysis = predict_map_analysis(n, k, A, B)
                    result = exact_rank(build_matrix(op, A, B), seed=seed)
                    if (result.kernel_dim, result.cokernel_dim) != (
                        analysis.kernel_dim,
                        analysis.cokernel_dim,
                    ):
                        return (
                            False,
                            f"engines disagree at n={n}, k={k}, A={A}, B={B}",
                        )
                    count += 1
    return True, f"{count} maps agree exactly"


def _corner_operator(terms: int) -> ContractionOperator:
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    return ContractionOperator(
        2, 1, tuple((1, e, e) for e in basis[:terms])
    )


def _check_corner_closed_form(m_max: int, seed: int) -> tuple[bool, str]:
    rows = oracle_series(_corner_operator(1), 2, 1, 1, 1, range(2, m_max + 1), seed=seed)
    for m, result in rows:
        expected = (m**3 - m) // 2
        if result.kernel_dim != expected:
            return False, f"kernel at m={m} is {result.kernel_dim}, expected {expected}"
    fit_rows = [(m, r.kernel_dim) for m, r in rows if m >= 4]
    lead = fit_leading_coefficient(fit_rows, 3)
    if lead != Fraction(1, 2):
        return False, f"leading coefficient {lead}, expected 1/2"
    return True, f"m in [2, {m_max}], leading coefficient 1/2"


def _check_corner_lower_bound(m_max: int, seed: int) -> tuple[bool, str]:
    rows = oracle_series(_corner_operator(2), 2, 1, 1, 1, range(2, m_max + 1), seed=seed)
    for m, result in rows:
        bound = sum(binomial(2 + (m - 1 - j), 2) for j in range(m - 1))
        if result.kernel_dim < bound:
            return False, f"kernel at m={m} is {result.kernel_dim} < bound {bound}"
        if result.kernel_dim != bound:
            return False, f"kernel at m={m} is {result.kernel_dim}, bound {bound} (gap!)"
    return True, f"m in [2, {m_max}]; the displayed sum is the exact kernel"


def _check_purity_scan(k_max: int, a_max: int) -> tuple[bool, str]:
    grid = [(a1, a2) for a1 in range(a_max + 1) for a2 in range(a_max + 1)]
    for k in range(1, k_max + 1):
        records = purity_report(2, k, grid, strict=False)
        bad = [
            (d.a1, -d.a2)
            for d, _, vec in records
            if vec.purity.kind == "impure"
        ]
        if bad:
            return False, f"impure verdicts at k={k}: {bad}"
    return True, f"k <= {k_max}, a1, a2 in [0, {a_max}]"


def _check_growth_degrees_rank3() -> tuple[bool, str]:
    # Prediction-only identities at n = 3: dimension sums and kernel growth.
    from .asymptotics import stable_start
    from .reptheory import kernel_series_rep

    n = 3
    for k in (1, 2):
        for a1, a2 in ((2, 1), (1, 2), (1, 1)):
            start = stable_start(n, k, a1, a2)
            window = range(start, start + 2 * n + 3)
            rows = kernel_series_rep(n, k, a1, a2, window)
            for side, series in (
                ("kernel", [(m, kd) for m, kd, _ in rows]),
                ("cokernel", [(m, cd) for m, _, cd in rows]),
            ):
                surviving = (side == "kernel") == (a1 > a2)
                lead = fit_leading_coefficient(series, 2 * n - 1)
                if a1 == a2 or not surviving:
                    if lead != 0:
                        return False, f"{side} degree too high at k={k}, ({a1}, {a2})"
                elif lead <= 0:
                    return False, f"{side} does not grow at k={k}, ({a1}, {a2})"
    return True, "n = 3 prediction-only growth laws"


def _check_weyl_goldens() -> tuple[bool, str]:
    from .reptheory import IrrepLabel

    cases = [
        (2, (1, 0), 3),
        (3, (1, 1), 6),
        (2, (9, 3), 154),
        (1, (3, 0), 4),
    ]
    for n, (l1, l2), expected in cases:
        got = weyl_dimension(n, IrrepLabel(l1, l2, n))
        if got != expected:
            return False, f"weyl({n}, ({l1}, {l2})) = {got}, expected {expected}"
    return True, f"{len(cases)} spot values"


def build_suite(suite: str, seed: int = 0) -> list[Check]:
    if suite == "small":
        return [
            ("bott goldens", _check_bott_goldens),
            ("Serre duality", lambda: _check_serre_duality(3, 12)),
            ("Kunneth duality", lambda: _check_kunneth_duality(2, 8)),
            ("Weyl goldens", _check_weyl_goldens),
            ("Pieri dimension sums", lambda: _check_pieri_sums(2, 12)),
            ("Euler consistency", lambda: _check_euler_consistency([1, 2], 2, 8)),
            ("engine equivalence (series)", lambda: _check_engine_series(8, seed)),
            ("corner closed form", lambda: _check_corner_closed_form(8, seed)),
            ("corner lower bound", lambda: _check_corner_lower_bound(8, seed)),
            ("purity scan", lambda: _check_purity_scan(1, 3)),
        ]
    if suite == "full":
        return [
            ("bott goldens", _check_bott_goldens),
            ("Serre duality", lambda: _check_serre_duality(5, 30)),
            ("Kunneth duality", lambda: _check_kunneth_duality(3, 10)),
            ("Weyl goldens", _check_weyl_goldens),
            ("Pieri dimension sums", lambda: _check_pieri_sums(4, 30)),
            ("Euler consistency", lambda: _check_euler_consistency([1, 2, 3], 2, 12)),
            ("engine equivalence (series)", lambda: _check_engine_series(12, seed)),
            ("engine equivalence (grid)", lambda: _check_engine_grid([1, 2], 2, 12, seed)),
            ("corner closed form", lambda: _check_corner_closed_form(12, seed)),
            ("corner lower bound", lambda: _check_corner_lower_bound(10, seed)),
            ("purity scan", lambda: _check_purity_scan(2, 5)),
            ("rank-3 prediction identities", _check_growth_degrees_rank3),
        ]
    raise ValueError(f"unknown suite {suite!r}; expected 'small' or 'full'")


def run_suite(suite: str, seed: int = 0, emit=print) -> int:
    """Run all checks, print one line per check, return the failure count."""
    failures = 0
    for name, check in build_suite(suite, seed):
        try:
            ok, detail = check()
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        status = "PASS" if ok else "FAIL"
        if not ok:
            failures += 1
        emit(f"{status} - {name}: {detail}")
    return failures
