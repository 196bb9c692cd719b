"""Named cross-verification suites.

Every suite walks a documented default range and emits one
:class:`CheckResult` per cell, labeled by (space, k, n), so a single
wrong coefficient anywhere surfaces as a named first failure.  Checks
never raise: an exception inside a cell becomes a failed result for that
cell.  Default ranges match the acceptance targets and keep the whole
run comfortably under a minute.

Suites:

    recursions  pyramidal rows (both recursions vs closed form), the
                Stirling-number link, and rank stabilization in n
    series      closed-form Betti rows vs generating function vs the
                iterated one-puncture step; raw vs simplified virtual
                series; polynomial shape invariants; generating-function
                identities for pyramidal and stable ranks
    duality     transformed standard polynomial == virtual polynomial
    pointcount  finite-field enumerations vs specialized virtual
                polynomials, plus agreement of the two squarefree tests
    euler       standard(-1) == virtual(1)
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import combinatorics, duality, ffield, poincare, virtual
from .ring import ONE, LaurentPoly, TruncSeries

SUITES = ("recursions", "series", "duality", "pointcount", "euler")

BOTH_SPACES = ("unordered", "ordered")


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check; space is '-' where not applicable."""

    suite: str
    space: str
    k: int
    n: int
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifySummary:
    suites: tuple[str, ...]
    passed: int
    failed: int
    first_failure: Optional[CheckResult]
    duration: float

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _check(
    suite: str, space: str, k: int, n: int, fn: Callable[[], tuple[bool, str]]
) -> CheckResult:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash in one cell must stay one failed cell
        return CheckResult(suite, space, k, n, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(suite, space, k, n, ok, detail)


def _ks(only_k: Optional[int], default_max: int, lowest: int = 0) -> Sequence[int]:
    if only_k is not None:
        return (only_k,)
    return range(lowest, default_max + 1)


# -- recursions -------------------------------------------------------


def suite_recursions(
    max_k: int = 8,
    max_i: int = 12,
    stable_max_k: int = 6,
    stable_max_j: int = 8,
    stable_max_n: int = 12,
    only_k: Optional[int] = None,
) -> Iterator[CheckResult]:
    table = combinatorics.PyramidalTable.build(max_k, max_i)

    def pyramidal_cell(k: int, i: int) -> tuple[bool, str]:
        rec = combinatorics.pyramidal(k, i)
        tab = table.value(k, i)
        values = {"recursion": rec, "running-sum table": tab}
        if k >= 0:
            values["closed form"] = combinatorics.pyramidal_closed_form(k, i)
        if len(set(values.values())) == 1:
            return True, ""
        return False, "pyramidal routes disagree: " + ", ".join(
            f"{name}={v}" for name, v in values.items()
        )

    for k in _ks(only_k, max_k, lowest=-1):
        for i in range(max_i + 1):
            yield _check("recursions", "-", k, i, lambda k=k, i=i: pyramidal_cell(k, i))

    def stirling_cell(n: int) -> tuple[bool, str]:
        product = poincare.poincare_ordered(1, n - 1)
        for i in range(n):
            expected = combinatorics.stirling_first_unsigned(n, n - i)
            if product.coefficient(i) != expected:
                return False, (
                    f"x^{i} coefficient {product.coefficient(i)} != "
                    f"Stirling c({n},{n - i})={expected}"
                )
        return True, ""

    for n in range(1, 9):
        yield _check("recursions", "-", 1, n, lambda n=n: stirling_cell(n))

    def stable_cell(k: int, j: int, n: int) -> tuple[bool, str]:
        rank = poincare.betti_unordered(k, n).ranks[j]
        expected = poincare.stable_betti(k, j)
        if n == j:
            expected -= combinatorics.pyramidal(k - 1, j - 1)
        if rank == expected:
            return True, ""
        return False, f"rank H^{j} = {rank}, expected {expected}"

    for k in _ks(only_k, stable_max_k):
        for j in range(stable_max_j + 1):
            for n in range(j, stable_max_n + 1):
                yield _check(
                    "recursions", "unordered", k, n,
                    lambda k=k, j=j, n=n: stable_cell(k, j, n),
                )


# -- series -----------------------------------------------------------


def _ordered_shape(k: int, n: int) -> tuple[bool, str]:
    p = poincare.poincare_ordered(k, n)
    if any(c < 0 for c in p.terms.values()):
        return False, f"negative coefficient in {p}"
    if p.coefficient(0) != 1:
        return False, f"constant term {p.coefficient(0)} != 1"
    expected_degree = 0 if n == 0 else (n if k >= 1 else n - 1)
    if p.degree() != expected_degree:
        return False, f"degree {p.degree()} != {expected_degree}"
    if k >= 1:
        lead = 1
        for j in range(n):
            lead *= k + j
        if p.coefficient(n) != lead:
            return False, f"leading coefficient {p.coefficient(n)} != {lead}"
    return True, ""


def _virtual_shape(vp: virtual.VirtualPoly) -> tuple[bool, str]:
    p = vp.poly
    if any(e % 2 or e < 0 for e in p.support()):
        return False, f"support {p.support()} not contained in even exponents"
    if p.is_zero() or p.degree() != 2 * vp.n:
        return False, f"{p} is not of degree {2 * vp.n}"
    if p.coefficient(2 * vp.n) != 1:
        return False, f"{p} is not monic"
    return True, ""


def suite_series(
    max_k: int = 6,
    order: int = 12,
    shape_max_n: int = 10,
    only_k: Optional[int] = None,
) -> Iterator[CheckResult]:
    for k in _ks(only_k, max_k):
        try:
            q_series = poincare.unordered_series(k, order)
            chain = poincare.unordered_series(0, order)
            for _ in range(k):
                chain = poincare.napolitano_step(chain)
            raw = virtual.getzler_series_raw(k, order)
            simplified = virtual.virtual_unordered_series(k, order)
        except Exception as exc:
            yield CheckResult(
                "series", "-", k, -1, False, f"{type(exc).__name__}: {exc}"
            )
            continue

        def three_way(k: int, n: int) -> tuple[bool, str]:
            a = poincare.betti_unordered(k, n).poly()
            b, c = q_series[n], chain[n]
            if a == b == c:
                return True, ""
            return False, f"closed form {a}, series {b}, iterated step {c}"

        for n in range(order + 1):
            yield _check("series", "unordered", k, n, lambda k=k, n=n: three_way(k, n))

        def forms_agree(n: int) -> tuple[bool, str]:
            if raw[n] == simplified[n]:
                return True, ""
            return False, f"raw form {raw[n]} != simplified form {simplified[n]}"

        for n in range(order + 1):
            yield _check("series", "unordered", k, n, lambda n=n: forms_agree(n))

        for n in range(shape_max_n + 1):
            yield _check(
                "series", "ordered", k, n,
                lambda k=k, n=n: _virtual_shape(virtual.virtual_ordered(k, n)),
            )
            yield _check(
                "series", "unordered", k, n,
                lambda k=k, n=n: _virtual_shape(virtual.virtual_unordered(k, n)),
            )
            yield _check(
                "series", "ordered", k, n, lambda k=k, n=n: _ordered_shape(k, n)
            )

        pyramidal_gf = (TruncSeries(order, [ONE, -1]) ** (k + 1)).inverse()

        def pyramidal_coeff(i: int) -> tuple[bool, str]:
            got = pyramidal_gf[i]
            expected = LaurentPoly.constant(combinatorics.pyramidal(k, i))
            if got == expected:
                return True, ""
            return False, f"1/(1-y)^{k + 1} coefficient {got} != {expected}"

        for i in range(order + 1):
            yield _check("series", "-", k, i, lambda i=i: pyramidal_coeff(i))

        stable_gf = TruncSeries(order, [ONE, ONE]) * (
            TruncSeries(order, [ONE, -1]) ** k
        ).inverse()

        def stable_coeff(j: int) -> tuple[bool, str]:
            got = stable_gf[j]
            expected = LaurentPoly.constant(poincare.stable_betti(k, j))
            if got == expected:
                return True, ""
            return False, f"(1+y)/(1-y)^{k} coefficient {got} != {expected}"

        for j in range(min(order, 8) + 1):
            yield _check("series", "unordered", k, j, lambda j=j: stable_coeff(j))


# -- duality ----------------------------------------------------------


def suite_duality(
    max_k: int = 6,
    max_n: int = 12,
    spaces: Iterable[str] = BOTH_SPACES,
    only_k: Optional[int] = None,
) -> Iterator[CheckResult]:
    for space in spaces:
        for k in _ks(only_k, max_k):
            try:
                report = duality.check_duality(k, max_n, space)
            except Exception as exc:
                yield CheckResult(
                    "duality", space, k, -1, False, f"{type(exc).__name__}: {exc}"
                )
                continue
            for n, ok in enumerate(report.matches):
                detail = ""
                if not ok:
                    detail = "transformed standard != virtual"
                    if report.first_mismatch and report.first_mismatch[0] == n:
                        _, lhs, rhs = report.first_mismatch
                        detail = f"transformed standard {lhs} != virtual {rhs}"
                yield CheckResult("duality", space, k, n, ok, detail)


# -- pointcount -------------------------------------------------------


def suite_pointcount(
    primes: Iterable[int] = (2, 3, 5, 7),
    max_k: int = 3,
    max_n: int = 5,
) -> Iterator[CheckResult]:
    for q in primes:
        for k in range(min(q, max_k + 1)):
            try:
                reports = ffield.oracle_check(q, k, max_n)
            except Exception as exc:
                yield CheckResult(
                    "pointcount", "-", k, -1, False,
                    f"q={q}: {type(exc).__name__}: {exc}",
                )
                continue
            for r in reports:
                yield CheckResult(
                    "pointcount", r.space, r.k, r.n, r.agree,
                    f"q={q}: enumerated {r.oracle_count}, formula {r.formula_value}",
                )

        def methods_agree(q: int, n: int) -> tuple[bool, str]:
            bad = ffield.squarefree_disagreements(q, n)
            if bad:
                return False, f"q={q}: squarefree tests disagree at {bad[0]!r}"
            return True, f"q={q}: squarefree tests agree on all monic degree-{n}"

        for n in range(max_n + 1):
            yield _check(
                "pointcount", "-", 0, n, lambda q=q, n=n: methods_agree(q, n)
            )


# -- euler ------------------------------------------------------------


def suite_euler(
    max_k: int = 6,
    max_n: int = 10,
    spaces: Iterable[str] = BOTH_SPACES,
    only_k: Optional[int] = None,
) -> Iterator[CheckResult]:
    for space in spaces:
        for k in _ks(only_k, max_k):
            try:
                flags = duality.euler_consistency(k, max_n, space)
            except Exception as exc:
                yield CheckResult(
                    "euler", space, k, -1, False, f"{type(exc).__name__}: {exc}"
                )
                continue
            for n, ok in enumerate(flags):
                yield CheckResult(
                    "euler", space, k, n, ok,
                    "" if ok else "standard(-1) != virtual(1)",
                )


# -- runner -----------------------------------------------------------


def run_suites(
    names: Iterable[str],
    *,
    only_k: Optional[int] = None,
    max_k: Optional[int] = None,
    max_n: Optional[int] = None,
    spaces: Iterable[str] = BOTH_SPACES,
    primes: Iterable[int] = (2, 3, 5, 7),
) -> tuple[VerifySummary, list[CheckResult]]:
    """Run the named suites (or all of them) and collect every check.

    ``max_k``/``max_n`` override each suite's documented default range;
    ``only_k`` restricts configuration-space checks to a single k."""
    wanted = set(names)
    unknown = wanted - set(SUITES) - {"all"}
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    if "all" in wanted:
        wanted = set(SUITES)

    spaces = tuple(spaces)
    primes = tuple(primes)
    start = time.perf_counter()
    results: list[CheckResult] = []
    if "recursions" in wanted:
        results.extend(
            suite_recursions(
                max_k=8 if max_k is None else max(max_k, 0),
                max_i=12 if max_n is None else max_n,
                stable_max_k=6 if max_k is None else max_k,
                stable_max_n=12 if max_n is None else max_n,
                only_k=only_k,
            )
        )
    if "series" in wanted:
        order = 12 if max_n is None else max_n
        results.extend(
            suite_series(
                max_k=6 if max_k is None else max_k,
                order=order,
                shape_max_n=min(10 if max_n is None else max_n, order),
                only_k=only_k,
            )
        )
    if "duality" in wanted:
        results.extend(
            suite_duality(
                max_k=6 if max_k is None else max_k,
                max_n=12 if max_n is None else max_n,
                spaces=spaces,
                only_k=only_k,
            )
        )
    if "pointcount" in wanted:
        results.extend(
            suite_pointcount(
                primes=primes,
                max_k=3 if max_k is None else max_k,
                max_n=5 if max_n is None else max_n,
            )
        )
    if "euler" in wanted:
        results.extend(
            suite_euler(
                max_k=6 if max_k is None else max_k,
                max_n=10 if max_n is None else max_n,
                spaces=spaces,
                only_k=only_k,
            )
        )
    duration = time.perf_counter() - start

    failed = [r for r in results if not r.passed]
    ran = tuple(s for s in SUITES if s in wanted)
    summary = VerifySummary(
        suites=ran,
        passed=len(results) - len(failed),
        failed=len(failed),
        first_failure=failed[0] if failed else None,
        duration=duration,
    )
    return summary, results
