"""The duality between standard and virtual Poincare polynomials.

Applying x -> -1/x^2, y -> y*x^2 to the standard generating series of
either configuration-space family yields the virtual one.  Coefficient by
coefficient the transformation is the weight-n substitution of the ring
module, and this module checks the correspondence over whole ranges of
(k, n), reporting mismatches as data rather than raising, so the CLI can
print a full table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import poincare, virtual
from .ring import (
    LaurentPoly,
    TruncSeries,
    substitute_duality,
    substitute_duality_inverse,
)


class DegreeTooHighError(ValueError):
    """A y^n coefficient of degree > n cannot be dualized into a polynomial."""


@dataclass(frozen=True)
class DualityReport:
    """Per-n outcome of comparing transformed standard against virtual."""

    k: int
    max_n: int
    space: str
    matches: tuple[bool, ...]
    first_mismatch: Optional[tuple[int, LaurentPoly, LaurentPoly]]

    def all_match(self) -> bool:
        return all(self.matches)


def dualize_series(s: TruncSeries) -> TruncSeries:
    """Apply the duality substitution to every coefficient of a series.

    The y^n coefficient must be a polynomial of degree at most n with
    nonnegative exponents (true for all standard Poincare series here);
    otherwise the transform leaves polynomial range and
    :class:`DegreeTooHighError` is raised.
    """
    out = []
    for n, c in enumerate(s.coeffs):
        if not c.is_zero():
            if c.valuation() < 0:
                raise DegreeTooHighError(
                    f"y^{n} coefficient {c} has negative exponents"
                )
            if c.degree() > n:
                raise DegreeTooHighError(
                    f"y^{n} coefficient {c} has degree {c.degree()} > {n}"
                )
        out.append(substitute_duality(c, n))
    return TruncSeries(s.order, out)


def undualize_series(s: TruncSeries) -> TruncSeries:
    """Invert :func:`dualize_series`, recovering the standard series."""
    return TruncSeries(
        s.order,
        [substitute_duality_inverse(c, n) for n, c in enumerate(s.coeffs)],
    )


def _standard_poly(k: int, n: int, space: str) -> LaurentPoly:
    if space == "ordered":
        return poincare.poincare_ordered(k, n)
    if space == "unordered":
        return poincare.betti_unordered(k, n).poly()
    raise ValueError(f"space must be 'ordered' or 'unordered', got {space!r}")


def _virtual_poly(k: int, n: int, space: str) -> LaurentPoly:
    if space == "ordered":
        return virtual.virtual_ordered(k, n).poly
    if space == "unordered":
        return virtual.virtual_unordered(k, n).poly
    raise ValueError(f"space must be 'ordered' or 'unordered', got {space!r}")


def check_duality(k: int, max_n: int, space: str) -> DualityReport:
    """Compare the dualized standard polynomial with the virtual one for
    every n up to max_n.  Mismatches are recorded, not raised."""
    if k < 0 or max_n < 0:
        raise ValueError("k and max_n must be nonnegative")
    matches = []
    first_mismatch = None
    for n in range(max_n + 1):
        lhs = substitute_duality(_standard_poly(k, n, space), n)
        rhs = _virtual_poly(k, n, space)
        ok = lhs == rhs
        matches.append(ok)
        if not ok and first_mismatch is None:
            first_mismatch = (n, lhs, rhs)
    return DualityReport(k, max_n, space, tuple(matches), first_mismatch)


def euler_consistency(k: int, max_n: int, space: str) -> tuple[bool, ...]:
    """Entry n is True iff standard(-1) equals virtual(1).

    Both sides compute the Euler characteristic of the same space, one
    from the alternating sum of Betti numbers, one from the virtual
    polynomial's scissor-additive count.
    """
    if k < 0 or max_n < 0:
        raise ValueError("k and max_n must be nonnegative")
    results = []
    for n in range(max_n + 1):
        lhs = _standard_poly(k, n, space).eval_int(-1)
        rhs = _virtual_poly(k, n, space).eval_int(1)
        results.append(lhs == rhs)
    return tuple(results)
