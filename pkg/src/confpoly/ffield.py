"""Brute-force point counts over small prime fields.

This is the independent oracle for the virtual polynomials: specialized
at x^2 = q they must count the points of the configuration varieties over
the q-element field.  The ordered count enumerates all n-tuples of field
elements and keeps those with pairwise-distinct entries avoiding the
punctures.  The unordered count enumerates monic degree-n polynomials and
keeps the squarefree ones coprime to the puncture divisor: the points of
the unordered variety over the field are Galois-stable configurations,
i.e. exactly such polynomials, not merely n-subsets of rational points.
Punctures sit at {0, 1, ..., k-1}; any k distinct rational points would
give the same counts, and fixing them keeps runs reproducible.

Everything here is exhaustive enumeration on purpose.  No counting
formula from the other modules is allowed in; the module's entire value
is its independence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from . import virtual

ENUMERATION_BUDGET = 10**8

FIELD_SIZE_LIMIT = 100


class TooLargeError(ValueError):
    """The requested enumeration exceeds the tuple budget."""


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field with q elements, q a small prime (policy: q <= 100)."""

    q: int

    def __post_init__(self):
        if not _is_prime(self.q):
            raise ValueError(f"{self.q} is not prime")
        if self.q > FIELD_SIZE_LIMIT:
            raise ValueError(f"q={self.q} exceeds the size policy ({FIELD_SIZE_LIMIT})")

    def elements(self) -> range:
        return range(self.q)


class FieldPoly:
    """Dense polynomial over a prime field, coefficients lowest degree first.

    Normalized so the leading coefficient is nonzero; the zero polynomial
    has an empty coefficient tuple.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, fld: PrimeField, coeffs):
        q = fld.q
        cs = [c % q for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "coeffs", tuple(cs))

    def degree(self) -> int:
        """Degree, with the convention -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __add__(self, other: "FieldPoly") -> "FieldPoly":
        q = self.field.q
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % q
        return FieldPoly(self.field, out)

    def __sub__(self, other: "FieldPoly") -> "FieldPoly":
        q = self.field.q
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = (out[i] - c) % q
        return FieldPoly(self.field, out)

    def __mul__(self, other: "FieldPoly") -> "FieldPoly":
        q = self.field.q
        if not self.coeffs or not other.coeffs:
            return FieldPoly(self.field, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % q
        return FieldPoly(self.field, out)

    def __divmod__(self, other: "FieldPoly") -> tuple["FieldPoly", "FieldPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = self.field.q
        rem = list(self.coeffs)
        dd, dv = len(rem) - 1, other.degree()
        if dd < dv:
            return FieldPoly(self.field, ()), FieldPoly(self.field, rem)
        inv_lead = pow(other.coeffs[-1], -1, q)
        quot = [0] * (dd - dv + 1)
        for shift in range(dd - dv, -1, -1):
            factor = (rem[shift + dv] * inv_lead) % q
            if factor:
                quot[shift] = factor
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] = (rem[shift + j] - factor * b) % q
        return FieldPoly(self.field, quot), FieldPoly(self.field, rem)

    def __mod__(self, other: "FieldPoly") -> "FieldPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "FieldPoly":
        q = self.field.q
        return FieldPoly(
            self.field, [(i * c) % q for i, c in enumerate(self.coeffs)][1:]
        )

    def evaluate(self, a: int) -> int:
        q = self.field.q
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % q
        return acc

    def monic(self) -> "FieldPoly":
        if self.is_zero():
            return self
        inv = pow(self.coeffs[-1], -1, self.field.q)
        return FieldPoly(self.field, [(c * inv) % self.field.q for c in self.coeffs])

    def gcd(self, other: "FieldPoly") -> "FieldPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __repr__(self) -> str:
        return f"FieldPoly(q={self.field.q}, coeffs={self.coeffs})"


def monic_polys(fld: PrimeField, degree: int) -> Iterator[FieldPoly]:
    """All monic polynomials of the given degree, lexicographic in the
    low coefficients."""
    if degree < 0:
        return
    for lower in itertools.product(fld.elements(), repeat=degree):
        yield FieldPoly(fld, lower + (1,))


def is_squarefree(f: FieldPoly) -> bool:
    """Squarefree test: gcd with the formal derivative is a nonzero constant."""
    if f.is_zero():
        return False
    return f.gcd(f.derivative()).degree() == 0


def is_squarefree_trial_division(f: FieldPoly) -> bool:
    """Second, slower squarefree test: no square of a monic polynomial of
    degree between 1 and deg(f)/2 divides f.  Used to cross-check the
    gcd-based test; deliberately shares no code with it."""
    if f.is_zero():
        return False
    for d in range(1, f.degree() // 2 + 1):
        for g in monic_polys(f.field, d):
            if (f % (g * g)).is_zero():
                return False
    return True


def squarefree_disagreements(q: int, n: int, limit: int = 1) -> list[FieldPoly]:
    """Monic degree-n polynomials on which the two squarefree tests differ.

    Runs the gcd test and the trial-division test over the full
    enumeration (squares precomputed once) and returns up to ``limit``
    offenders; an empty list means the tests agree everywhere.
    """
    fld = PrimeField(q)
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if q**n > ENUMERATION_BUDGET:
        raise TooLargeError(f"{q}^{n} polynomials exceed the budget of {ENUMERATION_BUDGET}")
    squares = [g * g for d in range(1, n // 2 + 1) for g in monic_polys(fld, d)]
    bad = []
    for f in monic_polys(fld, n):
        by_trial = not any((f % s).is_zero() for s in squares)
        if is_squarefree(f) != by_trial:
            bad.append(f)
            if len(bad) >= limit:
                break
    return bad


def _check_enumeration_args(q: int, k: int, n: int) -> PrimeField:
    fld = PrimeField(q)
    if not 0 <= k < q:
        raise ValueError(f"need 0 <= k < q, got k={k}, q={q}")
    if n < 0:
        raise ValueError(f"need n >= 0, got n={n}")
    if q**n > ENUMERATION_BUDGET:
        raise TooLargeError(f"{q}^{n} tuples exceed the budget of {ENUMERATION_BUDGET}")
    return fld


def count_ordered_configs(q: int, k: int, n: int) -> int:
    """Number of n-tuples of pairwise-distinct field elements avoiding the
    punctures {0, ..., k-1}, by exhaustive enumeration of all q^n tuples."""
    fld = _check_enumeration_args(q, k, n)
    count = 0
    for tup in itertools.product(fld.elements(), repeat=n):
        if len(set(tup)) == n and all(v >= k for v in tup):
            count += 1
    return count


def count_squarefree_coprime(q: int, k: int, n: int) -> int:
    """Number of monic degree-n polynomials over the field that are
    squarefree and nonvanishing on the punctures {0, ..., k-1}, by
    exhaustive enumeration of all q^n monic polynomials."""
    fld = _check_enumeration_args(q, k, n)
    count = 0
    for f in monic_polys(fld, n):
        if all(f.evaluate(a) != 0 for a in range(k)) and is_squarefree(f):
            count += 1
    return count


@dataclass(frozen=True)
class OracleReport:
    """One enumeration-vs-formula comparison."""

    q: int
    k: int
    n: int
    space: str
    oracle_count: int
    formula_value: int
    agree: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "agree", self.oracle_count == self.formula_value)


def oracle_check(q: int, k: int, max_n: int) -> list[OracleReport]:
    """Enumerate both spaces for every n <= max_n and compare with the
    virtual polynomials specialized at x^2 = q."""
    _check_enumeration_args(q, k, max_n)
    reports = []
    for n in range(max_n + 1):
        reports.append(
            OracleReport(
                q, k, n, "ordered",
                count_ordered_configs(q, k, n),
                virtual.virtual_ordered(k, n).eval_x_squared(q),
            )
        )
        reports.append(
            OracleReport(
                q, k, n, "unordered",
                count_squarefree_coprime(q, k, n),
                virtual.virtual_unordered(k, n).eval_x_squared(q),
            )
        )
    return reports
