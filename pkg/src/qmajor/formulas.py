"""Closed-form generating functions, evaluated as exact polynomials.

Each evaluator returns a FormulaResult: the polynomial plus a flag telling
whether the underlying combinatorial family is empty.  The closed forms
are only asserted against enumeration on nonempty families; on empty ones
the evaluators return the zero polynomial with the flag set.

Rational factors such as [m]/[m+k] never survive into a result: every
formula clears denominators and performs a single exact division at the
end.  A NonExactDivisionError escaping from here means the formula was
transcribed wrongly, not that the input was bad.

Case names for the path statistics: "EgtN" orders east steps above north
steps, "EltN" below.  Only the relative order of E and N matters for the
aggregate polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import schroeder_family_nonempty
from .qseries import LaurentPoly, q_power, qbinom, qfact, qint
from .tableaux import (
    Partition,
    SkewShape,
    b_statistic,
    content,
    hook_length,
    hook_shape,
    two_row_shape,
)

CASE_E_ABOVE_N = "EgtN"
CASE_E_BELOW_N = "EltN"
CASES = (CASE_E_ABOVE_N, CASE_E_BELOW_N)

_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()


@dataclass(frozen=True)
class FormulaResult:
    poly: LaurentPoly
    family_empty: bool = False


_EMPTY = FormulaResult(_ZERO, family_empty=True)


def _qint_or_zero(x: int) -> LaurentPoly:
    """[x] for x >= 0 and the zero polynomial for negative x, implementing
    the vanishing convention used inside the reverse-tableau expansion."""
    return _ZERO if x < 0 else qint(x)


def _check_case(case: str):
    if case not in CASES:
        raise ValueError(f"case must be one of {CASES}: {case!r}")


def schroeder_maj_closed(r: int, n: int, m: int, k: int, case: str) -> FormulaResult:
    """Major index distribution over paths from (r,0) to (n,m) with k
    diagonal steps, for either relative order of E and N."""
    _check_case(case)
    if not schroeder_family_nonempty(r, n, m, k):
        return _EMPTY
    second = qbinom(n + m - r - 2 * k, n - k + 1)
    if case == CASE_E_BELOW_N:
        second = q_power(r + 1) * second
    inner = qbinom(n + m - r - 2 * k, n - r - k) - second
    return FormulaResult(qbinom(n + m - r - k, k) * inner)


def catalan_maj_closed(r: int, n: int, m: int, case: str) -> FormulaResult:
    """The diagonal-free special case."""
    return schroeder_maj_closed(r, n, m, 0, case)


def rinc_maj_closed(r: int, n: int, m: int, k: int) -> FormulaResult:
    """Major index distribution over row-increasing tableaux of shape
    (n,m)/(r) with largest entry n+m-r-k."""
    base = schroeder_maj_closed(r, n, m, k, CASE_E_ABOVE_N)
    if base.family_empty:
        return base
    return FormulaResult(base.poly.shifted(k * (k - 1) // 2))


def rinc_amaj_closed(r: int, n: int, m: int, k: int) -> FormulaResult:
    """Amajor index distribution over the same family."""
    base = schroeder_maj_closed(r, n, m, k, CASE_E_BELOW_N)
    if base.family_empty:
        return base
    return FormulaResult(base.poly.shifted(k * (k - 1) // 2))


def _hook_skew_feasible(r: int, n: int, m: int, k: int) -> bool:
    return hook_shape(n, m, k, r) is not None


def inc_maj_closed(r: int, n: int, m: int, k: int) -> FormulaResult:
    """Major index distribution over increasing tableaux of shape (n,m)/(r)
    with largest entry n+m-r-k.

    The family is nonempty exactly when one of the two hook shapes produced
    by extracting the doubled values exists.  Denominators are cleared and
    a single exact division by [n][n+1] is performed at the end.
    """
    if k < 0 or not (
        _hook_skew_feasible(r, n - k, m - k, k)
        or (k >= 1 and _hook_skew_feasible(r, n - k, m - k + 1, k - 1))
    ):
        return _EMPTY
    if n == 0:
        return FormulaResult(_ONE)
    denom = qint(n) * qint(n + 1)
    lead = qbinom(n + m - 2 * k - r, m - k) * denom
    tail = (q_power(n) * qint(k) + qint(n) * _qint_or_zero(m - r)) * qbinom(
        n + m - 2 * k - r, n - k
    )
    numer = qbinom(n + m - k - r, k) * (lead - tail)
    return FormulaResult(numer.exact_div(denom).shifted(k * (k - 1) // 2))


def syt_maj_gf(lam: Partition) -> FormulaResult:
    """Major index distribution over standard tableaux of a straight shape,
    via the hook length product."""
    if not lam.parts:
        return FormulaResult(_ONE)
    denom = _ONE
    for cell in lam.cells():
        denom = denom * qint(hook_length(lam, cell))
    poly = (qfact(lam.size).shifted(b_statistic(lam))).exact_div(denom)
    return FormulaResult(poly)


def skew_syt_maj_gf(lam: Partition, mu: Partition, bound: int) -> FormulaResult:
    """Major index distribution over standard tableaux of shape lam/mu,
    expanded over reverse tableaux of mu with entries in 1..bound.

    The result is independent of bound for bound >= len(lam); factors
    [lam_{S(u)} - c(u)] with a negative argument kill their term.
    """
    from .tableaux import reverse_tableaux

    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    if bound < len(lam):
        raise ValueError(f"bound {bound} is smaller than the number of rows of {lam}")
    total = _ZERO
    for s in reverse_tableaux(mu, bound):
        term = _ONE
        for i, j in mu.cells():
            val = s.entry(i, j)
            factor = _qint_or_zero(lam.part(val) - content((i, j)))
            if factor.is_zero():
                term = _ZERO
                break
            term = term * factor.shifted(1 - val)
        total = total + term
    skew_size = lam.size - mu.size
    numer = syt_maj_gf(lam).poly * qfact(skew_size) * total
    return FormulaResult(numer.exact_div(qfact(lam.size)))


def skew_hook_maj_closed(r: int, n: int, m: int, k: int) -> FormulaResult:
    """Major index distribution over standard tableaux of (n,m,1^k)/(r)."""
    if not _hook_skew_feasible(r, n, m, k):
        return _EMPTY
    if m == 0:
        return FormulaResult(_ONE)
    denom = qint(m + k) * qint(n + k + 1)
    lead = qint(m) * qint(n + k + 1) * qbinom(n + m - r, m)
    tail = qint(n + 1) * qint(m + k) * qbinom(n + m - r, n + 1)
    numer = qbinom(n + m + k - r, k) * (lead - tail)
    return FormulaResult(numer.exact_div(denom).shifted(k * (k + 1) // 2))


def straight_hook_maj_closed(n: int, m: int, k: int) -> FormulaResult:
    """Major index distribution over standard tableaux of (n,m,1^k)."""
    if Partition.try_new((n, m) + (1,) * max(k, 0)) is None or k < 0:
        return _EMPTY
    if m == 0:
        return FormulaResult(_ONE)
    numer = qint(n - m + 1) * qbinom(m + k - 1, k) * qbinom(n + m + k, n)
    poly = numer.exact_div(qint(n + k + 1))
    return FormulaResult(poly.shifted(m + k * (k + 3) // 2))


def two_row_syt_maj_closed(n: int, m: int) -> FormulaResult:
    """Major index distribution over standard tableaux of (n,m)."""
    if Partition.try_new((n, m)) is None:
        return _EMPTY
    numer = qint(n - m + 1) * qbinom(n + m, n)
    return FormulaResult(numer.exact_div(qint(n + 1)).shifted(m))


def rinc_rect_maj_closed(n: int, m: int, k: int) -> FormulaResult:
    """Major index distribution over row-increasing rectangles (n,m) with
    largest entry n+m-k, as a single product formula."""
    if not schroeder_family_nonempty(0, n, m, k):
        return _EMPTY
    numer = qint(n - m + 1) * qbinom(n + m - k, k) * qbinom(n + m - 2 * k, m - k)
    poly = numer.exact_div(qint(n - k + 1))
    return FormulaResult(poly.shifted(m + k * (k - 3) // 2))


def rinc_family_nonempty(r: int, n: int, m: int, k: int) -> bool:
    """Row-increasing tableaux of (n,m)/(r) with excess k exist exactly when
    the matching path family does."""
    return schroeder_family_nonempty(r, n, m, k) and two_row_shape(n, m, r) is not None


def inc_family_nonempty(r: int, n: int, m: int, k: int) -> bool:
    return not inc_maj_closed(r, n, m, k).family_empty


def syt_family_nonempty(shape: SkewShape | None) -> bool:
    return shape is not None
