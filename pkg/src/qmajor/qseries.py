"""Exact Laurent polynomial arithmetic in the single variable q.

A LaurentPoly is a dense coefficient vector together with the exponent of
its lowest term, e.g. ``LaurentPoly(-1, (1, 0, 2))`` is q^-1 + 2q.
Coefficients are Python integers, so nothing ever overflows or rounds.
Canonical form: the first and last stored coefficients are nonzero; the
zero polynomial stores an empty tuple and min_exp 0.  Equality and hashing
therefore work structurally.

The constructors qint/qfact/qbinom/qmultinom build the usual q-analogues:
[n] = 1 + q + ... + q^(n-1), [n]!, and the Gaussian binomial/multinomial
coefficients.  Division is always exact division; a nonzero remainder
raises NonExactDivisionError, which in this package signals a formula
transcription bug rather than a recoverable condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping


class NonExactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class InvalidPartitionError(ValueError):
    """Multinomial parts do not sum to the expected total."""


@dataclass(frozen=True)
class LaurentPoly:
    min_exp: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        min_exp = self.min_exp
        lo = 0
        hi = len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            coeffs, min_exp = (), 0
        elif lo > 0 or hi < len(coeffs) or not isinstance(self.coeffs, tuple):
            min_exp, coeffs = min_exp + lo, coeffs[lo:hi]
        object.__setattr__(self, "min_exp", min_exp)
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return _ONE

    @staticmethod
    def monomial(coeff: int, exp: int = 0) -> "LaurentPoly":
        return LaurentPoly(exp, (coeff,))

    @staticmethod
    def from_terms(terms: Mapping[int, int]) -> "LaurentPoly":
        """Build from an {exponent: coefficient} mapping."""
        nz = {e: c for e, c in terms.items() if c}
        if not nz:
            return _ZERO
        lo, hi = min(nz), max(nz)
        vec = [0] * (hi - lo + 1)
        for e, c in nz.items():
            vec[e - lo] = c
        return LaurentPoly(lo, tuple(vec))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.min_exp + len(self.coeffs) - 1

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs, ascending exponents."""
        return [(self.min_exp + i, c) for i, c in enumerate(self.coeffs) if c]

    def coefficient(self, exp: int) -> int:
        i = exp - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly(0, (value,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        vec = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            vec[self.min_exp - lo + i] += c
        for i, c in enumerate(other.coeffs):
            vec[other.min_exp - lo + i] += c
        return LaurentPoly(lo, tuple(vec))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return _ZERO
        a, b = self.coeffs, other.coeffs
        vec = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    vec[i + j] += ca * cb
        return LaurentPoly(self.min_exp + other.min_exp, tuple(vec))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, dexp: int) -> "LaurentPoly":
        """Multiply by q^dexp."""
        if self.is_zero():
            return _ZERO
        return LaurentPoly(self.min_exp + dexp, self.coeffs)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Return c with self = other * c, or raise NonExactDivisionError."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return _ZERO
        rem = list(self.coeffs)
        div = other.coeffs
        deg_r, deg_d = len(rem) - 1, len(div) - 1
        if deg_r < deg_d:
            raise NonExactDivisionError(f"{self} is not divisible by {other}")
        lead = div[deg_d]
        out = [0] * (deg_r - deg_d + 1)
        for shift in range(deg_r - deg_d, -1, -1):
            c = rem[shift + deg_d]
            if c == 0:
                continue
            f, r = divmod(c, lead)
            if r:
                raise NonExactDivisionError(f"{self} is not divisible by {other}")
            out[shift] = f
            for j, dc in enumerate(div):
                rem[shift + j] -= f * dc
        if any(rem):
            raise NonExactDivisionError(f"{self} is not divisible by {other}")
        return LaurentPoly(self.min_exp - other.min_exp, tuple(out))

    def eval_at_one(self) -> int:
        """Sum of coefficients, i.e. the value at q = 1."""
        return sum(self.coeffs)

    # -- rendering ---------------------------------------------------------

    def canonical_str(self) -> str:
        """Byte-exact canonical rendering: "c0*q^e0 + c1*q^e1 + ..."."""
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}*q^{e}" for e, c in self.terms())

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
            else:
                base = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    parts.append(base)
                elif c == -1:
                    parts.append(f"-{base}")
                else:
                    parts.append(f"{c}*{base}")
        return " + ".join(parts).replace(" + -", " - ")


_ZERO = LaurentPoly(0, ())
_ONE = LaurentPoly(0, (1,))
Q = LaurentPoly(1, (1,))


def q_power(exp: int) -> LaurentPoly:
    """The monomial q^exp (exp may be negative)."""
    return LaurentPoly(exp, (1,))


@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """[n] = 1 + q + ... + q^(n-1); [0] is the zero polynomial."""
    if n < 0:
        raise ValueError(f"qint of negative argument {n}")
    return LaurentPoly(0, (1,) * n)


@lru_cache(maxsize=None)
def qfact(n: int) -> LaurentPoly:
    """[n]! = [1][2]...[n]; [0]! = 1."""
    if n < 0:
        raise ValueError(f"qfact of negative argument {n}")
    if n == 0:
        return _ONE
    return qfact(n - 1) * qint(n)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial coefficient; zero whenever 0 <= k <= n fails."""
    if k < 0 or n < 0 or k > n:
        return _ZERO
    return qfact(n).exact_div(qfact(k) * qfact(n - k))


def qmultinom(n: int, parts: Iterable[int]) -> LaurentPoly:
    """Gaussian multinomial [n; parts] with parts summing to n."""
    parts = tuple(parts)
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise InvalidPartitionError(f"parts {parts} do not sum to {n}")
    denom = _ONE
    for p in parts:
        denom = denom * qfact(p)
    return qfact(n).exact_div(denom)


def gf_from_exponents(exponents: Iterable[int]) -> LaurentPoly:
    """Sum of q^e over an iterable of exponents (with multiplicity)."""
    counts: dict[int, int] = {}
    for e in exponents:
        counts[e] = counts.get(e, 0) + 1
    return LaurentPoly.from_terms(counts)
