"""Exact arithmetic on finite Laurent polynomials over rational coefficients.

A Laurent polynomial is a finite sum ``sum c_k x**k`` with integer exponents
``k`` of either sign and coefficients stored as ``fractions.Fraction``.
Everything in this module is exact; floating point enters only through
:meth:`LaurentPoly.evaluate`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import PoleAtZero

#: Exact rational scalar used for every coefficient and parameter.
Rational = Fraction

RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact :class:`Fraction`.

    Accepts integers, Fractions and strings ("3/4", "-2", "0.25"); decimal
    strings convert exactly.  Floats are rejected so that binary rounding
    can never leak into the exact layer unnoticed.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(
        f"expected an exact rational (int, Fraction or string), got {value!r}"
    )


class LaurentPoly:
    """Immutable sparse Laurent polynomial keyed by exponent.

    Zero coefficients are never stored, so ``degree`` and ``valuation``
    (lowest exponent) are well defined for nonzero values.  Instances are
    safe to share between threads.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, RationalLike], Iterable[tuple]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for exponent, coeff in items:
            if not isinstance(exponent, int):
                raise TypeError(f"exponent must be int, got {exponent!r}")
            c = as_rational(coeff)
            if c:
                clean[exponent] = clean.get(exponent, Fraction(0)) + c
        object.__setattr__(self, "_terms", {k: v for k, v in clean.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: RationalLike, exponent: int) -> "LaurentPoly":
        """The single term ``coeff * x**exponent``."""
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, coeff: RationalLike) -> "LaurentPoly":
        return cls({0: coeff})

    @classmethod
    def x(cls) -> "LaurentPoly":
        return cls({1: 1})

    # -- structure ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self):
        """Highest exponent, or ``None`` for the zero polynomial."""
        return max(self._terms) if self._terms else None

    @property
    def valuation(self):
        """Lowest exponent, or ``None`` for the zero polynomial."""
        return min(self._terms) if self._terms else None

    @property
    def is_polynomial(self) -> bool:
        """True when no negative powers are present (zero counts)."""
        return not self._terms or min(self._terms) >= 0

    @property
    def leading_coefficient(self) -> Fraction:
        return self._terms[max(self._terms)] if self._terms else Fraction(0)

    @property
    def is_monic(self) -> bool:
        return bool(self._terms) and self.leading_coefficient == 1

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, Fraction(0)) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return _wrap({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                k = ka + kb
                s = out.get(k, Fraction(0)) + va * vb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- calculus and symmetry -------------------------------------------

    def differentiate(self) -> "LaurentPoly":
        """Termwise d/dx: ``c x**k -> k c x**(k-1)``."""
        return _wrap({k - 1: k * v for k, v in self._terms.items() if k != 0})

    def reflect(self) -> "LaurentPoly":
        """The reflected polynomial ``p(-x)``."""
        return _wrap({k: (v if k % 2 == 0 else -v) for k, v in self._terms.items()})

    def scale_argument(self, kappa: RationalLike) -> "LaurentPoly":
        """The substituted polynomial ``p(kappa * x)`` for rational kappa != 0."""
        kappa = as_rational(kappa)
        if not kappa:
            raise ValueError("kappa must be nonzero")
        return _wrap({k: v * kappa**k for k, v in self._terms.items()})

    def even_odd_parts(self):
        """Split into (even, odd) parts: ``p = even + odd``."""
        even = {k: v for k, v in self._terms.items() if k % 2 == 0}
        odd = {k: v for k, v in self._terms.items() if k % 2 != 0}
        return _wrap(even), _wrap(odd)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, x) -> float:
        """Floating evaluation by Horner on the split positive/negative parts.

        Raises :class:`PoleAtZero` when ``x == 0`` and negative powers are
        present.
        """
        xf = float(x)
        if not self._terms:
            return 0.0
        if xf == 0.0 and min(self._terms) < 0:
            raise PoleAtZero("Laurent polynomial has a pole at x = 0")
        pos = 0.0
        deg = max(self._terms)
        if deg >= 0:
            for k in range(deg, -1, -1):
                pos = pos * xf + float(self._terms.get(k, 0))
        neg = 0.0
        val = min(self._terms)
        if val < 0:
            u = 1.0 / xf
            for k in range(val, 0):
                # Horner in u = 1/x, most negative exponent first.
                neg = neg * u + float(self._terms.get(k, 0))
            neg *= u
        return pos + neg

    def evaluate_exact(self, x: RationalLike) -> Fraction:
        """Exact rational evaluation at rational ``x``."""
        xr = as_rational(x)
        if not self._terms:
            return Fraction(0)
        if xr == 0 and min(self._terms) < 0:
            raise PoleAtZero("Laurent polynomial has a pole at x = 0")
        total = Fraction(0)
        deg = max(self._terms)
        if deg >= 0:
            for k in range(deg, -1, -1):
                total = total * xr + self._terms.get(k, Fraction(0))
        val = min(self._terms)
        if val < 0:
            u = 1 / xr
            acc = Fraction(0)
            for k in range(val, 0):
                # Horner in u = 1/x, most negative exponent first.
                acc = acc * u + self._terms.get(k, Fraction(0))
            total += acc * u
        return total

    # -- serialization -------------------------------------------------------

    def to_json_obj(self) -> list:
        """Exponent-ascending list of {exponent, numerator, denominator}."""
        return [
            {"exponent": k, "numerator": v.numerator, "denominator": v.denominator}
            for k, v in sorted(self._terms.items())
        ]

    @classmethod
    def from_json_obj(cls, obj) -> "LaurentPoly":
        return cls(
            {int(rec["exponent"]): Fraction(int(rec["numerator"]), int(rec["denominator"]))
             for rec in obj}
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(text))

    # -- display -------------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self!s})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, reverse=True):
            v = self._terms[k]
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if k == 0:
                body = f"{mag}"
            else:
                xpow = "x" if k == 1 else f"x^{k}"
                body = xpow if mag == 1 else f"{mag}*{xpow}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _wrap(terms: dict) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    object.__setattr__(p, "_terms", {k: v for k, v in terms.items() if v})
    return p


def _coerce(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.constant(value)
    return NotImplemented


class Polynomial(LaurentPoly):
    """A Laurent polynomial with valuation >= 0 (a genuine polynomial)."""

    __slots__ = ()

    def __init__(self, terms=()):
        super().__init__(terms)
        if self._terms and min(self._terms) < 0:
            raise ValueError("Polynomial requires valuation >= 0")

    @classmethod
    def monomial(cls, n: int, coeff: RationalLike = 1) -> "Polynomial":
        if n < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls({n: coeff})

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "Polynomial":
        return cls(p.terms)
