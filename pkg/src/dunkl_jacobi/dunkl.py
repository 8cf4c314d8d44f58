"""First-order differential-reflection operators acting on polynomials.

The operators have the normalized form

    L = F(x) (I - R) + G0(x) d/dx + G1(x) d/dx R,

with R the reflection ``(R f)(x) = f(-x)`` and coefficient functions drawn
from the nine-parameter Laurent family

    G0 = mu/x^2 + nu0/x + rho0 + tau0 x,
    G1 = -mu/x^2 + nu1/x + rho1 + tau1 x,
    F  = -mu/x^3 + (nu1 - nu0)/(2 x^2) + xi/x + eta.

Operators of this shape map polynomials to polynomials of the same degree:
the negative powers cancel identically, and the leading coefficient of
``L x^n`` is ``(tau0 + tau1) n`` for even ``n`` and ``2 eta + (tau0 - tau1) n``
for odd ``n``.  Everything here is computed in exact rational arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from fractions import Fraction

from .errors import NegativePowerResidue
from .laurent import LaurentPoly, Polynomial, Rational, as_rational

PARAM_NAMES = ("mu", "nu0", "nu1", "rho0", "rho1", "tau0", "tau1", "xi", "eta")


@dataclass(frozen=True)
class OperatorParams:
    """The nine rational parameters of the coefficient family."""

    mu: Rational = Fraction(0)
    nu0: Rational = Fraction(0)
    nu1: Rational = Fraction(0)
    rho0: Rational = Fraction(0)
    rho1: Rational = Fraction(0)
    tau0: Rational = Fraction(0)
    tau1: Rational = Fraction(0)
    xi: Rational = Fraction(0)
    eta: Rational = Fraction(0)

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, as_rational(getattr(self, f.name)))

    def astuple(self) -> tuple:
        return tuple(getattr(self, name) for name in PARAM_NAMES)

    def to_json_obj(self) -> dict:
        return {
            name: f"{getattr(self, name).numerator}/{getattr(self, name).denominator}"
            for name in PARAM_NAMES
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "OperatorParams":
        return cls(**{name: Fraction(obj[name]) for name in PARAM_NAMES})

    @classmethod
    def from_json(cls, text: str) -> "OperatorParams":
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class DunklOperator:
    """The triple (F, G0, G1) plus the parameter record it was built from.

    Immutable; all methods are pure functions, safe for concurrent use.
    """

    F: LaurentPoly
    G0: LaurentPoly
    G1: LaurentPoly
    params: OperatorParams | None = None

    def apply(self, p: LaurentPoly) -> Polynomial:
        """Apply the operator to a polynomial.

        Computes ``F*(p - p(-x)) + G0*p' + G1*(p(-x))'`` where the last
        term differentiates the reflected polynomial.  Raises
        :class:`NegativePowerResidue` if negative powers survive, which
        signals coefficient functions outside the classified family.
        """
        if not p.is_polynomial:
            raise ValueError("apply expects a genuine polynomial (valuation >= 0)")
        out = apply_raw(self.F, -self.F, self.G0, self.G1, p)
        if not out.is_polynomial:
            raise NegativePowerResidue(
                f"operator application left negative powers (valuation {out.valuation})"
            )
        return Polynomial.from_laurent(out)


def apply_raw(F0: LaurentPoly, F1: LaurentPoly, G0: LaurentPoly,
              G1: LaurentPoly, p: LaurentPoly) -> LaurentPoly:
    """Apply the un-normalized four-function form F0 + F1 R + G0 d/dx + G1 d/dx R.

    No cancellation checks: the result may contain negative powers.  Used
    directly by tests that probe out-of-family coefficient choices.
    """
    rp = p.reflect()
    return F0 * p + F1 * rp + G0 * p.differentiate() + G1 * rp.differentiate()


def build(params: OperatorParams) -> DunklOperator:
    """Construct the operator with the closed-form coefficient functions."""
    mu, nu0, nu1, rho0, rho1, tau0, tau1, xi, eta = params.astuple()
    g0 = LaurentPoly({-2: mu, -1: nu0, 0: rho0, 1: tau0})
    g1 = LaurentPoly({-2: -mu, -1: nu1, 0: rho1, 1: tau1})
    f = LaurentPoly({-3: -mu, -2: (nu1 - nu0) / 2, -1: xi, 0: eta})
    return DunklOperator(F=f, G0=g0, G1=g1, params=params)


def eigenvalue(params: OperatorParams, n: int) -> Fraction:
    """Eigenvalue attached to degree ``n``: parity-split linear law."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2 == 0:
        return (params.tau0 + params.tau1) * n
    return 2 * params.eta + (params.tau0 - params.tau1) * n


def check_nondegenerate(params: OperatorParams, N: int) -> bool:
    """Exact nondegeneracy test up to degree ``N``.

    Requires ``tau1 != +-tau0`` and ``2 eta + (2k+1)(tau0 - tau1) != 0``
    for all k = 0..N (odd eigenvalues nonzero).
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if params.tau1 == params.tau0 or params.tau1 == -params.tau0:
        return False
    dtau = params.tau0 - params.tau1
    for k in range(N + 1):
        if 2 * params.eta + (2 * k + 1) * dtau == 0:
            return False
    return True


@dataclass(frozen=True)
class DegreeConditionReport:
    """Outcome of the three low-degree preservation identities."""

    q1: LaurentPoly
    q2: LaurentPoly
    q3: LaurentPoly
    ok1: bool
    ok2: bool
    ok3: bool

    @property
    def passed(self) -> bool:
        return self.ok1 and self.ok2 and self.ok3


def degree_conditions(F: LaurentPoly, G0: LaurentPoly, G1: LaurentPoly) -> DegreeConditionReport:
    """Check that L maps x, x^2, x^3 to polynomials of degree <= 1, 2, 3.

    The three combinations below are ``L x``, ``L x^2`` and ``L x^3`` for
    the normalized operator; each must be a polynomial of the indicated
    degree for the operator to preserve every degree.
    """
    x = LaurentPoly.x()
    q1 = 2 * x * F + G0 - G1
    q2 = 2 * x * (G0 + G1)
    q3 = 2 * x**3 * F + 3 * x**2 * (G0 - G1)

    def ok(q: LaurentPoly, bound: int) -> bool:
        return q.is_polynomial and (q.is_zero or q.degree <= bound)

    return DegreeConditionReport(q1, q2, q3, ok(q1, 1), ok(q2, 2), ok(q3, 3))


def verify_degree_conditions(op: DunklOperator) -> DegreeConditionReport:
    return degree_conditions(op.F, op.G0, op.G1)


def subleading_coefficients(op: DunklOperator, n: int) -> dict:
    """All below-leading coefficients of ``L x^n``, keyed by exponent drop.

    Returns ``{i: coefficient of x**(n-i)}`` for i >= 1.  For the closed
    coefficient family at most the drops 1, 2, 3 occur; the map is derived
    from the actual expansion rather than assumed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    q = op.apply(Polynomial.monomial(n))
    return {n - k: v for k, v in q.terms.items() if k < n}


def kappa_coefficients(op: DunklOperator, n: int) -> tuple:
    """The coefficients of x^(n-1), x^(n-2), x^(n-3) in ``L x^n``."""
    sub = subleading_coefficients(op, n)
    return (sub.get(1, Fraction(0)), sub.get(2, Fraction(0)), sub.get(3, Fraction(0)))
