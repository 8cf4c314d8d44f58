"""Exact monic eigenpolynomials by back-substitution on the monomial basis.

Because the operator preserves degree, its matrix on ``1, x, ..., x^n`` is
upper triangular with the eigenvalues on the diagonal, so the monic
eigenpolynomial of degree ``n`` is found by one backward sweep.  All
arithmetic is exact; the residual ``L P - lambda P`` of every returned pair
is identically zero.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .dunkl import DunklOperator, eigenvalue
from .errors import DegenerateSpectrum
from .laurent import LaurentPoly, Polynomial, Rational


@dataclass(frozen=True)
class EigenPolynomial:
    """A monic eigenpolynomial of degree ``n`` with its eigenvalue."""

    n: int
    poly: Polynomial
    eigenvalue: Rational


def _check_spectrum(op: DunklOperator, n: int) -> Fraction:
    lam = eigenvalue(op.params, n)
    if n >= 1 and lam == 0:
        raise DegenerateSpectrum(n, f"eigenvalue vanishes at degree {n}")
    for m in range(n):
        if eigenvalue(op.params, m) == lam:
            raise DegenerateSpectrum(
                n, f"eigenvalue at degree {n} collides with degree {m}"
            )
    return lam


def _solve_degree(op: DunklOperator, columns, n: int, lam: Fraction) -> EigenPolynomial:
    coeffs = {n: Fraction(1)}
    for j in range(n - 1, -1, -1):
        s = Fraction(0)
        # Only the three superdiagonals above j can contribute.
        for k in range(j + 1, min(j + 3, n) + 1):
            ck = coeffs.get(k)
            if ck:
                t = columns[k].coefficient(j)
                if t:
                    s += t * ck
        if s:
            coeffs[j] = s / (lam - eigenvalue(op.params, j))
    return EigenPolynomial(n=n, poly=Polynomial(coeffs), eigenvalue=lam)


def monic_eigenpolynomial(op: DunklOperator, n: int) -> EigenPolynomial:
    """The unique monic degree-``n`` eigenpolynomial of a nondegenerate operator.

    Raises :class:`DegenerateSpectrum` eagerly if the eigenvalue at ``n``
    vanishes (n >= 1) or coincides with an earlier one.
    """
    if op.params is None:
        raise ValueError("operator must carry its parameter record")
    if n < 0:
        raise ValueError("n must be >= 0")
    lam = _check_spectrum(op, n)
    # Columns of L on the monomial basis; column k holds L x^k.
    columns = [op.apply(Polynomial.monomial(k)) for k in range(n + 1)]
    return _solve_degree(op, columns, n, lam)


def eigen_sequence(op: DunklOperator, N: int) -> list:
    """Eigenpolynomials of degree 0..N.

    Degrees are independent, so this could run in parallel; the sequential
    loop keeps the result trivially deterministic (the operator columns are
    shared across degrees).
    """
    if op.params is None:
        raise ValueError("operator must carry its parameter record")
    if N < 0:
        raise ValueError("N must be >= 0")
    lams = [_check_spectrum(op, n) for n in range(N + 1)]
    columns = [op.apply(Polynomial.monomial(k)) for k in range(N + 1)]
    return [_solve_degree(op, columns, n, lams[n]) for n in range(N + 1)]


def residual(op: DunklOperator, p: LaurentPoly, lam: Rational) -> LaurentPoly:
    """Exact residual ``L p - lam p``; the zero polynomial certifies an eigenpair."""
    if not p.is_polynomial:
        raise ValueError("residual expects a polynomial")
    return op.apply(Polynomial.from_laurent(p)) - lam * p


def coefficient_table_csv(eigs) -> str:
    """CSV table: one row per degree, exponent-ascending rational columns."""
    n_max = max(e.n for e in eigs)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["degree", "lambda"] + [f"c{k}" for k in range(n_max + 1)])
    for e in eigs:
        row = [e.n, str(e.eigenvalue)]
        row += [str(e.poly.coefficient(k)) for k in range(n_max + 1)]
        writer.writerow(row)
    return buf.getvalue()


def coefficient_table_json(eigs) -> str:
    records = [
        {
            "degree": e.n,
            "lambda": str(e.eigenvalue),
            "coefficients": [str(e.poly.coefficient(k)) for k in range(e.n + 1)],
        }
        for e in eigs
    ]
    return json.dumps(records, indent=2)


def parse_coefficient_table_csv(text: str) -> list:
    """Inverse of :func:`coefficient_table_csv` (exact round-trip)."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    out = []
    for row in reader:
        n = int(row[0])
        lam = Fraction(row[1])
        coeffs = {k: Fraction(v) for k, v in enumerate(row[2:]) if Fraction(v)}
        out.append(EigenPolynomial(n=n, poly=Polynomial(coeffs), eigenvalue=lam))
    return out
