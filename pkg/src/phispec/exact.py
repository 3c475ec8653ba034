"""Exact-arithmetic oracle: rational characteristic polynomials and an
independent eigensolver.

Everything here exists to cross-check the floating-point spectral engine, so
this module deliberately shares no solver code with it: char_poly_exact runs
Faddeev-LeVerrier over fractions.Fraction, and jacobi_eigen is a hand-written
cyclic Jacobi iteration (the engine uses a LAPACK tridiagonalization method).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import NumericError

MAX_CHARPOLY_ORDER = 16
MAX_JACOBI_ORDER = 300

RationalMatrix = list[list[Fraction]]


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial with exact rational coefficients, stored ascending by power."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @classmethod
    def from_coeffs(cls, ascending: Sequence[Fraction | int]) -> "RationalPolynomial":
        cs = [Fraction(c) for c in ascending]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        # Horner; works for Fraction and float arguments alike
        acc = self.coeffs[-1] if isinstance(x, Fraction) else float(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + (c if isinstance(x, Fraction) else float(c))
        return acc

    def scaled(self, factor: Fraction | int) -> "RationalPolynomial":
        f = Fraction(factor)
        if f == 0:
            raise ValueError("cannot scale a polynomial by zero")
        return RationalPolynomial(tuple(c * f for c in self.coeffs))

    def root_sum(self) -> Fraction:
        """Sum of roots, -a_{k-1}/a_k."""
        if self.degree < 1:
            raise ValueError("constant polynomial has no roots")
        if self.degree == 1:
            return -self.coeffs[0] / self.coeffs[1]
        return -self.coeffs[-2] / self.coeffs[-1]

    def __str__(self) -> str:
        return format_polynomial(self)


def format_polynomial(p: RationalPolynomial) -> str:
    """Render as "a_k x^k + ... + a_0" with exact fraction coefficients.

    Zero interior terms are skipped; unit coefficients keep their sign only.
    """
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0 and p.degree > 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            mag = abs(c)
            xk = "x" if k == 1 else f"x^{k}"
            body = xk if mag == 1 else f"{mag} {xk}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    if not parts:
        return "0"
    return " ".join(parts)


def _as_rational_matrix(m) -> RationalMatrix:
    rows = list(m)
    n = len(rows)
    out: RationalMatrix = []
    for row in rows:
        cells = list(row)
        if len(cells) != n:
            raise ValueError("matrix must be square")
        rational_row = []
        for c in cells:
            if isinstance(c, Fraction):
                rational_row.append(c)
            elif isinstance(c, (int, np.integer)):
                rational_row.append(Fraction(int(c)))
            else:
                raise ValueError(
                    f"char_poly_exact needs exactly rational entries, got {type(c).__name__}")
        out.append(rational_row)
    return out


def char_poly_exact(m) -> RationalPolynomial:
    """Characteristic polynomial det(xI - m) over exact rationals.

    Faddeev-LeVerrier recurrence; accepts nested sequences of Fraction or int
    entries (floats are rejected: a float argument would silently commit to
    its binary approximation).  Orders above 16 are refused.
    """
    a = _as_rational_matrix(m)
    n = len(a)
    if n == 0:
        raise ValueError("matrix must be non-empty")
    if n > MAX_CHARPOLY_ORDER:
        raise ValueError(f"char_poly_exact supports order <= {MAX_CHARPOLY_ORDER}, got {n}")

    def mat_mul(x: RationalMatrix, y: RationalMatrix) -> RationalMatrix:
        return [
            [sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]

    def trace(x: RationalMatrix) -> Fraction:
        return sum((x[i][i] for i in range(n)), Fraction(0))

    # p(x) = x^n + c[n-1] x^(n-1) + ... + c[0]
    coeffs = [Fraction(0)] * n + [Fraction(1)]
    mk = [row[:] for row in a]
    coeffs[n - 1] = -trace(mk)
    for k in range(2, n + 1):
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        mk = mat_mul(a, mk)
        coeffs[n - k] = -trace(mk) / k
    return RationalPolynomial(tuple(coeffs))


def jacobi_eigen(m, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.

    Independent of the spectral engine's LAPACK path.  Converges when the
    off-diagonal Frobenius norm drops below 1e-12 times the matrix norm;
    raises NumericError with the residual if 100 sweeps do not get there.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_JACOBI_ORDER:
        raise ValueError(f"jacobi_eigen supports order <= {MAX_JACOBI_ORDER}, got {n}")
    if not np.isfinite(a).all():
        raise NumericError("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        if np.max(np.abs(a - a.T)) > 1e-12 * max(1.0, float(np.max(np.abs(a)))):
            raise ValueError("matrix is not symmetric")
        a = (a + a.T) / 2.0

    norm = float(np.linalg.norm(a))
    if norm == 0.0 or n == 1:
        return sorted((float(x) for x in np.diag(a)), reverse=True)
    target = 1e-12 * norm

    def offdiag_norm() -> float:
        off = a - np.diag(np.diag(a))
        return float(np.linalg.norm(off))

    for _ in range(max_sweeps):
        if offdiag_norm() <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        raise NumericError(
            f"jacobi_eigen did not converge in {max_sweeps} sweeps; "
            f"off-diagonal residual {offdiag_norm():.3e} (target {target:.3e})")
    return sorted((float(x) for x in np.diag(a)), reverse=True)


def verify_root_multiset(
    p: RationalPolynomial, roots: Sequence[float], tol: float = 1e-9
) -> bool:
    """Check that a float multiset plausibly lists all roots of p.

    Requires len(roots) == degree; every root must nearly annihilate p
    (residual below tol times the evaluation magnitude) and the root sum must
    match -a_{k-1}/a_k, which catches duplicated roots that each pass the
    residual test.
    """
    if len(roots) != p.degree:
        raise ValueError(
            f"expected {p.degree} roots for degree-{p.degree} polynomial, got {len(roots)}")
    coeffs = [float(c) for c in p.coeffs]
    for r in roots:
        scale = max(1.0, sum(abs(c) * abs(r) ** k for k, c in enumerate(coeffs)))
        if abs(p(float(r))) > tol * scale:
            return False
    want_sum = float(p.root_sum())
    got_sum = float(sum(roots))
    if abs(got_sum - want_sum) > tol * max(1.0, sum(abs(r) for r in roots)):
        return False
    return True
