"""Exact-arithmetic oracles: characteristic polynomials and Jacobi rotation.

These routines exist so that spectra from the floating-point engine can be
checked against an independent path.  The tests here pin both paths to known
answers and to each other.
"""

import inspect
from fractions import Fraction

import numpy as np
import pytest

import phispec.exact
import phispec.spectra
from phispec.errors import NumericError
from phispec.exact import (
    MAX_CHARPOLY_ORDER,
    RationalPolynomial,
    char_poly_exact,
    format_polynomial,
    jacobi_eigen,
    verify_root_multiset,
)
from phispec.graphs import FamilySpec, build_family
from phispec.matrices import assemble_exact
from phispec.weights import get_weight


def test_polynomial_type():
    p = RationalPolynomial.from_coeffs([Fraction(1, 6), Fraction(-5, 6), 1])
    assert p.degree == 2
    assert p(Fraction(1, 2)) == 0
    assert p(Fraction(1, 3)) == 0
    assert p(0.5) == pytest.approx(0.0, abs=1e-15)
    assert p.root_sum() == Fraction(5, 6)
    assert p.scaled(Fraction(6)).coeffs == (1, -5, 6)
    assert format_polynomial(p) == "x^2 - 5/6 x + 1/6"


def test_polynomial_strips_leading_zeros():
    p = RationalPolynomial.from_coeffs([1, 2, 0, 0])
    assert p.degree == 1
    assert RationalPolynomial.from_coeffs([0]).coeffs == (0,)


def test_char_poly_small_matrices():
    assert char_poly_exact([[0, 1], [1, 0]]).coeffs == (-1, 0, 1)
    # triangle graph
    k3 = char_poly_exact([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert k3.coeffs == (-2, -3, 0, 1)
    assert format_polynomial(k3) == "x^3 - 3 x - 2"
    # companion matrix of x^3 - 2 (not symmetric; the method does not care)
    comp = char_poly_exact([[0, 0, 2], [1, 0, 0], [0, 1, 0]])
    assert comp.coeffs == (-2, 0, 0, 1)
    diag = char_poly_exact([[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
    assert diag.coeffs == (Fraction(1, 6), Fraction(-5, 6), 1)


def test_char_poly_trace_shows_up():
    # coefficient of x^(n-1) is minus the trace; zero for any hollow matrix
    g = build_family(FamilySpec("complete", (4,)))
    m = assemble_exact(g, get_weight("ISI"))
    p = char_poly_exact(m)
    assert p.coeffs[p.degree - 1] == 0
    assert p.coeffs[p.degree] == 1


def test_char_poly_rejects_floats_and_big_orders():
    with pytest.raises(ValueError, match="rational"):
        char_poly_exact([[0.5]])
    with pytest.raises(ValueError, match="rational"):
        char_poly_exact(np.array([[0.5, 0.0], [0.0, 0.5]]))
    too_big = [[0] * (MAX_CHARPOLY_ORDER + 1) for _ in range(MAX_CHARPOLY_ORDER + 1)]
    with pytest.raises(ValueError):
        char_poly_exact(too_big)


def test_char_poly_accepts_numpy_integers():
    m = np.array([[0, 1], [1, 0]])
    assert char_poly_exact(m).coeffs == (-1, 0, 1)


def test_jacobi_known_answers():
    vals = jacobi_eigen(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert vals == pytest.approx([1.0, -1.0])
    k4 = np.ones((4, 4)) - np.eye(4)
    assert jacobi_eigen(k4) == pytest.approx([3.0, -1.0, -1.0, -1.0])


def test_jacobi_agrees_with_engine():
    rng = np.random.default_rng(7)
    for order in (2, 5, 11, 24, 40):
        a = rng.normal(size=(order, order))
        m = (a + a.T) / 2
        ours = np.asarray(jacobi_eigen(m))
        ref = np.asarray(phispec.spectra.eigenvalues_sym(m))
        scale = max(1.0, float(np.linalg.norm(m)))
        assert np.max(np.abs(ours - ref)) <= 1e-9 * scale


def test_jacobi_input_validation():
    with pytest.raises(ValueError, match="symmetric"):
        jacobi_eigen(np.array([[0.0, 1.0], [0.5, 0.0]]))
    with pytest.raises(NumericError):
        jacobi_eigen(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_verify_root_multiset():
    p = RationalPolynomial.from_coeffs([-1, 0, 1])
    assert verify_root_multiset(p, [1.0, -1.0])
    # both values are roots, but the multiset is wrong; the root-sum
    # comparison catches the duplicate
    assert not verify_root_multiset(p, [1.0, 1.0])
    assert not verify_root_multiset(p, [1.0, -0.9])
    k3 = RationalPolynomial.from_coeffs([-2, -3, 0, 1])
    assert verify_root_multiset(k3, [2.0, -1.0, -1.0])
    with pytest.raises(ValueError, match="degree"):
        verify_root_multiset(p, [1.0])


def test_solver_independence():
    """The two eigenvalue paths must not share an algorithm.

    The engine may mention the oracle in prose, but must never call it, and
    vice versa."""
    engine_src = inspect.getsource(phispec.spectra)
    oracle_src = inspect.getsource(phispec.exact)
    assert "jacobi_eigen" not in engine_src
    assert "phispec.exact" not in engine_src and "from .exact" not in engine_src
    for routine in ("eigvalsh", "eigvals", "eigh", "np.linalg.eig"):
        assert routine not in oracle_src
