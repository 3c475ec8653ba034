"""Closed-form spectra for the parameterized graph families.

Every function here returns eigenvalues derived structurally (duplicate
neighborhoods, clique blocks, equitable quotients, trace completion) rather
than by a numeric eigensolve, so each result doubles as an oracle for the
floating-point engine.  Groups carry exact rational values, or exact rational
squares for pure radicals, whenever the weight function allows; residual
eigenvalues that only exist as polynomial roots are kept as an exact-
coefficient polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NumericError
from .exact import RationalPolynomial, char_poly_exact
from .matrices import multipartite_quotient
from .graphs import Graph
from .spectra import (
    DEFAULT_GROUPING_TOL,
    IntegralityVerdict,
    Spectrum,
    group,
)
from .weights import WeightFunction, sqrt_exact


@dataclass(frozen=True)
class SpectralGroup:
    """One eigenvalue with multiplicity and structural origin.

    exact is set when the value is exactly rational; square (with neg) is set
    when the value is +-sqrt(square) for a rational square.  Both absent means
    the value is only available as a float.
    """

    value: float
    multiplicity: int
    provenance: str
    exact: Fraction | None = None
    square: Fraction | None = None
    neg: bool = False


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Structurally derived spectrum: explicit groups plus an optional
    residual polynomial whose roots supply the remaining eigenvalues."""

    family: str
    weight: str
    groups: tuple[SpectralGroup, ...]
    residual_polynomial: RationalPolynomial | None = None

    @property
    def n(self) -> int:
        total = sum(g.multiplicity for g in self.groups)
        if self.residual_polynomial is not None:
            total += self.residual_polynomial.degree
        return total


def _rational_group(
    q: Fraction, mult: int, provenance: str
) -> SpectralGroup:
    return SpectralGroup(float(q), mult, provenance, exact=q)


def _phi_group(
    w: WeightFunction, d: int, scale: int, mult: int, provenance: str
) -> SpectralGroup:
    """Group for the eigenvalue scale * phi(d, d)."""
    exact_phi = w.rational(d, d)
    if exact_phi is not None:
        return _rational_group(scale * exact_phi, mult, provenance)
    value = scale * w.eval(d, d)
    return SpectralGroup(
        value, mult, provenance,
        square=w.square(d, d) * scale * scale, neg=scale < 0,
    )


def _radical_group(
    square: Fraction, neg: bool, mult: int, provenance: str
) -> SpectralGroup:
    exact = sqrt_exact(square)
    value = float(exact) if exact is not None else math.sqrt(square)
    if neg:
        value = -value
        exact = -exact if exact is not None else None
    return SpectralGroup(value, mult, provenance, exact=exact,
                         square=square, neg=neg)


def _merge_and_sort(groups: list[SpectralGroup]) -> tuple[SpectralGroup, ...]:
    """Drop empty groups, merge equal-valued ones, sort descending."""
    merged: dict[float, SpectralGroup] = {}
    for g in groups:
        if g.multiplicity == 0:
            continue
        prev = merged.get(g.value)
        if prev is None:
            merged[g.value] = g
        else:
            merged[g.value] = SpectralGroup(
                prev.value,
                prev.multiplicity + g.multiplicity,
                f"{prev.provenance} + {g.provenance}",
                exact=prev.exact if prev.exact is not None else g.exact,
                square=prev.square if prev.square is not None else g.square,
                neg=prev.neg if prev.square is not None else g.neg,
            )
    return tuple(sorted(merged.values(), key=lambda g: g.value, reverse=True))


def residual_roots(p: RationalPolynomial) -> list[float]:
    """Real roots of a residual polynomial, descending.

    The residual polynomials here come from matrices similar to symmetric
    ones, so all roots are real; a materially complex root raises.
    """
    coeffs = [float(c) for c in reversed(p.coeffs)]
    roots = np.roots(coeffs)
    scale = max(1.0, float(np.max(np.abs(roots))) if len(roots) else 1.0)
    if np.max(np.abs(roots.imag)) > 1e-6 * scale:
        raise NumericError(f"residual polynomial has a complex root: {roots}")
    return sorted((float(r) for r in roots.real), reverse=True)


def to_spectrum(
    cfs: ClosedFormSpectrum, grouping_tol: float = DEFAULT_GROUPING_TOL
) -> Spectrum:
    """Numeric Spectrum of a closed form (groups plus residual roots)."""
    values: list[float] = []
    for g in cfs.groups:
        values.extend([g.value] * g.multiplicity)
    if cfs.residual_polynomial is not None:
        values.extend(residual_roots(cfs.residual_polynomial))
    values.sort(reverse=True)
    return group(values, grouping_tol)


def closed_energy(cfs: ClosedFormSpectrum) -> float:
    """Energy (sum of absolute eigenvalues) of a closed-form spectrum."""
    total = sum(abs(g.value) * g.multiplicity for g in cfs.groups)
    if cfs.residual_polynomial is not None:
        total += sum(abs(r) for r in residual_roots(cfs.residual_polynomial))
    return total


def closed_energy_exact(cfs: ClosedFormSpectrum) -> Fraction | None:
    """Exact rational energy, when every eigenvalue is exactly rational."""
    if cfs.residual_polynomial is not None:
        return None
    total = Fraction(0)
    for g in cfs.groups:
        if g.exact is None:
            return None
        total += abs(g.exact) * g.multiplicity
    return total


def exact_integrality(cfs: ClosedFormSpectrum) -> IntegralityVerdict | None:
    """Exact integrality verdict, or None when some eigenvalue is undecidable.

    A group decides as integral iff its exact value has denominator 1; a
    radical group with non-square radicand is provably irrational, hence
    non-integral.  Residual polynomials are not decided here.
    """
    if cfs.residual_polynomial is not None:
        return None
    worst: float | None = None
    worst_dist = -1.0
    for g in cfs.groups:
        if g.exact is not None:
            if g.exact.denominator == 1:
                continue
            dist = abs(float(g.exact) - round(float(g.exact)))
        elif g.square is not None:
            if sqrt_exact(g.square) is not None:
                # rational after all; covered by exact above in practice
                continue
            dist = abs(g.value - round(g.value))
        else:
            return None
        if dist > worst_dist:
            worst, worst_dist = g.value, dist
    if worst is None:
        return IntegralityVerdict(True, "exact")
    return IntegralityVerdict(False, "exact", witness=worst)


# ---------------------------------------------------------------------------
# complete graphs


def complete_graph_spectrum(n: int, w: WeightFunction) -> ClosedFormSpectrum:
    """Spectrum of the complete graph on n vertices under w.

    All degrees equal n-1, so the matrix is phi(n-1, n-1) times (J - I):
    one eigenvalue (n-1) phi(d, d) and n-1 copies of -phi(d, d); the energy
    is (2n-2) phi(d, d).
    """
    if n < 2:
        raise ValueError(f"complete graph spectrum needs n >= 2, got {n}")
    d = n - 1
    groups = [
        _phi_group(w, d, n - 1, 1, "quotient eigenvalue"),
        _phi_group(w, d, -1, n - 1, "clique eigenvalue"),
    ]
    return ClosedFormSpectrum(f"complete:{n}", w.id, _merge_and_sort(groups))


def complete_minus_edge_spectrum(n: int, w: WeightFunction) -> ClosedFormSpectrum:
    """Spectrum of the complete graph minus one edge.

    The two endpoints drop to degree n-2; the other n-2 vertices keep degree
    n-1 and contribute -phi(n-1, n-1) with multiplicity n-3.  One structural
    zero comes from the two duplicate-neighborhood endpoints, and the last
    two eigenvalues are

        ( (n-3) phi(n-1, n-1) +- sqrt((n-3)^2 phi(n-1, n-1)^2
                                       + 8 (n-2) phi(n-2, n-1)^2) ) / 2.
    """
    if n < 3:
        raise ValueError(f"complete-minus-edge spectrum needs n >= 3, got {n}")
    d_kept = n - 1
    d_end = n - 2
    phi_nn = w.eval(d_kept, d_kept)
    phi_1n = w.eval(d_end, d_kept)
    s = (n - 3) * phi_nn
    r = math.sqrt(s * s + 8.0 * (n - 2) * phi_1n * phi_1n)
    groups = [
        SpectralGroup((s + r) / 2.0, 1, "quotient eigenvalue"),
        SpectralGroup(0.0, 1, "independent-set zeros", exact=Fraction(0)),
        _phi_group(w, d_kept, -1, n - 3, "clique eigenvalue"),
        SpectralGroup((s - r) / 2.0, 1, "quotient eigenvalue"),
    ]
    return ClosedFormSpectrum(f"complete:{n}-e", w.id, _merge_and_sort(groups))


def complete_minus_edge_energy(n: int, w: WeightFunction) -> float:
    """Energy of the complete graph minus one edge:
    (n-3) phi(n-1, n-1) + sqrt((n-3)^2 phi^2 + 8 (n-2) phi(n-2, n-1)^2)."""
    if n < 3:
        raise ValueError(f"complete-minus-edge energy needs n >= 3, got {n}")
    phi_nn = w.eval(n - 1, n - 1)
    phi_1n = w.eval(n - 2, n - 1)
    s = (n - 3) * phi_nn
    return s + math.sqrt(s * s + 8.0 * (n - 2) * phi_1n * phi_1n)


def ratio_test(n: int, w: WeightFunction) -> str:
    """One-sided edge-deletion test for the complete graph on n vertices.

    Returns "decreases" when phi(n-1, n-1) / phi(n-2, n-1) falls strictly
    below sqrt((n-2)/(n-1)) -- then deleting any edge decreases both the
    spectral radius and the energy -- and "inconclusive" otherwise.  The
    comparison is made exactly on squares, so boundary cases (the Randic
    weight lands exactly on the threshold for every n) never flip on
    floating-point rounding.
    """
    if n < 3:
        raise ValueError(f"ratio test needs n >= 3, got {n}")
    rho_sq = w.square(n - 1, n - 1) / w.square(n - 2, n - 1)
    return "decreases" if rho_sq < Fraction(n - 2, n - 1) else "inconclusive"


# ---------------------------------------------------------------------------
# complete multipartite graphs


def complete_multipartite_spectrum(
    parts, w: WeightFunction
) -> ClosedFormSpectrum:
    """Spectrum of a complete multipartite graph from its t x t quotient.

    Duplicate neighborhoods inside each part give 0 with multiplicity n - t;
    the remaining t eigenvalues are those of the part quotient.  Two parts
    give the pair +-phi(d_1, d_2) sqrt(p_1 p_2) exactly; equal parts give
    -p phi(d, d) with multiplicity t-1 and (t-1) p phi(d, d); general parts
    fall back to a small general (non-symmetric) eigensolve of the quotient.
    """
    parts = [int(p) for p in parts]
    if len(parts) < 2 or min(parts) < 1:
        raise ValueError(f"need t >= 2 parts, all >= 1, got {parts}")
    t = len(parts)
    n = sum(parts)
    family = f"multipartite:{','.join(str(p) for p in parts)}"
    zeros = SpectralGroup(0.0, n - t, "independent-set zeros", exact=Fraction(0))

    if t == 2:
        p1, p2 = parts
        sq = w.square(n - p1, n - p2) * p1 * p2
        groups = [
            _radical_group(sq, False, 1, "quotient eigenvalue"),
            zeros,
            _radical_group(sq, True, 1, "quotient eigenvalue"),
        ]
    elif len(set(parts)) == 1:
        p = parts[0]
        d = n - p
        groups = [
            _phi_group(w, d, (t - 1) * p, 1, "quotient eigenvalue"),
            zeros,
            _phi_group(w, d, -p, t - 1, "quotient eigenvalue"),
        ]
    else:
        q = multipartite_quotient(parts, w)
        vals = np.linalg.eigvals(q)
        scale = max(1.0, float(np.max(np.abs(vals))))
        if float(np.max(np.abs(vals.imag))) > 1e-8 * scale:
            raise NumericError(f"quotient eigenvalues not real: {vals}")
        roots = sorted((float(v) for v in vals.real), reverse=True)
        grouped = group(roots)
        groups = [zeros] + [
            SpectralGroup(v, m, "quotient eigenvalue")
            for v, m in grouped.eigenvalues
        ]
    return ClosedFormSpectrum(family, w.id, _merge_and_sort(groups))


def distinct_eigenvalue_count_multipartite(parts, w: WeightFunction) -> int:
    """Number of distinct eigenvalues of the complete multipartite matrix.

    For t >= 3 parts and n > t this count is exactly 3 iff all parts are
    equal.  Part vectors with n = t (the complete graph) are still counted
    faithfully (giving 2) but sit outside that equivalence.
    """
    cfs = complete_multipartite_spectrum(parts, w)
    return len(to_spectrum(cfs).eigenvalues)


# ---------------------------------------------------------------------------
# crown graphs (complete multipartite minus an index matching)


def crown_spectrum(p: int, t: int, w: WeightFunction) -> ClosedFormSpectrum:
    """Spectrum of the crown graph (t parts of size p, positions matched).

    The graph is d-regular with d = (t-1)(p-1), so the matrix is phi(d, d)
    times the unweighted adjacency matrix, whose spectrum is

        phi(d,d)            with multiplicity (t-1)(p-1)
        -(p-1) phi(d,d)     with multiplicity t-1
        (p-1)(t-1) phi(d,d) simple
        -(t-1) phi(d,d)     with multiplicity p-1

    (duplicate position differences, the part quotient, and one trace
    completion).  The energy is 4 (p-1)(t-1) phi(d, d).
    """
    if p < 2 or t < 2:
        raise ValueError(f"crown requires p >= 2 and t >= 2, got ({p}, {t})")
    d = (t - 1) * (p - 1)
    groups = [
        _phi_group(w, d, (p - 1) * (t - 1), 1, "quotient eigenvalue"),
        _phi_group(w, d, 1, (t - 1) * (p - 1), "position-pair eigenvalue"),
        _phi_group(w, d, -(p - 1), t - 1, "quotient eigenvalue"),
        _phi_group(w, d, -(t - 1), p - 1, "trace completion"),
    ]
    return ClosedFormSpectrum(f"crown:{p},{t}", w.id, _merge_and_sort(groups))


def crown_energy(p: int, t: int, w: WeightFunction) -> float:
    """Energy of the crown graph: 4 (p-1)(t-1) phi(d, d), d = (t-1)(p-1)."""
    if p < 2 or t < 2:
        raise ValueError(f"crown requires p >= 2 and t >= 2, got ({p}, {t})")
    d = (t - 1) * (p - 1)
    return 4.0 * (p - 1) * (t - 1) * w.eval(d, d)


# ---------------------------------------------------------------------------
# stars


def star_isi_energy(n: int) -> float:
    """Inverse-sum-indeg energy of the star on n vertices: 2 (n-1)^{3/2} / n."""
    if n < 2:
        raise ValueError(f"star energy needs n >= 2, got {n}")
    return 2.0 * (n - 1) ** 1.5 / n


def star_plus_cubic_matrix(n: int) -> list[list[Fraction]]:
    """Quotient block of the star-plus-edge graph under the inverse-sum-indeg
    weight, over cells {center}, {joined leaves}, {pendant leaves}."""
    if n < 4:
        raise ValueError(f"star-plus closed form needs n >= 4, got {n}")
    alpha = Fraction(4 * (n - 1), n + 1)
    beta = Fraction((n - 1) * (n - 3), n)
    gamma = Fraction(2 * (n - 1), n + 1)
    delta = Fraction(n - 1, n)
    return [
        [Fraction(0), alpha, beta],
        [gamma, Fraction(1), Fraction(0)],
        [delta, Fraction(0), Fraction(0)],
    ]


def star_plus_cleared_cubic(n: int) -> RationalPolynomial:
    """The residual cubic of the star-plus-edge spectrum, cleared of its
    1/(n^2 (n+1)^2) normalization; integer coefficients."""
    if n < 4:
        raise ValueError(f"star-plus closed form needs n >= 4, got {n}")
    lead = n**4 + 2 * n**3 + n**2
    return RationalPolynomial.from_coeffs([
        n**5 - 3 * n**4 - 2 * n**3 + 6 * n**2 + n - 3,
        -(n**5) - 5 * n**4 + 18 * n**3 - 14 * n**2 - n + 3,
        -lead,
        lead,
    ])


def star_plus_spectrum_isi(n: int) -> ClosedFormSpectrum:
    """Inverse-sum-indeg spectrum of the star with one extra leaf-leaf edge.

    The n-3 pendant leaves share a neighborhood, giving 0 with multiplicity
    n-4; the two joined leaves form a clique block with matching outside
    neighborhoods, giving the simple eigenvalue -phi(2, 2) = -1; the three
    remaining eigenvalues are the roots of the residual cubic (which sum to
    +1, balancing the trace to zero).
    """
    if n < 4:
        raise ValueError(f"star-plus closed form needs n >= 4, got {n}")
    groups = [
        SpectralGroup(0.0, n - 4, "independent-set zeros", exact=Fraction(0)),
        SpectralGroup(-1.0, 1, "clique eigenvalue", exact=Fraction(-1)),
    ]
    return ClosedFormSpectrum(
        f"starplus:{n}", "ISI", _merge_and_sort(groups),
        residual_polynomial=star_plus_cleared_cubic(n),
    )


def star_plus_isi_energy(n: int) -> float:
    """Energy of the star-plus-edge graph under the inverse-sum-indeg weight."""
    return closed_energy(star_plus_spectrum_isi(n))


# ---------------------------------------------------------------------------
# three equal parts minus one cross edge (inverse-sum-indeg weight)


def tripartite_minus_edge_weights(p: int) -> tuple[Fraction, Fraction]:
    """Edge weights in the three-equal-parts graph after one deletion.

    Returns (a, b): a = 2p(2p-1)/(4p-1) on edges touching a deletion
    endpoint, b = p on edges between untouched vertices.
    """
    if p < 2:
        raise ValueError(f"tripartite-minus-edge closed form needs p >= 2, got {p}")
    return Fraction(2 * p * (2 * p - 1), 4 * p - 1), Fraction(p)


def tripartite_minus_edge_quotient(p: int) -> list[list[Fraction]]:
    """5x5 equitable quotient over cells: the two deletion endpoints, the
    rest of their parts, and the untouched part."""
    a, b = tripartite_minus_edge_weights(p)
    z = Fraction(0)
    return [
        [z, z, z, a * (p - 1), a * p],
        [z, z, a * (p - 1), z, a * p],
        [z, a, z, b * (p - 1), b * p],
        [a, z, b * (p - 1), z, b * p],
        [a, a, b * (p - 1), b * (p - 1), z],
    ]


def tripartite_minus_edge_cubic_matrix(p: int) -> list[list[Fraction]]:
    """3x3 block carrying the swap-symmetric part of the 5x5 quotient."""
    a, b = tripartite_minus_edge_weights(p)
    return [
        [Fraction(0), a * (p - 1), a * p],
        [a, b * (p - 1), b * p],
        [2 * a, 2 * b * (p - 1), Fraction(0)],
    ]


def tripartite_minus_edge_cleared_cubic(p: int) -> RationalPolynomial:
    """Residual cubic of the three-equal-parts minus-edge spectrum, cleared
    of its 1/(4p-1)^2 normalization.

    The leading coefficient is -(4p-1)^2, i.e. the cleared polynomial equals
    -(4p-1)^2 det(xI - M) for the 3x3 block M.
    """
    if p < 2:
        raise ValueError(f"tripartite-minus-edge closed form needs p >= 2, got {p}")
    return RationalPolynomial.from_coeffs([
        32 * p**7 - 64 * p**6 + 40 * p**5 - 8 * p**4,
        32 * p**6 - 46 * p**4 + 26 * p**3 - 4 * p**2,
        16 * p**4 - 24 * p**3 + 9 * p**2 - p,
        -16 * p**2 + 8 * p - 1,
    ])


def tripartite_minus_edge_pair_quadratic(p: int) -> RationalPolynomial:
    """Monic quadratic for the swap-antisymmetric eigenvalue pair:
    x^2 + p(p-1) x - a^2 (p-1)."""
    a, _ = tripartite_minus_edge_weights(p)
    return RationalPolynomial.from_coeffs([
        -(a * a) * (p - 1), Fraction(p * (p - 1)), Fraction(1),
    ])


def tripartite_minus_edge_discriminant(p: int) -> int:
    """Integer radicand 16p^4 + 24p^3 - 95p^2 + 70p - 15 appearing in the
    closed antisymmetric-pair eigenvalues and the energy."""
    return 16 * p**4 + 24 * p**3 - 95 * p**2 + 70 * p - 15


def tripartite_minus_edge_pair(p: int) -> tuple[float, float]:
    """The two swap-antisymmetric eigenvalues,
    p (5p - 1 - 4p^2 +- sqrt(16p^4 + 24p^3 - 95p^2 + 70p - 15)) / (2(4p-1))."""
    if p < 2:
        raise ValueError(f"tripartite-minus-edge closed form needs p >= 2, got {p}")
    disc = math.sqrt(tripartite_minus_edge_discriminant(p))
    base = 5 * p - 1 - 4 * p * p
    den = 2.0 * (4 * p - 1)
    return p * (base + disc) / den, p * (base - disc) / den


def tripartite_minus_edge_spectrum_isi(p: int) -> ClosedFormSpectrum:
    """Inverse-sum-indeg spectrum of three equal parts minus one cross edge.

    Zeros with multiplicity 3p-5 come from duplicate neighborhoods; the
    swap-antisymmetric pair has the closed form above; the last three
    eigenvalues are the roots of the cleared residual cubic.
    """
    hi, lo = tripartite_minus_edge_pair(p)
    groups = [
        SpectralGroup(0.0, 3 * p - 5, "independent-set zeros", exact=Fraction(0)),
        SpectralGroup(hi, 1, "swap-antisymmetric pair"),
        SpectralGroup(lo, 1, "swap-antisymmetric pair"),
    ]
    return ClosedFormSpectrum(
        f"multipartite:{p},{p},{p}-e", "ISI", _merge_and_sort(groups),
        residual_polynomial=tripartite_minus_edge_cleared_cubic(p),
    )


def tripartite_minus_edge_energy_isi(p: int) -> float:
    """Energy of three equal parts minus one cross edge:
    p sqrt(16p^4 + 24p^3 - 95p^2 + 70p - 15) / (4p-1) plus the absolute sum
    of the residual cubic's roots."""
    if p < 2:
        raise ValueError(f"tripartite-minus-edge closed form needs p >= 2, got {p}")
    pair_term = p * math.sqrt(tripartite_minus_edge_discriminant(p)) / (4 * p - 1)
    cubic_term = sum(abs(r) for r in residual_roots(tripartite_minus_edge_cleared_cubic(p)))
    return pair_term + cubic_term


# ---------------------------------------------------------------------------
# structural eigenvalue bounds for arbitrary graphs


def structural_zero_multiplicity(g: Graph, w: WeightFunction) -> int:
    """Lower bound on the multiplicity of eigenvalue 0 of the weighted matrix.

    Non-adjacent vertices with identical neighborhoods produce difference
    eigenvectors with eigenvalue 0 regardless of the weight; the bound is the
    sum of (group size - 1) over duplicate-neighborhood groups.
    """
    by_neighborhood: dict[frozenset[int], int] = {}
    for v in range(g.n):
        key = g.adjacency[v]
        by_neighborhood[key] = by_neighborhood.get(key, 0) + 1
    return sum(c - 1 for c in by_neighborhood.values() if c > 1)


def structural_clique_eigenvalue(
    g: Graph, w: WeightFunction
) -> list[tuple[float, int]]:
    """Guaranteed clique-block eigenvalues of the weighted matrix.

    Vertices with identical closed neighborhoods form a clique of some common
    degree d whose difference eigenvectors give -phi(d, d) with multiplicity
    (clique size - 1).  Returns (eigenvalue, multiplicity) pairs, ascending
    by eigenvalue.
    """
    by_closed: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        key = g.adjacency[v] | {v}
        by_closed.setdefault(frozenset(key), []).append(v)
    out: list[tuple[float, int]] = []
    for members in by_closed.values():
        if len(members) > 1:
            d = g.degrees[members[0]]
            out.append((-w.eval(d, d), len(members) - 1))
    return sorted(out)


# ---------------------------------------------------------------------------
# family-level exact integrality


def integrality_for_family(
    kind: str, params: tuple[int, ...], w: WeightFunction
) -> IntegralityVerdict | None:
    """Exact integrality verdict for a family instance, or None when no
    fully exact closed form covers it (callers then fall back to numerics)."""
    if kind == "complete":
        return exact_integrality(complete_graph_spectrum(params[0], w))
    if kind in ("bipartite", "multipartite"):
        return exact_integrality(complete_multipartite_spectrum(params, w))
    if kind == "regular_multipartite":
        p, t = params
        return exact_integrality(complete_multipartite_spectrum([p] * t, w))
    if kind == "crown":
        return exact_integrality(crown_spectrum(params[0], params[1], w))
    if kind == "star":
        return exact_integrality(
            complete_multipartite_spectrum([1, params[0] - 1], w))
    return None
