"""Spectral engine: eigenvalues, grouping, energy, integrality verdicts."""

import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phispec.errors import NumericError
from phispec.graphs import FamilySpec, Graph, build_family
from phispec.matrices import assemble
from phispec.spectra import (
    Spectrum,
    check_integrality,
    eigenvalues_sym,
    energy,
    expand,
    group,
    spectrum_of,
    spectrum_to_json,
)
from phispec.weights import get_weight


def family(kind, *params):
    return build_family(FamilySpec(kind, tuple(params)))


def test_eigenvalues_sym_known():
    vals = eigenvalues_sym(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert vals == pytest.approx([1.0, -1.0])
    assert vals[0] >= vals[1]


def test_eigenvalues_sym_validation():
    with pytest.raises(ValueError):
        eigenvalues_sym(np.zeros((2, 3)))
    with pytest.raises(ValueError, match="symmetric"):
        eigenvalues_sym(np.array([[0.0, 1.0], [0.9, 0.0]]))
    with pytest.raises(NumericError):
        eigenvalues_sym(np.array([[np.inf, 0.0], [0.0, 1.0]]))


def test_group_merges_noise():
    s = group([3.0, -0.9999999999, -1.0, -1.0000000001])
    assert [m for _, m in s.eigenvalues] == [1, 3]
    assert s.eigenvalues[1][0] == pytest.approx(-1.0, abs=1e-9)
    assert s.n == 4


def test_group_keeps_distinct_values():
    s = group([1.0, 0.5])
    assert len(s.eigenvalues) == 2
    assert s.eigenvalues == ((1.0, 1), (0.5, 1))


def test_group_chain_merge():
    # adjacent pairs each sit inside the tolerance, so the chain collapses
    s = group([1.00000002, 1.00000001, 1.0], grouping_tol=1e-7)
    assert s.eigenvalues[0][1] == 3


def test_group_zero_snap():
    s = group([1.0, 1e-13, -1e-13, -1.0])
    values = [v for v, _ in s.eigenvalues]
    assert 0.0 in values
    mult = dict((v, m) for v, m in s.eigenvalues)[0.0]
    assert mult == 2


def test_group_rejects_bad_input():
    with pytest.raises(ValueError):
        group([])
    with pytest.raises(ValueError, match="descending"):
        group([0.0, 1.0])
    with pytest.raises(ValueError):
        group([1.0], grouping_tol=-1.0)


def test_group_summary_quantities():
    s = group([2.0, -1.0, -1.0])
    assert s.energy == pytest.approx(4.0)
    assert s.spectral_radius == pytest.approx(2.0)
    assert abs(s.trace) <= 1e-12
    assert energy(s) == s.energy


def test_spectrum_of_triangle():
    m = assemble(family("complete", 3), get_weight("adj"))
    s = spectrum_of(m)
    assert [m_ for _, m_ in s.eigenvalues] == [1, 2]
    assert s.eigenvalues[0][0] == pytest.approx(2.0, abs=1e-12)
    assert s.eigenvalues[1][0] == pytest.approx(-1.0, abs=1e-12)
    assert s.energy == pytest.approx(4.0)
    assert s.spectral_radius == pytest.approx(2.0)


def test_expand_roundtrip():
    s = spectrum_of(assemble(family("crown", 3, 3), get_weight("isi")))
    flat = expand(s)
    assert len(flat) == 9
    assert group(flat).eigenvalues == s.eigenvalues


@settings(deadline=None, max_examples=25)
@given(st.integers(2, 9), st.data())
def test_spectrum_invariants(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs), min_size=1))
    g = Graph.from_edges(n, sorted(chosen))
    w = data.draw(st.sampled_from(["isi", "sombor", "randic", "m1"]))
    s = spectrum_of(assemble(g, get_weight(w)))
    assert sum(m for _, m in s.eigenvalues) == n
    vals = [v for v, _ in s.eigenvalues]
    assert all(a > b for a, b in zip(vals, vals[1:])), "groups strictly decrease"
    assert s.energy >= s.spectral_radius - 1e-12
    assert s.energy >= abs(vals[0]) + abs(vals[-1]) - 1e-9
    scale = max(1.0, max(abs(v) for v in vals))
    assert abs(s.trace) <= 1e-8 * scale * n


def test_spectrum_json_shape():
    s = spectrum_of(assemble(family("complete", 23), get_weight("isi")))
    payload = json.loads(spectrum_to_json(s))
    assert set(payload) == {"eigenvalues", "energy", "spectral_radius"}
    assert payload["eigenvalues"][0]["value"] == pytest.approx(242.0)
    assert payload["eigenvalues"][0]["multiplicity"] == 1
    assert payload["eigenvalues"][1]["multiplicity"] == 22
    assert payload["energy"] == pytest.approx(484.0)


def test_check_integrality_exact():
    s = group([2.0, -1.0, -1.0])
    v = check_integrality(s, exact_values=[Fraction(2), Fraction(-1)])
    assert v.integral and v.method == "exact" and v.witness is None

    s2 = group([0.5, -0.5])
    v2 = check_integrality(s2, exact_values=[Fraction(1, 2), Fraction(-1, 2)])
    assert not v2.integral and v2.method == "exact"
    assert v2.witness == pytest.approx(0.5)

    with pytest.raises(ValueError):
        check_integrality(s, exact_values=[Fraction(2)])


def test_check_integrality_numeric_warns():
    s = spectrum_of(assemble(family("complete", 3), get_weight("adj")))
    with pytest.warns(UserWarning, match="heuristic"):
        v = check_integrality(s)
    assert v.integral and v.method == "numeric-tol"

    star = spectrum_of(assemble(family("star", 5), get_weight("isi")))
    with pytest.warns(UserWarning):
        v2 = check_integrality(star)
    assert not v2.integral
    assert v2.witness == pytest.approx(1.6)


def test_isi_is_half_degree_times_adjacency_on_regular_graphs():
    """On a d-regular graph every edge weight is d/2, so the whole spectrum
    scales accordingly."""
    for kind, params, d in [
        ("complete", (5,), 4),
        ("crown", (3, 3), 4),
        ("regular_multipartite", (2, 3), 4),
    ]:
        g = family(kind, *params)
        assert g.degrees == (d,) * g.n
        isi_vals = eigenvalues_sym(assemble(g, get_weight("isi")))
        adj_vals = eigenvalues_sym(assemble(g, get_weight("adj")))
        assert np.max(np.abs(np.array(isi_vals) - d / 2 * np.array(adj_vals))) <= 1e-9
