"""Spectra of degree-weighted adjacency matrices.

Given a graph and a symmetric weight function phi on vertex-degree pairs, the
weighted adjacency matrix carries phi(deg u, deg v) at the positions of edges
and zero elsewhere.  This package builds those matrices for named graph
families and arbitrary edge lists, computes grouped spectra, energies and
spectral radii, evaluates closed-form spectra where they exist, reports how
the energy moves under single-edge perturbations, and decides eigenvalue
integrality exactly when the arithmetic allows it.
"""

from .errors import NumericError
from .graphs import (
    FamilySpec,
    Graph,
    add_edge,
    build_family,
    delete_edge,
    parse_family,
    read_edge_list,
)
from .matrices import assemble, assemble_exact, multipartite_quotient, quotient
from .perturbation import (
    EnergyChangeReport,
    compare_edge_addition,
    compare_edge_deletion,
    conjecture_sweep,
)
from .spectra import (
    IntegralityVerdict,
    Spectrum,
    check_integrality,
    eigenvalues_sym,
    energy,
    spectrum_of,
)
from .weights import WeightFunction, catalog, get_weight

__version__ = "0.1.0"

__all__ = [
    "NumericError",
    "FamilySpec",
    "Graph",
    "add_edge",
    "build_family",
    "delete_edge",
    "parse_family",
    "read_edge_list",
    "assemble",
    "assemble_exact",
    "multipartite_quotient",
    "quotient",
    "EnergyChangeReport",
    "compare_edge_addition",
    "compare_edge_deletion",
    "conjecture_sweep",
    "IntegralityVerdict",
    "Spectrum",
    "check_integrality",
    "eigenvalues_sym",
    "energy",
    "spectrum_of",
    "WeightFunction",
    "catalog",
    "get_weight",
    "__version__",
]
