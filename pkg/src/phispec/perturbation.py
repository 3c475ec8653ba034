"""Edge-deletion and edge-addition energy experiments.

Deleting an edge changes the degrees of its endpoints, so every incident
weight changes too; energy can move either way.  Reports here compare full
numeric spectra before and after, and the sweep reproduces the reference
comparison tables for complete graphs, three equal parts, and stars.
"""

from __future__ import annotations

import io
import csv
from dataclasses import dataclass
from typing import Sequence

from .closedforms import (
    complete_graph_spectrum,
    complete_minus_edge_energy,
    complete_minus_edge_spectrum,
    closed_energy,
    ratio_test,
)
from .graphs import FamilySpec, Graph, add_edge, build_family, delete_edge, is_connected
from .matrices import assemble
from .spectra import DEFAULT_GROUPING_TOL, Spectrum, spectrum_of
from .weights import WeightFunction, get_weight

UNCHANGED_BAND = 1e-6


@dataclass(frozen=True)
class EnergyChangeReport:
    """Before/after spectra and energy movement for one edge operation.

    ratio_test is filled only for edge deletion on complete graphs, where the
    one-sided closed-form test applies; verdict is decreased / increased /
    unchanged@tol with |delta| <= 1e-6 * max(1, E_before) counting as
    unchanged.
    """

    graph_before: str
    graph_after: str
    weight: str
    spectrum_before: Spectrum
    spectrum_after: Spectrum
    delta_energy: float
    delta_spectral_radius: float
    ratio_test: str | None
    verdict: str
    disconnected_after: bool = False


def energy_verdict(e_before: float, e_after: float) -> str:
    delta = e_after - e_before
    if abs(delta) <= UNCHANGED_BAND * max(1.0, abs(e_before)):
        return "unchanged@tol"
    return "increased" if delta > 0 else "decreased"


def _report(
    g_before: Graph,
    g_after: Graph,
    w: WeightFunction,
    label_before: str,
    label_after: str,
    grouping_tol: float,
    with_ratio: bool,
) -> EnergyChangeReport:
    s_before = spectrum_of(assemble(g_before, w), grouping_tol)
    s_after = spectrum_of(assemble(g_after, w), grouping_tol)
    ratio = None
    if with_ratio and g_before.is_complete() and g_before.n >= 3:
        ratio = ratio_test(g_before.n, w)
    return EnergyChangeReport(
        graph_before=label_before,
        graph_after=label_after,
        weight=w.id,
        spectrum_before=s_before,
        spectrum_after=s_after,
        delta_energy=s_after.energy - s_before.energy,
        delta_spectral_radius=s_after.spectral_radius - s_before.spectral_radius,
        ratio_test=ratio,
        verdict=energy_verdict(s_before.energy, s_after.energy),
        disconnected_after=not is_connected(g_after),
    )


def _default_label(g: Graph) -> str:
    return f"graph(n={g.n},m={g.m})"


def compare_edge_deletion(
    g: Graph,
    u: int,
    v: int,
    w: WeightFunction,
    label: str | None = None,
    grouping_tol: float = DEFAULT_GROUPING_TOL,
) -> EnergyChangeReport:
    """Full numeric report for deleting edge {u, v} from g under w."""
    before = label if label is not None else _default_label(g)
    after_graph = delete_edge(g, u, v)
    return _report(
        g, after_graph, w, before, f"{before} minus ({u},{v})",
        grouping_tol, with_ratio=True,
    )


def compare_edge_addition(
    g: Graph,
    u: int,
    v: int,
    w: WeightFunction,
    label: str | None = None,
    grouping_tol: float = DEFAULT_GROUPING_TOL,
) -> EnergyChangeReport:
    """Full numeric report for adding edge {u, v} to g under w."""
    before = label if label is not None else _default_label(g)
    after_graph = add_edge(g, u, v)
    return _report(
        g, after_graph, w, before, f"{before} plus ({u},{v})",
        grouping_tol, with_ratio=False,
    )


@dataclass(frozen=True)
class SweepRow:
    """One (family instance, weight) line of a comparison table."""

    family: str
    n: int
    weight: str
    e_before: float
    e_after: float
    delta: float
    lambda1_before: float
    lambda1_after: float
    ratio_test: str
    verdict: str


def conjecture_sweep(
    ns: Sequence[int], weights: Sequence[WeightFunction]
) -> list[SweepRow]:
    """Closed-form edge-deletion sweep over complete graphs.

    For each order n and weight, compares the complete graph against the
    same graph with one edge removed, using closed forms throughout (no
    numeric eigensolve), and reports the one-sided ratio test next to what
    the energy actually did.
    """
    rows = []
    for n in ns:
        if n < 3:
            raise ValueError(f"sweep needs n >= 3, got {n}")
        for w in weights:
            before = complete_graph_spectrum(n, w)
            after = complete_minus_edge_spectrum(n, w)
            e_before = closed_energy(before)
            e_after = complete_minus_edge_energy(n, w)
            rows.append(SweepRow(
                family="complete",
                n=n,
                weight=w.id,
                e_before=e_before,
                e_after=e_after,
                delta=e_after - e_before,
                lambda1_before=before.groups[0].value,
                lambda1_after=after.groups[0].value,
                ratio_test=ratio_test(n, w),
                verdict=energy_verdict(e_before, e_after),
            ))
    return rows


def multipartite_deletion_theorem_check(p: int, t: int) -> bool:
    """Does deleting one cross edge raise the inverse-sum-indeg energy of the
    complete multipartite graph with t equal parts of size p?

    Numeric comparison; holds for t = 3 with p >= 3 (and larger t), fails
    for p = 2, t = 3.
    """
    if t < 3:
        raise ValueError(f"check needs t >= 3 parts, got {t}")
    if p < 2:
        raise ValueError(f"check needs p >= 2, got {p}")
    g = build_family(FamilySpec("regular_multipartite", (p, t)))
    w = get_weight("ISI")
    report = compare_edge_deletion(g, 0, p, w)
    return report.delta_energy > 0


SWEEP_COLUMNS = (
    "family", "n", "weight", "E_before", "E_after", "delta",
    "lambda1_before", "lambda1_after", "ratio_test", "verdict",
)


def sweep_to_csv(rows: Sequence[SweepRow]) -> str:
    """CSV emission with the fixed report schema, full float precision."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for r in rows:
        writer.writerow([
            r.family, r.n, r.weight,
            repr(r.e_before), repr(r.e_after), repr(r.delta),
            repr(r.lambda1_before), repr(r.lambda1_after),
            r.ratio_test, r.verdict,
        ])
    return buf.getvalue()


def report_row(report: EnergyChangeReport, family: str, n: int) -> SweepRow:
    """Flatten an EnergyChangeReport into the sweep row schema."""
    return SweepRow(
        family=family,
        n=n,
        weight=report.weight,
        e_before=report.spectrum_before.energy,
        e_after=report.spectrum_after.energy,
        delta=report.delta_energy,
        lambda1_before=report.spectrum_before.eigenvalues[0][0],
        lambda1_after=report.spectrum_after.eigenvalues[0][0],
        ratio_test=report.ratio_test or "",
        verdict=report.verdict,
    )
