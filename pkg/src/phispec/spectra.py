"""Spectra, grouping, energies, and integrality verdicts.

The numeric eigensolver here is LAPACK's symmetric driver via
numpy.linalg.eigvalsh.  The exact-oracle module keeps its own independent
Jacobi solver for cross-checking; neither calls the other.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import NumericError

DEFAULT_GROUPING_TOL = 1e-7
DEFAULT_INTEGRALITY_TOL = 1e-6
_ZERO_SNAP = 1e-12


def eigenvalues_sym(m: np.ndarray) -> list[float]:
    """Eigenvalues of a symmetric matrix, descending.

    Raises ValueError for non-square or asymmetric input and NumericError for
    non-finite entries.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise NumericError("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    vals = np.linalg.eigvalsh(a)
    return [float(v) for v in vals[::-1]]


@dataclass(frozen=True)
class Spectrum:
    """Grouped spectrum: (value, multiplicity) pairs, strictly decreasing."""

    eigenvalues: tuple[tuple[float, int], ...]
    n: int
    energy: float
    spectral_radius: float
    trace: float


def group(values: Sequence[float], grouping_tol: float = DEFAULT_GROUPING_TOL) -> Spectrum:
    """Collapse a descending list of floats into a grouped Spectrum.

    Adjacent values within grouping_tol * max(1, |a|, |b|) of each other are
    merged into one group whose value is the group mean; this soaks up solver
    noise without merging genuinely distinct roots (which sit far apart for
    the graphs under study).  Group means within 1e-12 * max(1, max|value|)
    of zero are snapped to exactly 0.0 so structural zeros print cleanly.
    """
    vals = [float(v) for v in values]
    if not vals:
        raise ValueError("cannot group an empty value list")
    if grouping_tol < 0:
        raise ValueError(f"grouping tolerance must be >= 0, got {grouping_tol}")
    for a, b in zip(vals, vals[1:]):
        if b > a:
            raise ValueError("values must be sorted in descending order")

    groups: list[list[float]] = [[vals[0]]]
    for v in vals[1:]:
        prev = groups[-1][-1]
        if prev - v <= grouping_tol * max(1.0, abs(prev), abs(v)):
            groups[-1].append(v)
        else:
            groups.append([v])

    scale = max(1.0, max(abs(v) for v in vals))
    pairs: list[tuple[float, int]] = []
    for grp in groups:
        mean = sum(grp) / len(grp)
        if abs(mean) <= _ZERO_SNAP * scale:
            mean = 0.0
        pairs.append((mean, len(grp)))

    n = len(vals)
    energy = sum(abs(v) * m for v, m in pairs)
    radius = max(abs(pairs[0][0]), abs(pairs[-1][0]))
    trace = sum(v * m for v, m in pairs)
    return Spectrum(tuple(pairs), n, energy, radius, trace)


def spectrum_of(m: np.ndarray, grouping_tol: float = DEFAULT_GROUPING_TOL) -> Spectrum:
    """Grouped spectrum of a symmetric matrix."""
    return group(eigenvalues_sym(m), grouping_tol)


def energy(s: Spectrum) -> float:
    """Graph energy: sum of |eigenvalue| over the grouped spectrum."""
    return s.energy


def expand(s: Spectrum) -> list[float]:
    """Multiplicity-expanded eigenvalue list, descending."""
    out: list[float] = []
    for v, m in s.eigenvalues:
        out.extend([v] * m)
    return out


def spectrum_to_json(s: Spectrum) -> str:
    """Serialize a Spectrum to the interchange JSON shape."""
    payload = {
        "eigenvalues": [
            {"value": v, "multiplicity": m} for v, m in s.eigenvalues
        ],
        "energy": s.energy,
        "spectral_radius": s.spectral_radius,
    }
    return json.dumps(payload, indent=2)


@dataclass(frozen=True)
class IntegralityVerdict:
    """Whether every eigenvalue is an integer.

    method is "exact" when decided in exact arithmetic, "numeric-tol" when
    decided by comparing floats to the nearest integer within a tolerance.
    witness is the offending eigenvalue (farthest from an integer) when the
    verdict is negative.
    """

    integral: bool
    method: str
    witness: float | None = None


def check_integrality(
    s: Spectrum,
    tol: float = DEFAULT_INTEGRALITY_TOL,
    exact_values: Sequence[Fraction] | None = None,
) -> IntegralityVerdict:
    """Integrality verdict for a grouped spectrum.

    With exact_values (one rational per group, aligned with s.eigenvalues),
    the verdict is exact: integral iff every value has denominator 1.  The
    numeric path compares each group value to the nearest integer within tol
    and warns that such verdicts are heuristic.
    """
    if exact_values is not None:
        if len(exact_values) != len(s.eigenvalues):
            raise ValueError(
                f"got {len(exact_values)} exact values for {len(s.eigenvalues)} groups")
        worst: Fraction | None = None
        for q in exact_values:
            if q.denominator != 1:
                if worst is None or _int_distance(q) > _int_distance(worst):
                    worst = q
        if worst is None:
            return IntegralityVerdict(True, "exact")
        return IntegralityVerdict(False, "exact", witness=float(worst))

    warnings.warn(
        "numeric integrality verdicts are heuristic; values within "
        f"{tol:g} of an integer count as integers",
        stacklevel=2,
    )
    worst_val: float | None = None
    worst_dist = 0.0
    for v, _ in s.eigenvalues:
        dist = abs(v - round(v))
        if dist > tol and dist > worst_dist:
            worst_val = v
            worst_dist = dist
    if worst_val is None:
        return IntegralityVerdict(True, "numeric-tol")
    return IntegralityVerdict(False, "numeric-tol", witness=worst_val)


def _int_distance(q: Fraction) -> Fraction:
    nearest = Fraction(round(q))
    return abs(q - nearest)
