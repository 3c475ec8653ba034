"""Catalog of degree-based edge weight functions.

Each weight function phi maps a pair of vertex degrees (x, y) to a positive
real number.  The catalog carries, per function: a float evaluator, an exact
rational evaluator for phi(x, y)^2 (every cataloged function has an exactly
rational square), and a positivity flag.  Rational values of phi itself are
recovered exactly whenever phi(x, y)^2 is a perfect rational square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable


def sqrt_exact(q: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational.

    A reduced fraction a/b has a rational square root iff both a and b are
    perfect squares; tested with math.isqrt, never by float rounding.
    """
    if q < 0:
        raise ValueError(f"sqrt_exact requires a non-negative rational, got {q}")
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


@dataclass(frozen=True)
class WeightFunction:
    """A degree-based edge weight phi(x, y) defined for integer degrees >= 1.

    eval gives the float value; square gives phi(x, y)^2 as an exact rational.
    positive is False only for weights that can vanish on some degree pair
    (the ABC weight is zero at (1, 1) and positive whenever x + y > 2).
    """

    id: str
    label: str
    eval: Callable[[int, int], float] = field(compare=False, repr=False)
    square: Callable[[int, int], Fraction] = field(compare=False, repr=False)
    positive: bool = True

    def rational(self, x: int, y: int) -> Fraction | None:
        """Exact rational value of phi(x, y), or None when it is irrational."""
        _check_degrees(x, y)
        return sqrt_exact(self.square(x, y))

    def __call__(self, x: int, y: int) -> float:
        _check_degrees(x, y)
        return self.eval(x, y)


def _check_degrees(x: int, y: int) -> None:
    if x < 1 or y < 1:
        raise ValueError(f"degrees must be >= 1, got ({x}, {y})")


def _fr(a: int, b: int) -> Fraction:
    return Fraction(a, b)


CATALOG: tuple[WeightFunction, ...] = (
    WeightFunction(
        "ISI", "inverse sum indeg, xy/(x+y)",
        lambda x, y: (x * y) / (x + y),
        lambda x, y: _fr(x * y, x + y) ** 2,
    ),
    WeightFunction(
        "A", "adjacency, 1",
        lambda x, y: 1.0,
        lambda x, y: Fraction(1),
    ),
    WeightFunction(
        "AG", "arithmetic-geometric, (x+y)/(2 sqrt(xy))",
        lambda x, y: (x + y) / (2.0 * math.sqrt(x * y)),
        lambda x, y: _fr((x + y) ** 2, 4 * x * y),
    ),
    WeightFunction(
        "GA", "geometric-arithmetic, 2 sqrt(xy)/(x+y)",
        lambda x, y: 2.0 * math.sqrt(x * y) / (x + y),
        lambda x, y: _fr(4 * x * y, (x + y) ** 2),
    ),
    WeightFunction(
        "M1", "first Zagreb, x+y",
        lambda x, y: float(x + y),
        lambda x, y: Fraction((x + y) ** 2),
    ),
    WeightFunction(
        "ABC", "atom-bond connectivity, sqrt((x+y-2)/(xy))",
        lambda x, y: math.sqrt((x + y - 2) / (x * y)),
        lambda x, y: _fr(x + y - 2, x * y),
        positive=False,  # zero at (1, 1); positive whenever x + y > 2
    ),
    WeightFunction(
        "R", "Randic, 1/sqrt(xy)",
        lambda x, y: 1.0 / math.sqrt(x * y),
        lambda x, y: _fr(1, x * y),
    ),
    WeightFunction(
        "M2", "second Zagreb, xy",
        lambda x, y: float(x * y),
        lambda x, y: Fraction((x * y) ** 2),
    ),
    WeightFunction(
        "S", "Sombor, sqrt(x^2+y^2)",
        lambda x, y: math.hypot(x, y),
        lambda x, y: Fraction(x * x + y * y),
    ),
    WeightFunction(
        "MS", "modified Sombor, 1/sqrt(x^2+y^2)",
        lambda x, y: 1.0 / math.hypot(x, y),
        lambda x, y: _fr(1, x * x + y * y),
    ),
)

_BY_ID = {w.id: w for w in CATALOG}

# Case-insensitive command-line selectors.
SELECTORS = {
    "isi": "ISI",
    "adj": "A",
    "ag": "AG",
    "ga": "GA",
    "m1": "M1",
    "abc": "ABC",
    "randic": "R",
    "m2": "M2",
    "sombor": "S",
    "ms": "MS",
}


def catalog() -> tuple[WeightFunction, ...]:
    """All ten cataloged weight functions, in catalog order."""
    return CATALOG


def get_weight(name: str) -> WeightFunction:
    """Look up a weight function by id (e.g. "ISI") or selector (e.g. "isi").

    Selectors are case-insensitive; unknown names raise ValueError listing
    the valid choices.
    """
    if name in _BY_ID:
        return _BY_ID[name]
    key = name.lower()
    if key in SELECTORS:
        return _BY_ID[SELECTORS[key]]
    valid = ", ".join(sorted(SELECTORS))
    raise ValueError(f"unknown weight {name!r}; valid selectors: {valid}")


def eval_equal_degree(w: WeightFunction, d: int) -> Fraction | float:
    """phi(d, d), exactly rational when possible, float otherwise."""
    exact = w.rational(d, d)
    return exact if exact is not None else w.eval(d, d)
