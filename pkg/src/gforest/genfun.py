"""The headline generating functions for coloured planar trees and forests.

Four series are built here, each counting objects of type (k, n) by
dimension r in the coefficient [x^n y^k q^r]:

* plabic trees / forests (every internal vertex white or black);
* Grassmannian trees / forests (generic vertices allowed).

Each tree series is x(1 + y + yq C^<-1>) for an explicit rational
function C(x, y, q); each forest series is obtained from the matching
tree series by a second compositional inversion, with an independent
Lagrange-inversion route (`forest_gf_via_lagrange`) kept for
cross-validation.  `verify_algebraic_relation` checks the computed
series against transcribed polynomial relations stored in data/.
"""

from __future__ import annotations

import json
import os
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .ring import ONE, BivarPoly, Q, Y, as_poly
from .series import TruncSeries

DEFAULT_ORDER = 14


class IntegralityViolation(ArithmeticError):
    """A coefficient that must be a (nonnegative) integer is not."""


class GFKind(Enum):
    PLABIC_TREE = "plabic-tree"
    PLABIC_FOREST = "plabic-forest"
    GRASS_TREE = "grass-tree"
    GRASS_FOREST = "grass-forest"

    @property
    def is_tree(self) -> bool:
        return self in (GFKind.PLABIC_TREE, GFKind.GRASS_TREE)

    @property
    def is_forest(self) -> bool:
        return not self.is_tree

    @property
    def is_plabic(self) -> bool:
        return self in (GFKind.PLABIC_TREE, GFKind.PLABIC_FOREST)

    @property
    def tree_kind(self) -> "GFKind":
        return GFKind.PLABIC_TREE if self.is_plabic else GFKind.GRASS_TREE

    @property
    def forest_kind(self) -> "GFKind":
        return GFKind.PLABIC_FOREST if self.is_plabic else GFKind.GRASS_FOREST


def default_order() -> int:
    """Working order, overridable through the GFOREST_ORDER environment variable."""
    return int(os.environ.get("GFOREST_ORDER", DEFAULT_ORDER))


def _poly_series(coeffs: dict, order: int) -> TruncSeries:
    return TruncSeries.from_dict(coeffs, order)


@lru_cache(maxsize=None)
def build_C(kind: GFKind, order: int) -> TruncSeries:
    """The rational function whose compositional inverse drives the tree series.

    plabic:        x (1 - q^2 x^2 y) / ((1+xq)(1+xyq))
    Grassmannian:  x (1 - x(1+y)q^2 - x^2 y q^2 (1+q-q^2) - x^4 y^2 q^5 (1+q))
                   / ((1+xq)(1+xyq)(1-xq^2)(1-xyq^2))
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    kind = kind.tree_kind
    yq = Y * Q
    q2 = Q * Q
    if kind is GFKind.PLABIC_TREE:
        num = _poly_series({1: ONE, 3: -(q2 * Y)}, order)
        den = _poly_series({0: ONE, 1: Q}, order) * _poly_series({0: ONE, 1: yq}, order)
    else:
        num = _poly_series(
            {
                1: ONE,
                2: -((1 + Y) * q2),
                3: -(Y * q2 * (1 + Q - q2)),
                5: -(Y * Y * Q**5 * (1 + Q)),
            },
            order,
        )
        den = (
            _poly_series({0: ONE, 1: Q}, order)
            * _poly_series({0: ONE, 1: yq}, order)
            * _poly_series({0: ONE, 1: -q2}, order)
            * _poly_series({0: ONE, 1: -(Y * q2)}, order)
        )
    return num / den


@lru_cache(maxsize=None)
def build_tree_gf(kind: GFKind, order: int) -> TruncSeries:
    """Tree generating function x(1 + y + yq C^<-1>) to the given order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    kind = kind.tree_kind
    if order == 1:
        return _poly_series({1: 1 + Y}, 1)
    inverse = build_C(kind, order - 1).reversion()
    return (Y * Q * inverse + (1 + Y)).shift_up(1)


@lru_cache(maxsize=None)
def build_forest_gf(kind: GFKind, order: int) -> TruncSeries:
    """Forest generating function, via x G_forest = (x / (1 + G_tree))^<-1>."""
    if order < 1:
        raise ValueError("order must be >= 1")
    tree = build_tree_gf(kind.tree_kind, order)
    recip = TruncSeries.one(order) / (1 + tree)
    return recip.shift_up(1).reversion().shift_down(1)


def series_for(kind: GFKind, order: int) -> TruncSeries:
    return build_tree_gf(kind, order) if kind.is_tree else build_forest_gf(kind, order)


@lru_cache(maxsize=None)
def _tree_power(kind: GFKind, order: int, m: int) -> TruncSeries:
    # (1 + G_tree)^m, built incrementally so successive m share work.
    if m == 0:
        return TruncSeries.one(order)
    base = 1 + build_tree_gf(kind, order)
    if m == 1:
        return base
    return _tree_power(kind, order, m - 1) * base


def forest_gf_via_lagrange(kind: GFKind, n: int, order: int | None = None) -> dict:
    """[x^n] of the forest series by the binomial-power route.

    Uses [x^n] G_forest = (1/(n+1)) [x^n] (1 + G_tree)^(n+1), bypassing the
    second reversion entirely.  Returns {(k, r): count}.
    """
    if n < 1:
        raise ValueError("n must be positive")
    order = max(n, 1) if order is None else order
    if order < n:
        raise ValueError("order too small for the requested coefficient")
    coeff = _tree_power(kind.tree_kind, order, n + 1)[n]
    counts = {}
    for (dy, dq), c in coeff.terms():
        v = Fraction(c, n + 1)
        if v.denominator != 1:
            raise IntegralityViolation(
                f"[x^{n} y^{dy} q^{dq}] division by {n + 1} left {v}"
            )
        counts[(dy, dq)] = v.numerator
    return counts


def extract_counts(series: TruncSeries, n: int) -> dict:
    """{(k, r): count} for [x^n], asserting the counting-series sanity rules:
    integral, nonnegative, and y-degree within [0, n]."""
    counts = {}
    for (dy, dq), c in series[n].terms():
        if isinstance(c, Fraction):
            raise IntegralityViolation(f"[x^{n} y^{dy} q^{dq}] = {c} is not integral")
        if c < 0:
            raise IntegralityViolation(f"[x^{n} y^{dy} q^{dq}] = {c} is negative")
        if dy > n:
            raise IntegralityViolation(f"y-degree {dy} exceeds n = {n}")
        counts[(dy, dq)] = c
    return counts


def coefficient_poly(kind: GFKind, n: int, k: int, order: int | None = None) -> BivarPoly:
    """[x^n y^k] as a polynomial in q, validated as a counting coefficient."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    order = default_order() if order is None else order
    if n > order:
        raise ValueError(f"n = {n} exceeds working order {order}")
    series = series_for(kind, order)
    extract_counts(series, n)
    return series[n].y_coefficient(k)


def euler_characteristic(kind: GFKind, n: int, k: int, order: int | None = None):
    """[x^n y^k] of the forest series at q = -1 (expected value: 1)."""
    if kind.is_tree:
        raise ValueError("Euler specialisation is defined for the forest series")
    if not 2 <= k <= n - 2:
        raise ValueError("need 2 <= k <= n-2")
    order = max(n, 1) if order is None else order
    series = build_forest_gf(kind, order)
    return series[n].eval_q(-1).coefficient(k, 0)


# -- transcribed algebraic relations ------------------------------------------


@lru_cache(maxsize=None)
def _relations() -> dict:
    text = resources.files("gforest.data").joinpath("relations.json").read_text()
    return json.loads(text)


def relation_table(kind: GFKind) -> dict:
    """Transcribed relation for the kind: {'degree': d, 'terms': [[j, dx, dy, dq, num, den], ...]}."""
    return _relations()[kind.value]


def relation_residual(kind: GFKind, series: TruncSeries) -> TruncSeries:
    """Substitute a series into the kind's transcribed polynomial relation."""
    table = relation_table(kind)
    order = series.order
    powers = [TruncSeries.one(order)]
    for _ in range(table["degree"]):
        powers.append(powers[-1] * series)
    residual = TruncSeries.zero(order)
    for j, dx, dy, dq, num, den in table["terms"]:
        coeff = as_poly(Fraction(num, den)).scale(1) * BivarPoly.monomial(dy=dy, dq=dq)
        term = (powers[j] * coeff).shift_up(dx).truncate(order)
        residual = residual + term
    return residual


def verify_algebraic_relation(kind: GFKind, order: int = 12):
    """Check the computed series against its transcribed algebraic relation.

    Returns (ok, report); the report names the first nonzero residual
    coefficient if verification fails.
    """
    if order < 6:
        raise ValueError("order must be >= 6 to be meaningful")
    series = series_for(kind, order)
    residual = relation_residual(kind, series)
    val = residual.valuation()
    if val is None:
        return True, f"{kind.value}: residual is 0 through x^{order}"
    return False, (
        f"{kind.value}: first nonzero residual at x^{val}: "
        f"{residual[val].to_text()}"
    )
