"""(U,N)-implications and the usual battery of implication properties."""

from __future__ import annotations

from typing import List, Optional

import numpy as np

from .errors import InvalidArgument
from .negations import Negation
from .numerics import (
    DEFAULT_SEED,
    Grid,
    PropertyReport,
    Tolerances,
    UnitFunction,
    uniform_grid,
    worst_case,
)
from .uninorms import BinaryOperator

PROPERTIES = ("NP", "EP", "IP", "OP", "CP", "LCP", "RCP")


def un_implication(u: BinaryOperator, n: Negation, name: Optional[str] = None) -> BinaryOperator:
    """I(x,y) = U(N(x), y)."""
    if u.kind not in ("uninorm", "t-conorm", "raw"):
        raise InvalidArgument(f"expected a uninorm or a raw disjunctor, got kind {u.kind!r}")

    def func(x, y):
        return u(n(x), y)

    return BinaryOperator(func, name or f"I[{u.name},{n.name}]", "implication")


def check_implication_axioms(i: BinaryOperator, grid: Optional[Grid] = None,
                             tol: Tolerances = Tolerances()) -> List[PropertyReport]:
    grid = grid or uniform_grid(400)
    p = grid.points
    gx, gy = np.meshgrid(p, p, indexing="ij")
    v = i(gx, gy)

    rise_x = np.maximum(0.0, v[1:, :] - v[:-1, :])
    i1 = worst_case("I1", rise_x, np.column_stack([gx[:-1, :].ravel(), gy[:-1, :].ravel()]), tol.eq_tol,
                    "non-increasing in the first argument")
    drop_y = np.maximum(0.0, v[:, :-1] - v[:, 1:])
    i2 = worst_case("I2", drop_y, np.column_stack([gx[:, :-1].ravel(), gy[:, :-1].ravel()]), tol.eq_tol,
                    "non-decreasing in the second argument")
    corners = np.array([[0.0, 0.0], [1.0, 1.0], [1.0, 0.0]])
    want = np.array([1.0, 1.0, 0.0])
    i3 = worst_case("I3", np.abs(i(corners[:, 0], corners[:, 1]) - want), corners, tol.eq_tol,
                    "I(0,0) = I(1,1) = 1 and I(1,0) = 0")
    return [i1, i2, i3]


def alpha_cut(i: BinaryOperator, alpha: float) -> UnitFunction:
    """x -> I(x, alpha); alpha = 0 gives the natural negation."""
    alpha = float(alpha)
    if not 0.0 <= alpha < 1.0:
        raise InvalidArgument(f"alpha must lie in [0,1[, got {alpha!r}")
    return UnitFunction(i.cut(alpha), f"{i.name}(.,{alpha:g})", direction="decreasing")


def _triples(grid: Grid, n_random: int, seed: int):
    q = grid.points
    a, b, c = (g.ravel() for g in np.meshgrid(q, q, q, indexing="ij"))
    if n_random:
        r = np.random.default_rng(seed).random((3, n_random))
        a, b, c = np.concatenate([a, r[0]]), np.concatenate([b, r[1]]), np.concatenate([c, r[2]])
    return a, b, c


def check_property(i: BinaryOperator, prop: str, grid: Optional[Grid] = None,
                   tol: Tolerances = Tolerances(), n: Optional[Negation] = None,
                   triple_grid: Optional[Grid] = None, n_random: int = 10_000,
                   seed: int = DEFAULT_SEED) -> PropertyReport:
    prop = prop.upper().replace("-", "")
    if prop not in PROPERTIES:
        raise InvalidArgument(f"unknown property {prop!r}")
    if prop in ("CP", "LCP", "RCP") and n is None:
        raise InvalidArgument(f"{prop} needs a negation")
    grid = grid or uniform_grid(400)

    if prop == "EP":
        a, b, c = _triples(triple_grid or uniform_grid(32), n_random, seed)
        res = np.abs(i(a, i(b, c)) - i(b, i(a, c)))
        return worst_case("EP", res, np.column_stack([a, b, c]), tol.eq_tol)

    p = grid.points
    if prop in ("NP", "IP"):
        if prop == "NP":
            res = np.abs(i(np.ones_like(p), p) - p)
        else:
            res = np.abs(i(p, p) - 1.0)
        return worst_case(prop, res, p, tol.eq_tol)

    gx, gy = (g.ravel() for g in np.meshgrid(p, p, indexing="ij"))
    pts = np.column_stack([gx, gy])
    v = i(gx, gy)
    if prop == "OP":
        below = gx <= gy + tol.eq_tol
        res = np.where(below, np.maximum(0.0, 1.0 - v), (v >= 1.0 - tol.eq_tol).astype(float))
        return worst_case("OP", res, pts, tol.eq_tol, "I(x,y) = 1 iff x <= y")
    nx, ny = n(gx), n(gy)
    if prop == "CP":
        res = np.abs(v - i(ny, nx))
    elif prop == "LCP":
        res = np.abs(i(nx, gy) - i(ny, gx))
    else:
        res = np.abs(i(gx, ny) - i(gy, nx))
    return worst_case(prop, res, pts, tol.eq_tol, f"w.r.t. {n.name}")
