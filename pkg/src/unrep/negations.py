"""Fuzzy negations and the modified pseudo-inverse."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import InvalidSpec
from .numerics import (
    ContinuityVerdict,
    Grid,
    Tolerances,
    evaluate_unary,
    monotone_continuity_probe,
    sup_invert,
    uniform_grid,
)

# smallest argument fed to a logarithm chain
LOG_FLOOR = 1e-300


@dataclass(frozen=True)
class Negation:
    func: Callable[[np.ndarray], np.ndarray]
    name: str
    claimed_continuous: Optional[bool] = None
    claimed_strict: Optional[bool] = None
    closed_inverse: Optional[Callable[[np.ndarray], np.ndarray]] = None
    declared_discontinuities: tuple = ()

    direction = "decreasing"

    def __call__(self, x):
        return evaluate_unary(self.func, x)


@dataclass(frozen=True)
class NegationSpec:
    family: str
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class NegationClass:
    is_negation: bool
    is_continuous: bool
    is_strict: bool
    is_strong: bool
    worst_residual: float
    involution_residual: float = float("nan")
    continuity: Optional[ContinuityVerdict] = None


def standard() -> Negation:
    f = lambda x: 1.0 - x
    return Negation(f, "standard", True, True, closed_inverse=f)


def sugeno(lam: float) -> Negation:
    lam = float(lam)
    if not lam >= 0:
        raise InvalidSpec(f"sugeno parameter must be >= 0, got {lam!r}")

    def f(x):
        return (1.0 - x) / (1.0 + lam * x)

    # every Sugeno negation is an involution
    return Negation(f, f"sugeno({lam:g})", True, True, closed_inverse=f)


def step(e: float) -> Negation:
    e = float(e)
    if not 0.0 < e < 1.0:
        raise InvalidSpec(f"step value must lie in ]0,1[, got {e!r}")

    def f(x):
        return np.where(x <= 0.0, 1.0, np.where(x >= 1.0, 0.0, e))

    return Negation(f, f"step({e:g})", False, False, declared_discontinuities=(0.0, 1.0))


def _powerlog(x):
    xc = np.clip(x, LOG_FLOOR, 1.0)
    out = np.exp2(1.0 / np.log2(xc))
    return np.where(x <= 0.0, 1.0, np.where(x >= 1.0, 0.0, out))


def powerlog() -> Negation:
    """x -> 2**(1/log2 x); maps 2**(-2**n) to 2**(-2**-n) and is an involution."""
    return Negation(_powerlog, "powerlog", True, True, closed_inverse=_powerlog)


def square_of(n: Negation) -> Negation:
    def f(x):
        return np.asarray(n(x)) ** 2

    inv = None
    if n.closed_inverse is not None:
        base_inv = n.closed_inverse

        def inv(y):
            return base_inv(np.sqrt(y))

    return Negation(
        f,
        f"square_of({n.name})",
        n.claimed_continuous,
        n.claimed_strict,
        closed_inverse=inv,
        declared_discontinuities=n.declared_discontinuities,
    )


def from_cut(op, alpha: float, name: Optional[str] = None) -> Negation:
    alpha = float(alpha)

    def f(x):
        return np.asarray(op(x, np.full_like(x, alpha)), dtype=float)

    label = name or f"{getattr(op, 'name', 'I')}(.,{alpha:g})"
    return Negation(f, label)


def table(points) -> Negation:
    """Piecewise-linear negation through the knots ``[(x0, y0), ...]``."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
        raise InvalidSpec("table needs a list of (x, y) knots")
    xs, ys = pts[:, 0], pts[:, 1]
    if xs[0] != 0.0 or xs[-1] != 1.0 or np.any(np.diff(xs) <= 0):
        raise InvalidSpec("table knots must increase strictly from 0 to 1")
    if ys[0] != 1.0 or ys[-1] != 0.0:
        raise InvalidSpec("table must map 0 to 1 and 1 to 0")
    if np.any(np.diff(ys) > 0):
        raise InvalidSpec("table values must be non-increasing")
    strict = bool(np.all(np.diff(ys) < 0))
    xs.flags.writeable = False
    ys.flags.writeable = False

    def f(x):
        return np.interp(x, xs, ys)

    inv = None
    if strict:
        rx, ry = xs[::-1].copy(), ys[::-1].copy()

        def inv(y):
            return np.interp(y, ry, rx)

    return Negation(f, f"table[{len(xs)}]", True, strict, closed_inverse=inv)


_FAMILIES = {
    "standard": ((), lambda p: standard()),
    "sugeno": (("lambda",), lambda p: sugeno(p["lambda"])),
    "step": (("e",), lambda p: step(p["e"])),
    "powerlog": ((), lambda p: powerlog()),
    "square_of": (("base",), lambda p: square_of(p["base"])),
    "from_cut": (("op", "alpha"), lambda p: from_cut(p["op"], p["alpha"])),
    "table": (("points",), lambda p: table(p["points"])),
}


def build_negation(spec: NegationSpec) -> Negation:
    try:
        required, make = _FAMILIES[spec.family]
    except KeyError:
        raise InvalidSpec(f"unknown negation family {spec.family!r}") from None
    missing = [k for k in required if k not in spec.params]
    if missing:
        raise InvalidSpec(f"{spec.family} needs parameter(s) {', '.join(missing)}")
    extra = set(spec.params) - set(required)
    if extra:
        raise InvalidSpec(f"{spec.family} does not take {', '.join(sorted(extra))}")
    base = spec.params.get("base")
    if isinstance(base, NegationSpec):
        spec = NegationSpec(spec.family, {**spec.params, "base": build_negation(base)})
    return make(spec.params)


def classify_negation(n: Negation, grid: Optional[Grid] = None, tol: Tolerances = Tolerances()) -> NegationClass:
    grid = grid or uniform_grid(400)
    x = grid.points
    v = np.asarray(n(x), dtype=float)
    boundary = max(abs(v[0] - 1.0), abs(v[-1]))
    rise = np.diff(v)
    mono = float(max(0.0, rise.max()))
    is_negation = bool(boundary <= tol.eq_tol and mono <= tol.eq_tol)
    verdict = monotone_continuity_probe(n, grid, tol)
    is_continuous = verdict.continuous
    # strictness is judged relative to the values: a negation with a
    # super-exponential tail has tiny but distinct values near 1
    scale = np.maximum(np.abs(v[:-1]), np.abs(v[1:]))
    distinct = -rise > tol.eq_tol * scale
    is_strict = bool(is_negation and is_continuous and np.all(distinct))
    involution = float(np.max(np.abs(np.asarray(n(v)) - x)))
    is_strong = bool(is_strict and involution <= tol.eq_tol)
    return NegationClass(
        is_negation=is_negation,
        is_continuous=is_continuous,
        is_strict=is_strict,
        is_strong=is_strong,
        worst_residual=float(max(boundary, mono)),
        involution_residual=involution,
        continuity=verdict,
    )


def modified_pseudo_inverse(n: Negation, use_closed_form: bool = True) -> Negation:
    """R_N(0) = 1 and R_N(x) = sup{y : N(y) > x} elsewhere."""
    closed = n.closed_inverse if use_closed_form else None

    def r(x):
        if closed is not None:
            body = np.asarray(closed(x), dtype=float)
        else:
            body = sup_invert(n, x)
        return np.where(x <= 0.0, 1.0, body)

    strict = bool(n.claimed_continuous) or None
    return Negation(
        r,
        f"R[{n.name}]",
        claimed_continuous=None,
        claimed_strict=strict,
        closed_inverse=n.func if n.claimed_continuous and use_closed_form else None,
    )


@dataclass(frozen=True)
class PseudoInverseLaws:
    inverse_of_inverse: float
    right_inverse: float
    left_inverse: float
    points_in_range: int

    def holds(self, tol: float) -> bool:
        return max(self.inverse_of_inverse, self.right_inverse, self.left_inverse) <= tol


def pseudo_inverse_laws(n: Negation, grid: Optional[Grid] = None, tol: Tolerances = Tolerances(),
                        use_closed_form: bool = False) -> PseudoInverseLaws:
    """Residuals of R_{R_N} = N, N o R_N = id and R_N o N = id on Ran R_N."""
    grid = grid or uniform_grid(400)
    x = grid.points
    r = modified_pseudo_inverse(n, use_closed_form)
    rr = modified_pseudo_inverse(r, use_closed_form)
    nx = np.asarray(n(x))
    i = float(np.max(np.abs(rr(x) - nx)))
    ii = float(np.max(np.abs(n(r(x)) - x)))
    back = np.asarray(r(nx))
    in_range = np.abs(np.asarray(n(back)) - nx) <= tol.eq_tol
    iii = float(np.max(np.abs(back - x)[in_range], initial=0.0))
    return PseudoInverseLaws(i, ii, iii, int(in_range.sum()))
