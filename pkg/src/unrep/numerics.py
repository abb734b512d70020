"""Grids, tolerances, a jump detector for monotone functions and float bisection.

Everything here is vectorised over numpy arrays; scalar inputs come back as
plain floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import EvaluationError, InvalidArgument

DEFAULT_SEED = 0x554E494E



@dataclass(frozen=True)
class Tolerances:
    eq_tol: float = 1e-9
    exact_tol: float = 1e-12
    jump_floor: float = 1e-6
    refine_rounds: int = 40
    # a jump must keep this fraction of its half-way size to count as genuine
    persistence: float = 0.9

    def __post_init__(self):
        for name in ("eq_tol", "exact_tol", "jump_floor", "persistence"):
            if not getattr(self, name) > 0:
                raise InvalidArgument(f"{name} must be strictly positive")
        if self.refine_rounds < 1:
            raise InvalidArgument("refine_rounds must be >= 1")
        if self.persistence > 1:
            raise InvalidArgument("persistence must lie in ]0,1]")


@dataclass(frozen=True)
class Grid:
    points: np.ndarray
    spacing_hint: float

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 1 or pts.size < 2:
            raise InvalidArgument("a grid needs at least two points")
        if pts[0] != 0.0 or pts[-1] != 1.0:
            raise InvalidArgument("grid must start at 0 and end at 1")
        if np.any(np.diff(pts) <= 0):
            raise InvalidArgument("grid points must be strictly increasing")
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_points(cls, points: Sequence[float]) -> "Grid":
        pts = np.unique(np.concatenate([[0.0, 1.0], np.asarray(points, float)]))
        pts = pts[(pts >= 0.0) & (pts <= 1.0)]
        return cls(pts, float(np.max(np.diff(pts))))

    @property
    def interior(self) -> np.ndarray:
        return self.points[1:-1]

    @property
    def n(self) -> int:
        return self.points.size - 1

    def refine(self, extra: Sequence[float]) -> "Grid":
        return Grid.from_points(np.concatenate([self.points, np.asarray(extra, float)]))

    def __len__(self):
        return self.points.size


def uniform_grid(n: int) -> Grid:
    """Return the grid {i/n : i = 0..n}."""
    if int(n) != n or n < 2:
        raise InvalidArgument(f"uniform grid needs n >= 2, got {n!r}")
    n = int(n)
    return Grid(np.arange(n + 1) / n, 1.0 / n)


@dataclass(frozen=True)
class UnitFunction:
    """A unary map on [0,1] plus what is known about it analytically."""

    func: Callable[[np.ndarray], np.ndarray]
    name: str = "f"
    direction: Optional[str] = None  # "increasing" | "decreasing" | None
    discontinuities: tuple = ()
    inverse: Optional[Callable[[np.ndarray], np.ndarray]] = None

    def __call__(self, x):
        return evaluate_unary(self.func, x)


def evaluate_unary(func, x):
    arr = np.asarray(x, dtype=float)
    with np.errstate(all="ignore"):
        out = np.asarray(func(arr.ravel()), dtype=float).reshape(arr.shape)
    if out.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class ContinuityVerdict:
    continuous: bool
    witnesses: tuple = field(default_factory=tuple)
    endpoint_low: float = float("nan")
    endpoint_high: float = float("nan")


def _checked(f, x):
    v = np.asarray(f(x), dtype=float)
    bad = ~np.isfinite(v)
    if bad.any():
        where = float(np.atleast_1d(x)[np.argmax(np.atleast_1d(bad))])
        raise EvaluationError(f"non-finite value at x={where!r}", point=where)
    return v


def monotone_continuity_probe(f, grid: Grid, tol: Tolerances = Tolerances()) -> ContinuityVerdict:
    """Decide numerically whether a monotone ``f`` is continuous on [0,1].

    Every grid cell whose end values differ by more than ``jump_floor`` is
    bisected ``refine_rounds`` times, always following the half with the larger
    rise. A genuine jump keeps its size; the rise over a steep but continuous
    stretch shrinks. A cell is reported as a jump when its final rise is above
    ``jump_floor`` and still at least ``persistence`` times the rise seen half
    way through the refinement (this keeps slowly decaying, logarithmic
    moduli of continuity from being mistaken for jumps).
    """
    x = grid.points
    v = _checked(f, x)
    rise = np.abs(np.diff(v))
    cells = np.nonzero(rise > tol.jump_floor)[0]
    witnesses = []
    if cells.size:
        lo, hi = x[cells].copy(), x[cells + 1].copy()
        flo, fhi = v[cells].copy(), v[cells + 1].copy()
        half = max(1, tol.refine_rounds // 2)
        r_half = np.abs(fhi - flo)
        for k in range(tol.refine_rounds):
            m = 0.5 * (lo + hi)
            fm = _checked(f, m)
            left = np.abs(fm - flo) >= np.abs(fhi - fm)
            hi = np.where(left, m, hi)
            fhi = np.where(left, fm, fhi)
            lo = np.where(left, lo, m)
            flo = np.where(left, flo, fm)
            if k + 1 == half:
                r_half = np.abs(fhi - flo)
        r = np.abs(fhi - flo)
        jump = (r > tol.jump_floor) & (r >= tol.persistence * r_half)
        for i in np.nonzero(jump)[0]:
            witnesses.append((float(0.5 * (lo[i] + hi[i])), float(r[i])))
    return ContinuityVerdict(
        continuous=not witnesses,
        witnesses=tuple(witnesses),
        endpoint_low=float(v[0]),
        endpoint_high=float(v[-1]),
    )


def float_bisect(pred, lo, hi):
    """Bisect on the binary64 lattice between ``lo`` and ``hi`` (both >= 0).

    ``pred(values, index)`` must be vectorised, true at ``lo`` and false at
    ``hi``; ``index`` selects the elements being refined. Returns adjacent
    floats ``(lo, hi)`` bracketing the switch. Converges in at most 64 steps
    whatever the magnitude of the answer.
    """
    lo_b = np.array(lo, dtype=float).view(np.int64).copy()
    hi_b = np.array(hi, dtype=float).view(np.int64).copy()
    for _ in range(70):
        active = np.nonzero(hi_b - lo_b > 1)[0]
        if active.size == 0:
            break
        mid_b = lo_b[active] + (hi_b[active] - lo_b[active]) // 2
        p = np.asarray(pred(mid_b.view(np.float64), active), dtype=bool)
        lo_b[active] = np.where(p, mid_b, lo_b[active])
        hi_b[active] = np.where(p, hi_b[active], mid_b)
    return lo_b.view(np.float64), hi_b.view(np.float64)


# largest gap f(lo) - target still read as "f is continuous here"
_ATTAIN_GAP = 1e-9


def sup_invert(f, target, strict: bool = True):
    """Return sup{y in [0,1] : f(y) > target} for a decreasing ``f``.

    With ``strict=False`` the set uses ``>=``. The supremum of the empty set
    is 0. Otherwise the answer is the largest float inside the set, or its
    successor when that successor attains the target exactly and ``f`` does
    not jump between the two (so exact inputs give exact inverses), or when
    that successor is the domain end 1.
    """
    direction = getattr(f, "direction", "decreasing")
    if direction not in (None, "decreasing"):
        raise InvalidArgument(f"sup_invert needs a decreasing function, got {direction!r}")
    t = np.atleast_1d(np.asarray(target, dtype=float))
    scalar = np.ndim(target) == 0

    def inside(y, idx=None):
        fy = np.asarray(evaluate_unary(f, y), dtype=float)
        tt = t if idx is None else t[idx]
        return fy > tt if strict else fy >= tt

    n = t.size
    out = np.zeros(n)
    at0 = inside(np.zeros(n))
    at1 = inside(np.ones(n))
    out[at1] = 1.0
    todo = np.nonzero(at0 & ~at1)[0]
    if todo.size:
        sub_t = t[todo]
        lo, hi = float_bisect(
            lambda y, idx: (evaluate_unary(f, y) > sub_t[idx]) if strict
            else (evaluate_unary(f, y) >= sub_t[idx]),
            np.zeros(todo.size),
            np.ones(todo.size),
        )
        f_lo = np.asarray(evaluate_unary(f, lo), dtype=float)
        f_hi = np.asarray(evaluate_unary(f, hi), dtype=float)
        attained = (f_hi == sub_t) & (f_lo - sub_t <= _ATTAIN_GAP)
        # a set [0, 1[ has supremum 1 even though 1 itself is outside
        attained |= hi == 1.0
        out[todo] = np.where(attained, hi, lo)
    return float(out[0]) if scalar else out.reshape(np.shape(target))


@dataclass(frozen=True)
class PropertyReport:
    property: str
    holds: bool
    worst_residual: float
    witness: tuple = ()
    note: str = ""


def worst_case(prop: str, residual, points, tol: float, note: str = "") -> PropertyReport:
    """Summarise a residual array; ``points[i]`` is the argument behind ``residual[i]``.

    Points are expected in lexicographic order so that the first maximiser is
    also the lexicographically smallest witness.
    """
    res = np.asarray(residual, dtype=float).ravel()
    if res.size == 0:
        return PropertyReport(prop, True, 0.0, (), note)
    res = np.where(np.isnan(res), np.inf, res)
    i = int(np.argmax(res))
    worst = float(res[i])
    pts = np.asarray(points, dtype=float).reshape(res.size, -1)
    return PropertyReport(prop, bool(worst <= tol), worst, tuple(float(v) for v in pts[i]), note)
