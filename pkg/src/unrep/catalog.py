"""Named regression instances with their expected relations.

Every instance holds operators produced by the builders next to reference
evaluators written out as closed forms, so each equality relation compares
two independent derivations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from . import negations as neg
from .errors import NoInverseError, NotFound, PreconditionViolation
from .implications import alpha_cut, check_implication_axioms, check_property, un_implication
from .numerics import Grid, Tolerances, UnitFunction, uniform_grid
from .representations import (
    coincidence_region_check,
    operators_equal,
    scan_cuts,
    uniqueness_verdict,
)
from .uninorms import (
    BinaryOperator,
    FBandSpec,
    band_ordinal_sum,
    band_rescale,
    conjugate_shift,
    drastic_band_uninorm,
    eqUf_uninorm,
    logit_generator,
    min_base_band,
    power_band_uninorm,
    power_sequence,
    propF_uninorm,
    quadratic_band_map,
    representable_uninorm,
    square_map,
    u_point,
)

INSTANCE_NAMES = ("example1", "step-negation", "u3u4", "unique-rep", "nonc-power", "osum-nonc", "equf")

RELATION_KINDS = (
    "implication-equality",
    "operator-equality",
    "neutral-element",
    "cut-valid",
    "cut-invalid",
    "uniqueness",
    "coincidence",
    "power-sequence",
    "point-values",
    "no-fixed-point",
)


@dataclass(frozen=True)
class Relation:
    kind: str
    params: dict
    tolerance: float
    label: str = ""


@dataclass(frozen=True)
class CatalogInstance:
    name: str
    description: str
    operators: Dict[str, object]
    references: Dict[str, object]
    expected_relations: Tuple[Relation, ...]
    # (implication, uninorm, negation) names of the builder representation
    representation: Tuple[str, str, str]
    expect_round_trip: bool = True

    def resolve(self, ref: str):
        if ref in self.operators:
            return self.operators[ref]
        if ref in self.references:
            return self.references[ref]
        raise NotFound(f"{self.name} has no operator {ref!r}")

    @property
    def uninorms(self) -> Dict[str, BinaryOperator]:
        return {k: v for k, v in self.operators.items()
                if isinstance(v, BinaryOperator) and v.kind == "uninorm"}

    @property
    def implications(self) -> Dict[str, BinaryOperator]:
        return {k: v for k, v in self.operators.items()
                if isinstance(v, BinaryOperator) and v.kind == "implication"}


@dataclass(frozen=True)
class RelationResult:
    kind: str
    label: str
    residual: float
    tolerance: float
    passed: bool
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class InstanceReport:
    name: str
    passed: bool
    relations: Tuple[RelationResult, ...]

    @property
    def max_residual(self) -> float:
        vals = [r.residual for r in self.relations if np.isfinite(r.residual)]
        return max(vals, default=0.0)


# closed-form references ------------------------------------------------------------

def _corners(x, y, value, out):
    c = ((x <= 0) & (y >= 1)) | ((x >= 1) & (y <= 0))
    return np.where(c, value, out)


def ref_ex1_uninorm(k: float) -> BinaryOperator:
    """k xy / (k xy + (1-x)(1-y)); neutral 1/(1+k)."""
    def func(x, y):
        return _corners(x, y, 1.0, k * x * y / (k * x * y + (1 - x) * (1 - y)))

    return BinaryOperator(func, f"ref_ex1(k={k:g})", "uninorm", 1.0 / (1.0 + k), True)


def _ref_ex1_implication(x, y):
    out = (1 - x) * y / ((1 - x) * y + x * (1 - y))
    return np.where(((x <= 0) & (y <= 0)) | ((x >= 1) & (y >= 1)), 1.0, out)


def _ref_step_implication(x, y):
    return np.where((x <= 0) | (y >= 1), 1.0, np.where(x >= 1, 0.0, y))


def _ref_u3(x, y):
    band = (x > 0.25) & (x < 0.75) & (y > 0.25) & (y < 0.75)
    p = (x - 0.25) * (y - 0.25)
    q = (0.75 - x) * (0.75 - y)
    inner = 0.25 + 0.5 * p / (p + q)
    outer = np.where(np.maximum(x, y) >= 0.75, np.maximum(x, y), np.minimum(x, y))
    return np.where(band, inner, outer)


def _ref_u4(x, y):
    band = (x > 0.25) & (x < 0.75) & (y > 0.25) & (y < 0.75)
    p = (x - 0.25) * (y - 0.25)
    q = (0.75 - x) * (0.75 - y)
    inner = 0.25 + 3 * p / (6 * p + 2 * q)
    outer = np.where(np.maximum(x, y) >= 0.75, np.maximum(x, y), np.minimum(x, y))
    return np.where(band, inner, outer)


def _ref_u3_implication(x, y):
    band = (x > 0.25) & (x < 0.75) & (y > 0.25) & (y < 0.75)
    p = (0.75 - x) * (y - 0.25)
    q = (x - 0.25) * (0.75 - y)
    inner = 0.25 + p / (2 * p + 2 * q)
    nx = 1 - x
    outer = np.where(np.maximum(nx, y) >= 0.75, np.maximum(nx, y), np.minimum(nx, y))
    return np.where(band, inner, outer)


def _ref_u3_cut(x):
    band = (x > 0.25) & (x < 0.75)
    return np.where(band, 3.0 / (16.0 * np.where(band, x, 1.0)), 1.0 - x)


# instances ----------------------------------------------------------------------

def _example1() -> CatalogInstance:
    u1 = representable_uninorm(logit_generator(0.5), name="U1")
    u2 = representable_uninorm(logit_generator(0.25), name="U2")
    n1, n2 = neg.standard(), neg.sugeno(2.0)
    i1 = un_implication(u1, n1, "I1")
    i2 = un_implication(u2, n2, "I2")
    refs = {
        "ref_U1": ref_ex1_uninorm(1.0),
        "ref_U2": ref_ex1_uninorm(3.0),
        "ref_I": BinaryOperator(_ref_ex1_implication, "ref_I", "implication"),
    }
    rel = (
        Relation("implication-equality", {"a": "I1", "b": "I2", "exclude": ((0.0, 0.0), (1.0, 1.0))}, 1e-12,
                 "U1(N1(x),y) = U2(N2(x),y)"),
        Relation("operator-equality", {"a": "I1", "b": "ref_I"}, 1e-12, "I1 closed form"),
        Relation("operator-equality", {"a": "U1", "b": "ref_U1"}, 1e-12, "U1 closed form"),
        Relation("operator-equality", {"a": "U2", "b": "ref_U2"}, 1e-12, "U2 closed form"),
        Relation("neutral-element", {"op": "U1", "e": 0.5}, 1e-12, "U1 neutral 1/2"),
        Relation("neutral-element", {"op": "U2", "e": 0.25}, 1e-12, "U2 neutral 1/4"),
        Relation("cut-valid", {"op": "I1", "role": "implication-cut", "alpha": 0.5, "equals": "N1"}, 1e-12,
                 "I1(.,1/2) = N1"),
        Relation("cut-valid", {"op": "I1", "role": "implication-cut", "alpha": 0.25, "equals": "N2"}, 1e-12,
                 "I1(.,1/4) = N2"),
        Relation("uniqueness", {"op": "U1", "unique": False, "min_witnesses": 98}, 0.0, "U1 not unique"),
        Relation("point-values", {"points": (("I1", 0.25, 0.5, 0.75), ("U1", 0.25, 0.25, 0.1),
                                             ("U2", 0.5, 0.5, 0.75), ("N2", 0.5, None, 0.25))},
                 1e-12, "sample values"),
    )
    ops = {"U1": u1, "U2": u2, "N1": n1, "N2": n2, "I1": i1, "I2": i2}
    return CatalogInstance("example1", "two representable uninorms with standard and Sugeno negations",
                           ops, refs, rel, ("I1", "U1", "N1"))


def _step_negation() -> CatalogInstance:
    u1 = representable_uninorm(logit_generator(0.5), name="U1")
    u2 = representable_uninorm(logit_generator(0.25), name="U2")
    n1, n2 = neg.step(0.5), neg.step(0.25)
    i1 = un_implication(u1, n1, "I1")
    i2 = un_implication(u2, n2, "I2")
    refs = {"ref_I": BinaryOperator(_ref_step_implication, "ref_I", "implication")}
    alphas = tuple([0.0] + list(np.arange(1, 100) / 100))
    rel = (
        Relation("implication-equality", {"a": "I1", "b": "I2"}, 1e-12, "U1(N1(x),y) = U2(N2(x),y)"),
        Relation("operator-equality", {"a": "I1", "b": "ref_I"}, 1e-12, "three-branch closed form"),
        Relation("neutral-element", {"op": "U1", "e": 0.5}, 1e-12, "U1 neutral 1/2"),
        Relation("neutral-element", {"op": "U2", "e": 0.25}, 1e-12, "U2 neutral 1/4"),
        Relation("cut-invalid", {"op": "I1", "role": "implication-cut", "alphas": alphas}, 0.0,
                 "no cut is a continuous negation"),
        Relation("point-values", {"points": (("I1", 1.0, 0.3, 0.0), ("I1", 0.4, 0.3, 0.3),
                                             ("I1", 0.0, 0.3, 1.0))}, 1e-12, "sample values"),
    )
    ops = {"U1": u1, "U2": u2, "N1": n1, "N2": n2, "I1": i1, "I2": i2}
    return CatalogInstance("step-negation", "representable uninorms paired with step negations",
                           ops, refs, rel, ("I1", "U1", "N1"), expect_round_trip=False)


def _u3u4() -> CatalogInstance:
    u3 = band_ordinal_sum(band_rescale(representable_uninorm(logit_generator(0.5)), 0.25, 0.75), name="U3")
    u4 = band_ordinal_sum(band_rescale(representable_uninorm(logit_generator(0.25)), 0.25, 0.75), name="U4")
    n1 = neg.standard()
    i3 = un_implication(u3, n1, "I3")
    n2 = neg.from_cut(i3, 0.375, name="N2")
    i4 = un_implication(u4, n2, "I4")
    refs = {
        "ref_U3": BinaryOperator(_ref_u3, "ref_U3", "uninorm", 0.5, True),
        "ref_U4": BinaryOperator(_ref_u4, "ref_U4", "uninorm", 0.375, True),
        "ref_I": BinaryOperator(_ref_u3_implication, "ref_I", "implication"),
        "ref_N2": neg.Negation(_ref_u3_cut, "ref_N2", True, True),
    }
    rel = (
        Relation("implication-equality", {"a": "I3", "b": "I4"}, 1e-12, "U3(N1(x),y) = U4(N2(x),y)"),
        Relation("operator-equality", {"a": "U3", "b": "ref_U3"}, 1e-12, "U3 closed form"),
        Relation("operator-equality", {"a": "U4", "b": "ref_U4"}, 1e-12, "U4 closed form"),
        Relation("operator-equality", {"a": "I3", "b": "ref_I"}, 1e-12, "implication closed form"),
        Relation("neutral-element", {"op": "U3", "e": 0.5}, 1e-12, "U3 neutral 1/2"),
        Relation("neutral-element", {"op": "U4", "e": 0.375}, 1e-12, "U4 neutral 3/8"),
        Relation("cut-valid", {"op": "I3", "role": "implication-cut", "alpha": 0.375, "equals": "ref_N2"}, 1e-12,
                 "I(.,3/8) = 3/(16x) on the band"),
        Relation("coincidence", {"a_op": "U3", "b_op": "U4", "a": 0.25, "d": 0.75,
                                 "witness": (0.5, 0.5), "gap": 0.125}, 1e-12,
                 "U3 = U4 off the band, differ inside"),
        Relation("point-values", {"points": (("U3", 0.5, 0.5, 0.5), ("U4", 0.5, 0.5, 0.625),
                                             ("U3", 0.1, 0.9, 0.9), ("U3", 0.1, 0.5, 0.1),
                                             ("U3", 0.5, 0.375, 0.375))}, 1e-12, "sample values"),
    )
    ops = {"U3": u3, "U4": u4, "N1": n1, "N2": n2, "I3": i3, "I4": i4}
    return CatalogInstance("u3u4", "ordinal sums differing only on the inner representable band",
                           ops, refs, rel, ("I3", "U3", "N1"))


def _unique_rep() -> CatalogInstance:
    u = drastic_band_uninorm(0.5)
    u = BinaryOperator(u.func, "U", u.kind, u.neutral, u.disjunctive, u.note, special_points=u.special_points)
    n = neg.standard()
    i = un_implication(u, n, "I")
    rel = (
        Relation("uniqueness", {"op": "U", "unique": True}, 0.0, "unique representation"),
        Relation("neutral-element", {"op": "U", "e": 0.5}, 0.0, "neutral 1/2"),
        Relation("cut-valid", {"op": "U", "role": "uninorm-cut", "alpha": 0.5}, 0.0, "the cut at e is valid"),
        Relation("point-values", {"points": (("U", 0.2, 0.3, 0.0), ("U", 0.7, 0.8, 0.8),
                                             ("U", 0.3, 0.7, 0.3), ("U", 0.0, 1.0, 1.0))}, 0.0,
                 "sample values"),
    )
    return CatalogInstance("unique-rep", "drastic product below e, maximum above",
                           {"U": u, "N": n, "I": i}, {}, rel, ("I", "U", "N"))


def _nonc_power() -> CatalogInstance:
    u1 = power_band_uninorm()
    u1 = BinaryOperator(u1.func, "U1", u1.kind, u1.neutral, u1.disjunctive, u1.note,
                        special_points=u1.special_points)
    n1 = neg.powerlog()
    u2 = conjugate_shift(u1, 2.0 ** -0.5, 0.25, name="U2")
    n2 = neg.square_of(n1)
    i1 = un_implication(u1, n1, "I1")
    i2 = un_implication(u2, n2, "I2")
    sq = square_map()
    ref_u1 = propF_uninorm(FBandSpec(sq, min_base_band(sq, 0.5), 0.5), name="ref_U1")
    ns = np.arange(-3, 4)
    rel = (
        Relation("implication-equality", {"a": "I1", "b": "I2", "interior": True}, 1e-9,
                 "U1(N1(x),y) = U2(N2(x),y)"),
        Relation("operator-equality", {"a": "U1", "b": "ref_U1", "interior": True}, 1e-12,
                 "closed form vs band construction"),
        Relation("neutral-element", {"op": "U1", "e": 0.5}, 1e-12, "U1 neutral 1/2"),
        Relation("neutral-element", {"op": "U2", "e": 0.25}, 1e-12, "U2 neutral 1/4"),
        Relation("cut-valid", {"op": "I1", "role": "implication-cut", "alpha": 0.25, "equals": "N2"}, 1e-12,
                 "I1(., 1/4) = N1**2"),
        Relation("power-sequence", {"op": "U1", "x": 0.25, "K": 5,
                                    "forward": tuple(float(u_point(k)) for k in range(1, 6)),
                                    "backward": tuple(float(u_point(-k)) for k in range(1, 6))}, 1e-12,
                 "u^(n) = 2**(-2**n)"),
        Relation("point-values", {"points": tuple(("N1", float(u_point(k)), None, float(u_point(-k)))
                                                  for k in ns)}, 1e-12, "N1(u^(n)) = u^(-n)"),
    )
    ops = {"U1": u1, "U2": u2, "N1": n1, "N2": n2, "I1": i1, "I2": i2}
    return CatalogInstance("nonc-power", "power-band uninorm with a non-continuous underlying t-norm",
                           ops, {"ref_U1": ref_u1}, rel, ("I1", "U1", "N1"))


def _osum_nonc() -> CatalogInstance:
    u = band_ordinal_sum(band_rescale(power_band_uninorm(), 0.25, 0.75), "prod_dualprod", name="U")
    n = neg.standard()
    i = un_implication(u, n, "I")
    rel = (
        Relation("neutral-element", {"op": "U", "e": 0.5}, 1e-12, "neutral 1/2"),
        Relation("uniqueness", {"op": "U", "unique": False, "contains": (0.375,)}, 0.0,
                 "infinitely many valid cuts"),
        Relation("cut-valid", {"op": "U", "role": "uninorm-cut", "alpha": 0.375}, 0.0, "cut at 3/8"),
        Relation("point-values", {"points": (("U", 0.1, 0.2, 0.02), ("U", 0.8, 0.9, 0.98),
                                             ("U", 0.1, 0.5, 0.1), ("U", 0.1, 0.9, 0.9),
                                             ("U", 0.375, 0.375, 0.28125))}, 1e-12, "sample values"),
    )
    return CatalogInstance("osum-nonc", "ordinal sum of product, dual product and a banded power uninorm",
                           {"U": u, "N": n, "I": i}, {}, rel, ("I", "U", "N"))


def _equf() -> CatalogInstance:
    f = quadratic_band_map()
    inner = band_rescale(power_band_uninorm(), 0.25, 0.75)
    u = eqUf_uninorm(f, inner, 0.25, 0.75, 0.5, name="U")
    n = neg.standard()
    i = un_implication(u, n, "I")
    f_unit = UnitFunction(f.forward, "f", "increasing")
    rel = (
        Relation("neutral-element", {"op": "U", "e": 0.5}, 1e-12, "neutral 1/2"),
        Relation("cut-valid", {"op": "U", "role": "uninorm-cut", "alpha": 0.375, "equals": "f"}, 1e-12,
                 "cut at 3/8 equals f"),
        Relation("cut-valid", {"op": "U", "role": "uninorm-cut", "alpha": 0.5}, 0.0, "cut at 1/2"),
        Relation("uniqueness", {"op": "U", "unique": False, "contains": (0.375,)}, 0.0, "not unique"),
        Relation("no-fixed-point", {"op": "U", "f": "f", "a": 0.25, "d": 0.75, "margin": 1e-6, "pad": 0.01}, 0.0,
                 "f has no fixed point inside the band"),
        Relation("point-values", {"points": (("U", 0.1, 0.9, 0.75), ("U", 0.1, 0.2, 0.0),
                                             ("U", 0.9, 0.375, 0.84), ("U", 0.9, 0.5, 0.9))}, 1e-12,
                 "sample values"),
    )
    return CatalogInstance("equf", "uninorm with many continuous cuts that is not a band ordinal sum",
                           {"U": u, "N": n, "I": i}, {"f": f_unit}, rel, ("I", "U", "N"))


_BUILDERS: Dict[str, Callable[[], CatalogInstance]] = {
    "example1": _example1,
    "step-negation": _step_negation,
    "u3u4": _u3u4,
    "unique-rep": _unique_rep,
    "nonc-power": _nonc_power,
    "osum-nonc": _osum_nonc,
    "equf": _equf,
}


def catalog_instance(name: str) -> CatalogInstance:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise NotFound(f"unknown catalog instance {name!r}; choose from {', '.join(INSTANCE_NAMES)}") from None


def resolve_ref(ref: str):
    """Look up ``catalog:<instance>/<operator>``."""
    if not ref.startswith("catalog:") or "/" not in ref:
        raise NotFound(f"malformed catalog reference {ref!r}")
    inst, op = ref[len("catalog:"):].split("/", 1)
    return catalog_instance(inst).resolve(op)


# relation checks ----------------------------------------------------------------

def _eval_point(obj, x, y):
    if y is None:
        return float(obj(x))
    return float(obj(x, y))


def _check(inst: CatalogInstance, rel: Relation, grid: Grid, tol: Tolerances) -> RelationResult:
    p, t = rel.params, rel.tolerance
    kind = rel.kind

    if kind in ("implication-equality", "operator-equality"):
        rec = operators_equal(inst.resolve(p["a"]), inst.resolve(p["b"]), grid, tol,
                              exclusions=p.get("exclude", ()), interior=p.get("interior", False), threshold=t)
        return RelationResult(kind, rel.label, rec.residual, t, rec.passed,
                              {"witness": rec.witness, "compared": rec.compared})

    if kind == "neutral-element":
        op = inst.resolve(p["op"])
        x = grid.points
        e = np.full_like(x, p["e"])
        res = float(np.max(np.maximum(np.abs(op(x, e) - x), np.abs(op(e, x) - x))))
        return RelationResult(kind, rel.label, res, t, res <= t, {"e": p["e"]})

    if kind == "cut-valid":
        op = inst.resolve(p["op"])
        (rep,) = scan_cuts(op, p["role"], [p["alpha"]], grid, tol)
        residual = 0.0
        detail = {"alpha": rep.alpha, "monotone": rep.monotone_ok, "continuous": rep.continuity.continuous,
                  "f0": rep.endpoint_low, "f1": rep.endpoint_high}
        if "equals" in p:
            ref = inst.resolve(p["equals"])
            cut = op.cut(p["alpha"])
            residual = float(np.max(np.abs(np.asarray(cut(grid.points)) - np.asarray(ref(grid.points)))))
            detail["equals"] = p["equals"]
        return RelationResult(kind, rel.label, residual, t, bool(rep.valid and residual <= t), detail)

    if kind == "cut-invalid":
        reps = scan_cuts(inst.resolve(p["op"]), p["role"], p["alphas"], grid, tol)
        valid = [r.alpha for r in reps if r.valid]
        return RelationResult(kind, rel.label, float(bool(valid)), t, not valid,
                              {"scanned": len(reps), "valid_alphas": valid})

    if kind == "uniqueness":
        v = uniqueness_verdict(inst.resolve(p["op"]), grid, tol=tol)
        ok = v.unique == p["unique"]
        if "min_witnesses" in p:
            ok &= len(v.witnesses) >= p["min_witnesses"]
        for a in p.get("contains", ()):
            ok &= any(abs(w - a) <= 1e-15 for w in v.witnesses)
        return RelationResult(kind, rel.label, 0.0 if ok else 1.0, t, bool(ok),
                              {"unique": v.unique, "witnesses": len(v.witnesses), "scanned": v.scanned,
                               "special_witnesses": [w for w in v.witnesses if w * 100 % 1 != 0]})

    if kind == "coincidence":
        rep = coincidence_region_check(inst.resolve(p["a_op"]), inst.resolve(p["b_op"]), p["a"], p["d"],
                                       grid, tol)
        wx, wy = p["witness"]
        gap = abs(inst.resolve(p["a_op"])(wx, wy) - inst.resolve(p["b_op"])(wx, wy))
        ok = rep.outer_residual <= t and rep.disagree_inside and abs(gap - p["gap"]) <= t
        return RelationResult(kind, rel.label, rep.outer_residual, t, bool(ok),
                              {"inner_residual": rep.inner_residual, "inner_witness": rep.inner_witness,
                               "gap_at_witness": gap})

    if kind == "power-sequence":
        try:
            seq = power_sequence(inst.resolve(p["op"]), p["x"], p["K"], tol)
        except NoInverseError as exc:
            return RelationResult(kind, rel.label, float("inf"), t, False, {"error": str(exc)})
        res = max(float(np.max(np.abs(np.array(seq.forward) - np.array(p["forward"])))),
                  float(np.max(np.abs(np.array(seq.backward) - np.array(p["backward"])))))
        return RelationResult(kind, rel.label, res, t, res <= t,
                              {"pair_residual": seq.pair_residual, "converged": seq.converged})

    if kind == "point-values":
        res, worst = 0.0, None
        for name, x, y, want in p["points"]:
            got = _eval_point(inst.resolve(name), x, y)
            if abs(got - want) >= res:
                res, worst = abs(got - want), (name, x, y, want, got)
        return RelationResult(kind, rel.label, res, t, res <= t, {"worst": worst})

    if kind == "no-fixed-point":
        f = inst.resolve(p["f"])
        u = inst.resolve(p["op"])
        a, d = p["a"], p["d"]
        s = grid.points[(grid.points > a + p["pad"]) & (grid.points < d - p["pad"])]
        margin = float(np.min(np.abs(np.asarray(f(s)) - s)))
        fixed = f(a) == a and f(d) == d
        corner = u(a, d)
        ok = margin > p["margin"] and fixed and corner in (a, d)
        return RelationResult(kind, rel.label, margin, t, bool(ok),
                              {"f(a)": f(a), "f(d)": f(d), "U(a,d)": corner, "min_gap": margin})

    raise NotFound(f"unknown relation kind {kind!r}")


def verify_instance(name: str, grid: Optional[Grid] = None, tol: Tolerances = Tolerances()) -> InstanceReport:
    inst = catalog_instance(name)
    grid = grid or uniform_grid(400)
    results = []
    for rel in inst.expected_relations:
        try:
            results.append(_check(inst, rel, grid, tol))
        except (PreconditionViolation, NoInverseError) as exc:
            results.append(RelationResult(rel.kind, rel.label, float("inf"), rel.tolerance, False,
                                          {"error": f"{name}: {exc}"}))
    return InstanceReport(name, all(r.passed for r in results), tuple(results))


def implication_suite(inst: CatalogInstance, grid: Optional[Grid] = None, tol: Tolerances = Tolerances()):
    """I1-I3 and EP for every implication of an instance."""
    out = {}
    for key, i in inst.implications.items():
        out[key] = check_implication_axioms(i, grid, tol) + [check_property(i, "EP", grid, tol)]
    return out


def negation_of(inst: CatalogInstance, key: str) -> neg.Negation:
    obj = inst.resolve(key)
    if not isinstance(obj, neg.Negation):
        raise NotFound(f"{key!r} is not a negation")
    return obj


__all__ = [
    "INSTANCE_NAMES",
    "RELATION_KINDS",
    "CatalogInstance",
    "InstanceReport",
    "Relation",
    "RelationResult",
    "alpha_cut",
    "catalog_instance",
    "implication_suite",
    "resolve_ref",
    "verify_instance",
]
