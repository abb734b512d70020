"""Command-line front end.

Exit codes: 0 the analysis passed, 1 it ran but came out negative, 2 usage
or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np
from scipy.interpolate import RegularGridInterpolator

from . import __version__
from . import negations as neg
from .catalog import INSTANCE_NAMES, catalog_instance, resolve_ref, verify_instance
from .errors import InvalidArgument, InvalidSpec, NotFound, PreconditionViolation
from .implications import check_implication_axioms, check_property, un_implication
from .numerics import DEFAULT_SEED, Tolerances, uniform_grid
from .representations import (
    extract_representation,
    operators_equal,
    scan_cuts,
)
from .uninorms import (
    KINDS,
    TCONORMS,
    TNORMS,
    BinaryOperator,
    band_ordinal_sum,
    band_rescale,
    check_uninorm_axioms,
    conjugate_shift,
    drastic_band_uninorm,
    eqUf_uninorm,
    logit_generator,
    minmax_uninorm,
    power_band_uninorm,
    quadratic_band_map,
    representable_uninorm,
)

EXIT_PASS, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class SpecError(Exception):
    def __init__(self, message: str, path: str = "<spec>", line: int = 0):
        super().__init__(f"{path}:{line}: {message}")
        self.line = line


# operator-spec files ----------------------------------------------------------------

@dataclass
class SpecSection:
    header: str
    line: int
    path: str
    values: Dict[str, str] = field(default_factory=dict)
    lines: Dict[str, int] = field(default_factory=dict)

    def fail(self, msg: str, key: Optional[str] = None):
        raise SpecError(msg, self.path, self.lines.get(key, self.line))


COMMON_KEYS = {"name", "kind", "neutral", "points"}
OPERATOR_BUILDERS = {
    "representable": ({"e"}, {"generator", "disjunctive"}),
    "minmax": ({"inner", "outer", "e"}, {"base"}),
    "drastic-band": ({"e"}, set()),
    "power-band": (set(), set()),
    "conjugate-shift": ({"base", "w", "z"}, set()),
    "band-rescale": ({"base", "a", "d"}, set()),
    "ordinal-sum": ({"inner", "a", "d", "outer"}, set()),
    "equf": (set(), set()),
    "catalog": ({"base"}, set()),
    "implication": ({"base", "negation"}, set()),
    "sampled": ({"path"}, set()),
}
NEGATION_FAMILIES = {
    "standard": set(),
    "sugeno": {"lambda"},
    "step": {"e"},
    "powerlog": set(),
    "square_of": {"base"},
    "from_cut": {"op", "alpha"},
    "table": {"points"},
}


def parse_number(text: str) -> float:
    s = text.strip()
    try:
        if "^" in s:
            base, exp = s.split("^", 1)
            return float(parse_number(base) ** parse_number(exp))
        if "/" in s:
            return float(Fraction(s))
        return float(s)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a number: {text!r}") from None


def parse_spec_text(text: str, path: str = "<spec>") -> SpecSection:
    section: Optional[SpecSection] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise SpecError(f"malformed section header {line!r}", path, lineno)
            header = line[1:-1].strip()
            if header not in ("operator", "negation"):
                raise SpecError(f"unknown section [{header}]", path, lineno)
            if section is not None:
                raise SpecError("only one section per file", path, lineno)
            section = SpecSection(header, lineno, path)
            continue
        if "=" not in line:
            raise SpecError(f"expected 'key = value', got {line!r}", path, lineno)
        if section is None:
            raise SpecError("key outside of a section", path, lineno)
        key, value = (p.strip() for p in line.split("=", 1))
        if not key:
            raise SpecError("empty key", path, lineno)
        if key in section.values:
            raise SpecError(f"duplicate key {key!r}", path, lineno)
        section.values[key] = value
        section.lines[key] = lineno
    if section is None:
        raise SpecError("no [operator] or [negation] section", path, 1)
    return section


def _num(sec: SpecSection, key: str) -> float:
    try:
        return parse_number(sec.values[key])
    except ValueError as exc:
        sec.fail(str(exc), key)


def _check_keys(sec: SpecSection, required: set, optional: set):
    allowed = required | optional | COMMON_KEYS
    for k in sec.values:
        if k not in allowed:
            sec.fail(f"unknown key {k!r}", k)
    missing = sorted(required - set(sec.values))
    if missing:
        sec.fail(f"missing key(s): {', '.join(missing)}")


def _points_list(sec: SpecSection, key: str) -> List[tuple]:
    out = []
    for chunk in sec.values[key].split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            out.append(tuple(parse_number(v) for v in chunk.split(",")))
        except ValueError as exc:
            sec.fail(str(exc), key)
    return out


def _relative(sec: SpecSection, target: str) -> str:
    if os.path.isabs(target):
        return target
    return os.path.join(os.path.dirname(os.path.abspath(sec.path)), target)


def resolve_operator_ref(text: str, sec: SpecSection, key: str) -> BinaryOperator:
    s = text.strip()
    try:
        if s.startswith("catalog:"):
            obj = resolve_ref(s)
            if not isinstance(obj, BinaryOperator):
                sec.fail(f"{s} is not a binary operator", key)
            return obj
        if s.startswith("file:"):
            obj = load_spec(_relative(sec, s[5:]))
            if not isinstance(obj, BinaryOperator):
                sec.fail(f"{s} does not describe an operator", key)
            return obj
        name, _, arg = s.partition(":")
        if name == "power-band":
            return power_band_uninorm()
        if name == "drastic-band":
            return drastic_band_uninorm(parse_number(arg or "0.5"))
        if name == "representable":
            return representable_uninorm(logit_generator(parse_number(arg or "0.5")))
        if name in TNORMS:
            return TNORMS[name]
        if name in TCONORMS:
            return TCONORMS[name]
    except (NotFound, ValueError, InvalidSpec, InvalidArgument) as exc:
        sec.fail(str(exc), key)
    sec.fail(f"cannot resolve operator reference {s!r}", key)


def resolve_negation_ref(text: str, sec: SpecSection, key: str) -> neg.Negation:
    s = text.strip()
    try:
        if s.startswith("catalog:"):
            obj = resolve_ref(s)
            if not isinstance(obj, neg.Negation):
                sec.fail(f"{s} is not a negation", key)
            return obj
        if s.startswith("file:"):
            obj = load_spec(_relative(sec, s[5:]))
            if not isinstance(obj, neg.Negation):
                sec.fail(f"{s} does not describe a negation", key)
            return obj
        name, _, arg = s.partition(":")
        if name == "standard":
            return neg.standard()
        if name == "powerlog":
            return neg.powerlog()
        if name == "sugeno":
            return neg.sugeno(parse_number(arg))
        if name == "step":
            return neg.step(parse_number(arg))
    except (NotFound, ValueError, InvalidSpec) as exc:
        sec.fail(str(exc), key)
    sec.fail(f"cannot resolve negation reference {s!r}", key)


def _sampled_operator(path: str, sec: SpecSection) -> BinaryOperator:
    try:
        xs, ys, vs = read_sample_csv(path)
    except (OSError, ValueError) as exc:
        sec.fail(f"cannot read sampled operator: {exc}", "path")
    ux, uy = np.unique(xs), np.unique(ys)
    if ux.size * uy.size != vs.size:
        sec.fail("sampled operator must cover a full rectangular grid", "path")
    order = np.lexsort((ys, xs))
    table = vs[order].reshape(ux.size, uy.size)
    interp = RegularGridInterpolator((ux, uy), table, method="linear", bounds_error=False, fill_value=None)

    def func(x, y):
        return interp(np.column_stack([x, y]))

    return BinaryOperator(func, os.path.basename(path), "raw", note="bilinear interpolation of samples")


def build_from_section(sec: SpecSection):
    if sec.header == "negation":
        family = sec.values.get("family")
        if family is None:
            sec.fail("missing key(s): family")
        if family not in NEGATION_FAMILIES:
            sec.fail(f"unknown negation family {family!r}", "family")
        allowed = NEGATION_FAMILIES[family] | {"family", "name"}
        for k in sec.values:
            if k not in allowed:
                sec.fail(f"unknown key {k!r}", k)
        missing = sorted(NEGATION_FAMILIES[family] - set(sec.values))
        if missing:
            sec.fail(f"missing key(s): {', '.join(missing)}")
        params = {}
        if family == "sugeno":
            params["lambda"] = _num(sec, "lambda")
        elif family == "step":
            params["e"] = _num(sec, "e")
        elif family == "square_of":
            params["base"] = resolve_negation_ref(sec.values["base"], sec, "base")
        elif family == "from_cut":
            params["op"] = resolve_operator_ref(sec.values["op"], sec, "op")
            params["alpha"] = _num(sec, "alpha")
        elif family == "table":
            params["points"] = _points_list(sec, "points")
        try:
            n = neg.build_negation(neg.NegationSpec(family, params))
        except InvalidSpec as exc:
            sec.fail(str(exc))
        if "name" in sec.values:
            n = neg.Negation(n.func, sec.values["name"], n.claimed_continuous, n.claimed_strict,
                             n.closed_inverse, n.declared_discontinuities)
        return n

    builder = sec.values.get("builder")
    if builder is None:
        sec.fail("missing key(s): builder")
    if builder not in OPERATOR_BUILDERS:
        sec.fail(f"unknown builder {builder!r}", "builder")
    required, optional = OPERATOR_BUILDERS[builder]
    _check_keys(sec, required | {"builder"}, optional)
    v = sec.values
    try:
        if builder == "representable":
            gen = v.get("generator", "logit")
            if gen != "logit":
                sec.fail(f"unknown generator {gen!r}", "generator")
            disj = v.get("disjunctive", "true").lower() in ("1", "true", "yes")
            op = representable_uninorm(logit_generator(_num(sec, "e")), disj)
        elif builder == "minmax":
            t = resolve_operator_ref(v["inner"], sec, "inner")
            s = resolve_operator_ref(v["outer"], sec, "outer")
            op = minmax_uninorm(t, s, _num(sec, "e"), v.get("base", "min"))
        elif builder == "drastic-band":
            op = drastic_band_uninorm(_num(sec, "e"))
        elif builder == "power-band":
            op = power_band_uninorm()
        elif builder == "conjugate-shift":
            op = conjugate_shift(resolve_operator_ref(v["base"], sec, "base"), _num(sec, "w"), _num(sec, "z"))
        elif builder == "band-rescale":
            op = band_rescale(resolve_operator_ref(v["base"], sec, "base"), _num(sec, "a"), _num(sec, "d"))
        elif builder == "ordinal-sum":
            inner = band_rescale(resolve_operator_ref(v["inner"], sec, "inner"), _num(sec, "a"), _num(sec, "d"))
            op = band_ordinal_sum(inner, v["outer"])
        elif builder == "equf":
            op = eqUf_uninorm(quadratic_band_map(), band_rescale(power_band_uninorm(), 0.25, 0.75),
                              0.25, 0.75, 0.5)
        elif builder == "catalog":
            op = resolve_operator_ref(v["base"], sec, "base")
        elif builder == "implication":
            op = un_implication(resolve_operator_ref(v["base"], sec, "base"),
                                resolve_negation_ref(v["negation"], sec, "negation"))
        else:
            op = _sampled_operator(_relative(sec, v["path"]), sec)
    except (InvalidArgument, InvalidSpec, PreconditionViolation) as exc:
        sec.fail(str(exc))

    changes = {}
    if "name" in v:
        changes["name"] = v["name"]
    if "kind" in v:
        if v["kind"] not in KINDS:
            sec.fail(f"unknown kind {v['kind']!r}", "kind")
        changes["kind"] = v["kind"]
    if "neutral" in v:
        changes["neutral"] = _num(sec, "neutral")
    if "points" in v:
        changes["special_points"] = tuple(p[0] for p in _points_list(sec, "points"))
    if changes:
        from dataclasses import replace
        op = replace(op, **changes)
    return op


def load_spec(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError(f"cannot read spec file: {exc.strerror}", path, 0) from None
    return build_from_section(parse_spec_text(text, path))


def load_source(source: str):
    """A spec file, ``catalog:<instance>/<op>``, or a bare instance name (its primary implication)."""
    if source in INSTANCE_NAMES:
        inst = catalog_instance(source)
        return inst.resolve(inst.representation[0])
    if source.startswith("catalog:"):
        try:
            return resolve_ref(source)
        except NotFound as exc:
            raise SpecError(str(exc.args[0]), source, 0) from None
    return load_spec(source)


# CSV and JSON ------------------------------------------------------------------------

def fmt(v: float) -> str:
    return "%.17g" % v


def read_sample_csv(path: str):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["x", "y", "value"]:
            raise ValueError("header must be x,y,value")
        rows = [tuple(float(c) for c in r) for r in reader if r]
    arr = np.array(rows, dtype=float).reshape(-1, 3)
    return arr[:, 0], arr[:, 1], arr[:, 2]


def sample_rows(op, n: int):
    p = uniform_grid(n).points
    if isinstance(op, neg.Negation):
        v = np.asarray(op(p), dtype=float)
        return ["x", "value"], [(fmt(x), fmt(y)) for x, y in zip(p, v)]
    gx, gy = np.meshgrid(p, p, indexing="ij")
    v = np.asarray(op(gx, gy), dtype=float)
    return ["x", "y", "value"], [(fmt(a), fmt(b), fmt(c)) for a, b, c in zip(gx.ravel(), gy.ravel(), v.ravel())]


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def clean(obj):
    """Make a payload JSON-safe: tuples to lists, numpy scalars to Python, non-finite floats to strings."""
    if isinstance(obj, dict):
        return {str(k): clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        f = float(obj)
        if math.isnan(f):
            return "NaN"
        if math.isinf(f):
            return "Infinity" if f > 0 else "-Infinity"
        return f
    if obj is None or isinstance(obj, str):
        return obj
    return str(obj)


def envelope(command: str, inputs: dict, args, result, passed: bool) -> str:
    body = {
        "tool_version": __version__,
        "command": command,
        "inputs": inputs,
        "grid": args.grid,
        "tolerances": {
            "eq_tol": args.tol,
            "exact_tol": args.exact_tol,
            "jump_floor": args.jump_floor,
            "seed": args.seed,
        },
        "result": result,
        "pass": bool(passed),
    }
    return json.dumps(clean(body), indent=2) + "\n"


def _emit(text: str, out: Optional[str]):
    if out:
        os.makedirs(os.path.dirname(os.path.abspath(out)), exist_ok=True)
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _tol(args) -> Tolerances:
    return Tolerances(eq_tol=args.tol, exact_tol=args.exact_tol, jump_floor=args.jump_floor)


def _report_dict(rep) -> dict:
    return {"property": rep.property, "pass": rep.holds, "worst_residual": rep.worst_residual,
            "witness": rep.witness, "note": rep.note}


def _figures(args, fn, *a, **kw):
    if getattr(args, "figures", None):
        from . import plotting
        return getattr(plotting, fn)(*a, **kw)
    return None


# commands ----------------------------------------------------------------------------

def cmd_verify_catalog(args) -> int:
    names = list(INSTANCE_NAMES)
    if args.only:
        names = [n.strip() for chunk in args.only for n in chunk.split(",") if n.strip()]
        unknown = [n for n in names if n not in INSTANCE_NAMES]
        if unknown:
            print(f"error: unknown catalog instance(s): {', '.join(unknown)}", file=sys.stderr)
            return EXIT_USAGE
    grid = uniform_grid(args.grid)
    tol = _tol(args)
    instances, csv_rows = [], []
    for name in names:
        rep = verify_instance(name, grid, tol)
        rels = []
        for r in rep.relations:
            rels.append({"kind": r.kind, "label": r.label, "residual": r.residual, "tolerance": r.tolerance,
                         "pass": r.passed, "detail": r.detail})
            csv_rows.append((name, r.kind, r.label, fmt(r.residual), fmt(r.tolerance), int(r.passed)))
        instances.append({"name": name, "pass": rep.passed, "max_residual": rep.max_residual, "relations": rels})
        print(f"{'PASS' if rep.passed else 'FAIL'} {name}", file=sys.stderr)
        if args.figures:
            from .plotting import plot_instance
            plot_instance(catalog_instance(name), args.figures)
    passed = all(i["pass"] for i in instances)
    _emit(envelope("verify-catalog", {"names": names}, args, {"instances": instances}, passed), args.out)
    if args.csv:
        _emit(csv_text(["instance", "kind", "label", "residual", "tolerance", "pass"], csv_rows), args.csv)
    return EXIT_PASS if passed else EXIT_NEGATIVE


def cmd_axioms(args) -> int:
    op = load_source(args.spec)
    grid = uniform_grid(args.grid)
    tol = _tol(args)
    role = args.role or ("implication" if op.kind == "implication" else "uninorm")
    if role == "implication":
        reps = check_implication_axioms(op, grid, tol) + [check_property(op, "EP", grid, tol, seed=args.seed)]
        result = {"role": role, "properties": [_report_dict(r) for r in reps]}
        passed = all(r.holds for r in reps)
    else:
        rep = check_uninorm_axioms(op, grid, tol, seed=args.seed)
        result = {"role": role, "operator": rep.operator, "classification": rep.classification,
                  "properties": [_report_dict(r) for r in rep.reports()]}
        passed = rep.passed
        for r in rep.reports():
            if not r.holds:
                print(f"{r.property} fails at {r.witness} (residual {r.worst_residual:.3g})", file=sys.stderr)
    _emit(envelope("axioms", {"spec": args.spec}, args, result, passed), args.out)
    _figures(args, "plot_operator", op, os.path.join(args.figures or ".", "operator.png"))
    return EXIT_PASS if passed else EXIT_NEGATIVE


def _alphas(args, role: str) -> List[float]:
    if args.alphas:
        try:
            return [parse_number(a) for a in args.alphas.split(",") if a.strip()]
        except ValueError as exc:
            raise SpecError(str(exc), "--alphas", 0) from None
    vals = list(np.arange(1, 100) / 100)
    return ([0.0] + vals) if role == "implication-cut" else vals


def cmd_cuts(args) -> int:
    op = load_source(args.spec)
    grid = uniform_grid(args.grid)
    alphas = _alphas(args, args.role)
    reps = scan_cuts(op, args.role, alphas, grid, _tol(args))
    rows = [(fmt(r.alpha), int(r.monotone_ok), int(r.continuity.continuous), fmt(r.endpoint_low),
             fmt(r.endpoint_high), int(r.valid)) for r in reps]
    _emit(csv_text(["alpha", "monotone", "continuous", "f0", "f1", "valid"], rows), args.out)
    n_valid = sum(r.valid for r in reps)
    print(f"valid cuts: {n_valid}/{len(reps)}", file=sys.stderr)
    _figures(args, "plot_cuts", op, [r.alpha for r in reps], os.path.join(args.figures or ".", "cuts.png"),
             grid, [r.valid for r in reps])
    return EXIT_PASS


def cmd_extract(args) -> int:
    op = load_source(args.source)
    grid = uniform_grid(args.grid)
    tol = _tol(args)
    out_dir = args.out or "."
    try:
        rec = extract_representation(op, args.alpha, grid, tol)
    except PreconditionViolation as exc:
        cut = exc.report
        result = {"alpha": args.alpha, "error": str(exc),
                  "cut": {"monotone": cut.monotone_ok, "continuous": cut.continuity.continuous,
                          "f0": cut.endpoint_low, "f1": cut.endpoint_high,
                          "witnesses": cut.continuity.witnesses, "valid": cut.valid}}
        sys.stdout.write(envelope("extract", {"source": args.source}, args, result, False))
        return EXIT_NEGATIVE
    os.makedirs(out_dir, exist_ok=True)
    p = grid.points
    n_rows = [(fmt(x), fmt(v)) for x, v in zip(p, np.asarray(rec.n_star(p)))]
    _emit(csv_text(["x", "value"], n_rows), os.path.join(out_dir, "n_star.csv"))
    _emit(csv_text(*sample_rows(rec.u_star, args.grid)), os.path.join(out_dir, "u_star.csv"))
    passed = rec.reconstruction_residual <= tol.eq_tol
    result = {"alpha": rec.alpha, "n_star": rec.n_star.name, "u_star": rec.u_star.name,
              "reconstruction_residual": rec.reconstruction_residual,
              "u_star_axiom_residual": rec.u_star_axiom_residual,
              "u_star_axioms": [_report_dict(r) for r in rec.axioms.reports()] if rec.axioms else []}
    _emit(envelope("extract", {"source": args.source}, args, result, passed), os.path.join(out_dir, "record.json"))
    if args.figures:
        from . import plotting
        plotting.plot_negations({"N*": rec.n_star}, os.path.join(args.figures, "n_star.png"), title="N*")
        plotting.plot_operator(rec.u_star, os.path.join(args.figures, "u_star.png"), uniform_grid(100), "U*")
    return EXIT_PASS if passed else EXIT_NEGATIVE


def parse_exclusions(text: Optional[str]):
    if not text:
        return []
    out = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise SpecError(f"exclusion {chunk!r} is not 'x,y'", "--exclude", 0)
        try:
            out.append((parse_number(parts[0]), parse_number(parts[1])))
        except ValueError as exc:
            raise SpecError(str(exc), "--exclude", 0) from None
    return out


def cmd_equal(args) -> int:
    a, b = load_source(args.a), load_source(args.b)
    rec = operators_equal(a, b, uniform_grid(args.grid), _tol(args), parse_exclusions(args.exclude),
                          interior=args.interior)
    result = {"residual": rec.residual, "witness": rec.witness, "compared": rec.compared}
    if not rec.passed:
        print(f"operators differ at {rec.witness} by {rec.residual:.3g}", file=sys.stderr)
    _emit(envelope("equal", {"a": args.a, "b": args.b, "exclude": args.exclude or ""}, args, result, rec.passed),
          args.out)
    return EXIT_PASS if rec.passed else EXIT_NEGATIVE


def cmd_sample(args) -> int:
    op = load_source(args.spec)
    header, rows = sample_rows(op, args.grid)
    _emit(csv_text(header, rows), args.out)
    if args.figures and isinstance(op, BinaryOperator):
        from .plotting import plot_operator
        plot_operator(op, os.path.join(args.figures, "sample.png"), uniform_grid(args.grid))
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", type=int, default=400, help="uniform grid size n (n+1 points)")
    common.add_argument("--tol", type=float, default=1e-9, help="equality tolerance")
    common.add_argument("--exact-tol", type=float, default=1e-12)
    common.add_argument("--jump-floor", type=float, default=1e-6)
    common.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    common.add_argument("--out", help="output file (directory for extract)")
    common.add_argument("--figures", metavar="DIR", help="also write PNG figures into DIR")

    p = argparse.ArgumentParser(prog="unrep", description="Uninorms, negations and (U,N)-implications.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-catalog", parents=[common], help="verify the bundled examples")
    s.add_argument("--only", action="append", help="instance name(s), comma separated")
    s.add_argument("--csv", help="per-relation CSV output")
    s.set_defaults(func=cmd_verify_catalog)

    s = sub.add_parser("axioms", parents=[common], help="check uninorm or implication axioms")
    s.add_argument("spec")
    s.add_argument("--role", choices=("uninorm", "implication"))
    s.set_defaults(func=cmd_axioms)

    s = sub.add_parser("cuts", parents=[common], help="scan horizontal cuts")
    s.add_argument("spec")
    s.add_argument("--role", choices=("uninorm-cut", "implication-cut"), default="uninorm-cut")
    s.add_argument("--alphas", help="comma separated alpha values (default: i/100)")
    s.set_defaults(func=cmd_cuts)

    s = sub.add_parser("extract", parents=[common], help="extract (N*, U*) at a cut")
    s.add_argument("source", help="implication spec file, catalog ref or instance name")
    s.add_argument("--alpha", type=parse_number, required=True)
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("equal", parents=[common], help="compare two operators on the grid")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--exclude", help="points to skip, 'x,y;x,y'")
    s.add_argument("--interior", action="store_true", help="skip the grid points 0 and 1")
    s.set_defaults(func=cmd_equal)

    s = sub.add_parser("sample", parents=[common], help="sample an operator on the grid as CSV")
    s.add_argument("spec")
    s.set_defaults(func=cmd_sample)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.grid < 2:
        parser.error("--grid must be at least 2")
    try:
        _tol(args)
    except InvalidArgument as exc:
        parser.error(str(exc))
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
