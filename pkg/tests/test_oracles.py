"""Symbolic oracles: closed forms derived with sympy from the generator
definition, compared against the numeric constructions."""

import numpy as np
import pytest
import sympy as sp

from unrep import negations as neg
from unrep.catalog import catalog_instance
from unrep.uninorms import logit_generator, representable_uninorm

x, y, t = sp.symbols("x y t", positive=True)


def symbolic_uninorm(e):
    h = sp.log(t / (1 - t)) + sp.log((1 - e) / e)
    s = sp.Symbol("s")
    h_inv = sp.solve(sp.Eq(h, s), t)[0]
    return sp.simplify(h_inv.subs(s, h.subs(t, x) + h.subs(t, y)))


U1 = symbolic_uninorm(sp.Rational(1, 2))
U2 = symbolic_uninorm(sp.Rational(1, 4))
N1 = 1 - x
N2 = (1 - x) / (1 + 2 * x)


def test_symbolic_implications_agree():
    lhs = U1.subs(x, N1)
    rhs = U2.subs(x, N2)
    assert sp.simplify(lhs - rhs) == 0


def test_symbolic_sugeno_is_involutive():
    assert sp.simplify(N2.subs(x, N2) - x) == 0


@pytest.mark.parametrize("e,sym", [(0.5, U1), (0.25, U2)])
def test_numeric_uninorm_matches_symbolic(e, sym):
    u = representable_uninorm(logit_generator(e))
    f = sp.lambdify((x, y), sym, "numpy")
    pts = np.arange(1, 20) / 20
    gx, gy = np.meshgrid(pts, pts, indexing="ij")
    assert np.max(np.abs(u(gx, gy) - f(gx, gy))) <= 1e-12


def test_example1_exact_point_values():
    assert U1.subs({x: sp.Rational(1, 4), y: sp.Rational(1, 4)}) == sp.Rational(1, 10)
    assert U2.subs({x: sp.Rational(1, 2), y: sp.Rational(1, 2)}) == sp.Rational(3, 4)
    inst = catalog_instance("example1")
    assert inst.resolve("U1")(0.25, 0.25) == pytest.approx(0.1, abs=1e-15)


def test_sugeno_inverse_by_bisection_matches_symbolic():
    r = neg.modified_pseudo_inverse(neg.sugeno(2.0), use_closed_form=False)
    inv = sp.solve(sp.Eq(N2, t), x)[0]
    f = sp.lambdify(t, inv, "numpy")
    p = np.linspace(0.0, 1.0, 101)
    assert np.max(np.abs(r(p) - f(p))) <= 1e-12


def test_u3_u4_gap_at_centre():
    # inside the band both are rescaled representable uninorms; at (1/2, 1/2)
    # U3 sits at its neutral point and U4 = 1/4 + U2(1/2, 1/2)/2
    u4_centre = sp.Rational(1, 4) + U2.subs({x: sp.Rational(1, 2), y: sp.Rational(1, 2)}) / 2
    assert u4_centre == sp.Rational(5, 8)
    inst = catalog_instance("u3u4")
    assert inst.resolve("U4")(0.5, 0.5) == pytest.approx(float(u4_centre), abs=1e-15)
    assert inst.resolve("U3")(0.5, 0.5) == 0.5


def test_u3_u4_largest_gap_location():
    # inside the band U2 = 3p/(1+2p) with p = U1(s,t), so the gap depends on p only
    p = sp.Symbol("p", positive=True)
    assert sp.simplify(U2 - 3 * U1 / (1 + 2 * U1)) == 0
    gap = 3 * p / (1 + 2 * p) - p
    best = [c for c in sp.solve(sp.diff(gap, p), p) if 0 < c < 1]
    assert best == [(sp.sqrt(3) - 1) / 2]
    peak = sp.simplify(gap.subs(p, best[0]) / 2)
    assert peak == 1 - sp.sqrt(3) / 2
    assert gap.subs(p, sp.Rational(1, 2)) / 2 == sp.Rational(1, 8)
    inst = catalog_instance("u3u4")
    pts = 0.25 + 0.5 * np.arange(1, 400) / 400
    gx, gy = np.meshgrid(pts, pts, indexing="ij")
    numeric = np.max(np.abs(inst.resolve("U3")(gx, gy) - inst.resolve("U4")(gx, gy)))
    assert numeric <= float(peak) + 1e-12
    assert numeric == pytest.approx(float(peak), abs=1e-4)
