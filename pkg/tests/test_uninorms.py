import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from unrep.errors import InvalidArgument, InvalidSpec, NoInverseError, PreconditionViolation
from unrep.numerics import Tolerances, uniform_grid
from unrep.uninorms import (
    TCONORMS,
    TNORMS,
    BinaryOperator,
    FBandSpec,
    band_ordinal_sum,
    band_rescale,
    check_uninorm_axioms,
    conjugate_shift,
    drastic_band_uninorm,
    eqUf_uninorm,
    logit_generator,
    min_base_band,
    minmax_uninorm,
    power_band_index,
    power_band_uninorm,
    power_sequence,
    propF_uninorm,
    quadratic_band_map,
    representable_uninorm,
    square_map,
    u_point,
    underlying_ops,
    validate_fband,
)


def _propF():
    sq = square_map()
    return propF_uninorm(FBandSpec(sq, min_base_band(sq, 0.5), 0.5))


def _equf():
    return eqUf_uninorm(quadratic_band_map(), band_rescale(power_band_uninorm(), 0.25, 0.75), 0.25, 0.75, 0.5)


CONSTRUCTORS = {
    "representable-1/2": lambda: representable_uninorm(logit_generator(0.5)),
    "representable-1/4": lambda: representable_uninorm(logit_generator(0.25)),
    "representable-conj": lambda: representable_uninorm(logit_generator(0.7), disjunctive=False),
    "minmax-min": lambda: minmax_uninorm(TNORMS["product"], TCONORMS["probabilistic_sum"], 0.4, "min"),
    "minmax-max": lambda: minmax_uninorm(TNORMS["lukasiewicz"], TCONORMS["max"], 0.6, "max"),
    "drastic-band": lambda: drastic_band_uninorm(0.5),
    "power-band": power_band_uninorm,
    "propF": _propF,
    "osum-minmax": lambda: band_ordinal_sum(band_rescale(representable_uninorm(logit_generator(0.5)), .25, .75)),
    "osum-prod": lambda: band_ordinal_sum(band_rescale(power_band_uninorm(), .25, .75), "prod_dualprod"),
    "equf": _equf,
    "shift": lambda: conjugate_shift(power_band_uninorm(), 2 ** -0.5, 0.25),
}


@pytest.mark.parametrize("name", sorted(CONSTRUCTORS))
def test_constructor_passes_axioms(name):
    rep = check_uninorm_axioms(CONSTRUCTORS[name]())
    assert rep.passed, [(r.property, r.worst_residual, r.witness) for r in rep.reports() if not r.holds]


@pytest.mark.parametrize("name", sorted(CONSTRUCTORS))
@given(x=st.floats(0, 1), y=st.floats(0, 1))
@settings(max_examples=60, deadline=None)
def test_commutative_on_random_pairs(name, x, y):
    u = CONSTRUCTORS[name]()
    assert u(x, y) == pytest.approx(u(y, x), abs=1e-12)


# near 0 power-band results such as 2**-2148 underflow to 0, and near 1
# representable values round to 1 and flip the corner convention
unit = st.one_of(st.sampled_from([0.0, 1.0]), st.floats(1e-6, 1.0 - 1e-6))


@pytest.mark.parametrize("name", ["representable-1/2", "minmax-min", "drastic-band", "power-band"])
@given(x=unit, y=unit, z=unit)
@settings(max_examples=80, deadline=None)
def test_associative_on_random_triples(name, x, y, z):
    u = CONSTRUCTORS[name]()
    assert u(u(x, y), z) == pytest.approx(u(x, u(y, z)), abs=1e-9)


def test_example1_closed_forms():
    u1 = representable_uninorm(logit_generator(0.5))
    u2 = representable_uninorm(logit_generator(0.25))
    assert u1(0.25, 0.25) == pytest.approx(0.1, abs=1e-15)
    assert u2(0.5, 0.5) == pytest.approx(0.75, abs=1e-15)
    assert u1(0.0, 1.0) == 1.0 and u1(1.0, 0.0) == 1.0
    assert representable_uninorm(logit_generator(0.5), disjunctive=False)(0.0, 1.0) == 0.0


def test_logit_generator_invariants():
    g = logit_generator(0.3)
    assert abs(g.h(0.3)) <= 1e-12
    x = uniform_grid(400).interior
    assert np.max(np.abs(g.h_inverse(g.h(x)) - x)) <= 1e-9


def test_logit_generator_rejects_bad_neutral():
    with pytest.raises(InvalidSpec):
        logit_generator(1.0)


# corrupted fixtures: the checker must catch them


def test_bounded_sum_posing_as_uninorm_fails_neutral():
    # clamped x+y is associative, so only the claimed neutral element gives it away
    op = BinaryOperator(lambda x, y: np.minimum(1.0, x + y), "clamped-sum", "uninorm", 0.5, True)
    rep = check_uninorm_axioms(op)
    assert rep.commutativity.holds and rep.associativity.holds and rep.monotonicity.holds
    assert not rep.neutral.holds


def test_scaled_clamped_sum_fails_associativity():
    op = BinaryOperator(lambda x, y: np.minimum(1.0, 0.75 * (x + y)), "scaled-sum", "raw", None)
    rep = check_uninorm_axioms(op)
    assert not rep.associativity.holds
    assert rep.associativity.worst_residual > 0.01
    assert len(rep.associativity.witness) == 3


def test_wrong_neutral_on_drastic_band():
    from dataclasses import replace
    op = replace(drastic_band_uninorm(0.5), neutral=0.4)
    rep = check_uninorm_axioms(op)
    assert rep.associativity.holds and not rep.neutral.holds


def test_non_monotone_caught():
    op = BinaryOperator(lambda x, y: np.where((x > 0.4) & (x < 0.6), 1 - x, x) * y, "bumpy", "raw", None)
    assert not check_uninorm_axioms(op).monotonicity.holds


# underlying operations


def test_underlying_continuity_verdicts():
    t, s = underlying_ops(representable_uninorm(logit_generator(0.5)))
    assert t.continuity.continuous and s.continuity.continuous
    t, s = underlying_ops(drastic_band_uninorm(0.5))
    assert not t.continuity.continuous and s.continuity.continuous
    x = np.array([0.3, 1.0, 0.6])
    y = np.array([0.7, 0.4, 1.0])
    assert np.allclose(t(x, y), TNORMS["drastic"](x, y))
    assert np.allclose(s(x, y), TCONORMS["max"](x, y))
    t, s = underlying_ops(power_band_uninorm())
    assert not t.continuity.continuous and not s.continuity.continuous


# power-band structure


def test_band_index_right_closed():
    # band n is ]u^(n+1), u^(n)]; 1e-12 relative is the snap width
    for n in range(-3, 4):
        assert power_band_index(u_point(n)) == n
        assert power_band_index(u_point(n) * (1 - 1e-9)) == n
        assert power_band_index(u_point(n) * (1 + 1e-9)) == n - 1


@given(st.integers(-3, 3), st.integers(-3, 3), st.floats(0.0, 1.0 - 1e-9), st.floats(0.0, 1.0 - 1e-9))
@settings(max_examples=120, deadline=None)
def test_band_containment(n, m, s, t):
    # a point in band n times a point in band m lands in band n + m
    lo_n, hi_n = u_point(n + 1), u_point(n)
    lo_m, hi_m = u_point(m + 1), u_point(m)
    x = hi_n - s * (hi_n - lo_n)
    y = hi_m - t * (hi_m - lo_m)
    if not (lo_n < x <= hi_n and lo_m < y <= hi_m):
        return
    v = power_band_uninorm()(x, y)
    if 0.0 < v < 1.0:
        assert power_band_index(v) == n + m


@given(st.floats(1e-6, 1 - 1e-6), st.floats(1e-6, 1 - 1e-6))
@settings(max_examples=200, deadline=None)
def test_propF_equals_power_band(x, y):
    assert _propF()(x, y) == pytest.approx(power_band_uninorm()(x, y), rel=1e-12, abs=1e-300)


def test_validate_fband_rejects_product():
    sq = square_map()
    bad = FBandSpec(sq, lambda s, t: s * t / 0.5, 0.5)
    reports = validate_fband(bad)
    assert not all(r.holds for r in reports.values())
    with pytest.raises(InvalidSpec):
        propF_uninorm(bad)


def test_quadratic_map_closed_forms_match_iteration():
    f = quadratic_band_map()
    it = type(f)(f.forward, f.inverse, "iterated")
    s = np.linspace(0.26, 0.74, 97)
    for n in (-3, -1, 0, 1, 2, 5):
        assert np.max(np.abs(f.power(s, n) - it.power(s, n))) <= 1e-12
    assert np.array_equal(f.band_index(s, 0.5), it.band_index(s, 0.5))


def test_no_fixed_point_inside_band():
    f = quadratic_band_map()
    s = uniform_grid(400).points
    inside = s[(s > 0.25) & (s < 0.75)]
    assert np.all(f(inside) != inside)
    assert f(0.25) == 0.25 and f(0.75) == 0.75
    assert _equf()(0.25, 0.75) in (0.25, 0.75)


# conjugate shift and power sequences


def test_conjugate_shift_neutral_and_precondition():
    u = conjugate_shift(power_band_uninorm(), 2 ** -0.5, 0.25)
    x = uniform_grid(400).interior
    assert np.max(np.abs(u(x, np.full_like(x, 0.25)) - x)) <= 1e-12
    with pytest.raises(PreconditionViolation):
        conjugate_shift(power_band_uninorm(), 0.6, 0.25)


def test_conjugate_shift_preserves_residuals():
    base = check_uninorm_axioms(power_band_uninorm())
    shifted = check_uninorm_axioms(conjugate_shift(power_band_uninorm(), 2 ** -0.5, 0.25))
    ulp = np.finfo(float).eps
    for b, s in zip(base.reports()[:3], shifted.reports()[:3]):
        # 4x the base residual, floored at one unit in the last place
        assert s.worst_residual <= 4 * max(b.worst_residual, ulp), (b.property, b.worst_residual, s.worst_residual)


def test_power_sequence_of_power_band():
    seq = power_sequence(power_band_uninorm(), 0.25, K=5)
    assert seq.forward == tuple(2.0 ** -(2.0 ** k) for k in range(1, 6))
    assert seq.backward[:3] == pytest.approx([2 ** -0.5, 2 ** -0.25, 2 ** -0.125], abs=1e-12)
    assert seq.pair_residual <= 1e-12


def test_power_sequence_without_inverse():
    with pytest.raises(NoInverseError):
        power_sequence(drastic_band_uninorm(0.5), 0.25)


def test_power_sequence_converges_for_representable():
    seq = power_sequence(representable_uninorm(logit_generator(0.5)), 0.25, K=64)
    assert seq.converged and seq.a_x < 1e-15 and seq.d_x > 1 - 1e-15
