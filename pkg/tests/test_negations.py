import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from unrep import negations as neg
from unrep.errors import InvalidSpec
from unrep.numerics import uniform_grid
from unrep.uninorms import logit_generator, representable_uninorm
from unrep.implications import un_implication

G = uniform_grid(400)


def test_standard_pseudo_inverse_is_one_minus_x():
    r = neg.modified_pseudo_inverse(neg.standard(), use_closed_form=False)
    p = G.points
    assert np.max(np.abs(r(p) - (1 - p))) <= 1e-15


def test_sugeno_bisection_value():
    r = neg.modified_pseudo_inverse(neg.sugeno(2.0), use_closed_form=False)
    assert r(0.25) == pytest.approx(0.5, abs=1e-15)


def test_step_pseudo_inverse():
    r = neg.modified_pseudo_inverse(neg.step(0.5), use_closed_form=False)
    assert list(r(np.array([0.0, 0.3, 0.7, 0.5]))) == [1.0, 1.0, 0.0, 0.0]


@pytest.mark.parametrize("n", [neg.standard(), neg.sugeno(2.0), neg.sugeno(0.3), neg.powerlog(),
                               neg.square_of(neg.powerlog())], ids=lambda n: n.name)
def test_pseudo_inverse_laws(n):
    laws = neg.pseudo_inverse_laws(n, G, use_closed_form=False)
    assert laws.holds(1e-9)
    assert laws.points_in_range > 0


def test_classification():
    c = neg.classify_negation(neg.standard())
    assert c.is_negation and c.is_continuous and c.is_strict and c.is_strong
    c = neg.classify_negation(neg.step(0.5))
    assert c.is_negation and not c.is_continuous and not c.is_strict and not c.is_strong
    c = neg.classify_negation(neg.square_of(neg.standard()))
    assert c.is_negation and c.is_strict and not c.is_strong
    c = neg.classify_negation(neg.powerlog())
    assert c.is_strong


def test_classification_rejects_non_negation():
    c = neg.classify_negation(neg.Negation(lambda x: x, "identity"))
    assert not c.is_negation


def test_powerlog_swaps_band_points():
    n = neg.powerlog()
    for k in range(-3, 4):
        assert n(2.0 ** -(2.0 ** k)) == pytest.approx(2.0 ** -(2.0 ** -k), abs=1e-12)
    assert n(0.0) == 1.0 and n(1.0) == 0.0


negation_specs = st.one_of(
    st.just(neg.NegationSpec("standard")),
    st.just(neg.NegationSpec("powerlog")),
    st.floats(0.0, 50.0).map(lambda lam: neg.NegationSpec("sugeno", {"lambda": lam})),
    st.floats(0.05, 0.95).map(lambda e: neg.NegationSpec("step", {"e": e})),
    st.floats(0.0, 10.0).map(lambda lam: neg.NegationSpec("square_of", {"base": neg.NegationSpec(
        "sugeno", {"lambda": lam})})),
    st.lists(st.floats(0.01, 0.99), min_size=1, max_size=5, unique=True).map(
        lambda xs: neg.NegationSpec("table", {"points": [(0.0, 1.0)] + [(x, 1 - x) for x in sorted(xs)]
                                              + [(1.0, 0.0)]})),
)


@given(negation_specs)
@settings(max_examples=40, deadline=None)
def test_every_valid_spec_builds_a_negation(spec):
    c = neg.classify_negation(neg.build_negation(spec), uniform_grid(100))
    assert c.is_negation
    assert not c.is_strong or (c.is_strict and c.is_continuous)


@pytest.mark.parametrize("spec", [
    neg.NegationSpec("nope"),
    neg.NegationSpec("sugeno"),
    neg.NegationSpec("sugeno", {"lambda": -1.5}),
    neg.NegationSpec("step", {"e": 1.0}),
    neg.NegationSpec("standard", {"e": 0.3}),
    neg.NegationSpec("table", {"points": [(0.0, 1.0), (0.5, 0.7), (0.6, 0.8), (1.0, 0.0)]}),
])
def test_invalid_specs(spec):
    with pytest.raises(InvalidSpec):
        neg.build_negation(spec)


@given(st.floats(0.0, 20.0))
@settings(max_examples=30, deadline=None)
def test_square_of_is_a_negation(lam):
    n = neg.square_of(neg.sugeno(lam))
    assert neg.classify_negation(n, uniform_grid(100)).is_negation


def test_from_cut_matches_closed_form():
    i = un_implication(representable_uninorm(logit_generator(0.5)), neg.standard())
    n = neg.from_cut(i, 0.25)
    p = G.points
    assert np.max(np.abs(n(p) - (1 - p) / (1 + 2 * p))) <= 1e-12
