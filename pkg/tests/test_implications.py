import numpy as np
import pytest

from unrep import negations as neg
from unrep.catalog import INSTANCE_NAMES, catalog_instance
from unrep.errors import InvalidArgument
from unrep.implications import alpha_cut, check_implication_axioms, check_property, un_implication
from unrep.numerics import Tolerances, uniform_grid
from unrep.representations import scan_cut
from unrep.uninorms import TCONORMS, TNORMS, logit_generator, representable_uninorm

G = uniform_grid(400)


@pytest.fixture(scope="module")
def ex1():
    return un_implication(representable_uninorm(logit_generator(0.5)), neg.standard())


@pytest.fixture(scope="module")
def lukasiewicz():
    return un_implication(TCONORMS["bounded_sum"], neg.standard(), "I_L")


def test_ex1_exchange_principle(ex1):
    rep = check_property(ex1, "EP")
    assert rep.holds and rep.worst_residual <= 1e-12


def test_ex1_contrapositive_standard(ex1):
    assert check_property(ex1, "CP", n=neg.standard()).holds


def test_ex1_left_neutrality_fails(ex1):
    rep = check_property(ex1, "NP")
    assert not rep.holds
    assert rep.worst_residual == pytest.approx(1.0 - 1.0 / 400, abs=1e-12)
    assert ex1(1.0, 0.3) == 0.0


def test_ex1_ordering_fails(ex1):
    assert not check_property(ex1, "OP").holds
    assert not check_property(ex1, "IP").holds


def test_lukasiewicz_battery(lukasiewicz):
    for prop in ("NP", "EP", "IP", "OP"):
        assert check_property(lukasiewicz, prop).holds, prop
    for prop in ("CP", "LCP", "RCP"):
        assert check_property(lukasiewicz, prop, n=neg.standard()).holds, prop


def test_property_arguments():
    i = un_implication(TCONORMS["max"], neg.standard())
    with pytest.raises(InvalidArgument):
        check_property(i, "XP")
    with pytest.raises(InvalidArgument):
        check_property(i, "CP")
    with pytest.raises(InvalidArgument):
        un_implication(TNORMS["min"], neg.standard())
    with pytest.raises(InvalidArgument):
        alpha_cut(i, 1.0)


def test_conjunctive_uninorm_is_no_implication():
    i = un_implication(representable_uninorm(logit_generator(0.5), disjunctive=False), neg.standard())
    i1, i2, i3 = check_implication_axioms(i)
    assert i1.holds and i2.holds and not i3.holds


def _pairs():
    for name in INSTANCE_NAMES:
        inst = catalog_instance(name)
        for key, i in inst.implications.items():
            yield pytest.param(name, key, id=f"{name}-{key}")


@pytest.mark.parametrize("name,key", list(_pairs()))
def test_catalog_implications_satisfy_axioms(name, key):
    i = catalog_instance(name).resolve(key)
    assert all(r.holds for r in check_implication_axioms(i))


@pytest.mark.parametrize("name", INSTANCE_NAMES)
def test_cut_at_neutral_recovers_negation(name):
    inst = catalog_instance(name)
    i_key, u_key, n_key = inst.representation
    i, u, n = inst.resolve(i_key), inst.resolve(u_key), inst.resolve(n_key)
    p = G.points
    assert np.max(np.abs(alpha_cut(i, u.neutral)(p) - n(p))) <= 1e-9


@pytest.mark.parametrize("name,alphas", [
    ("example1", (0.1, 0.25, 0.5, 0.9)),
    ("u3u4", (0.375, 0.5, 0.6)),
    ("nonc-power", (0.25, 0.5)),
])
def test_right_contrapositive_wrt_valid_cuts(name, alphas):
    inst = catalog_instance(name)
    i = inst.resolve(inst.representation[0])
    for a in alphas:
        assert scan_cut(i, "implication-cut", a, G, Tolerances()).valid
        n_a = neg.from_cut(i, a)
        rep = check_property(i, "RCP", uniform_grid(100), n=n_a)
        assert rep.holds, (a, rep.worst_residual, rep.witness)
