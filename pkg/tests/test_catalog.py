import dataclasses

import numpy as np
import pytest

from unrep import catalog
from unrep.catalog import INSTANCE_NAMES, RELATION_KINDS, Relation, catalog_instance, resolve_ref, verify_instance
from unrep.errors import NotFound
from unrep.negations import Negation
from unrep.numerics import uniform_grid


@pytest.mark.parametrize("name", INSTANCE_NAMES)
def test_instance_verifies(name):
    rep = verify_instance(name)
    assert rep.passed, [(r.label, r.residual, r.detail) for r in rep.relations if not r.passed]


@pytest.mark.parametrize("name", INSTANCE_NAMES)
def test_references_resolve(name):
    inst = catalog_instance(name)
    for rel in inst.expected_relations:
        assert rel.kind in RELATION_KINDS
        for key in ("a", "b", "op", "a_op", "b_op", "equals", "f"):
            if isinstance(rel.params.get(key), str):
                inst.resolve(rel.params[key])
    for key in inst.representation:
        inst.resolve(key)


def test_example1_residual_small():
    rep = verify_instance("example1")
    assert rep.max_residual <= 1e-12


def test_nonc_power_structure():
    inst = catalog_instance("nonc-power")
    assert inst.resolve("U2").neutral == 0.25
    n1, n2 = inst.resolve("N1"), inst.resolve("N2")
    p = uniform_grid(400).points
    assert np.max(np.abs(n2(p) - n1(p) ** 2)) == 0.0


def test_unknown_names():
    with pytest.raises(NotFound):
        catalog_instance("example9")
    with pytest.raises(NotFound):
        resolve_ref("catalog:example1/U7")
    with pytest.raises(NotFound):
        resolve_ref("example1/U1")
    assert isinstance(resolve_ref("catalog:example1/N2"), Negation)


def test_single_failing_relation_fails_instance(monkeypatch):
    original = catalog._BUILDERS["unique-rep"]

    def tampered():
        inst = original()
        wrong = Relation("neutral-element", {"op": "U", "e": 0.4}, 1e-12, "wrong neutral")
        return dataclasses.replace(inst, expected_relations=inst.expected_relations + (wrong,))

    monkeypatch.setitem(catalog._BUILDERS, "unique-rep", tampered)
    rep = verify_instance("unique-rep")
    assert not rep.passed
    assert [r.label for r in rep.relations if not r.passed] == ["wrong neutral"]
