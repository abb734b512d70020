import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from unrep.errors import EvaluationError, InvalidArgument
from unrep.numerics import (
    Grid,
    Tolerances,
    UnitFunction,
    monotone_continuity_probe,
    sup_invert,
    uniform_grid,
    worst_case,
)


@given(st.integers(min_value=2, max_value=5000))
def test_uniform_grid_contains_endpoints(n):
    g = uniform_grid(n)
    assert g.points[0] == 0.0 and g.points[-1] == 1.0
    assert len(g) == n + 1
    assert np.all(np.diff(g.points) > 0)


@pytest.mark.parametrize("n", [0, 1, 2.5, -3])
def test_uniform_grid_rejects_small_n(n):
    with pytest.raises(InvalidArgument):
        uniform_grid(n)


def test_grid_is_read_only():
    g = uniform_grid(4)
    with pytest.raises(ValueError):
        g.points[0] = 0.5


def test_grid_refine_merges_points():
    g = uniform_grid(4).refine([0.3, 0.25])
    assert list(g.points) == [0.0, 0.25, 0.3, 0.5, 0.75, 1.0]


def test_tolerances_validated():
    with pytest.raises(InvalidArgument):
        Tolerances(eq_tol=0.0)
    with pytest.raises(InvalidArgument):
        Tolerances(refine_rounds=0)


def test_probe_continuous_functions():
    g = uniform_grid(400)
    for f in (lambda x: x, lambda x: x ** 2, lambda x: np.sqrt(x), lambda x: x ** (2.0 ** 6)):
        assert monotone_continuity_probe(f, g).continuous


def test_probe_finds_jump():
    g = uniform_grid(400)
    v = monotone_continuity_probe(lambda x: np.where(x < 0.3, 0.2 * x, 0.5 + 0.5 * x), g)
    assert not v.continuous
    (loc, size), = v.witnesses
    assert abs(loc - 0.3) <= g.spacing_hint / 2 ** 30
    assert size == pytest.approx(0.65 - 0.06, abs=1e-6)


def test_probe_logarithmic_steepness_is_continuous():
    # modulus of continuity ~ 1/log(1/h): steep, but no jump
    f = lambda x: np.where(x > 0, 1.0 / (1.0 - np.log(np.maximum(x, 1e-300))), 0.0)
    assert monotone_continuity_probe(f, uniform_grid(400)).continuous


@given(st.floats(0.05, 0.95), st.floats(0.01, 0.5))
@settings(max_examples=40, deadline=None)
def test_probe_witness_near_declared_jump(c, jump):
    g = uniform_grid(400)
    f = lambda x: np.where(x < c, 0.5 * x, 0.5 * x + jump)
    v = monotone_continuity_probe(f, g)
    assert not v.continuous
    assert all(abs(w - c) <= g.spacing_hint / 2 ** 20 for w, _ in v.witnesses)


def test_probe_rejects_nan():
    with pytest.raises(EvaluationError) as exc:
        monotone_continuity_probe(lambda x: np.where(x > 0.5, np.nan, x), uniform_grid(10))
    assert exc.value.point is not None


def test_sup_invert_examples():
    f = UnitFunction(lambda x: 1 - x, direction="decreasing")
    assert sup_invert(f, 0.3) == pytest.approx(0.7, abs=1e-15)
    assert sup_invert(f, 1.0) == 0.0
    step = UnitFunction(lambda x: np.select([x == 0, x <= 0.5], [1.0, 0.5], 0.0), direction="decreasing")
    assert sup_invert(step, 0.7) == 0.0
    assert sup_invert(step, 0.0) == 0.5


def test_sup_invert_rejects_increasing():
    with pytest.raises(InvalidArgument):
        sup_invert(UnitFunction(lambda x: x, direction="increasing"), 0.5)


@given(st.floats(0.0, 1.0), st.floats(0.5, 4.0))
@settings(max_examples=60, deadline=None)
def test_sup_invert_supremum_property(t, p):
    f = UnitFunction(lambda x: 1 - x ** p, direction="decreasing")
    r = sup_invert(f, t)
    y = uniform_grid(200).points
    assert np.all(f(y[y > r + 1e-9]) <= t)
    if f(0.0) > t:
        assert f(max(r - 1e-9, 0.0)) > t or r == 0.0


def test_worst_case_counts_nan_as_inf():
    rep = worst_case("P", np.array([0.0, np.nan, 1e-3]), np.array([0.1, 0.2, 0.3]), 1e-9)
    assert not rep.holds and rep.worst_residual == np.inf and rep.witness == (0.2,)


def test_grid_from_points_sorted_unique():
    g = Grid.from_points([0.5, 0.0, 1.0, 0.5])
    assert list(g.points) == [0.0, 0.5, 1.0]
