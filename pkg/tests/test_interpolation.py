import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.interpolate import PchipInterpolator

from uav_sizer.interpolation import Interpolant, pchip_slopes


@st.composite
def monotone_data(draw):
    n = draw(st.integers(3, 10))
    dx = draw(st.lists(st.floats(1, 100), min_size=n - 1, max_size=n - 1))
    dy = draw(st.lists(st.one_of(st.just(0.0), st.floats(0, 50)),
                       min_size=n - 1, max_size=n - 1))
    x = np.concatenate([[1000.0], 1000.0 + np.cumsum(dx)])
    y = np.concatenate([[0.0], np.cumsum(dy)])
    return x, y


@pytest.mark.filterwarnings("ignore:overflow encountered:RuntimeWarning")
@settings(max_examples=200, deadline=None)
@given(monotone_data())
def test_pchip_matches_scipy(data):
    x, y = data
    ours = Interpolant(x, y, "monotone-cubic")
    ref = PchipInterpolator(x, y)
    np.testing.assert_allclose(ours.slopes, ref.derivative()(x), rtol=1e-9, atol=1e-12)
    q = np.linspace(x[0], x[-1], 97)
    np.testing.assert_allclose(ours(q), ref(q), rtol=1e-9, atol=1e-9)


@settings(max_examples=200, deadline=None)
@given(monotone_data(), st.sampled_from(["linear", "monotone-cubic"]))
def test_knots_exact_and_bounded(data, kind):
    x, y = data
    f = Interpolant(x, y, kind)
    assert np.array_equal(f(x), y)
    assert [f(v) for v in x] == list(y)
    q = np.linspace(x[0], x[-1], 301)
    v = f(q)
    i = f.segment(q)
    assert np.all(v >= y[i]) and np.all(v <= y[i + 1])
    assert np.all(np.diff(v) >= 0)


def test_scalar_and_vector_paths_agree():
    x = [1000, 1100, 1250, 1600]
    y = [0, 0.5, 0.9, 2.5]
    for kind in ("linear", "monotone-cubic"):
        f = Interpolant(x, y, kind)
        q = np.linspace(1000, 1600, 53)
        assert np.array_equal(f(q), np.array([f(float(v)) for v in q]))


def test_refuses_extrapolation():
    f = Interpolant([0, 1, 2], [0, 1, 2])
    for bad in (-0.1, 2.1, [0.5, 3.0]):
        with pytest.raises(ValueError):
            f(bad)


def test_rejects_bad_knots():
    with pytest.raises(ValueError):
        Interpolant([0, 0, 1], [0, 1, 2])
    with pytest.raises(ValueError):
        Interpolant([0, 1, 2], [0, 1, 2], kind="spline")


def test_two_point_slopes_are_secant():
    assert list(pchip_slopes([0, 2], [0, 4])) == [2.0, 2.0]
