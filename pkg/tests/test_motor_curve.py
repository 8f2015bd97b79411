import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from uav_sizer import (CurveError, InsufficientThrustError, MotorCurve,
                       OutOfDomainError, ingest_thrust_stand)
from uav_sizer.motor_curve import write_curve

from helpers import CurveOracle, random_samples

F3_CSV = "pwm_us,power_w,thrust_kgf\n1000,5,0.0\n1300,250,1.3\n1600,600,2.4\n"


def test_ingest_f3(write, f3):
    curve = ingest_thrust_stand(write("f3.csv", F3_CSV))
    assert curve == f3
    assert curve.domain == (1000, 1600)
    assert curve.max_thrust == 2.4


def test_ingest_voltage_current_grams_comments_duplicates(write):
    text = ("# repeated sweep, thrust in grams\n"
            "pwm_us,voltage_v,current_a,thrust_gf\n"
            "1000,30,0.1,0\n"
            "1300,30,8,1250\n"
            "# second pass\n"
            "1300,30,9,1350\n"
            "1600,30,20,2400\n")
    curve = ingest_thrust_stand(write("c.csv", text))
    assert len(curve.samples) == 3
    s = curve.samples[1]
    assert s.pwm == 1300
    assert s.power == pytest.approx(30 * 8.5)
    assert s.thrust == pytest.approx(1.3)
    assert curve.samples[0].power == pytest.approx(3.0)


def test_unsorted_rows_are_sorted(write, f3):
    text = "pwm_us,power_w,thrust_kgf\n1600,600,2.4\n1000,5,0.0\n1300,250,1.3\n"
    assert ingest_thrust_stand(write("u.csv", text)) == f3


def test_non_monotone_thrust_names_pwm(write):
    text = "pwm_us,power_w,thrust_kgf\n1000,5,0.0\n1300,250,1.3\n1600,600,1.2\n"
    with pytest.raises(CurveError, match="1600") as err:
        ingest_thrust_stand(write("bad.csv", text))
    assert err.value.pwm == 1600


def test_non_monotone_power_names_pwm(write):
    text = "pwm_us,power_w,thrust_kgf\n1000,5,0.0\n1300,250,1.3\n1600,200,2.4\n"
    with pytest.raises(CurveError, match="power decreases at pwm 1600"):
        ingest_thrust_stand(write("bad.csv", text))


def test_too_few_rows(write):
    with pytest.raises(CurveError, match="too few rows"):
        ingest_thrust_stand(write("two.csv", "pwm_us,power_w,thrust_kgf\n1000,5,0\n1300,250,1.3\n"))
    # duplicates collapse before the count
    with pytest.raises(CurveError, match="too few rows"):
        ingest_thrust_stand(write("dup.csv", "pwm_us,power_w,thrust_kgf\n"
                                  "1000,5,0\n1000,6,0\n1300,250,1.3\n"))


@pytest.mark.parametrize("header, missing", [
    ("power_w,thrust_kgf", "pwm_us"),
    ("pwm_us,thrust_kgf", "power_w"),
    ("pwm_us,voltage_v,thrust_kgf", "current_a"),
    ("pwm_us,power_w", "thrust_kgf"),
])
def test_missing_column_named(write, header, missing):
    with pytest.raises(CurveError, match=missing):
        ingest_thrust_stand(write("m.csv", header + "\n1,2\n"))


def test_non_numeric_cell(write):
    with pytest.raises(CurveError, match="line 3"):
        ingest_thrust_stand(write("n.csv", "pwm_us,power_w,thrust_kgf\n1000,5,0\n1300,abc,1\n1600,6,2\n"))


def test_write_curve_round_trip(tmp_path, f3):
    out = tmp_path / "norm.csv"
    write_curve(f3, out)
    assert ingest_thrust_stand(out) == f3


# --- queries on F3 --------------------------------------------------------------

def test_f3_knots(f3):
    assert f3.thrust_at_pwm(1300) == 1.3
    assert f3.power_at_pwm(1600) == 600
    assert f3.pwm_for_thrust(1.3) == 1300
    assert f3.power_for_thrust(1.3) == 250


def test_f3_linear_midpoints(f3):
    assert f3.thrust_at_pwm(1150) == pytest.approx(0.65)
    assert f3.power_at_pwm(1450) == pytest.approx(425)
    assert f3.pwm_for_thrust(0.65) == pytest.approx(1150, abs=0.1)
    assert f3.power_for_thrust(0.65) == pytest.approx(127.5)


def test_f3_domain_errors(f3):
    with pytest.raises(OutOfDomainError):
        f3.thrust_at_pwm(900)
    with pytest.raises(OutOfDomainError):
        f3.power_at_pwm(1700)
    with pytest.raises(InsufficientThrustError, match="cannot produce") as err:
        f3.power_for_thrust(3.0)
    assert err.value.deficit == pytest.approx(0.6)


def test_below_minimum_thrust():
    c = MotorCurve(((1000, 5, 0.2), (1300, 250, 1.3), (1600, 600, 2.4)))
    with pytest.raises(OutOfDomainError, match="below"):
        c.pwm_for_thrust(0.1)


def test_flat_thrust_gives_smallest_pwm():
    c = MotorCurve(((1000, 5, 0.0), (1100, 20, 0.5), (1200, 40, 0.5), (1300, 80, 1.0)))
    assert c.pwm_for_thrust(0.5) == 1100
    assert c.with_kind("monotone-cubic").pwm_for_thrust(0.5) == 1100


def test_cubic_mode_knot_and_inverse(f3_cubic):
    assert f3_cubic.thrust_at_pwm(1300) == 1.3
    p = f3_cubic.pwm_for_thrust(0.65)
    assert f3_cubic.thrust_at_pwm(p) == pytest.approx(0.65, abs=1e-9)


@st.composite
def curves(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    kind = draw(st.sampled_from(["linear", "monotone-cubic"]))
    samples = random_samples(np.random.default_rng(seed), strict_thrust=False,
                             allow_flat=True)
    return samples, kind


@settings(max_examples=150, deadline=None)
@given(curves(), st.lists(st.floats(0, 1), min_size=2, max_size=20))
def test_queries_match_independent_oracle(data, fractions):
    samples, kind = data
    curve = MotorCurve(tuple(samples), kind)
    oracle = CurveOracle(samples, kind)
    lo, hi = curve.domain
    for f in fractions:
        p = lo + f * (hi - lo)
        assert curve.thrust_at_pwm(p) == pytest.approx(oracle.thrust_at(p), rel=1e-9, abs=1e-12)
        assert curve.power_at_pwm(p) == pytest.approx(oracle.power_at(p), rel=1e-9, abs=1e-12)
        t = oracle.thrust[0] + f * (oracle.thrust[-1] - oracle.thrust[0])
        got = curve.pwm_for_thrust(t)
        assert curve.thrust_at_pwm(got) == pytest.approx(t, abs=1e-9)
        if kind == "linear":
            assert got == pytest.approx(oracle.pwm_for(t), abs=1e-6)
