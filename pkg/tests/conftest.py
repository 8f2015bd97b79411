import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from uav_sizer import MotorCurve, datasets  # noqa: E402

F3_SAMPLES = ((1000, 5, 0.0), (1300, 250, 1.3), (1600, 600, 2.4))


@pytest.fixture
def f3():
    return MotorCurve(F3_SAMPLES)


@pytest.fixture
def f3_cubic():
    return MotorCurve(F3_SAMPLES, "monotone-cubic")


@pytest.fixture(scope="session")
def monarch_curve():
    return datasets.monarch_curve()


@pytest.fixture(scope="session")
def monarch_design():
    return datasets.monarch_design()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return p
    return _write


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
