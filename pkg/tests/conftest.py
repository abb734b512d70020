import pytest

from unrep.numerics import Tolerances, uniform_grid

# criterion number -> list of (ok, detail); filled by test_acceptance.py
ACCEPTANCE: dict = {}


def record(criterion: int, ok: bool, detail: str = "") -> None:
    ACCEPTANCE.setdefault(criterion, []).append((bool(ok), detail))


@pytest.fixture(scope="session")
def grid():
    return uniform_grid(400)


@pytest.fixture(scope="session")
def coarse():
    return uniform_grid(32)


@pytest.fixture(scope="session")
def tol():
    return Tolerances()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[k]
        ok = all(p[0] for p in parts)
        fails = [d for good, d in parts if not good]
        if fails:
            detail = f"{len(parts) - len(fails)}/{len(parts)} parts ok; " + "; ".join(fails)
        else:
            detail = "; ".join(d for _, d in parts if d)
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
