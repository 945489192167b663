import sys

import pytest

from spreadpoly.context import PrecisionContext


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext()


@pytest.fixture(scope="session")
def fast_ctx():
    """Lower-precision context for sweeps where 1e-12-ish checks suffice."""
    return PrecisionContext(bits=128, rel_tol=1e-18)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion, when they ran."""
    mod = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance"
    )
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[k]
        word = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {k}: {word} — {detail}")
