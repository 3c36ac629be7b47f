import pytest
from hypothesis import HealthCheck, settings

from tilecoh.cohomology import cochain_complex
from tilecoh.complex_builder import sigma_complex
from tilecoh.order_invariant import ordered_invariant
from tilecoh.rule_format import fixture

settings.register_profile("tilecoh", deadline=None, max_examples=60, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("tilecoh")

GEOMETRIC = ["chair", "penrose_triangles", "pinwheel", "pinwheel_2_3", "square"]
FINITE_G = ["chair", "penrose_triangles", "square"]


@pytest.fixture(scope="session")
def systems():
    return {n: fixture(n) for n in GEOMETRIC + ["penrose_combinatorial"]}


def built(name, variant="0", collared=True):
    """Complexes are memoized by content inside the package, so repeated calls are free."""
    return sigma_complex(fixture(name), variant, collared).complex


def cochains(name, variant="0", collared=True):
    return cochain_complex(built(name, variant, collared))


_INV = {}


def invariant(name, variant="0", collared=True):
    key = (name, variant, collared)
    if key not in _INV:
        _INV[key] = ordered_invariant(built(name, variant, collared))
    return _INV[key]


# --------------------------------------------------------------------------
# one pass/fail line per acceptance criterion at the end of the run

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        num = report.nodeid.split("test_criterion_")[1].split("_")[0].rstrip("abcdefgh")
        ok = report.outcome == "passed"
        _ACCEPTANCE[num] = _ACCEPTANCE.get(num, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    from test_acceptance import CRITERIA
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE, key=int):
        verdict = "PASS" if _ACCEPTANCE[num] else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}  {CRITERIA[int(num)]}")
