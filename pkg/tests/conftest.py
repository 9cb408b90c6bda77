import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []

# conditional-probability grid k/50 in [0, 1], i.e. joint targets k/100 in [0, 1/2]
GRID_STEPS = 51


@pytest.fixture(scope="session")
def target_grid_verdicts():
    """decide_feasibility over the full 51^3 target grid, computed once per session."""
    from bellcond.classical_fit import PairwiseTargets, decide_feasibility

    values = [Fraction(k, 100) for k in range(GRID_STEPS)]
    start = time.perf_counter()
    results = {}
    for p_ab in values:
        for p_bc in values:
            for p_ac in values:
                results[(p_ab, p_bc, p_ac)] = decide_feasibility(PairwiseTargets(p_ab, p_bc, p_ac))
    elapsed = time.perf_counter() - start
    return results, elapsed


@pytest.fixture
def record_criterion():
    def record(number: int, name: str, passed: bool, detail: str = ""):
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {name}" + (f" ({detail})" if detail else ""))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
