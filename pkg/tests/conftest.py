import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

from gkt import Game, Partition, ReductionSpec

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

MATCHING_PENNIES = Game.from_rows([[1, -1], [-1, 1]])
NESTED = Game.from_rows([[3, 0, -1, -1], [0, 3, -1, 2], [-1, -1, 3, 0], [-1, 2, 0, 3]])
DOMINATED = Game.from_rows([[1, -1], [-1, 1], [-5, -5]])

SPLIT_ROWS_SPEC = ReductionSpec(1, Partition(((0,), (1,))), Partition(((0, 1),)), ((1,), (1,)))
NESTED_BLOCKS = Partition(((0, 1), (2, 3)))
NESTED_SPEC = ReductionSpec(1, NESTED_BLOCKS, NESTED_BLOCKS, ((F(2, 3), F(1, 3)), (F(2, 3), F(1, 3))))
MP_MERGE_SPEC = ReductionSpec.elementary(2, 2, (0, 1), (F(1, 2), F(1, 2)))


@pytest.fixture
def data_dir():
    return DATA


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
