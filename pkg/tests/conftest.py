from __future__ import annotations

from pathlib import Path

import pytest

from hqcks import binmat

DATA = Path(__file__).parent / "data"


@pytest.fixture
def load_dense():
    return lambda name: binmat.read_dense(DATA / name)

ACCEPTANCE: dict[int, str] = {}


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
