from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest

from severi import InvariantEngine
from severi.cli import main as cli_main

GOLDEN_PATH = Path(__file__).parent / "golden" / "invariants_d12.json"


@pytest.fixture(scope="session")
def golden() -> dict[str, dict[str, str]]:
    return json.loads(GOLDEN_PATH.read_text())


def golden_value(golden: dict, name: str, d: int) -> Fraction:
    return Fraction(golden[name][str(d)])


@pytest.fixture
def engine() -> InvariantEngine:
    return InvariantEngine()


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""

    def run(*argv: str) -> tuple[int, str, str]:
        code = cli_main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
