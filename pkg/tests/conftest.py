import pathlib

import pytest

from rvacheck import parse_automaton

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIG2_PATH = ROOT / "data" / "fig2.rva"


@pytest.fixture(scope="session")
def fig2():
    return parse_automaton(FIG2_PATH.read_text())


@pytest.fixture(scope="session")
def fig2_text():
    return FIG2_PATH.read_text()
