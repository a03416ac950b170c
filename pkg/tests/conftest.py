from pathlib import Path

import pytest

from borromean.links import parse_pd
from borromean.presentation import parse_presentation

DATA = Path(__file__).resolve().parent.parent / "src" / "borromean" / "data"


def load_pd(name):
    return parse_pd((DATA / name).read_text())


def load_pres(name):
    return parse_presentation((DATA / name).read_text())


@pytest.fixture
def borromean():
    return load_pd("borromean.pd")


@pytest.fixture
def unlink3():
    return load_pd("unlink3.pd")


@pytest.fixture
def unknot():
    return load_pd("unknot.pd")


@pytest.fixture
def poincare():
    return load_pres("poincare.pres")


@pytest.fixture
def poincare_ab():
    return load_pres("poincare_ab.pres")


@pytest.fixture
def puzzle():
    return load_pres("puzzle.pres")
