from pathlib import Path

import pytest

from origami_mv.crease_model import parse_cpt
from origami_mv.example_data import sample_single_crease_cpt
from origami_mv.generators import gen_miura, gen_square_twist

GOLDEN_DIR = Path(__file__).parent / "golden"


def read_golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


@pytest.fixture
def miura_2x2():
    return gen_miura(2, 2)


@pytest.fixture
def miura_3x3():
    return gen_miura(3, 3)


@pytest.fixture
def twist_1x1():
    return gen_square_twist(1, 1)


@pytest.fixture
def single_crease():
    pattern, mv = parse_cpt(sample_single_crease_cpt)
    return pattern, mv


@pytest.fixture
def golden():
    return read_golden
