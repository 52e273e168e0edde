import numpy as np
import pytest

from qhc_gates.data import builtin_table
from qhc_gates.synthesis import synthesize


@pytest.fixture
def half_adder_table():
    return builtin_table("half-adder")


@pytest.fixture
def full_adder_table():
    return builtin_table("full-adder")


@pytest.fixture
def main_text_full_adder_table():
    return builtin_table("full-adder-main-text")


@pytest.fixture
def half_adder_gate(half_adder_table):
    return synthesize(half_adder_table)


@pytest.fixture
def full_adder_gate(full_adder_table):
    return synthesize(full_adder_table)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
