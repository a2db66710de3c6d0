"""Shared fixtures for the CoinvKit test suite"""

import pytest
from click.testing import CliRunner

from core.combinatorics import OrderedSetPartition, parse_word
from core.env import Caps
from core.monomials import parse_ymonomial


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def caps():
    return Caps(degree=20, slice=50000, symmetric=6)


@pytest.fixture
def nine_letter_word():
    """4^3 2^2 3^2 9^1 6^1 1^0 5^2 7^2 8^1 at r = 4"""
    return parse_word('4^3 2^2 3^2 9^1 6^1 1^0 5^2 7^2 8^1', 9, 4)


@pytest.fixture
def nine_letter_osp(nine_letter_word):
    return OrderedSetPartition(nine_letter_word, (3, 2))


@pytest.fixture
def two_move_monomial():
    """Non-standard monomial of S_{5,4} at r = 2 that needs two moves"""
    return parse_ymonomial('y{5}^3*y{2,5}^2*y{1,2,3,5}^2', 5)
