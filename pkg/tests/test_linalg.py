from fractions import Fraction

import pytest

from core.errors import CertificationError, DomainError
from core.linalg import EchelonBasis, rank_of


def column(c):
    return c


@pytest.fixture
def tracked():
    basis = EchelonBasis(column, track=True)
    basis.add({'a': 1, 'b': 1}, label='first')
    basis.add({'b': 1, 'c': 1}, label='second')
    return basis


def test_dependent_rows_are_rejected(tracked):
    assert not tracked.add({'a': 1, 'c': -1}, label='third')
    assert tracked.rank == 2
    assert tracked.pivots == ['c', 'b']


def test_reduce_and_contains(tracked):
    assert tracked.contains({'a': 2, 'b': 3, 'c': 1})
    assert tracked.reduce({'a': 1}) == {'a': Fraction(1)}
    assert not tracked.contains({'c': 1, 'a': 2})


def test_express(tracked):
    assert tracked.express({'a': 2, 'b': 3, 'c': 1}) == {'first': 2, 'second': 1}
    with pytest.raises(CertificationError):
        tracked.express({'a': 1})


def test_express_needs_tracking():
    basis = EchelonBasis(column)
    basis.add({'a': 1})
    with pytest.raises(DomainError):
        basis.express({'a': 1})


def test_rank_of():
    rows = [{'a': 1, 'b': 2}, {'a': 2, 'b': 4}, {'c': Fraction(1, 3)}]
    assert rank_of(rows, column) == 2
    assert rank_of([], column) == 0
