from fractions import Fraction

import pytest
import sympy

from core.errors import DecompositionError, DomainError, ResourceLimitError
from core.monomials import Setting, Variant
from core.oracle import graded_character_table, multigraded_frobenius_oracle
from core.symmetric import (
    Composition,
    SchurVector,
    character_value,
    class_representative,
    class_size,
    compositions,
    decompose_class_function,
    frobenius_from_characters,
    gaussian,
    hook_dimension,
    kostka,
    multigraded_frobenius_S,
    partitions_of,
    q,
    q_binomial,
    q_frobenius_formula,
    refines,
    ribbon_to_schur,
    schur_dimension,
    specialize,
    t_symbols,
)


def test_compositions():
    alpha = Composition.from_descent_set([1, 3], 4)
    assert alpha.parts == (1, 2, 1)
    assert alpha.maj == 4
    assert len(list(compositions(4))) == 8
    assert refines(Composition((3, 1)), alpha)
    assert not refines(Composition((2, 2)), alpha)
    with pytest.raises(DomainError):
        Composition.from_descent_set([4], 4)


def test_partitions_of():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_kostka_numbers():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (2, 1)) == 1
    assert kostka((1, 1, 1), (2, 1)) == 0


def test_ribbons():
    s21 = SchurVector({(2, 1): 1})
    assert ribbon_to_schur(Composition((1, 2))) == s21
    assert ribbon_to_schur(Composition((2, 1))) == s21
    assert ribbon_to_schur(Composition((1, 1, 1))) == SchurVector({(1, 1, 1): 1})


def test_gaussian_binomials():
    assert q_binomial(2, 2).all_coeffs() == [1, 1, 2, 1, 1]
    assert gaussian(3, 4).is_zero
    assert gaussian(4, 0) == sympy.Poly(1, q)


def test_q_frobenius_of_full_quotient():
    expected = SchurVector({(3,): 1, (2, 1): q + q ** 2, (1, 1, 1): q ** 3})
    formula = q_frobenius_formula(3, 3)
    assert formula == expected
    assert formula.is_schur_positive()
    assert formula.to_json()[1] == {'partition': [2, 1], 'poly': [0, 1, 1]}
    assert sympy.expand(schur_dimension(formula) - (1 + 2 * q + 2 * q ** 2 + q ** 3)) == 0


def test_multigraded_series():
    t1 = t_symbols(2)[0]
    series = multigraded_frobenius_S(2, 2)
    assert series.to_schur() == SchurVector({(2,): 1, (1, 1): t1})
    assert specialize(series) == q_frobenius_formula(2, 2)
    terms = series.multigraded_terms()
    assert [row['t_monomial'] for row in terms] == ['1', 't1']


@pytest.mark.parametrize('n,k', [(3, 1), (3, 2), (4, 2)])
def test_specialization_matches_formula(n, k):
    assert specialize(multigraded_frobenius_S(n, k)) == q_frobenius_formula(n, k)


@pytest.mark.slow
@pytest.mark.parametrize('k', range(1, 6))
def test_specialization_matches_formula_at_five(k):
    formula = q_frobenius_formula(5, k)
    assert specialize(multigraded_frobenius_S(5, k)) == formula
    assert formula.is_schur_positive()


@pytest.mark.slow
@pytest.mark.parametrize('n,k', [(n, k) for n in range(1, 5) for k in range(1, n + 1)])
def test_frobenius_from_characters_sweep(n, k):
    table = graded_character_table(n, k, Variant.S, Setting.Y)
    assert frobenius_from_characters(table) == q_frobenius_formula(n, k)


def test_symmetric_bound():
    with pytest.raises(ResourceLimitError):
        q_frobenius_formula(5, 2, bound=4)


def test_character_values():
    assert character_value((2, 1), (3,)) == -1
    assert character_value((2, 1), (1, 1, 1)) == 2
    assert character_value((2, 1), (2, 1)) == 0
    assert character_value((1, 1, 1), (2, 1)) == -1
    assert hook_dimension((3, 2)) == 5
    assert class_size((2, 1)) == 3
    assert class_representative((2, 1)) == (2, 1, 3)


def test_decomposition():
    regular = {(3,): Fraction(0), (2, 1): Fraction(0), (1, 1, 1): Fraction(6)}
    assert decompose_class_function(regular, 3) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    with pytest.raises(DecompositionError):
        decompose_class_function({(3,): 0, (2, 1): 0, (1, 1, 1): 1}, 3)
    with pytest.raises(DecompositionError):
        decompose_class_function({(3,): 1}, 3)


def test_not_schur_positive():
    assert not SchurVector({(2, 1): -q}).is_schur_positive()


def test_frobenius_from_characters():
    table = graded_character_table(3, 3, Variant.S, Setting.Y)
    assert frobenius_from_characters(table) == q_frobenius_formula(3, 3)


@pytest.mark.slow
def test_multigraded_series_by_strata():
    assert multigraded_frobenius_oracle(3, 2) == multigraded_frobenius_S(3, 2).to_schur()
