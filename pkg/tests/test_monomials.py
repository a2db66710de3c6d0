from fractions import Fraction

import pytest

from core.errors import DomainError, NotAMultichainError, NotApplicableError, ParseError
from core.monomials import (
    Setting,
    SparsePolynomial,
    Variant,
    XMonomial,
    YMonomial,
    act_x,
    act_y,
    chain_of,
    compare_yvars,
    conjugate,
    dominates,
    elementary_e,
    format_polynomial,
    ideal_generators,
    is_multichain,
    multichain_preimage,
    multichains,
    multichains_with_mu,
    mu_of_x,
    mu_of_y,
    parse_monomial,
    parse_xmonomial,
    parse_ymonomial,
    random_chooser,
    straighten,
    straighten_steps,
    strictly_dominates,
    subset_mask,
    theta,
    transfer_phi,
)


def y(text, n=5):
    return parse_ymonomial(text, n)


def test_variable_order():
    # larger sets first, then the set holding the smallest differing element
    assert compare_yvars(subset_mask([1, 2]), subset_mask([3])) == 1
    assert compare_yvars(subset_mask([1]), subset_mask([2])) == 1
    assert compare_yvars(subset_mask([1, 4]), subset_mask([2, 3])) == 1
    assert compare_yvars(subset_mask([2, 5]), subset_mask([2, 5])) == 0


def test_format_orders_factors():
    assert str(y('y{5}^3*y{2,5}^2*y{1,2,3,5}^2')) == 'y{1,2,3,5}^2*y{2,5}^2*y{5}^3'
    assert str(parse_xmonomial('x1^2*x3^2*x2^4*x5^7', 5)) == 'x5^7*x2^4*x1^2*x3^2'
    assert str(YMonomial.one()) == '1'


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_ymonomial('y{6}', 5)
    with pytest.raises(ParseError):
        parse_ymonomial('y{}', 5)
    with pytest.raises(ParseError):
        parse_xmonomial('x0^2', 5)
    with pytest.raises(ParseError):
        parse_monomial('z3', 5)


def test_parse_monomial_dispatch():
    assert isinstance(parse_monomial('x1*x2', 3), XMonomial)
    assert isinstance(parse_monomial('y{1}*y{1,2}', 3), YMonomial)
    assert parse_monomial('1', 3) == YMonomial.one()


def test_multichain_structure():
    chain = y('y{5}^3*y{2,5}^2*y{1,2,3,5}^2')
    assert is_multichain(chain)
    assert [e for _, e in chain_of(chain)] == [3, 2, 2]
    assert mu_of_y(chain) == (4, 4, 2, 2, 1, 1, 1)
    assert chain.degree == 7
    assert chain.deg_tilde == 15
    with pytest.raises(NotAMultichainError):
        chain_of(y('y{1,2}*y{2,3}'))


def test_transfer_and_preimage():
    chain = y('y{5}^3*y{2,5}^2*y{1,2,3,5}^2')
    image = transfer_phi(chain, 5)
    assert str(image) == 'x5^7*x2^4*x1^2*x3^2'
    assert mu_of_x(image) == mu_of_y(chain)
    assert multichain_preimage(image) == chain


def test_conjugate():
    assert conjugate((2, 4, 2, 0, 7)) == (4, 4, 2, 2, 1, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)


def test_straightening_keeps_the_image():
    tangled = y('y{1,2}*y{2,3}*y{1,4}^2')
    steps = straighten_steps(tangled)
    assert steps[0] == tangled
    assert is_multichain(steps[-1])
    assert transfer_phi(steps[-1], 5) == transfer_phi(tangled, 5)
    assert straighten(y('y{1,2}*y{2,3}')) == y('y{1,2,3}*y{2}')
    assert straighten(y('y{1}*y{2}')) == y('y{1,2}')


def test_straightening_is_choice_free():
    tangled = y('y{1,2}*y{2,3}*y{3,4}*y{1,5}')
    expected = straighten(tangled)
    for seed in range(5):
        assert straighten(tangled, random_chooser(seed)) == expected


def test_dominance():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert strictly_dominates((5, 5, 2, 2, 1), (4, 4, 2, 2, 1, 1, 1))
    assert not strictly_dominates((2, 2), (2, 2))
    with pytest.raises(DomainError):
        dominates((2,), (1,))


def test_symmetric_group_actions():
    assert act_x((2, 1, 3), parse_xmonomial('x1^2*x3', 3)) == parse_xmonomial('x2^2*x3', 3)
    assert act_y((2, 1, 3), parse_ymonomial('y{1,3}', 3)) == parse_ymonomial('y{2,3}', 3)


def test_quotient_and_divides():
    big = y('y{1}^2*y{1,2}')
    assert y('y{1}').divides(big)
    assert big.quotient(y('y{1}^2')) == y('y{1,2}')
    with pytest.raises(NotApplicableError):
        big.quotient(y('y{2}'))


def test_sparse_polynomial_arithmetic():
    a, b = y('y{1}'), y('y{2}')
    p = SparsePolynomial({a: 1, b: Fraction(1, 2)})
    assert (p - SparsePolynomial.monomial(a)) == SparsePolynomial({b: Fraction(1, 2)})
    assert not (p - p)
    assert p.leading_monomial() == a
    assert p.scale(0) == SparsePolynomial()
    assert format_polynomial(-p) == '-y{1} - 1/2*y{2}'
    with pytest.raises(DomainError):
        SparsePolynomial().leading_term()


def test_theta_and_elementary():
    assert theta(1, 2, 1) == SparsePolynomial({y('y{1}', 2): 1, y('y{2}', 2): 1})
    assert len(theta(2, 4, 3)) == 6
    assert len(elementary_e(2, 3, 2)) == 3
    with pytest.raises(DomainError):
        theta(3, 2, 1)


def test_multichain_enumeration():
    assert len(list(multichains(2, 1))) == 3
    assert len(list(multichains(2, 2))) == 5
    assert list(multichains(3, 0)) == [YMonomial.one()]
    assert len(list(multichains_with_mu((2, 1), 2))) == 2
    assert len(list(multichains_with_mu((2, 2, 1), 3))) == 6
    for mono in multichains_with_mu((3, 1, 1), 4):
        assert mu_of_y(mono) == (3, 1, 1)


def test_ideal_generators():
    x_side = list(ideal_generators(2, 1, 1, Variant.S, Setting.X))
    assert len(x_side) == 3
    y_side = list(ideal_generators(2, 1, 1, Variant.S, Setting.Y))
    assert len(y_side) == 5
    with pytest.raises(DomainError):
        list(ideal_generators(2, 3, 1, Variant.S, Setting.X))


def test_multichain_bounds():
    assert Variant.S.multichain_bound(4, 2) == 8
    assert Variant.R.multichain_bound(4, 2) == 9
