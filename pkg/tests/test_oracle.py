import pytest

from core.env import Caps
from core.errors import PatternMismatchError, ResourceLimitError, UnsupportedStatisticError
from core.gs_basis import enumerate_basis
from core.monomials import Setting, SparsePolynomial, Variant, parse_ymonomial, theta
from core.oracle import (
    _cached_oracle,
    basis_mus,
    certify_standard_basis,
    expected_total,
    filtration_stratum_report,
    graded_character,
    get_oracle,
    hilbert_combinatorial,
    hilbert_oracle,
    ideal_slice_dimension,
    in_ideal,
    leading_witness,
)


def coefficients(poly):
    return [int(c) for c in reversed(poly.all_coeffs())]


@pytest.mark.parametrize('setting', [Setting.X, Setting.Y])
def test_hilbert_series_of_full_quotient(setting, caps):
    report = hilbert_oracle(3, 3, 1, Variant.S, setting, caps)
    assert report.quotient_dims == [1, 2, 2, 1]
    assert report.total == 6
    assert report.top_degree == 3
    assert report.series() == hilbert_combinatorial(3, 3, 1, Variant.S)


@pytest.mark.parametrize('setting', [Setting.X, Setting.Y])
def test_hilbert_series_with_zero_block(setting, caps):
    assert coefficients(hilbert_combinatorial(2, 1, 1, Variant.R)) == [1, 2]
    assert hilbert_oracle(2, 1, 1, Variant.R, setting, caps).quotient_dims == [1, 2]


@pytest.mark.parametrize('setting', [Setting.X, Setting.Y])
def test_hilbert_series_for_k_zero(setting, caps):
    assert hilbert_oracle(3, 0, 1, Variant.R, setting, caps).quotient_dims == [1]
    assert coefficients(hilbert_combinatorial(3, 0, 1, Variant.R)) == [1]
    assert hilbert_oracle(3, 0, 1, Variant.S, setting, caps).total == 0
    assert hilbert_combinatorial(3, 0, 1, Variant.S).is_zero


@pytest.mark.parametrize('n,k,r,variant', [(3, 2, 2, Variant.S), (3, 2, 1, Variant.R)])
def test_hilbert_agreement_colored(n, k, r, variant, caps):
    expected = hilbert_combinatorial(n, k, r, variant)
    for setting in (Setting.X, Setting.Y):
        assert hilbert_oracle(n, k, r, variant, setting, caps).series() == expected


def test_ideal_slice_dimensions(caps):
    assert ideal_slice_dimension(2, 2, 1, Variant.S, Setting.X, 1, caps) == 1
    assert ideal_slice_dimension(2, 2, 1, Variant.S, Setting.Y, 1, caps) == 2
    assert ideal_slice_dimension(2, 2, 1, Variant.S, Setting.Y, 1, caps, grading='tilde') == 1
    assert ideal_slice_dimension(2, 2, 1, Variant.S, Setting.Y, 2, caps, grading='tilde') == 4


def test_membership(caps):
    assert in_ideal(theta(1, 2, 1), 2, 2, 1, Variant.S, Setting.Y, caps)
    assert in_ideal(parse_ymonomial('y{1,2}', 2), 2, 2, 1, Variant.S, Setting.Y, caps)
    assert not in_ideal(parse_ymonomial('y{1}', 2), 2, 2, 1, Variant.S, Setting.Y, caps)
    assert in_ideal(parse_ymonomial('y{1}*y{2}', 2), 2, 2, 1, Variant.S, Setting.Y, caps)


def test_leading_witness():
    witness = leading_witness(parse_ymonomial('y{1}', 2), 2, 2, 1, Variant.S)
    assert witness.leading_monomial() == parse_ymonomial('y{1}', 2)
    with pytest.raises(PatternMismatchError):
        leading_witness(parse_ymonomial('y{2}', 2), 2, 2, 1, Variant.S)


@pytest.mark.parametrize('n,k,r,variant', [
    (2, 2, 1, Variant.S), (3, 2, 1, Variant.R), (2, 1, 2, Variant.S),
])
def test_certification(n, k, r, variant, caps):
    report = certify_standard_basis(n, k, r, variant, caps)
    assert report.passed, report.counterexamples
    assert report.witnesses_checked > 0


def test_slice_cap():
    with pytest.raises(ResourceLimitError):
        hilbert_oracle(3, 3, 1, Variant.S, Setting.X, Caps(slice=1))


def test_degree_cap():
    with pytest.raises(ResourceLimitError):
        hilbert_oracle(3, 3, 1, Variant.S, Setting.X, Caps(degree=2))


@pytest.mark.parametrize('setting', [Setting.X, Setting.Y])
@pytest.mark.parametrize('reducer', ['rewrite', 'oracle'])
def test_graded_character_on_three_cycle(setting, reducer, caps):
    assert graded_character(3, 3, Variant.S, setting, (3,), reducer=reducer, caps=caps) == [1, -1, -1, 1]
    assert graded_character(3, 3, Variant.S, setting, (1, 1, 1), reducer=reducer, caps=caps) == [1, 2, 2, 1]


def test_characters_need_one_color():
    with pytest.raises(UnsupportedStatisticError):
        graded_character(2, 2, Variant.S, Setting.Y, (2,), r=2)


def test_filtration_strata_cover_the_basis():
    total = 0
    for mu in basis_mus(3, 2, 1, Variant.S):
        report = filtration_stratum_report(3, 2, Variant.S, Setting.Y, mu)
        assert report.characters[(1, 1, 1)] == report.dimension
        total += report.dimension
    assert total == 6


HILBERT_RANGE = [(n, k, r, variant)
                 for r, largest in ((1, 5), (2, 4), (3, 4))
                 for n in range(1, largest + 1)
                 for k in range(n + 1)
                 for variant in (Variant.R, Variant.S)]


@pytest.mark.slow
@pytest.mark.parametrize('n,k,r,variant', HILBERT_RANGE)
def test_hilbert_agreement_sweep(n, k, r, variant):
    expected = hilbert_combinatorial(n, k, r, variant)
    assert expected.eval(1) == expected_total(n, k, r, variant)
    for setting in (Setting.X, Setting.Y):
        assert hilbert_oracle(n, k, r, variant, setting, Caps()).series() == expected, setting


@pytest.mark.slow
@pytest.mark.parametrize('n,k,r,variant', [(n, k, r, variant)
                                           for r in (1, 2)
                                           for n in range(1, 5)
                                           for k in range(1, n + 1)
                                           for variant in (Variant.R, Variant.S)])
def test_standard_basis_sweep(n, k, r, variant):
    assert len(enumerate_basis(n, k, r, variant)) == expected_total(n, k, r, variant)
    report = certify_standard_basis(n, k, r, variant, Caps())
    assert report.passed, report.counterexamples


def test_oracles_are_shared_per_caps(caps):
    oracle = get_oracle(2, 2, 1, Variant.S, caps)
    assert get_oracle(2, 2, 1, 'S', caps) is oracle
    assert get_oracle(2, 2, 1, Variant.S, Caps(degree=5, slice=100, symmetric=4)) is not oracle
    assert _cached_oracle.cache_info().maxsize == 32
