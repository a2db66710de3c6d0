import pytest

from core import verify
from core.errors import DomainError, NotApplicableError, ResourceLimitError
from core.verify import CheckContext, available_checks, load_check_config, run_check, run_checks

WORKED = ['worked-statistics', 'descent-monomials', 'rewrite-example', 'admissibility-examples']


@pytest.fixture
def ctx():
    return CheckContext(3, 2, 1)


def test_every_configured_check_is_registered():
    names = available_checks()
    assert len(names) == 13
    assert set(names) == set(load_check_config())
    assert names[0] == 'worked-statistics'


def test_worked_examples_pass(ctx):
    report = run_checks(WORKED, ctx)
    assert report.passed, [r.counterexamples for r in report.results]
    assert report.to_dict()['parameters']['variants'] == ['R', 'S']


@pytest.mark.parametrize('name', ['gd-bijection', 'hilbert-agreement', 'standard-basis', 'comaj-hrs',
                                  'module-isomorphism', 'frobenius', 'unitriangularity',
                                  'rewrite-confluence', 'rewrite-soundness'])
def test_property_checks_pass_on_small_parameters(name):
    meta = load_check_config().get(name)
    result = run_check(name, CheckContext(3, 2, 1, options={'samples': 5}), meta)
    assert result.passed, result.counterexamples


@pytest.mark.slow
@pytest.mark.parametrize('n,k,r', [(3, 3, 1), (3, 2, 2), (4, 2, 1)])
def test_all_checks_on_larger_parameters(n, k, r):
    report = run_checks(available_checks(), CheckContext(n, k, r))
    assert report.passed, [(res.name, res.counterexamples) for res in report.results]


def test_restricted_checks_are_skipped():
    result = run_check('comaj-hrs', CheckContext(3, 2, 2), {'r1_only': True})
    assert result.skipped and result.passed
    assert result.to_dict()['status'] == 'skipped'
    result = run_check('gd-bijection', CheckContext(6, 2, 1), {'max_n': 5})
    assert result.skipped


def test_unknown_check(ctx):
    with pytest.raises(DomainError):
        run_check('no-such-check', ctx)


def test_failures_are_collected(ctx, monkeypatch):
    def body(run_ctx, out):
        out.expect(False, 'first')
        out.equal(1, 2, 'second')

    monkeypatch.setitem(verify._REGISTRY, 'always-fails', body)
    result = run_check('always-fails', ctx, {'group': 'test'})
    assert not result.passed
    assert result.counterexamples == ['first', 'second: got 1, expected 2']
    assert result.to_dict()['status'] == 'fail'


def test_errors_inside_a_check_become_failures(ctx, monkeypatch):
    def body(run_ctx, out):
        raise NotApplicableError('cannot move')

    monkeypatch.setitem(verify._REGISTRY, 'raises', body)
    result = run_check('raises', ctx)
    assert result.counterexamples == ['NotApplicableError: cannot move']


def test_options_reach_the_check(ctx, monkeypatch):
    seen = {}

    def body(run_ctx, out):
        seen.update(run_ctx.options)

    monkeypatch.setitem(verify._REGISTRY, 'options', body)
    run_check('options', ctx, {'group': 'g', 'description': 'd', 'samples': 7})
    assert seen == {'samples': 7}


def test_missing_config_falls_back_to_registry(tmp_path):
    config = load_check_config(tmp_path / 'checks.yaml')
    assert set(config) == set(verify._REGISTRY)
    assert all(meta == {} for meta in config.values())


def test_resource_limits_abort_the_run(ctx, monkeypatch):
    def body(run_ctx, out):
        raise ResourceLimitError('slice too large')

    monkeypatch.setitem(verify._REGISTRY, 'too-big', body)
    with pytest.raises(ResourceLimitError):
        run_check('too-big', ctx)


@pytest.mark.slow
@pytest.mark.parametrize('n,k,r', [(n, k, r) for r in (1, 2) for n in range(1, 4) for k in range(1, n + 1)])
def test_unitriangularity_sweep(n, k, r):
    result = run_check('unitriangularity', CheckContext(n, k, r), {'max_degree': 6})
    assert result.passed, result.counterexamples
    assert result.details['rows'] > 0
