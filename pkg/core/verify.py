"""
Verification Checks

Named checks behind `coinvkit verify`. Metadata (group, description,
restrictions) lives in config/checks.yaml; the check bodies are registered
here with the @check decorator. A check collects counterexamples instead of
raising, so one run reports every failure. A hit resource cap still
aborts the run.
"""

import logging
import math
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import yaml

from .combinatorics import (
    OrderedSetPartition,
    comaj_face,
    comaj_osp,
    descent_set,
    enumerate_osp,
    enumerate_words,
    format_osp,
    hrs_maj,
    hrs_weights,
    maj,
    parse_blocks,
    parse_osp,
    parse_face,
    parse_word,
)
from .env import Caps, coinvkit_root
from .errors import CoinvKitError, DomainError, ResourceLimitError
from .gs_basis import (
    Admissibility,
    GDPair,
    b_osp,
    b_word,
    classify_mu,
    gd_from_multichain,
    is_standard_monomial,
    tilde_b,
    tilde_b_gd,
    tilde_b_osp,
    tilde_b_prime,
)
from .monomials import (
    Setting,
    SparsePolynomial,
    Variant,
    multichain_preimage,
    multichains_up_to,
    mu_of_x,
    parse_xmonomial,
    parse_ymonomial,
    transfer_phi,
    ymonomial_key,
)
from .oracle import (
    expected_total,
    filtration_stratum_report,
    graded_character,
    graded_character_table,
    basis_mus,
    certify_standard_basis,
    hilbert_combinatorial,
    hilbert_oracle,
    in_ideal,
    multigraded_frobenius_oracle,
    oracle_normal_form,
)
from .rewrite import (
    STRATEGIES,
    normal_form_x,
    reduce_x_stratum,
    reduce_y,
    reduce_y_traced,
    x_move,
    y_move,
)
from .symmetric import (
    frobenius_from_characters,
    multigraded_frobenius_S,
    partitions_of,
    q_frobenius_formula,
    specialize,
)

logger = logging.getLogger(__name__)

checks_file = coinvkit_root / 'config' / 'checks.yaml'


@dataclass
class CheckContext:
    n: int
    k: int
    r: int
    variants: Tuple[Variant, ...] = (Variant.R, Variant.S)
    seed: int = 20240601
    caps: Caps = field(default_factory=Caps)
    options: Dict[str, Any] = field(default_factory=dict)

    def rng(self) -> random.Random:
        return random.Random(self.seed)


@dataclass
class CheckResult:
    name: str
    group: str
    passed: bool
    skipped: bool = False
    reason: str = ''
    details: Dict[str, Any] = field(default_factory=dict)
    counterexamples: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'group': self.group,
            'status': 'skipped' if self.skipped else ('pass' if self.passed else 'fail'),
            'reason': self.reason,
            'details': self.details,
            'counterexamples': self.counterexamples,
        }


class Collector:
    """Counterexample sink handed to each check body"""

    def __init__(self):
        self.failures: List[str] = []
        self.details: Dict[str, Any] = {}

    def expect(self, condition: bool, message: str) -> bool:
        if not condition:
            self.failures.append(message)
        return condition

    def equal(self, actual, expected, label: str) -> bool:
        return self.expect(actual == expected, f"{label}: got {actual}, expected {expected}")


CheckBody = Callable[[CheckContext, Collector], None]
_REGISTRY: Dict[str, CheckBody] = {}


def check(name: str) -> Callable[[CheckBody], CheckBody]:
    def register(body: CheckBody) -> CheckBody:
        _REGISTRY[name] = body
        return body
    return register


def load_check_config(path: Optional[Path] = None) -> Dict[str, Dict[str, Any]]:
    path = path or checks_file
    if not path.exists():
        return {name: {} for name in _REGISTRY}
    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f) or {}
    return data.get('checks') or {}


def available_checks() -> List[str]:
    config = load_check_config()
    return [name for name in config if name in _REGISTRY]


# ---------------------------------------------------------------------------
# Worked examples
# ---------------------------------------------------------------------------

@check('worked-statistics')
def _worked_statistics(ctx: CheckContext, out: Collector) -> None:
    w = parse_word('3^3 1^1 5^2 2^2 4^0', 5, 4)
    out.equal(set(descent_set(w)), {2, 3}, "Des(3^3 1^1 5^2 2^2 4^0)")
    out.equal(maj(w), 28, "maj(3^3 1^1 5^2 2^2 4^0)")
    g = parse_word('4^0 2^2 5^2 3^2 1^1', 5, 3)
    out.equal(set(descent_set(g)), {1, 3}, "Des(4^0 2^2 5^2 3^2 1^1)")
    out.equal(maj(g), 19, "maj(4^0 2^2 5^2 3^2 1^1)")

    p = parse_osp('(4^3 2^2 3^2 9^1 6^1 1^0 5^2 7^2 8^1; 3,2)', 9, 4)
    out.equal(set(descent_set(p.word)), {4, 6}, "Des(4^3 2^2 3^2 9^1 6^1 1^0 5^2 7^2 8^1)")
    out.equal(comaj_osp(p), 74, "comaj of the nine-letter example")

    face = parse_face('({1,4}; 5^2 2^1 3^1 7^2 6^0; 2)', 7, 3)
    out.equal(comaj_face(face, 7, 3, 3), 39, "comaj of ({1,4}, 5^2 2^1 3^1 7^2 6^0, (2))")

    hrs = parse_blocks('24|6|1|357', 7, 1)
    out.equal((hrs.word.perm, hrs.lam), ((2, 4, 6, 1, 3, 5, 7), (1, 1)), "blocks 24|6|1|357")
    out.equal(hrs_weights(hrs, 4), (0, 1, 2, 3, 3, 3, 4), "hrs weight sequence")
    out.equal(comaj_osp(hrs), 3 * 3 + 6 - hrs_maj(hrs, 4), "comaj against hrs_maj")


@check('descent-monomials')
def _descent_monomials(ctx: CheckContext, out: Collector) -> None:
    g = parse_word('4^0 2^2 5^2 3^2 1^1', 5, 3)
    out.equal(tilde_b(g), parse_ymonomial('y{4}*y{2,4,5}^3*y{2,3,4,5}*y{1,2,3,4,5}', 5),
              "tilde_b(4^0 2^2 5^2 3^2 1^1)")
    h = parse_word('4^2 1^0 3^0 2^2 6^2 5^1', 6, 3)
    y = parse_ymonomial('y{4}^5*y{1,3,4}^7*y{1,2,3,4,6}*y{1,2,3,4,5,6}^4', 6)
    out.equal(tilde_b_gd(GDPair(h, (1, 0, 2, 0, 0, 1))), y, "tilde_b_gd of the six-letter example")

    word = parse_word('4^3 2^2 3^2 9^1 6^1 1^0 5^2 7^2 8^1', 9, 4)
    out.equal(b_word(word), parse_xmonomial('x4^11*x2^10*x3^10*x9^9*x6^5*x1^4*x5^2*x7^2*x8', 9),
              "b_g of the nine-letter example")
    p = OrderedSetPartition(word, (3, 2))
    b = b_osp(p)
    out.equal(b, parse_xmonomial('x4^19*x2^18*x3^14*x9^9*x6^5*x1^4*x5^2*x7^2*x8', 9),
              "b_(g, lambda) of the nine-letter example")
    out.equal(b.degree, comaj_osp(p), "deg b_(g, lambda) = comaj")
    out.equal(transfer_phi(tilde_b_osp(p), 9), b, "phi(tilde_b) = b")


@check('gd-bijection')
def _gd_bijection(ctx: CheckContext, out: Collector) -> None:
    h = parse_word('4^2 1^0 3^0 2^2 6^2 5^1', 6, 3)
    y = parse_ymonomial('y{4}^5*y{1,3,4}^7*y{1,2,3,4,6}*y{1,2,3,4,5,6}^4', 6)
    out.equal(gd_from_multichain(y, 6, 3), GDPair(h, (1, 0, 2, 0, 0, 1)), "gd of the six-letter example")
    total = ctx.options.get('d_total', 3)
    checked = 0
    for word in enumerate_words(ctx.n, ctx.r):
        for d in _vectors(ctx.n, total):
            pair = GDPair(word, d)
            back = gd_from_multichain(tilde_b_gd(pair), ctx.n, ctx.r)
            checked += 1
            if not out.expect(back == pair, f"round trip of {pair} gave {back}"):
                return
    out.details['pairs'] = checked


def _vectors(length: int, total: int) -> Iterable[Tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _vectors(length - 1, total - first):
            yield (first,) + rest


_EXAMPLE_Y = 'y{5}^3*y{2,5}^2*y{1,2,3,5}^2'
_EXAMPLE_X = 'x5^7*x2^4*x1^2*x3^2'


@check('rewrite-example')
def _rewrite_example(ctx: CheckContext, out: Collector) -> None:
    n, k, r = 5, 4, 2
    y = parse_ymonomial(_EXAMPLE_Y, n)
    out.expect(not is_standard_monomial(y, n, k, r, Variant.S), f"{y} should not be standard")
    trace = reduce_y_traced(y, n, k, r, Variant.S)
    out.equal(len(trace.steps), 2, "number of moves")
    first = SparsePolynomial({parse_ymonomial('y{5}^3*y{2,5}^2*y{1,2,4,5}^2', n): -1,
                              parse_ymonomial('y{5}^3*y{2,5}^2*y{2,3,4,5}^2', n): -1})
    second = SparsePolynomial({parse_ymonomial('y{5}^3*y{3,5}^2*y{2,3,4,5}^2', n): 1,
                               parse_ymonomial('y{5}^3*y{4,5}^2*y{2,3,4,5}^2', n): 1})
    if len(trace.steps) == 2:
        out.equal(trace.steps[0].state, first, "first congruence")
        out.equal(trace.steps[0].replacement, y_move(y, trace.steps[0].moved, n, r), "first move")
    final = SparsePolynomial({parse_ymonomial('y{5}^3*y{2,5}^2*y{1,2,4,5}^2', n): -1}) + second
    out.equal(trace.final, final, "standard expansion")

    m = parse_xmonomial(_EXAMPLE_X, n)
    moved = x_move(m, 0b10111, n, r)
    expected_move = SparsePolynomial({
        parse_xmonomial('x5^7*x2^4*x1^2*x4^2', n): -1,
        parse_xmonomial('x5^7*x2^4*x3^2*x4^2', n): -1,
        parse_xmonomial('x5^7*x1^2*x2^2*x3^2*x4^2', n): -1,
        parse_xmonomial('x5^5*x2^4*x1^2*x3^2*x4^2', n): -1,
    })
    out.equal(moved, expected_move, "four-term x-move")
    higher = sorted({mu_of_x(t) for t in moved.monomials() if mu_of_x(t) != mu_of_x(m)})
    out.equal(higher, [(5, 5, 1, 1, 1, 1, 1), (5, 5, 2, 2, 1)], "higher mu-partitions")
    same, _ = reduce_x_stratum(m, n, k, r, Variant.S)
    expected_same = SparsePolynomial({
        parse_xmonomial('x5^7*x2^4*x1^2*x4^2', n): -1,
        parse_xmonomial('x5^7*x3^4*x2^2*x4^2', n): 1,
        parse_xmonomial('x5^7*x4^4*x2^2*x3^2', n): 1,
    })
    out.equal(same, expected_same, "same-mu x-expansion")


@check('admissibility-examples')
def _admissibility_examples(ctx: CheckContext, out: Collector) -> None:
    cases = [
        ((5, 5, 2, 2, 2), Admissibility.ADMISSIBLE, Admissibility.ADMISSIBLE),
        ((6, 5, 5, 5, 1), Admissibility.SEMI_ADMISSIBLE, Admissibility.SEMI_ADMISSIBLE),
        ((6, 5, 4, 4, 2, 2, 2, 1), Admissibility.NON_ADMISSIBLE, Admissibility.NON_ADMISSIBLE),
        ((6, 6, 2), Admissibility.NON_ADMISSIBLE, Admissibility.NON_ADMISSIBLE),
        ((6, 5, 5, 2, 2, 2), Admissibility.NON_ADMISSIBLE, Admissibility.ADMISSIBLE),
    ]
    for mu, for_s, for_r in cases:
        out.equal(classify_mu(mu, 6, 3, 2, Variant.S), for_s, f"{mu} for S(6,3)")
        out.equal(classify_mu(mu, 6, 3, 2, Variant.R), for_r, f"{mu} for R(6,3)")


# ---------------------------------------------------------------------------
# Oracle comparisons
# ---------------------------------------------------------------------------

@check('hilbert-agreement')
def _hilbert_agreement(ctx: CheckContext, out: Collector) -> None:
    for variant in ctx.variants:
        expected = hilbert_combinatorial(ctx.n, ctx.k, ctx.r, variant)
        for setting in (Setting.X, Setting.Y):
            report = hilbert_oracle(ctx.n, ctx.k, ctx.r, variant, setting, ctx.caps)
            out.equal(report.series(), expected, f"{variant.value} {setting.value}-side Hilbert series")
            out.equal(report.total, expected_total(ctx.n, ctx.k, ctx.r, variant),
                      f"{variant.value} {setting.value}-side total dimension")
        out.details[variant.value] = [int(c) for c in reversed(expected.all_coeffs())]


@check('standard-basis')
def _standard_basis(ctx: CheckContext, out: Collector) -> None:
    for variant in ctx.variants:
        report = certify_standard_basis(ctx.n, ctx.k, ctx.r, variant, ctx.caps)
        out.failures.extend(f"{variant.value}: {c}" for c in report.counterexamples)
        out.details[f"{variant.value}_witnesses"] = report.witnesses_checked


@check('comaj-hrs')
def _comaj_hrs(ctx: CheckContext, out: Collector) -> None:
    n = ctx.n
    checked = 0
    for k in range(1, n + 1):
        offset = (n - k) * (k - 1) + k * (k - 1) // 2
        for p in enumerate_osp(n, k, 1):
            checked += 1
            if not out.equal(comaj_osp(p), offset - hrs_maj(p, k), f"comaj of {format_osp(p)} (k={k})"):
                return
    out.details['partitions'] = checked


@check('module-isomorphism')
def _module_isomorphism(ctx: CheckContext, out: Collector) -> None:
    n, k = ctx.n, ctx.k
    identity = (1,) * n
    for variant in ctx.variants:
        for cls in partitions_of(n):
            x_side = graded_character(n, k, variant, Setting.X, cls, caps=ctx.caps)
            y_side = graded_character(n, k, variant, Setting.Y, cls, caps=ctx.caps)
            out.equal(x_side, y_side, f"{variant.value} graded character on class {cls}")
            if n == k and variant is Variant.S:
                # S_{n,n} carries the regular representation
                expected = math.factorial(n) if cls == identity else 0
                out.equal(sum(y_side), expected, f"ungraded character on class {cls}")
        for mu in basis_mus(n, k, 1, variant):
            x_report = filtration_stratum_report(n, k, variant, Setting.X, mu)
            y_report = filtration_stratum_report(n, k, variant, Setting.Y, mu)
            out.equal(x_report.characters, y_report.characters, f"{variant.value} stratum {mu}")


@check('frobenius')
def _frobenius(ctx: CheckContext, out: Collector) -> None:
    n, k = ctx.n, ctx.k
    bound = ctx.caps.symmetric
    series = multigraded_frobenius_S(n, k, bound)
    formula = q_frobenius_formula(n, k, bound)
    out.equal(specialize(series, bound), formula, "specialized multigraded series")
    table = graded_character_table(n, k, Variant.S, Setting.Y, caps=ctx.caps)
    out.equal(frobenius_from_characters(table, n, bound), formula, "Frobenius from characters")
    out.equal(multigraded_frobenius_oracle(n, k), series.to_schur(bound), "multigraded series by strata")
    out.expect(formula.is_schur_positive(), "Frobenius series is not Schur positive")


@check('unitriangularity')
def _unitriangularity(ctx: CheckContext, out: Collector) -> None:
    n, k, r = ctx.n, ctx.k, ctx.r
    max_degree = ctx.options.get('max_degree', 6)
    rows = 0
    for word in enumerate_words(n, r):
        base = tilde_b(word).degree
        if base > max_degree:
            continue
        for d in _vectors(n, (max_degree - base) // r):
            pair = GDPair(word, d)
            expansion = tilde_b_prime(pair, k)
            lead, coeff = expansion.leading_term()
            target = tilde_b_gd(pair)
            rows += 1
            out.expect(lead == target and coeff == 1,
                       f"tilde_b_prime{pair} leads with {coeff}*{lead}, expected {target}")
            out.expect(all(m.degree == target.degree for m in expansion.monomials()),
                       f"tilde_b_prime{pair} is not homogeneous")
    out.details['rows'] = rows


# ---------------------------------------------------------------------------
# Rewrite engine properties
# ---------------------------------------------------------------------------

def _sample_multichains(ctx: CheckContext, variant: Variant) -> List:
    bound = variant.multichain_bound(ctx.k, ctx.r)
    pool = sorted(multichains_up_to(ctx.n, max(bound - 1, 0)), key=ymonomial_key)
    count = min(len(pool), ctx.options.get('samples', 30))
    return ctx.rng().sample(pool, count)


@check('rewrite-confluence')
def _rewrite_confluence(ctx: CheckContext, out: Collector) -> None:
    for variant in ctx.variants:
        for y in _sample_multichains(ctx, variant):
            results = {s: reduce_y(y, ctx.n, ctx.k, ctx.r, variant, s) for s in STRATEGIES}
            reference = results['largest']
            for strategy, result in results.items():
                out.equal(result, reference, f"{variant.value} {y} with strategy {strategy}")


@check('rewrite-soundness')
def _rewrite_soundness(ctx: CheckContext, out: Collector) -> None:
    n, k, r = ctx.n, ctx.k, ctx.r
    for variant in ctx.variants:
        for y in _sample_multichains(ctx, variant):
            reduced = reduce_y(y, n, k, r, variant)
            out.expect(in_ideal(SparsePolynomial.monomial(y) - reduced, n, k, r, variant, Setting.Y, ctx.caps),
                       f"{variant.value}: {y} minus its expansion is not in the ideal")
            out.equal(reduced, oracle_normal_form(y, n, k, r, variant, Setting.Y, ctx.caps),
                      f"{variant.value}: y-expansion of {y} against the oracle")

            m = transfer_phi(y, n)
            normal = normal_form_x(m, n, k, r, variant)
            out.expect(in_ideal(SparsePolynomial.monomial(m) - normal, n, k, r, variant, Setting.X, ctx.caps),
                       f"{variant.value}: {m} minus its normal form is not in the ideal")
            out.equal(normal, oracle_normal_form(m, n, k, r, variant, Setting.X, ctx.caps),
                      f"{variant.value}: x normal form of {m} against the oracle")

            if classify_mu(mu_of_x(m), n, k, r, variant) is Admissibility.ADMISSIBLE:
                same, _ = reduce_x_stratum(m, n, k, r, variant)
                mirrored = reduce_y(multichain_preimage(m), n, k, r, variant).map_monomials(
                    lambda t: transfer_phi(t, n))
                out.equal(same, mirrored, f"{variant.value}: stratum mirroring for {m}")


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    parameters: Dict[str, Any]
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'parameters': self.parameters,
            'checks': [r.to_dict() for r in self.results],
            'passed': self.passed,
        }


def run_check(name: str, ctx: CheckContext, meta: Optional[Dict[str, Any]] = None) -> CheckResult:
    if name not in _REGISTRY:
        raise DomainError(f"unknown check {name!r}; available: {', '.join(sorted(_REGISTRY))}")
    meta = meta or {}
    group = meta.get('group', '')
    if meta.get('r1_only') and ctx.r != 1:
        return CheckResult(name, group, True, skipped=True, reason='defined for r = 1 only')
    if 'max_n' in meta and ctx.n > meta['max_n']:
        return CheckResult(name, group, True, skipped=True, reason=f"n above {meta['max_n']}")
    options = {key: value for key, value in meta.items()
               if key not in ('group', 'description', 'r1_only', 'max_n')}
    run_ctx = CheckContext(ctx.n, ctx.k, ctx.r, ctx.variants, ctx.seed, ctx.caps,
                           {**options, **ctx.options})
    out = Collector()
    try:
        _REGISTRY[name](run_ctx, out)
    except ResourceLimitError:
        raise
    except CoinvKitError as e:
        out.failures.append(f"{type(e).__name__}: {e}")
    result = CheckResult(name, group, not out.failures, details=out.details,
                         counterexamples=out.failures)
    logger.info("check %s: %s", name, 'pass' if result.passed else 'FAIL')
    return result


def run_checks(names: Sequence[str], ctx: CheckContext) -> VerificationReport:
    config = load_check_config()
    report = VerificationReport({
        'n': ctx.n, 'k': ctx.k, 'r': ctx.r,
        'variants': [v.value for v in ctx.variants], 'seed': ctx.seed,
    })
    for name in names:
        report.results.append(run_check(name, ctx, config.get(name)))
    return report
