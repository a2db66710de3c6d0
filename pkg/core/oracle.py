"""
Oracle Verifier Module

Exact linear algebra over the rationals, independent of the rewrite
engine: graded slices of the ideals, Hilbert series, certification of the
Garsia-Stanton set as the standard monomial basis, leading-monomial
witnesses for every forbidden pattern, graded characters (r = 1) and the
module-isomorphism comparisons built from them.

y-slices are taken per mu-partition: theta_i only mixes monomials with one
mu, and every other generator is a monomial. x-slices are taken per degree
on monomials with all exponents below the power bound.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import sympy

from .combinatorics import comaj_face, comaj_osp, count_faces, count_osp, enumerate_faces, enumerate_osp
from .env import Caps
from .errors import (
    CertificationError,
    DomainError,
    PatternMismatchError,
    ResourceLimitError,
    UnsupportedStatisticError,
)
from .gs_basis import (
    Admissibility,
    classify_mu,
    enumerate_basis,
    forbidden_patterns,
    iter_offenses,
    x_basis,
)
from .linalg import EchelonBasis
from .monomials import (
    Partition,
    Setting,
    SparsePolynomial,
    Variant,
    XMonomial,
    YMonomial,
    act_x,
    act_y,
    check_n,
    drop_non_multichain,
    elementary_e,
    mask_size,
    multichains_with_mu,
    mu_of_x,
    mu_of_y,
    theta,
    xmonomial_key,
    ymonomial_key,
)
from .rewrite import normal_form_x, reduce_x_stratum, reduce_y
from .symmetric import (
    GradedCharacter,
    SchurVector,
    check_partition,
    class_representative,
    decompose_class_function,
    partitions_of,
    q,
    t_symbols,
)

logger = logging.getLogger(__name__)

REDUCERS = ('rewrite', 'oracle')
GRADINGS = ('degree', 'tilde')


def _check_params(n: int, k: int, r: int) -> None:
    check_n(n)
    if not 0 <= k <= n:
        raise DomainError(f"k must satisfy 0 <= k <= n, got {k}")
    if r < 1:
        raise DomainError(f"r must be at least 1, got {r}")


def _bounded_monomials(n: int, degree: int, cap: int) -> Iterator[XMonomial]:
    """Degree-`degree` monomials in n variables with every exponent at most cap"""
    def build(position: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        if position == n - 1:
            if remaining <= cap:
                yield (remaining,)
            return
        for e in range(min(cap, remaining), -1, -1):
            for rest in build(position + 1, remaining - e):
                yield (e,) + rest

    if cap < 0:
        return
    for exps in build(0, degree):
        yield XMonomial(exps)


def partitions_bounded(total: int, max_part: int, max_length: int) -> Iterator[Partition]:
    """Partitions of total with parts <= max_part and at most max_length parts"""
    if total == 0:
        yield ()
        return
    if max_length <= 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_bounded(total - first, first, max_length - 1):
            yield (first,) + rest


@dataclass
class GradedDimensionReport:
    n: int
    k: int
    r: int
    variant: str
    setting: str
    rows: List[Tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def quotient_dims(self) -> List[int]:
        return [row[3] for row in self.rows]

    @property
    def total(self) -> int:
        return sum(self.quotient_dims)

    @property
    def top_degree(self) -> int:
        nonzero = [row[0] for row in self.rows if row[3]]
        return max(nonzero) if nonzero else -1

    def series(self) -> sympy.Poly:
        return sympy.Poly(sum((c * q ** d for d, c in enumerate(self.quotient_dims)),
                              sympy.Integer(0)), q)

    def to_dict(self) -> Dict[str, object]:
        return {
            'parameters': {'n': self.n, 'k': self.k, 'r': self.r,
                           'variant': self.variant, 'setting': self.setting},
            'degrees': [{'degree': d, 'monomials': m, 'ideal': i, 'quotient': c}
                        for d, m, i, c in self.rows],
            'total': self.total,
            'top_degree': self.top_degree,
        }


@dataclass
class CertificationReport:
    n: int
    k: int
    r: int
    variant: str
    degrees: List[Dict[str, object]] = field(default_factory=list)
    witnesses_checked: int = 0
    counterexamples: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> Dict[str, object]:
        return {
            'parameters': {'n': self.n, 'k': self.k, 'r': self.r, 'variant': self.variant},
            'degrees': self.degrees,
            'witnesses_checked': self.witnesses_checked,
            'passed': self.passed,
            'counterexamples': self.counterexamples,
        }


@dataclass
class StratumReport:
    mu: Partition
    setting: str
    admissibility: Admissibility
    dimension: int
    characters: Dict[Partition, Fraction] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:
        return {
            'mu': list(self.mu),
            'setting': self.setting,
            'admissibility': self.admissibility.value,
            'dimension': self.dimension,
            'characters': {','.join(map(str, c)): str(v) for c, v in self.characters.items()},
        }


class IdealOracle:
    """Cached slices of the ideal for one (n, k, r, variant)

    y_slice(mu) and x_slice(d) return the column list and an echelon basis
    whose pivots are the leading monomials of the ideal in that slice.
    """

    def __init__(self, n: int, k: int, r: int, variant: Variant, caps: Optional[Caps] = None):
        _check_params(n, k, r)
        self.n, self.k, self.r = n, k, r
        self.variant = Variant(variant)
        self.caps = caps or Caps.from_env()
        self.bound = self.variant.multichain_bound(k, r)
        self._y: Dict[Partition, Tuple[List[YMonomial], EchelonBasis]] = {}
        self._x: Dict[int, Tuple[List[XMonomial], EchelonBasis]] = {}
        self._gs_x: Dict[int, EchelonBasis] = {}

    def _check_slice(self, size: int, where: str) -> None:
        if size > self.caps.slice:
            raise ResourceLimitError(
                f"{where} has {size} monomials, above the slice cap {self.caps.slice}")

    # -- y-setting ---------------------------------------------------------

    def y_slice(self, mu: Partition) -> Tuple[List[YMonomial], EchelonBasis]:
        mu = tuple(sorted(mu, reverse=True))
        if mu in self._y:
            return self._y[mu]
        columns = list(multichains_with_mu(mu, self.n))
        self._check_slice(len(columns), f"y-slice mu={mu}")
        basis = EchelonBasis(ymonomial_key)
        if len(mu) >= self.bound:
            # every column is divisible by a multichain generator
            for y in columns:
                basis.add({y: 1})
        else:
            for i in range(self.n - self.k + 1, self.n + 1):
                if list(mu).count(i) < self.r:
                    continue
                smaller = list(mu)
                for _ in range(self.r):
                    smaller.remove(i)
                generator = theta(i, self.n, self.r)
                for m in multichains_with_mu(smaller, self.n):
                    basis.add(drop_non_multichain(generator.mul_monomial(m)).terms)
        logger.debug("y-slice %s: %d columns, rank %d", mu, len(columns), basis.rank)
        self._y[mu] = (columns, basis)
        return columns, basis

    def y_quotient_dimension(self, mu: Partition) -> int:
        columns, basis = self.y_slice(mu)
        return len(columns) - basis.rank

    def y_standard(self, mu: Partition) -> List[YMonomial]:
        columns, basis = self.y_slice(mu)
        return [y for y in columns if not basis.is_pivot(y)]

    def y_mus(self, tilde_degree: int) -> Iterator[Partition]:
        return partitions_bounded(tilde_degree, self.n, self.bound - 1)

    # -- x-setting ---------------------------------------------------------

    def x_slice(self, degree: int) -> Tuple[List[XMonomial], EchelonBasis]:
        if degree in self._x:
            return self._x[degree]
        cap = self.bound - 1
        columns = list(_bounded_monomials(self.n, degree, cap))
        self._check_slice(len(columns), f"x-slice degree {degree}")
        basis = EchelonBasis(xmonomial_key)
        for j in range(self.n - self.k + 1, self.n + 1):
            if degree - j * self.r < 0:
                continue
            generator = elementary_e(j, self.n, self.r)
            for m in _bounded_monomials(self.n, degree - j * self.r, cap):
                product = generator.mul_monomial(m)
                basis.add({t: c for t, c in product.items() if max(t.exps) <= cap})
        logger.debug("x-slice degree %d: %d columns, rank %d", degree, len(columns), basis.rank)
        self._x[degree] = (columns, basis)
        return columns, basis

    def x_quotient_dimension(self, degree: int) -> int:
        columns, basis = self.x_slice(degree)
        return len(columns) - basis.rank

    def x_remainder(self, poly: SparsePolynomial) -> Dict[XMonomial, Fraction]:
        """Remainder modulo the ideal, homogeneous input"""
        cap = self.bound - 1
        kept = {t: c for t, c in poly.items() if max(t.exps, default=0) <= cap}
        if not kept:
            return {}
        degrees = {t.degree for t in kept}
        if len(degrees) > 1:
            raise DomainError("x-side reduction expects a homogeneous polynomial")
        _, basis = self.x_slice(degrees.pop())
        return basis.reduce(kept)

    def gs_x_echelon(self, degree: int) -> EchelonBasis:
        """Tracked echelon of the remainders of the x-descent monomials of one degree"""
        if degree in self._gs_x:
            return self._gs_x[degree]
        basis = EchelonBasis(xmonomial_key, track=True)
        for m in sorted(x_basis(self.n, self.k, self.r, self.variant), key=xmonomial_key):
            if m.degree == degree:
                if not basis.add(self.x_remainder(SparsePolynomial.monomial(m)), label=m):
                    raise CertificationError(f"x-descent monomial {m} is dependent modulo the ideal")
        self._gs_x[degree] = basis
        return basis

    # -- shared ------------------------------------------------------------

    def normal_form(self, poly: SparsePolynomial, setting: Setting) -> SparsePolynomial:
        setting = Setting(setting)
        result = SparsePolynomial()
        if setting is Setting.Y:
            by_mu: Dict[Partition, Dict[YMonomial, Fraction]] = {}
            for y, c in drop_non_multichain(poly).items():
                by_mu.setdefault(mu_of_y(y), {})[y] = c
            for mu, row in by_mu.items():
                if len(mu) >= self.bound:
                    continue
                _, basis = self.y_slice(mu)
                for y, c in basis.reduce(row).items():
                    result.add_term(y, c)
            return result
        by_degree: Dict[int, SparsePolynomial] = {}
        for m, c in poly.items():
            by_degree.setdefault(m.degree, SparsePolynomial()).add_term(m, c)
        for degree, part in by_degree.items():
            remainder = self.x_remainder(part)
            if remainder:
                for m, c in self.gs_x_echelon(degree).express(remainder).items():
                    result.add_term(m, c)
        return result

    def contains(self, poly: SparsePolynomial, setting: Setting) -> bool:
        setting = Setting(setting)
        if setting is Setting.Y:
            by_mu: Dict[Partition, Dict[YMonomial, Fraction]] = {}
            for y, c in drop_non_multichain(poly).items():
                by_mu.setdefault(mu_of_y(y), {})[y] = c
            return all(len(mu) >= self.bound or self.y_slice(mu)[1].contains(row)
                       for mu, row in by_mu.items())
        by_degree: Dict[int, SparsePolynomial] = {}
        for m, c in poly.items():
            by_degree.setdefault(m.degree, SparsePolynomial()).add_term(m, c)
        return all(not self.x_remainder(part) for part in by_degree.values())


@lru_cache(maxsize=32)
def _cached_oracle(n: int, k: int, r: int, variant: Variant, caps: Caps) -> IdealOracle:
    return IdealOracle(n, k, r, variant, caps)


def get_oracle(n: int, k: int, r: int, variant: Variant, caps: Optional[Caps] = None) -> IdealOracle:
    """Shared oracle per (n, k, r, variant, caps); the least recently used are dropped"""
    return _cached_oracle(n, k, r, Variant(variant), caps or Caps.from_env())


# ---------------------------------------------------------------------------
# Dimensions and Hilbert series
# ---------------------------------------------------------------------------

def _y_monomial_count_by_variables(n: int, d: int) -> int:
    return int(sympy.binomial(2 ** n - 1 + d - 1, d))


def _y_monomial_count_by_tilde(n: int, d: int) -> int:
    """Coefficient of q^d in the product over j of (1 - q^j)^(-binom(n, j))"""
    counts = [1] + [0] * d
    for j in range(1, n + 1):
        for _ in range(int(sympy.binomial(n, j))):
            for total in range(j, d + 1):
                counts[total] += counts[total - j]
    return counts[d]


def ideal_slice_dimension(n: int, k: int, r: int, variant: Variant, setting: Setting, d: int,
                          caps: Optional[Caps] = None, grading: str = 'degree') -> int:
    """Dimension of the degree-d part of the ideal

    In the y-setting the degree counts variables unless grading='tilde'.
    """
    if d < 0:
        raise DomainError(f"degree must be nonnegative, got {d}")
    if grading not in GRADINGS:
        raise DomainError(f"unknown grading {grading!r}; choose from {', '.join(GRADINGS)}")
    oracle = get_oracle(n, k, r, variant, caps)
    setting = Setting(setting)
    if setting is Setting.X:
        return int(sympy.binomial(n + d - 1, d)) - oracle.x_quotient_dimension(d)
    if grading == 'tilde':
        total = _y_monomial_count_by_tilde(n, d)
        quotient = sum(oracle.y_quotient_dimension(mu) for mu in oracle.y_mus(d))
    else:
        total = _y_monomial_count_by_variables(n, d)
        quotient = 0
        if d < oracle.bound:
            for tilde in range(d, n * d + 1):
                quotient += sum(oracle.y_quotient_dimension(mu)
                                for mu in partitions_bounded(tilde, n, d) if len(mu) == d)
    return total - quotient


def hilbert_oracle(n: int, k: int, r: int, variant: Variant, setting: Setting,
                   caps: Optional[Caps] = None) -> GradedDimensionReport:
    """Quotient dimensions per degree, y-side graded by the tilde degree

    x-side: the quotient is generated in degree 1, so the first zero slice
    ends the series. y-side: generators have tilde degree at most n, so n
    consecutive zero slices do.
    """
    oracle = get_oracle(n, k, r, variant, caps)
    setting = Setting(setting)
    report = GradedDimensionReport(n, k, r, oracle.variant.value, setting.value)
    window = 1 if setting is Setting.X else n
    zeros = 0
    d = 0
    while zeros < window:
        if d > oracle.caps.degree:
            raise ResourceLimitError(
                f"Hilbert series still nonzero past the degree cap {oracle.caps.degree}")
        if setting is Setting.X:
            quotient = oracle.x_quotient_dimension(d)
            total = int(sympy.binomial(n + d - 1, d))
        else:
            quotient = sum(oracle.y_quotient_dimension(mu) for mu in oracle.y_mus(d))
            total = _y_monomial_count_by_tilde(n, d)
        report.rows.append((d, total, total - quotient, quotient))
        zeros = zeros + 1 if quotient == 0 else 0
        d += 1
    while report.rows and report.rows[-1][3] == 0 and len(report.rows) > 1:
        report.rows.pop()
    logger.info("Hilbert series %s(%d,%d) r=%d %s-side: %s", oracle.variant.value, n, k, r,
                setting.value, ','.join(map(str, report.quotient_dims)))
    return report


def hilbert_combinatorial(n: int, k: int, r: int, variant: Variant) -> sympy.Poly:
    """Sum of q^comaj over ordered set partitions (S) or faces (R)"""
    _check_params(n, k, r)
    variant = Variant(variant)
    if variant is Variant.S:
        counts = Counter(comaj_osp(p) for p in enumerate_osp(n, k, r))
    else:
        counts = Counter(comaj_face(f, n, k, r) for f in enumerate_faces(n, k, r))
    return sympy.Poly(sum((c * q ** d for d, c in counts.items()), sympy.Integer(0)), q)


def expected_total(n: int, k: int, r: int, variant: Variant) -> int:
    return count_osp(n, k, r) if Variant(variant) is Variant.S else count_faces(n, k, r)


# ---------------------------------------------------------------------------
# Certification
# ---------------------------------------------------------------------------

def _witness_for(offense, n: int, r: int) -> SparsePolynomial:
    item, pattern = offense.item, offense.pattern
    if item in (1, 7):
        return SparsePolynomial.monomial(offense.monomial)
    if item == 2:
        return theta(mask_size(pattern[0]), n, r)
    if item == 3:
        s = pattern[0]
        return drop_non_multichain(theta(mask_size(s), n, r).mul_monomial(YMonomial.var(s)))
    if item == 4:
        s, t = pattern
        return drop_non_multichain(theta(mask_size(s), n, r).mul_monomial(YMonomial.var(t)))
    if item == 5:
        s, t = pattern
        return drop_non_multichain(theta(mask_size(t), n, r).mul_monomial(YMonomial.var(s)))
    s1, s2, s3 = pattern
    return drop_non_multichain(theta(mask_size(s2), n, r).mul_monomial(
        YMonomial.from_exponents({s1: 1, s3: 1})))


def leading_witness(forbidden: YMonomial, n: int, k: int, r: int, variant: Variant) -> SparsePolynomial:
    """An ideal element whose leading monomial is the given forbidden monomial"""
    _check_params(n, k, r)
    for offense in iter_offenses(forbidden, n, k, r, variant):
        if offense.monomial != forbidden:
            continue
        witness = _witness_for(offense, n, r)
        if not witness or witness.leading_monomial() != forbidden:
            lead = witness.leading_monomial() if witness else 0
            raise CertificationError(
                f"item-{offense.item} witness for {forbidden} leads with {lead}")
        return witness
    raise PatternMismatchError(f"{forbidden} is not one of the forbidden patterns")


def certify_standard_basis(n: int, k: int, r: int, variant: Variant,
                           caps: Optional[Caps] = None) -> CertificationReport:
    """Compare the Garsia-Stanton set with the oracle's standard monomials

    y-side: per mu the non-pivot columns must be exactly the basis monomials.
    x-side: per degree the descent monomials must stay independent modulo
    the ideal and fill the quotient. Then every forbidden pattern up to the
    degree cap gets a leading-monomial witness.
    """
    oracle = get_oracle(n, k, r, variant, caps)
    variant = oracle.variant
    report = CertificationReport(n, k, r, variant.value)
    basis = enumerate_basis(n, k, r, variant)

    gs_by_mu: Dict[Partition, set] = {}
    for y in basis:
        gs_by_mu.setdefault(mu_of_y(y), set()).add(y)
    d = 0
    zeros = 0
    while zeros < n and d <= oracle.caps.degree:
        count = 0
        for mu in oracle.y_mus(d):
            standard = set(oracle.y_standard(mu))
            gs = gs_by_mu.pop(mu, set())
            count += len(standard)
            if standard != gs:
                report.counterexamples.append(
                    f"mu={mu}: standard-only {sorted(map(str, standard - gs))}, "
                    f"basis-only {sorted(map(str, gs - standard))}")
        report.degrees.append({'setting': 'y', 'degree': d, 'quotient': count})
        zeros = zeros + 1 if count == 0 else 0
        d += 1
    for mu, leftover in gs_by_mu.items():
        report.counterexamples.append(f"basis monomials {sorted(map(str, leftover))} outside the checked slices")

    xs = x_basis(n, k, r, variant)
    beyond = max((m.degree for m in xs), default=-1) + 1
    if oracle.x_quotient_dimension(beyond):
        report.counterexamples.append(f"x quotient is nonzero in degree {beyond} past the descent monomials")
    for degree in sorted({m.degree for m in xs} | {0}):
        count = sum(1 for m in xs if m.degree == degree)
        try:
            independent = oracle.gs_x_echelon(degree).rank
        except CertificationError as e:
            report.counterexamples.append(str(e))
            continue
        quotient = oracle.x_quotient_dimension(degree)
        report.degrees.append({'setting': 'x', 'degree': degree, 'quotient': quotient,
                               'descent_monomials': count})
        if independent != count or count != quotient:
            report.counterexamples.append(
                f"x degree {degree}: {count} descent monomials, rank {independent}, quotient {quotient}")

    for item, forbidden in forbidden_patterns(n, k, r, variant):
        if forbidden.degree > oracle.caps.degree:
            continue
        try:
            leading_witness(forbidden, n, k, r, variant)
            report.witnesses_checked += 1
        except (CertificationError, PatternMismatchError) as e:
            report.counterexamples.append(f"item {item}: {e}")
    logger.info("certification %s(%d,%d) r=%d: %s, %d witnesses", variant.value, n, k, r,
                'pass' if report.passed else 'FAIL', report.witnesses_checked)
    return report


def oracle_normal_form(poly, n: int, k: int, r: int, variant: Variant, setting: Setting,
                       caps: Optional[Caps] = None) -> SparsePolynomial:
    """Expansion in the Garsia-Stanton basis by linear algebra"""
    if not isinstance(poly, SparsePolynomial):
        poly = SparsePolynomial.monomial(poly)
    return get_oracle(n, k, r, variant, caps).normal_form(poly, setting)


def in_ideal(poly, n: int, k: int, r: int, variant: Variant, setting: Setting,
             caps: Optional[Caps] = None) -> bool:
    if not isinstance(poly, SparsePolynomial):
        poly = SparsePolynomial.monomial(poly)
    return get_oracle(n, k, r, variant, caps).contains(poly, setting)


# ---------------------------------------------------------------------------
# Characters (r = 1)
# ---------------------------------------------------------------------------

def _require_r1(r: int) -> None:
    if r != 1:
        raise UnsupportedStatisticError("characters are only computed for r = 1")


def _reducer(n: int, k: int, variant: Variant, setting: Setting, reducer: str, caps: Optional[Caps]):
    if reducer not in REDUCERS:
        raise DomainError(f"unknown reducer {reducer!r}; choose from {', '.join(REDUCERS)}")
    if reducer == 'oracle':
        return lambda mono: oracle_normal_form(mono, n, k, 1, variant, setting, caps)
    if Setting(setting) is Setting.Y:
        return lambda mono: reduce_y(mono, n, k, 1, variant)
    return lambda mono: normal_form_x(mono, n, k, 1, variant)


def _basis_by_degree(n: int, k: int, variant: Variant, setting: Setting) -> Dict[int, list]:
    grouped: Dict[int, list] = {}
    if Setting(setting) is Setting.Y:
        for y in enumerate_basis(n, k, 1, variant):
            grouped.setdefault(y.deg_tilde, []).append(y)
    else:
        for m in x_basis(n, k, 1, variant):
            grouped.setdefault(m.degree, []).append(m)
    return grouped


def graded_character(n: int, k: int, variant: Variant, setting: Setting, cls: Sequence[int],
                     r: int = 1, reducer: str = 'rewrite',
                     caps: Optional[Caps] = None) -> List[Fraction]:
    """Trace of a permutation of cycle type cls on each graded quotient slice"""
    _require_r1(r)
    _check_params(n, k, r)
    cls = check_partition(sorted(cls, reverse=True))
    if sum(cls) != n:
        raise DomainError(f"class {cls} is not a partition of {n}")
    perm = class_representative(cls)
    act = act_y if Setting(setting) is Setting.Y else act_x
    reduce = _reducer(n, k, variant, setting, reducer, caps)
    grouped = _basis_by_degree(n, k, variant, setting)
    top = max(grouped, default=-1)
    traces = []
    for degree in range(top + 1):
        trace = Fraction(0)
        for b in grouped.get(degree, []):
            trace += reduce(act(perm, b)).coefficient(b)
        traces.append(trace)
    return traces


def graded_character_table(n: int, k: int, variant: Variant, setting: Setting,
                           reducer: str = 'rewrite', caps: Optional[Caps] = None) -> GradedCharacter:
    classes = partitions_of(n)
    values = {cls: graded_character(n, k, variant, setting, cls, reducer=reducer, caps=caps)
              for cls in classes}
    top = max((len(v) for v in values.values()), default=0)
    degrees = [{cls: values[cls][d] for cls in classes} for d in range(top)]
    return GradedCharacter(n, degrees)


def filtration_stratum_report(n: int, k: int, variant: Variant, setting: Setting, mu: Sequence[int],
                              r: int = 1) -> StratumReport:
    """Dimension and character of the mu-stratum of the filtration by dominance"""
    _require_r1(r)
    _check_params(n, k, r)
    setting = Setting(setting)
    mu = tuple(sorted(mu, reverse=True))
    status = classify_mu(mu, n, k, r, variant)
    if setting is Setting.Y:
        members = [y for y in enumerate_basis(n, k, r, variant) if mu_of_y(y) == mu]
    else:
        members = [m for m in x_basis(n, k, r, variant) if mu_of_x(m) == mu]
    report = StratumReport(mu, setting.value, status, len(members))
    for cls in partitions_of(n):
        perm = class_representative(cls)
        trace = Fraction(0)
        for b in members:
            if setting is Setting.Y:
                trace += reduce_y(act_y(perm, b), n, k, r, variant).coefficient(b)
            else:
                same, _ = reduce_x_stratum(act_x(perm, b), n, k, r, variant)
                trace += same.coefficient(b)
        report.characters[cls] = trace
    return report


def basis_mus(n: int, k: int, r: int, variant: Variant) -> List[Partition]:
    return sorted({mu_of_y(y) for y in enumerate_basis(n, k, r, variant)})


def multigraded_frobenius_oracle(n: int, k: int, setting: Setting = Setting.Y) -> SchurVector:
    """Sum over mu of t^m(mu) Frob(stratum mu) for S_{n,k}, m_i(mu) the multiplicity of i in mu"""
    ts = t_symbols(n)
    result = SchurVector()
    for mu in basis_mus(n, k, 1, Variant.S):
        stratum = filtration_stratum_report(n, k, Variant.S, setting, mu)
        weight = sympy.Mul(*[ts[i - 1] ** mu.count(i) for i in set(mu)])
        for lam, mult in decompose_class_function(stratum.characters, n).items():
            result.add(lam, mult * weight)
    return result
