"""
Rewrite Engine Module

Moves replace y_S^r by y_S^r - theta_|S| (dropping non-multichain terms)
or x_S^r by x_S^r - e_|S|(x^r). Repeating them on the designated variable
of a forbidden pattern expands a monomial in the Garsia-Stanton basis.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from sympy import npartitions

from .errors import CertificationError, DomainError, NotAMultichainError, NotApplicableError
from .gs_basis import Admissibility, Offense, classify_mu, is_standard_monomial, iter_offenses
from .monomials import (
    Partition,
    SparsePolynomial,
    Variant,
    XMonomial,
    YMonomial,
    elementary_e,
    is_multichain,
    mask_members,
    mask_size,
    multichain_preimage,
    mu_of_x,
    mu_of_y,
    strictly_dominates,
    var_key,
    xmonomial_key,
    ymonomial_key,
)

logger = logging.getLogger(__name__)

MOVE_ITEMS = (2, 4, 5, 6)
STRATEGIES = ('largest', 'smallest', 'first-item')


@dataclass
class RewriteStep:
    """One move: `target` (with coefficient) was replaced using the variable `moved`"""

    target: object
    coeff: object
    moved: int
    item: int
    replacement: SparsePolynomial
    state: SparsePolynomial


@dataclass
class RewriteTrace:
    initial: object
    mu: Partition
    admissibility: Admissibility
    steps: List[RewriteStep] = field(default_factory=list)
    final: SparsePolynomial = field(default_factory=SparsePolynomial)
    higher: SparsePolynomial = field(default_factory=SparsePolynomial)


# ---------------------------------------------------------------------------
# y-setting
# ---------------------------------------------------------------------------

def y_move(y: YMonomial, s: int, n: int, r: int) -> SparsePolynomial:
    """-sum over R != S, |R| = |S| of (y / y_S^r) y_R^r, multichain terms only"""
    if y.exponent(s) < r:
        raise NotApplicableError(f"y_S^{r} with S = {set(mask_members(s))} does not divide {y}")
    if s >> n:
        raise DomainError(f"subset {set(mask_members(s))} is not inside [{n}]")
    rest = y.quotient(YMonomial.var(s, r))
    size = mask_size(s)
    result = SparsePolynomial()
    # R ranges over the size-|S| subsets of [n]
    for mask in range(1, 1 << n):
        if mask != s and mask_size(mask) == size:
            term = rest * YMonomial.var(mask, r)
            if is_multichain(term):
                result.add_term(term, -1)
    return result


def _strategy_key(strategy: str) -> Callable[[Offense], Tuple]:
    if strategy == 'largest':
        return lambda o: var_key(o.move)
    if strategy == 'smallest':
        return lambda o: tuple(-x for x in var_key(o.move))
    if strategy == 'first-item':
        return lambda o: (-o.item, var_key(o.move))
    raise DomainError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")


def select_move(y: YMonomial, n: int, k: int, r: int, variant: Variant,
                strategy: str = 'largest') -> Optional[Offense]:
    """The offense to repair next, or None when y is standard"""
    candidates = [o for o in iter_offenses(y, n, k, r, variant) if o.item in MOVE_ITEMS]
    if not candidates:
        return None
    return max(candidates, key=_strategy_key(strategy))


def reduce_y_traced(y: YMonomial, n: int, k: int, r: int, variant: Variant,
                    strategy: str = 'largest') -> RewriteTrace:
    if not is_multichain(y):
        raise NotAMultichainError(f"{y} is not a multichain monomial; straighten it first")
    _strategy_key(strategy)
    mu = mu_of_y(y)
    status = classify_mu(mu, n, k, r, variant)
    trace = RewriteTrace(y, mu, status)
    if status is not Admissibility.ADMISSIBLE:
        logger.debug("%s has %s mu %s and vanishes", y, status.value, mu)
        return trace

    pending = SparsePolynomial.monomial(y)
    result = SparsePolynomial()
    while pending:
        target, coeff = pending.leading_term()
        pending.terms.pop(target)
        if is_standard_monomial(target, n, k, r, variant):
            result.add_term(target, coeff)
            continue
        offense = select_move(target, n, k, r, variant, strategy)
        if offense is None:
            raise CertificationError(f"{target} is not standard but offers no move")
        replacement = y_move(target, offense.move, n, r)
        for term in replacement.monomials():
            if mu_of_y(term) != mu:
                raise CertificationError(f"move on {target} left the mu-stratum {mu}")
            if ymonomial_key(term) >= ymonomial_key(target):
                raise CertificationError(f"move on {target} produced the larger monomial {term}")
        for term, c in replacement.items():
            pending.add_term(term, c * coeff)
        trace.steps.append(RewriteStep(target, coeff, offense.move, offense.item,
                                       replacement, result + pending))
    trace.final = result
    logger.debug("reduced %s in %d moves", y, len(trace.steps))
    return trace


def reduce_y(y: YMonomial, n: int, k: int, r: int, variant: Variant,
             strategy: str = 'largest') -> SparsePolynomial:
    return reduce_y_traced(y, n, k, r, variant, strategy).final


def reduce_y_polynomial(poly: SparsePolynomial, n: int, k: int, r: int, variant: Variant,
                        strategy: str = 'largest') -> SparsePolynomial:
    """Linear extension of reduce_y; non-multichain terms vanish in the quotient"""
    result = SparsePolynomial()
    for mono, coeff in poly.items():
        if is_multichain(mono):
            result = result + reduce_y(mono, n, k, r, variant, strategy).scale(coeff)
    return result


# ---------------------------------------------------------------------------
# x-setting
# ---------------------------------------------------------------------------

def x_move(m: XMonomial, s: int, n: int, r: int) -> SparsePolynomial:
    """m - (m / x_S^r) e_|S|(x_1^r, ..., x_n^r)"""
    divisor = XMonomial.from_exponents({i: r for i in mask_members(s)}, n)
    if not divisor.divides(m):
        raise NotApplicableError(f"{divisor} does not divide {m}")
    rest = m.quotient(divisor)
    result = SparsePolynomial.monomial(m)
    return result - elementary_e(mask_size(s), n, r).mul_monomial(rest)


def _split_by_mu(poly: SparsePolynomial, mu: Partition, target: XMonomial,
                 same: SparsePolynomial, higher: SparsePolynomial, coeff) -> None:
    for term, c in poly.items():
        term_mu = mu_of_x(term)
        if term_mu == mu:
            same.add_term(term, c * coeff)
        elif strictly_dominates(term_mu, mu):
            higher.add_term(term, c * coeff)
        else:
            raise CertificationError(
                f"move on {target} produced {term} with mu {term_mu} not above {mu}")


def reduce_x_stratum_traced(m: XMonomial, n: int, k: int, r: int, variant: Variant,
                            strategy: str = 'largest') -> RewriteTrace:
    if m.n != n:
        raise DomainError(f"{m} has {m.n} variables, expected {n}")
    mu = mu_of_x(m)
    status = classify_mu(mu, n, k, r, variant)
    trace = RewriteTrace(m, mu, status)

    if status is Admissibility.NON_ADMISSIBLE:
        return trace

    if status is Admissibility.SEMI_ADMISSIBLE:
        y = multichain_preimage(m)
        candidates = [mask for mask, e in y.items
                      if e >= r + 1 and n - k + 1 <= mask_size(mask) <= n - 1]
        s = max(candidates, key=var_key)
        moved = x_move(m, s, n, r)
        same = SparsePolynomial()
        _split_by_mu(moved, mu, m, same, trace.higher, 1)
        if same:
            raise CertificationError(f"semi-admissible move on {m} kept terms in mu {mu}")
        trace.steps.append(RewriteStep(m, 1, s, 3, moved, trace.higher.copy()))
        return trace

    pending = SparsePolynomial.monomial(m)
    result = SparsePolynomial()
    while pending:
        target, coeff = max(pending.items(),
                            key=lambda item: ymonomial_key(multichain_preimage(item[0])))
        pending.terms.pop(target)
        y = multichain_preimage(target)
        if is_standard_monomial(y, n, k, r, variant):
            result.add_term(target, coeff)
            continue
        offense = select_move(y, n, k, r, variant, strategy)
        if offense is None:
            raise CertificationError(f"{target} is not a descent monomial but offers no move")
        replacement = x_move(target, offense.move, n, r)
        replacement.terms.pop(target, None)
        _split_by_mu(replacement, mu, target, pending, trace.higher, coeff)
        trace.steps.append(RewriteStep(target, coeff, offense.move, offense.item,
                                       replacement, result + pending))
    trace.final = result
    return trace


def reduce_x_stratum(m: XMonomial, n: int, k: int, r: int, variant: Variant,
                     strategy: str = 'largest') -> Tuple[SparsePolynomial, SparsePolynomial]:
    """(same_mu, higher_mu): descent monomials with mu(m), plus the rest above mu(m)"""
    trace = reduce_x_stratum_traced(m, n, k, r, variant, strategy)
    return trace.final, trace.higher


def normal_form_x(m, n: int, k: int, r: int, variant: Variant,
                  strategy: str = 'largest') -> SparsePolynomial:
    """Full expansion in the x-descent basis, working up through the mu-strata

    Accepts a monomial or a homogeneous polynomial.
    """
    pending = m.copy() if isinstance(m, SparsePolynomial) else SparsePolynomial.monomial(m)
    degrees = {mono.degree for mono in pending.monomials()}
    if len(degrees) > 1:
        raise DomainError("normal_form_x expects a homogeneous input")
    bound = int(npartitions(degrees.pop())) if degrees else 0
    result = SparsePolynomial()
    strata = 0
    while pending:
        mu = min(mu_of_x(mono) for mono in pending.monomials())
        strata += 1
        if strata > bound:
            raise CertificationError(f"normal form exceeded {bound} mu-strata")
        batch = [(mono, c) for mono, c in pending.items() if mu_of_x(mono) == mu]
        for mono, _ in batch:
            pending.terms.pop(mono)
        for mono, c in batch:
            same, higher = reduce_x_stratum(mono, n, k, r, variant, strategy)
            result = result + same.scale(c)
            for term, hc in higher.items():
                if mu_of_x(term) <= mu:
                    raise CertificationError(f"{term} does not lie above the stratum {mu}")
                pending.add_term(term, hc * c)
    logger.debug("x normal form used %d strata", strata)
    return result


def sorted_x_terms(poly: SparsePolynomial) -> List[Tuple[XMonomial, object]]:
    return sorted(poly.items(), key=lambda item: xmonomial_key(item[0]), reverse=True)


def as_dict(poly: SparsePolynomial) -> Dict[str, str]:
    return {str(mono): str(c) for mono, c in poly.sorted_terms()}
