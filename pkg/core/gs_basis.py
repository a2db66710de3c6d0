"""
Garsia-Stanton Basis Module

Descent monomials in both variable families and everything built on them:

- tilde_b / b for colored words, ordered set partitions and faces
- the bijection between multichain monomials and pairs (g, d)
- the forbidden divisor patterns characterising standard monomials
- the admissibility trichotomy of mu-partitions
- basis enumeration, certified by three independent constructions
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .combinatorics import (
    ColoredLetter,
    ColoredWord,
    Face,
    OrderedSetPartition,
    comaj_face,
    comaj_osp,
    descent_set,
    enumerate_faces,
    enumerate_osp,
    enumerate_words,
    format_face,
    format_osp,
)
from .errors import (
    CertificationError,
    DomainError,
    InvalidFaceError,
    NotAMultichainError,
    NotApplicableError,
    PatternMismatchError,
)
from .monomials import (
    Partition,
    SparsePolynomial,
    Variant,
    XMonomial,
    YMonomial,
    chain_of,
    check_n,
    drop_non_multichain,
    is_multichain,
    mask_max,
    mask_members,
    mask_min,
    mask_size,
    multichains,
    multichains_up_to,
    mu_of_y,
    prefix_mask,
    subset_mask,
    theta,
    transfer_phi,
    var_key,
    ymonomial_key,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GDPair:
    """A colored word g with a vector d indexed by the positions of g"""

    word: ColoredWord
    d: Tuple[int, ...] = ()

    def __post_init__(self):
        d = tuple(self.d)
        if len(d) > len(self.word):
            raise DomainError(f"d has {len(d)} entries but the word has {len(self.word)} letters")
        if any(x < 0 for x in d):
            raise DomainError(f"d entries must be nonnegative, got {d}")
        object.__setattr__(self, 'd', d + (0,) * (len(self.word) - len(d)))

    def __str__(self) -> str:
        return f"({self.word}; {','.join(str(x) for x in self.d)})"


class Admissibility(str, Enum):
    ADMISSIBLE = 'admissible'
    SEMI_ADMISSIBLE = 'semi-admissible'
    NON_ADMISSIBLE = 'non-admissible'


# ---------------------------------------------------------------------------
# Descent monomials
# ---------------------------------------------------------------------------

def prefix_masks(word: ColoredWord) -> List[int]:
    """T_1, ..., T_m: the sets of the first i letters of the word"""
    masks, current = [], 0
    for a in word.letters:
        current |= 1 << (a.letter - 1)
        masks.append(current)
    return masks


def tilde_b_exponents(word: ColoredWord) -> List[int]:
    """m_i = c_i - c_{i+1} + r[i in Des] with c_{m+1} = 0"""
    colors = word.colors + (0,)
    descents = descent_set(word)
    return [colors[i - 1] - colors[i] + (word.r if i in descents else 0)
            for i in range(1, len(word) + 1)]


def tilde_b(g: ColoredWord) -> YMonomial:
    exps: Dict[int, int] = {}
    for mask, e in zip(prefix_masks(g), tilde_b_exponents(g)):
        if e:
            exps[mask] = e
    return YMonomial.from_exponents(exps)


def tilde_b_gd(p: GDPair) -> YMonomial:
    exps = tilde_b(p.word).exponents()
    r = p.word.r
    for mask, di in zip(prefix_masks(p.word), p.d):
        if di:
            exps[mask] = exps.get(mask, 0) + r * di
    return YMonomial.from_exponents(exps)


def gd_from_multichain(y: YMonomial, n: int, r: int,
                       letters: Optional[Iterable[int]] = None) -> GDPair:
    """The unique (g, d) with tilde_b_gd(g, d) = y

    With `letters` the word lives on that subset of [n] and every set of
    the chain must lie inside it.
    """
    if not is_multichain(y):
        raise NotAMultichainError(f"{y} is not a multichain monomial")
    universe = tuple(sorted(letters)) if letters is not None else tuple(range(1, n + 1))
    full = subset_mask(universe) if universe else 0
    chain = chain_of(y)
    for mask, _ in chain:
        if mask & ~full:
            raise DomainError(f"{y} uses letters outside {universe}")

    groups: List[Tuple[int, ...]] = []
    previous = 0
    for mask, _ in chain:
        groups.append(mask_members(mask & ~previous))
        previous = mask
    if previous != full:
        groups.append(mask_members(full & ~previous))

    # colors are fixed group by group from the top of the chain downwards
    group_colors = [0] * len(groups)
    running = 0
    for j in range(len(chain) - 1, -1, -1):
        running = (running + chain[j][1]) % r
        group_colors[j] = running

    word = ColoredWord(tuple(ColoredLetter(a, c) for group, c in zip(groups, group_colors)
                             for a in group), n, r)
    b = tilde_b_exponents(word)
    a = {mask_size(mask): e for mask, e in chain}
    d = []
    for position, bi in enumerate(b, start=1):
        ai = a.get(position, 0)
        if (ai - bi) % r or ai < bi:
            raise CertificationError(
                f"cannot write {y} as tilde_b(g) times r-th powers: position {position} "
                f"has exponent {ai} against {bi}")
        d.append((ai - bi) // r)
    return GDPair(word, tuple(d))


def b_word(g: ColoredWord) -> XMonomial:
    """b_g: x_{pi_i} raised to r * #{j in Des : j >= i} + c_i"""
    descents = descent_set(g)
    exps = {}
    for i, a in enumerate(g.letters, start=1):
        exps[a.letter] = g.r * sum(1 for j in descents if j >= i) + a.color
    return XMonomial.from_exponents(exps, g.n)


def _lam_masks(word: ColoredWord, lam: Sequence[int]) -> List[int]:
    masks = prefix_masks(word)
    return [masks[part - 1] for part in lam]


def tilde_b_osp(p: OrderedSetPartition) -> YMonomial:
    result = tilde_b(p.word)
    for mask in _lam_masks(p.word, p.lam):
        result = result * YMonomial.var(mask, p.r)
    return result


def _b_lam(word: ColoredWord, lam: Sequence[int]) -> XMonomial:
    exps = b_word(word).exps
    extra = [0] * word.n
    for part in lam:
        for a in word.letters[:part]:
            extra[a.letter - 1] += word.r
    return XMonomial(tuple(e + x for e, x in zip(exps, extra)))


def b_osp(p: OrderedSetPartition) -> XMonomial:
    """b_(g, lambda) = b_g * prod_j x_{pi_j}^{r i_j}, i_j = #{m : lambda_m >= j}"""
    return _b_lam(p.word, p.lam)


def _partial_tilde_b(f: Face) -> YMonomial:
    result = tilde_b(f.word)
    for mask in _lam_masks(f.word, f.lam):
        result = result * YMonomial.var(mask, f.r)
    return result


def tilde_b_face(f: Face, n: int, k: int, r: int) -> YMonomial:
    if f.n != n or f.r != r:
        raise DomainError(f"face lives in (n, r) = ({f.n}, {f.r}), not ({n}, {r})")
    f.validate(k)
    base = _partial_tilde_b(f)
    if not f.zero_block:
        return base
    zero = subset_mask(f.zero_block)
    deficit = k * r - base.degree
    if deficit < 0:
        raise InvalidFaceError(f"{format_face(f)} has degree {base.degree} above kr = {k * r}")
    exps = {zero: deficit} if deficit else {}
    for mask, e in base.items:
        exps[mask | zero] = exps.get(mask | zero, 0) + e
    return YMonomial.from_exponents(exps)


def b_face(f: Face, n: int, k: int, r: int) -> XMonomial:
    if f.n != n or f.r != r:
        raise DomainError(f"face lives in (n, r) = ({f.n}, {f.r}), not ({n}, {r})")
    f.validate(k)
    base = _b_lam(f.word, f.lam)
    zero = XMonomial.from_exponents({i: k * r for i in f.zero_block}, n)
    return base * zero


# ---------------------------------------------------------------------------
# Forbidden patterns
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Offense:
    """One occurrence of a forbidden divisor

    `pattern` lists the subsets involved, `monomial` is the forbidden
    divisor itself and `move` the subset whose r-th power a move replaces
    (None for items 1 and 7).
    """

    item: int
    pattern: Tuple[int, ...]
    monomial: YMonomial
    move: Optional[int] = None


def _longest_chain(y: YMonomial) -> Tuple[int, List[Tuple[int, int]]]:
    """Length (with multiplicity) of the longest multichain dividing y, and that chain"""
    items = sorted(y.items, key=lambda item: mask_size(item[0]))
    best: Dict[int, int] = {}
    back: Dict[int, Optional[int]] = {}
    for mask, e in items:
        below = [m for m in best if m != mask and m & mask == m]
        prev = max(below, key=lambda m: best[m], default=None)
        best[mask] = e + (best[prev] if prev is not None else 0)
        back[mask] = prev
    if not best:
        return 0, []
    top = max(best, key=lambda m: best[m])
    chain = []
    exps = y.exponents()
    current: Optional[int] = top
    while current is not None:
        chain.append((current, exps[current]))
        current = back[current]
    return best[top], chain[::-1]


def _chain_monomial(chain: List[Tuple[int, int]], length: int) -> YMonomial:
    """Sub-multichain with exactly `length` variables, taken from the top"""
    exps: Dict[int, int] = {}
    remaining = length
    for mask, e in reversed(chain):
        if remaining <= 0:
            break
        take = min(e, remaining)
        exps[mask] = take
        remaining -= take
    return YMonomial.from_exponents(exps)


def iter_offenses(y: YMonomial, n: int, k: int, r: int, variant: Variant) -> Iterator[Offense]:
    """Every occurrence of items 1-7 dividing y"""
    variant = Variant(variant)
    threshold = n - k + 1
    exps = y.exponents()
    support = sorted(exps, key=var_key, reverse=True)

    for a, b in itertools.combinations(support, 2):
        if a & b not in (a, b):
            yield Offense(1, (a, b), YMonomial.from_exponents({a: 1, b: 1}))

    for t in range(threshold, n + 1):
        mask = prefix_mask(t)
        if exps.get(mask, 0) >= r:
            yield Offense(2, (mask,), YMonomial.var(mask, r), mask)

    for s in support:
        if mask_size(s) >= threshold and exps[s] >= r + 1:
            yield Offense(3, (s,), YMonomial.var(s, r + 1), s)

    heavy = [s for s in support if exps[s] >= r and mask_size(s) >= threshold]
    for s in heavy:
        for t in support:
            if t != s and s & t == s and mask_min(t & ~s) > mask_max(s):
                yield Offense(4, (s, t), YMonomial.from_exponents({s: r, t: 1}), s)

    for t in heavy:
        for s in support:
            if s != t and s & t == s and t == s | prefix_mask(mask_max(t & ~s)):
                yield Offense(5, (s, t), YMonomial.from_exponents({s: 1, t: r}), t)

    for s2 in heavy:
        lows = [s for s in support if s != s2 and s & s2 == s]
        highs = [s for s in support if s != s2 and s & s2 == s2]
        for s1 in lows:
            for s3 in highs:
                if mask_max(s2 & ~s1) < mask_min(s3 & ~s2):
                    yield Offense(6, (s1, s2, s3),
                                  YMonomial.from_exponents({s1: 1, s2: r, s3: 1}), s2)

    bound = variant.multichain_bound(k, r)
    length, chain = _longest_chain(y)
    if length >= bound:
        yield Offense(7, tuple(m for m, _ in chain), _chain_monomial(chain, bound))


def offenses(y: YMonomial, n: int, k: int, r: int, variant: Variant) -> List[Offense]:
    return list(iter_offenses(y, n, k, r, variant))


def is_standard_monomial(y: YMonomial, n: int, k: int, r: int, variant: Variant) -> bool:
    return next(iter_offenses(y, n, k, r, variant), None) is None


def forbidden_patterns(n: int, k: int, r: int, variant: Variant) -> Iterator[Tuple[int, YMonomial]]:
    """The minimal forbidden monomials of items 1-7, tagged with their item"""
    check_n(n)
    variant = Variant(variant)
    threshold = n - k + 1
    masks = list(range(1, prefix_mask(n) + 1))
    for a, b in itertools.combinations(masks, 2):
        if a & b not in (a, b):
            yield 1, YMonomial.from_exponents({a: 1, b: 1})
    for t in range(threshold, n + 1):
        yield 2, YMonomial.var(prefix_mask(t), r)
    big = [s for s in masks if mask_size(s) >= threshold]
    for s in big:
        yield 3, YMonomial.var(s, r + 1)
    for s in big:
        for t in masks:
            if t != s and s & t == s and mask_min(t & ~s) > mask_max(s):
                yield 4, YMonomial.from_exponents({s: r, t: 1})
    for t in big:
        for s in masks:
            if s != t and s & t == s and t == s | prefix_mask(mask_max(t & ~s)):
                yield 5, YMonomial.from_exponents({s: 1, t: r})
    for s2 in big:
        for s1 in masks:
            if s1 == s2 or s1 & s2 != s1:
                continue
            for s3 in masks:
                if s3 != s2 and s3 & s2 == s2 and mask_max(s2 & ~s1) < mask_min(s3 & ~s2):
                    yield 6, YMonomial.from_exponents({s1: 1, s2: r, s3: 1})
    for y in multichains(n, variant.multichain_bound(k, r)):
        yield 7, y


# ---------------------------------------------------------------------------
# Admissibility
# ---------------------------------------------------------------------------

def classify_mu(mu: Sequence[int], n: int, k: int, r: int, variant: Variant) -> Admissibility:
    variant = Variant(variant)
    if any(not 1 <= part <= n for part in mu):
        raise DomainError(f"{tuple(mu)} has a part outside [1, {n}]")
    mu = list(mu)
    if len(mu) >= variant.multichain_bound(k, r) or mu.count(n) >= r:
        return Admissibility.NON_ADMISSIBLE
    if any(mu.count(i) >= r + 1 for i in range(n - k + 1, n)):
        return Admissibility.SEMI_ADMISSIBLE
    return Admissibility.ADMISSIBLE


# ---------------------------------------------------------------------------
# The theta-twisted basis of the Stanley-Reisner ring
# ---------------------------------------------------------------------------

def tilde_b_prime(p: GDPair, k: int) -> SparsePolynomial:
    """theta_{n-k+1}^{d_{n-k+1}} ... theta_n^{d_n} * tilde_b_(g, d truncated to n-k)"""
    word = p.word
    n, r = word.n, word.r
    if not word.is_full:
        raise DomainError("tilde_b_prime needs a word on all of [n]")
    if not 0 <= k <= n:
        raise DomainError(f"k must satisfy 0 <= k <= n, got {k}")
    head = tuple(p.d[:n - k]) + (0,) * k
    result = SparsePolynomial.monomial(tilde_b_gd(GDPair(word, head)))
    for i in range(n - k + 1, n + 1):
        for _ in range(p.d[i - 1]):
            result = drop_non_multichain(result * theta(i, n, r))
    return result


# ---------------------------------------------------------------------------
# Inverse of the basis indexing
# ---------------------------------------------------------------------------

def _lam_from_d(d: Sequence[int]) -> Tuple[int, ...]:
    lam: List[int] = []
    for position in range(len(d), 0, -1):
        lam.extend([position] * d[position - 1])
    return tuple(lam)


def index_of_standard(y: YMonomial, n: int, k: int, r: int,
                      variant: Variant) -> Union[OrderedSetPartition, Face]:
    """The ordered set partition (S) or face (R) whose tilde_b is y"""
    variant = Variant(variant)
    if not is_standard_monomial(y, n, k, r, variant):
        raise NotApplicableError(f"{y} is not a standard monomial")
    if variant is Variant.S:
        pair = gd_from_multichain(y, n, r)
        found = OrderedSetPartition(pair.word, _lam_from_d(pair.d))
        found.validate(k)
        if tilde_b_osp(found) != y:
            raise CertificationError(f"{format_osp(found)} does not reproduce {y}")
        return found

    if k == 0:
        face = Face(frozenset(range(1, n + 1)), ColoredWord((), n, r), ())
    elif y.degree < k * r:
        pair = gd_from_multichain(y, n, r)
        face = Face(frozenset(), pair.word, _lam_from_d(pair.d))
    else:
        chain = chain_of(y)
        zero = chain[0][0]
        rest = {mask & ~zero: e for mask, e in chain[1:]}
        letters = [i for i in range(1, n + 1) if not zero >> (i - 1) & 1]
        pair = gd_from_multichain(YMonomial.from_exponents(rest), n, r, letters)
        face = Face(frozenset(mask_members(zero)), pair.word, _lam_from_d(pair.d))
    face.validate(k)
    if tilde_b_face(face, n, k, r) != y:
        raise CertificationError(f"{format_face(face)} does not reproduce {y}")
    return face


# ---------------------------------------------------------------------------
# Basis enumeration
# ---------------------------------------------------------------------------

def _bounded_vectors(length: int, total: int) -> Iterator[Tuple[int, ...]]:
    """Nonnegative integer vectors of the given length with sum at most total"""
    if total < 0:
        return
    if length == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _bounded_vectors(length - 1, total - first):
            yield (first,) + rest


def _index_image(n: int, k: int, r: int, variant: Variant) -> Dict[YMonomial, object]:
    image: Dict[YMonomial, object] = {}
    if variant is Variant.S:
        objects = ((p, tilde_b_osp(p)) for p in enumerate_osp(n, k, r))
    else:
        objects = ((f, tilde_b_face(f, n, k, r)) for f in enumerate_faces(n, k, r))
    for obj, y in objects:
        if y in image:
            raise CertificationError(f"two index objects share the basis monomial {y}")
        image[y] = obj
    return image


def _gd_image(n: int, k: int, r: int, variant: Variant) -> FrozenSet[YMonomial]:
    bound = variant.multichain_bound(k, r)
    found = set()
    for word in enumerate_words(n, r):
        base = tilde_b(word)
        budget = (bound - 1 - base.degree) // r if bound - 1 >= base.degree else -1
        for d in _bounded_vectors(n - k, budget):
            found.add(tilde_b_gd(GDPair(word, d)))
    return frozenset(found)


def _standard_image(n: int, k: int, r: int, variant: Variant) -> FrozenSet[YMonomial]:
    bound = variant.multichain_bound(k, r)
    return frozenset(y for y in multichains_up_to(n, bound - 1)
                     if is_standard_monomial(y, n, k, r, variant))


@lru_cache(maxsize=64)
def enumerate_basis(n: int, k: int, r: int, variant: Variant) -> FrozenSet[YMonomial]:
    """Standard monomial basis of the y-quotient, built three ways and compared"""
    check_n(n)
    if not 0 <= k <= n:
        raise DomainError(f"k must satisfy 0 <= k <= n, got {k}")
    if r < 1:
        raise DomainError(f"r must be at least 1, got {r}")
    variant = Variant(variant)
    indexed = frozenset(_index_image(n, k, r, variant))
    by_gd = _gd_image(n, k, r, variant)
    standard = _standard_image(n, k, r, variant)
    logger.debug("basis of %s(%d,%d) at r=%d: %d indexed, %d (g,d), %d standard",
                 variant.value, n, k, r, len(indexed), len(by_gd), len(standard))
    for name, other in (('(g,d) construction', by_gd), ('forbidden-divisor complement', standard)):
        if other != indexed:
            extra = sorted(other - indexed, key=ymonomial_key)[:3]
            missing = sorted(indexed - other, key=ymonomial_key)[:3]
            raise CertificationError(
                f"{name} disagrees with the indexed basis of {variant.value}({n},{k}) at r={r}: "
                f"extra {[str(y) for y in extra]}, missing {[str(y) for y in missing]}")
    return indexed


@dataclass(frozen=True)
class BasisElement:
    index: Union[OrderedSetPartition, Face]
    y: YMonomial
    x: XMonomial
    degree: int
    comaj: int
    mu: Partition = field(default=())

    def to_dict(self) -> Dict[str, object]:
        return {
            'index_object': str(self.index),
            'y_monomial': str(self.y),
            'x_monomial': str(self.x),
            'degree': self.degree,
            'comaj': self.comaj,
        }


def basis_elements(n: int, k: int, r: int, variant: Variant,
                   certify: bool = False) -> List[BasisElement]:
    """Basis records in descending monomial order"""
    check_n(n)
    variant = Variant(variant)
    if certify:
        enumerate_basis(n, k, r, variant)
    elements = []
    if variant is Variant.S:
        for p in enumerate_osp(n, k, r):
            y = tilde_b_osp(p)
            elements.append(BasisElement(p, y, b_osp(p), y.deg_tilde, comaj_osp(p), mu_of_y(y)))
    else:
        for f in enumerate_faces(n, k, r):
            y = tilde_b_face(f, n, k, r)
            elements.append(BasisElement(f, y, b_face(f, n, k, r), y.deg_tilde,
                                         comaj_face(f, n, k, r), mu_of_y(y)))
    elements.sort(key=lambda e: ymonomial_key(e.y), reverse=True)
    return elements


def x_basis(n: int, k: int, r: int, variant: Variant) -> Dict[XMonomial, YMonomial]:
    """x-descent monomials keyed to their y counterparts"""
    return {transfer_phi(y, n): y for y in enumerate_basis(n, k, r, variant)}
