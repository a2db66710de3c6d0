"""
Monomial Algebra Module

Exact sparse arithmetic in two families of variables:

- x_1, ..., x_n (XMonomial)
- y_S for nonempty S of [n] (YMonomial), subsets stored as bit masks
  (bit i-1 set iff i is in S)

plus the graded lexicographic order on y-monomials, multichain structure,
mu-partitions, the transfer map phi(y_S) = prod_{i in S} x_i, and the
generators of the ideals I, J (x-setting) and their multichain
counterparts (y-setting).
"""

import itertools
import logging
import random
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import (Callable, Dict, Iterable, Iterator, List, Mapping, Optional,
                    Sequence, Tuple, Union)

from .errors import DomainError, NotAMultichainError, NotApplicableError, ParseError

logger = logging.getLogger(__name__)

MAX_N = 16

Partition = Tuple[int, ...]
Number = Union[int, Fraction]


class Variant(str, Enum):
    """Which quotient: R (faces, power kr+1) or S (ordered set partitions, power kr)"""

    R = 'R'
    S = 'S'

    def multichain_bound(self, k: int, r: int) -> int:
        """Length of the multichain generators, also the x power generator exponent"""
        return k * r + 1 if self is Variant.R else k * r


class Setting(str, Enum):
    X = 'x'
    Y = 'y'


def check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise DomainError(f"n must satisfy 1 <= n <= {MAX_N}, got {n}")


# ---------------------------------------------------------------------------
# Subsets as bit masks
# ---------------------------------------------------------------------------

def subset_mask(members: Iterable[int]) -> int:
    mask = 0
    for i in members:
        if not 1 <= i <= MAX_N:
            raise DomainError(f"subset element {i} is out of range")
        mask |= 1 << (i - 1)
    return mask


def mask_members(mask: int) -> Tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def mask_size(mask: int) -> int:
    return bin(mask).count('1')


def mask_min(mask: int) -> int:
    return (mask & -mask).bit_length()


def mask_max(mask: int) -> int:
    return mask.bit_length()


def prefix_mask(t: int) -> int:
    """The set [t]"""
    return (1 << t) - 1


def format_subset(mask: int) -> str:
    return '{' + ','.join(str(i) for i in mask_members(mask)) + '}'


@lru_cache(maxsize=None)
def var_key(mask: int) -> Tuple[int, int]:
    """Sort key increasing with the variable order on y_S

    Larger sets are larger; among equal sizes the set containing the
    smallest element of the symmetric difference is larger, which is what
    reversing the bit string achieves.
    """
    reversed_bits = int(format(mask, f'0{MAX_N}b')[::-1], 2)
    return (mask_size(mask), reversed_bits)


def compare_yvars(s: int, t: int) -> int:
    ks, kt = var_key(s), var_key(t)
    return (ks > kt) - (ks < kt)


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class YMonomial:
    """Monomial in the y_S; items are (mask, exponent) pairs sorted by mask"""

    items: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> 'YMonomial':
        for mask in exponents:
            if mask <= 0:
                raise DomainError("y-variables are indexed by nonempty subsets")
        return cls(tuple(sorted((m, e) for m, e in exponents.items() if e > 0)))

    @classmethod
    def var(cls, mask: int, exponent: int = 1) -> 'YMonomial':
        return cls.from_exponents({mask: exponent})

    @classmethod
    def one(cls) -> 'YMonomial':
        return cls(())

    def exponents(self) -> Dict[int, int]:
        return dict(self.items)

    def exponent(self, mask: int) -> int:
        for m, e in self.items:
            if m == mask:
                return e
        return 0

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(m for m, _ in self.items)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.items)

    @property
    def deg_tilde(self) -> int:
        """Sum of |S| times the exponent of y_S"""
        return sum(mask_size(m) * e for m, e in self.items)

    def is_one(self) -> bool:
        return not self.items

    def __mul__(self, other: 'YMonomial') -> 'YMonomial':
        exps = self.exponents()
        for m, e in other.items:
            exps[m] = exps.get(m, 0) + e
        return YMonomial(tuple(sorted(exps.items())))

    def __pow__(self, power: int) -> 'YMonomial':
        return YMonomial(tuple((m, e * power) for m, e in self.items)) if power else YMonomial()

    def divides(self, other: 'YMonomial') -> bool:
        exps = other.exponents()
        return all(exps.get(m, 0) >= e for m, e in self.items)

    def quotient(self, divisor: 'YMonomial') -> 'YMonomial':
        """self / divisor"""
        exps = self.exponents()
        for m, e in divisor.items:
            if exps.get(m, 0) < e:
                raise NotApplicableError(f"{divisor} does not divide {self}")
            exps[m] -= e
        return YMonomial.from_exponents(exps)

    def __str__(self) -> str:
        return format_ymonomial(self)


@dataclass(frozen=True)
class XMonomial:
    """Monomial in x_1, ..., x_n given by its exponent vector"""

    exps: Tuple[int, ...]

    @classmethod
    def one(cls, n: int) -> 'XMonomial':
        return cls((0,) * n)

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int], n: int) -> 'XMonomial':
        exps = [0] * n
        for i, e in exponents.items():
            if not 1 <= i <= n:
                raise DomainError(f"x{i} is not a variable for n = {n}")
            exps[i - 1] += e
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return not any(self.exps)

    def __mul__(self, other: 'XMonomial') -> 'XMonomial':
        return XMonomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: 'XMonomial') -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def quotient(self, divisor: 'XMonomial') -> 'XMonomial':
        if not divisor.divides(self):
            raise NotApplicableError(f"{divisor} does not divide {self}")
        return XMonomial(tuple(a - b for a, b in zip(self.exps, divisor.exps)))

    def __str__(self) -> str:
        return format_xmonomial(self)


Monomial = Union[YMonomial, XMonomial]


def ymonomial_key(y: YMonomial) -> Tuple:
    """Graded lexicographic key: degree, then exponents read along decreasing variables"""
    return (y.degree, tuple(sorted(((var_key(m), e) for m, e in y.items), reverse=True)))


def xmonomial_key(m: XMonomial) -> Tuple:
    """Graded lexicographic key with x_1 > x_2 > ... > x_n"""
    return (m.degree, m.exps)


def monomial_key(m: Monomial) -> Tuple:
    return ymonomial_key(m) if isinstance(m, YMonomial) else xmonomial_key(m)


def compare_ymonomials(a: YMonomial, b: YMonomial) -> int:
    ka, kb = ymonomial_key(a), ymonomial_key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# Multichains, mu-partitions and the transfer map
# ---------------------------------------------------------------------------

def is_multichain(y: YMonomial) -> bool:
    masks = sorted(y.support, key=mask_size)
    return all(a & b == a and mask_size(a) < mask_size(b) for a, b in zip(masks, masks[1:]))


def chain_of(y: YMonomial) -> List[Tuple[int, int]]:
    """(mask, exponent) pairs of a multichain, smallest set first"""
    if not is_multichain(y):
        raise NotAMultichainError(f"{y} is not a multichain monomial")
    return sorted(y.items, key=lambda item: mask_size(item[0]))


def mu_of_y(y: YMonomial) -> Partition:
    """Sizes of the subsets in y counted with multiplicity, weakly decreasing"""
    return tuple(sorted((mask_size(m) for m, e in y.items for _ in range(e)), reverse=True))


def conjugate(partition: Sequence[int]) -> Partition:
    parts = sorted((p for p in partition if p > 0), reverse=True)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def mu_of_x(m: XMonomial) -> Partition:
    """mu of the multichain preimage: the conjugate of the exponent multiset"""
    return conjugate(m.exps)


def transfer_phi(y: YMonomial, n: int) -> XMonomial:
    exps = [0] * n
    for mask, e in y.items:
        for i in mask_members(mask):
            if i > n:
                raise DomainError(f"y{format_subset(mask)} is not a variable for n = {n}")
            exps[i - 1] += e
    return XMonomial(tuple(exps))


def multichain_preimage(m: XMonomial) -> YMonomial:
    """The unique multichain monomial y with phi(y) = m"""
    exps: Dict[int, int] = {}
    for level in range(1, max(m.exps, default=0) + 1):
        mask = subset_mask(i + 1 for i, e in enumerate(m.exps) if e >= level)
        exps[mask] = exps.get(mask, 0) + 1
    return YMonomial.from_exponents(exps)


def deg_tilde(y: YMonomial) -> int:
    return y.deg_tilde


def _incomparable_pairs(y: YMonomial) -> List[Tuple[int, int]]:
    masks = y.support
    return [(a, b) for a, b in itertools.combinations(masks, 2) if a & b not in (a, b)]


def straighten_steps(y: YMonomial,
                     choose: Optional[Callable[[List[Tuple[int, int]]], Tuple[int, int]]] = None
                     ) -> List[YMonomial]:
    """Successive monomials from replacing y_A y_B by y_{A|B} y_{A&B}

    The first entry is y itself and the last is a multichain.
    """
    choose = choose or (lambda pairs: pairs[0])
    steps = [y]
    current = y
    while True:
        pairs = _incomparable_pairs(current)
        if not pairs:
            return steps
        a, b = choose(pairs)
        exps = current.exponents()
        for mask in (a, b):
            exps[mask] -= 1
        exps[a | b] = exps.get(a | b, 0) + 1
        if a & b:
            exps[a & b] = exps.get(a & b, 0) + 1
        current = YMonomial.from_exponents(exps)
        steps.append(current)


def straighten(y: YMonomial,
               choose: Optional[Callable[[List[Tuple[int, int]]], Tuple[int, int]]] = None) -> YMonomial:
    return straighten_steps(y, choose)[-1]


def random_chooser(seed: int) -> Callable[[List[Tuple[int, int]]], Tuple[int, int]]:
    rng = random.Random(seed)
    return lambda pairs: rng.choice(pairs)


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """a dominates b (partitions of the same size)"""
    if sum(a) != sum(b):
        raise DomainError(f"dominance compares partitions of one size, got {tuple(a)} and {tuple(b)}")
    length = max(len(a), len(b))
    pa = list(itertools.accumulate(tuple(a) + (0,) * (length - len(a))))
    pb = list(itertools.accumulate(tuple(b) + (0,) * (length - len(b))))
    return all(x >= y for x, y in zip(pa, pb))


def strictly_dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    return tuple(a) != tuple(b) and dominates(a, b)


def act_x(perm: Sequence[int], m: XMonomial) -> XMonomial:
    """sigma . x_i = x_{sigma(i)} with sigma(i) = perm[i-1]"""
    exps = [0] * m.n
    for i, e in enumerate(m.exps):
        exps[perm[i] - 1] = e
    return XMonomial(tuple(exps))


def act_y(perm: Sequence[int], y: YMonomial) -> YMonomial:
    """sigma . y_S = y_{sigma(S)}"""
    return YMonomial.from_exponents(
        {subset_mask(perm[i - 1] for i in mask_members(m)): e for m, e in y.items})


# ---------------------------------------------------------------------------
# Sparse polynomials
# ---------------------------------------------------------------------------

class SparsePolynomial:
    """Finite map monomial -> nonzero Fraction"""

    __slots__ = ('terms',)

    def __init__(self, terms: Optional[Mapping[Monomial, Number]] = None):
        self.terms: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            self.add_term(mono, coeff)

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Number = 1) -> 'SparsePolynomial':
        return cls({mono: coeff})

    def add_term(self, mono: Monomial, coeff: Number) -> None:
        """In-place accumulation of coeff * mono"""
        if not coeff:
            return
        value = self.terms.get(mono, Fraction(0)) + Fraction(coeff)
        if value:
            self.terms[mono] = value
        else:
            self.terms.pop(mono, None)

    def copy(self) -> 'SparsePolynomial':
        result = SparsePolynomial()
        result.terms = dict(self.terms)
        return result

    def items(self):
        return self.terms.items()

    def monomials(self) -> List[Monomial]:
        return list(self.terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: 'SparsePolynomial') -> 'SparsePolynomial':
        result = self.copy()
        for mono, coeff in other.items():
            result.add_term(mono, coeff)
        return result

    def __neg__(self) -> 'SparsePolynomial':
        result = SparsePolynomial()
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __sub__(self, other: 'SparsePolynomial') -> 'SparsePolynomial':
        return self + (-other)

    def scale(self, factor: Number) -> 'SparsePolynomial':
        if not factor:
            return SparsePolynomial()
        result = SparsePolynomial()
        result.terms = {m: c * factor for m, c in self.terms.items()}
        return result

    def mul_monomial(self, mono: Monomial) -> 'SparsePolynomial':
        result = SparsePolynomial()
        for m, c in self.terms.items():
            result.add_term(m * mono, c)
        return result

    def __mul__(self, other: 'SparsePolynomial') -> 'SparsePolynomial':
        result = SparsePolynomial()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                result.add_term(m1 * m2, c1 * c2)
        return result

    def filter(self, keep: Callable[[Monomial], bool]) -> 'SparsePolynomial':
        result = SparsePolynomial()
        result.terms = {m: c for m, c in self.terms.items() if keep(m)}
        return result

    def map_monomials(self, f: Callable[[Monomial], Monomial]) -> 'SparsePolynomial':
        result = SparsePolynomial()
        for m, c in self.terms.items():
            result.add_term(f(m), c)
        return result

    def sorted_terms(self, descending: bool = True) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: monomial_key(item[0]), reverse=descending)

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self.terms:
            raise DomainError("the zero polynomial has no leading term")
        return max(self.terms.items(), key=lambda item: monomial_key(item[0]))

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def to_json(self) -> List[Dict[str, str]]:
        return [{'coeff': str(c), 'mono': str(m)} for m, c in self.sorted_terms()]

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"SparsePolynomial({format_polynomial(self)!r})"


def drop_non_multichain(poly: SparsePolynomial) -> SparsePolynomial:
    return poly.filter(is_multichain)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def theta(i: int, n: int, r: int) -> SparsePolynomial:
    """theta_i = sum over |S| = i of y_S^r"""
    check_n(n)
    if not 1 <= i <= n:
        raise DomainError(f"theta_{i} is undefined for n = {n}")
    return SparsePolynomial({YMonomial.var(subset_mask(s), r): 1
                             for s in itertools.combinations(range(1, n + 1), i)})


def elementary_e(d: int, n: int, r: int) -> SparsePolynomial:
    """e_d(x_1^r, ..., x_n^r)"""
    check_n(n)
    if not 1 <= d <= n:
        raise DomainError(f"e_{d} is undefined for n = {n}")
    return SparsePolynomial({XMonomial.from_exponents({i: r for i in s}, n): 1
                             for s in itertools.combinations(range(1, n + 1), d)})


def strict_chains(n: int, max_length: int, start: int = 0) -> Iterator[Tuple[int, ...]]:
    """Strict chains of nonempty subsets above `start`, up to max_length sets"""
    if max_length <= 0:
        return
    full = prefix_mask(n)
    free = full & ~start
    # supersets of start, enumerated through submasks of the free bits
    sub = free
    while sub:
        top = start | sub
        yield (top,)
        for rest in strict_chains(n, max_length - 1, top):
            yield (top,) + rest
        sub = (sub - 1) & free


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def multichains(n: int, length: int) -> Iterator[YMonomial]:
    """All multichain monomials with exactly `length` variables"""
    check_n(n)
    if length == 0:
        yield YMonomial.one()
        return
    for chain in strict_chains(n, length):
        for exps in _compositions(length, len(chain)):
            yield YMonomial.from_exponents(dict(zip(chain, exps)))


def multichains_up_to(n: int, max_length: int) -> Iterator[YMonomial]:
    for length in range(max_length + 1):
        yield from multichains(n, length)


def multichains_with_mu(mu: Sequence[int], n: int) -> Iterator[YMonomial]:
    """Multichain monomials whose mu-partition is mu"""
    check_n(n)
    if any(not 1 <= part <= n for part in mu):
        raise DomainError(f"{tuple(mu)} has a part outside [1, {n}]")
    sizes = sorted(set(mu))
    mult = {s: list(mu).count(s) for s in sizes}

    def extend(current: int, index: int) -> Iterator[Tuple[int, ...]]:
        if index == len(sizes):
            yield ()
            return
        outside = [i for i in range(1, n + 1) if not current >> (i - 1) & 1]
        for added in itertools.combinations(outside, sizes[index] - mask_size(current)):
            mask = current | subset_mask(added)
            for rest in extend(mask, index + 1):
                yield (mask,) + rest

    for flag in extend(0, 0):
        yield YMonomial.from_exponents({mask: mult[s] for mask, s in zip(flag, sizes)})


def ideal_generators(n: int, k: int, r: int, variant: Variant,
                     setting: Setting) -> Iterator[SparsePolynomial]:
    """Generators of I/J (x-setting) or of their multichain counterparts (y-setting)

    Multichain generators are produced lazily; their number grows quickly.
    """
    check_n(n)
    if not 0 <= k <= n:
        raise DomainError(f"k must satisfy 0 <= k <= n, got {k}")
    variant, setting = Variant(variant), Setting(setting)
    bound = variant.multichain_bound(k, r)
    if setting is Setting.X:
        for i in range(1, n + 1):
            yield SparsePolynomial.monomial(XMonomial.from_exponents({i: bound}, n))
        for d in range(n - k + 1, n + 1):
            yield elementary_e(d, n, r)
        return
    masks = range(1, prefix_mask(n) + 1)
    for a, b in itertools.combinations(masks, 2):
        if a & b not in (a, b):
            yield SparsePolynomial.monomial(YMonomial.from_exponents({a: 1, b: 1}))
    for i in range(n - k + 1, n + 1):
        yield theta(i, n, r)
    for y in multichains(n, bound):
        yield SparsePolynomial.monomial(y)


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------

def format_ymonomial(y: YMonomial) -> str:
    if y.is_one():
        return '1'
    factors = []
    for mask, e in sorted(y.items, key=lambda item: var_key(item[0]), reverse=True):
        factors.append(f"y{format_subset(mask)}" + (f"^{e}" if e != 1 else ''))
    return '*'.join(factors)


def format_xmonomial(m: XMonomial) -> str:
    if m.is_one():
        return '1'
    order = sorted((i for i, e in enumerate(m.exps) if e), key=lambda i: (-m.exps[i], i))
    return '*'.join(f"x{i + 1}" + (f"^{m.exps[i]}" if m.exps[i] != 1 else '') for i in order)


def format_polynomial(poly: SparsePolynomial) -> str:
    if not poly:
        return '0'
    pieces = []
    for mono, coeff in poly.sorted_terms():
        sign = '-' if coeff < 0 else '+'
        size = abs(coeff)
        body = str(mono)
        if size != 1:
            body = f"{size}*{body}" if body != '1' else str(size)
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ('-' if first_sign == '-' else '') + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


_YFACTOR = re.compile(r'^y\{([\d,]*)\}(?:\^(\d+))?$')
_XFACTOR = re.compile(r'^x(\d+)(?:\^(\d+))?$')


def _factors(text: str) -> List[str]:
    compact = re.sub(r'\s+', '', text)
    if compact in ('', '1'):
        return []
    return compact.split('*')


def parse_ymonomial(text: str, n: int) -> YMonomial:
    """Read 'y{1,3,4}^7*y{4}^5'"""
    exps: Dict[int, int] = {}
    for factor in _factors(text):
        match = _YFACTOR.match(factor)
        if not match:
            raise ParseError(f"cannot read y-factor {factor!r}")
        members = [int(t) for t in match.group(1).split(',') if t]
        if not members or any(not 1 <= i <= n for i in members):
            raise ParseError(f"y{{{match.group(1)}}} is not a variable for n = {n}")
        mask = subset_mask(members)
        exps[mask] = exps.get(mask, 0) + int(match.group(2) or 1)
    return YMonomial.from_exponents(exps)


def parse_xmonomial(text: str, n: int) -> XMonomial:
    """Read 'x4^21*x3^20*x8'"""
    exps: Dict[int, int] = {}
    for factor in _factors(text):
        match = _XFACTOR.match(factor)
        if not match:
            raise ParseError(f"cannot read x-factor {factor!r}")
        i = int(match.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"x{i} is not a variable for n = {n}")
        exps[i] = exps.get(i, 0) + int(match.group(2) or 1)
    return XMonomial.from_exponents(exps, n)


def parse_monomial(text: str, n: int) -> Monomial:
    """Dispatch on the first factor: y{...} or x<i>"""
    stripped = re.sub(r'\s+', '', text)
    if stripped.startswith('x'):
        return parse_xmonomial(stripped, n)
    return parse_ymonomial(stripped, n)
