"""
Symmetric Functions Module

Frobenius layer for the symmetric group case: compositions, the ribbon,
homogeneous and Schur bases, Gaussian binomials, the multigraded Frobenius
series of S_{n,k} in t_1..t_n, its q-specialization, and the decomposition
of graded characters via the Murnaghan-Nakayama rule.

Series coefficients are sympy expressions; Schur vectors compare equal
when every coefficient difference expands to zero.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

import sympy
from sympy.utilities.iterables import partitions as sympy_partitions

from .env import env
from .errors import DecompositionError, DomainError, MalformedPartitionError, ResourceLimitError

logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]

q = sympy.Symbol('q')


def t_symbols(n: int) -> Tuple[sympy.Symbol, ...]:
    return tuple(sympy.Symbol(f't{i}') for i in range(1, n + 1))


def check_symmetric_bound(n: int, bound: Optional[int] = None) -> None:
    bound = env.sym_bound if bound is None else bound
    if n > bound:
        raise ResourceLimitError(f"symmetric-function work is capped at n <= {bound}, got n = {n}")


# ---------------------------------------------------------------------------
# Compositions and partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise MalformedPartitionError(f"composition parts must be positive: {self.parts}")

    @classmethod
    def from_descent_set(cls, descents: Sequence[int], n: int) -> 'Composition':
        cuts = [0] + sorted(descents) + [n]
        if any(not 0 < d < n for d in descents):
            raise DomainError(f"descent set {sorted(descents)} is not inside [1, {n - 1}]")
        return cls(tuple(b - a for a, b in zip(cuts, cuts[1:])))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def descent_set(self) -> FrozenSet[int]:
        return frozenset(itertools.accumulate(self.parts[:-1]))

    @property
    def maj(self) -> int:
        return sum(self.descent_set)

    def __str__(self) -> str:
        return '(' + ','.join(map(str, self.parts)) + ')'


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of n, by descent set size then lexicographically"""
    for size in range(n):
        for descents in itertools.combinations(range(1, n), size):
            yield Composition.from_descent_set(descents, n)


def refines(beta: Composition, alpha: Composition) -> bool:
    """beta is coarser than alpha: D(beta) is contained in D(alpha)"""
    if beta.n != alpha.n:
        raise DomainError(f"{beta} and {alpha} are compositions of different sizes")
    return beta.descent_set <= alpha.descent_set


def maj_comp(alpha: Composition) -> int:
    return alpha.maj


def check_partition(lam: Sequence[int]) -> Partition:
    lam = tuple(lam)
    if any(p < 1 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise MalformedPartitionError(f"{lam} is not a partition")
    return lam


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order"""
    found = []
    for p in sympy_partitions(n):
        # sympy reuses the dict between iterations
        found.append(tuple(sorted(itertools.chain.from_iterable(
            [part] * mult for part, mult in dict(p).items()), reverse=True)))
    return tuple(sorted(found, reverse=True))


# ---------------------------------------------------------------------------
# Schur vectors
# ---------------------------------------------------------------------------

class SchurVector:
    """Finite sum of s_lambda with sympy coefficients"""

    def __init__(self, coeffs: Optional[Mapping[Partition, object]] = None):
        self.coeffs: Dict[Partition, sympy.Expr] = {}
        for lam, c in (coeffs or {}).items():
            self.add(lam, c)

    def add(self, lam: Partition, coeff) -> None:
        value = sympy.expand(self.coeffs.get(lam, sympy.Integer(0)) + coeff)
        if value == 0:
            self.coeffs.pop(lam, None)
        else:
            self.coeffs[lam] = value

    def __add__(self, other: 'SchurVector') -> 'SchurVector':
        result = SchurVector(self.coeffs)
        for lam, c in other.coeffs.items():
            result.add(lam, c)
        return result

    def scale(self, factor) -> 'SchurVector':
        result = SchurVector()
        for lam, c in self.coeffs.items():
            result.add(lam, c * factor)
        return result

    def subs(self, substitution) -> 'SchurVector':
        result = SchurVector()
        for lam, c in self.coeffs.items():
            result.add(lam, c.subs(substitution))
        return result

    def coefficient(self, lam: Partition) -> sympy.Expr:
        return self.coeffs.get(tuple(lam), sympy.Integer(0))

    def items(self) -> List[Tuple[Partition, sympy.Expr]]:
        return sorted(self.coeffs.items(), reverse=True)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurVector):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(sympy.expand(self.coefficient(k) - other.coefficient(k)) == 0 for k in keys)

    def __hash__(self):
        return hash(frozenset(self.coeffs))

    def is_schur_positive(self) -> bool:
        for c in self.coeffs.values():
            poly = sympy.Poly(c, *sorted(c.free_symbols, key=str)) if c.free_symbols else None
            values = poly.coeffs() if poly is not None else [c]
            if any(v < 0 for v in values):
                return False
        return True

    def to_json(self) -> List[Dict[str, object]]:
        """[{partition, poly}] with poly the ascending q-coefficients"""
        terms = []
        for lam, c in self.items():
            poly = sympy.Poly(c, q)
            coeffs = [int(poly.coeff_monomial(q ** d)) for d in range(poly.degree() + 1)]
            terms.append({'partition': list(lam), 'poly': coeffs})
        return terms

    def __str__(self) -> str:
        if not self.coeffs:
            return '0'
        return ' + '.join(f"({c})*s{list(lam)}" for lam, c in self.items())

    def __repr__(self) -> str:
        return f"SchurVector({self})"


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Tuple[int, ...]) -> int:
    """Semistandard tableaux of shape lam and content mu, by horizontal strips"""
    lam = tuple(p for p in lam if p)
    mu = tuple(p for p in mu if p)
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    strip = mu[-1]
    below = lam[1:] + (0,)
    total = 0
    ranges = [range(b, a + 1) for a, b in zip(lam, below)]
    for nu in itertools.product(*ranges):
        if sum(lam) - sum(nu) == strip:
            total += kostka(tuple(nu), mu[:-1])
    return total


@lru_cache(maxsize=None)
def _h_to_schur(parts: Tuple[int, ...]) -> Tuple[Tuple[Partition, int], ...]:
    return tuple((lam, kostka(lam, parts)) for lam in partitions_of(sum(parts))
                 if kostka(lam, parts))


def h_to_schur(alpha, bound: Optional[int] = None) -> SchurVector:
    parts = alpha.parts if isinstance(alpha, Composition) else tuple(alpha)
    check_symmetric_bound(sum(parts), bound)
    return SchurVector(dict(_h_to_schur(parts)))


@lru_cache(maxsize=None)
def _ribbon_to_schur(alpha: Composition) -> Tuple[Tuple[Partition, int], ...]:
    totals: Dict[Partition, int] = {}
    d_alpha = sorted(alpha.descent_set)
    for size in range(len(d_alpha) + 1):
        sign = (-1) ** (len(d_alpha) - size)
        for descents in itertools.combinations(d_alpha, size):
            beta = Composition.from_descent_set(descents, alpha.n)
            for lam, c in _h_to_schur(beta.parts):
                totals[lam] = totals.get(lam, 0) + sign * c
    return tuple((lam, c) for lam, c in totals.items() if c)


def ribbon_to_schur(alpha: Composition, bound: Optional[int] = None) -> SchurVector:
    """Schur expansion of the ribbon function r_alpha = sum over beta <= alpha of +-h_beta"""
    check_symmetric_bound(alpha.n, bound)
    return SchurVector(dict(_ribbon_to_schur(alpha)))


# ---------------------------------------------------------------------------
# Gaussian binomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> sympy.Poly:
    """binom(a+b, b)_q, the generating function of partitions in an a x b box"""
    if a < 0 or b < 0:
        raise DomainError(f"q_binomial needs a, b >= 0, got ({a}, {b})")
    if a == 0 or b == 0:
        return sympy.Poly(1, q)
    return q_binomial(a, b - 1) + sympy.Poly(q ** b, q) * q_binomial(a - 1, b)


def gaussian(top: int, bottom: int) -> sympy.Poly:
    if bottom < 0 or bottom > top:
        return sympy.Poly(0, q)
    return q_binomial(top - bottom, bottom)


# ---------------------------------------------------------------------------
# Frobenius series
# ---------------------------------------------------------------------------

@dataclass
class FrobeniusSeries:
    """Ribbon-indexed series: sum of coefficient(t) * r_alpha"""

    n: int
    terms: Dict[Composition, sympy.Expr] = field(default_factory=dict)

    def add(self, alpha: Composition, coeff) -> None:
        value = sympy.expand(self.terms.get(alpha, sympy.Integer(0)) + coeff)
        if value == 0:
            self.terms.pop(alpha, None)
        else:
            self.terms[alpha] = value

    def to_schur(self, bound: Optional[int] = None) -> SchurVector:
        result = SchurVector()
        for alpha, coeff in self.terms.items():
            result = result + ribbon_to_schur(alpha, bound).scale(coeff)
        return result

    def multigraded_terms(self, bound: Optional[int] = None) -> List[Dict[str, object]]:
        """[{t_monomial, schur}] grouping the Schur expansion by t-monomial"""
        ts = t_symbols(self.n)
        grouped: Dict[Tuple[int, ...], Dict[Partition, int]] = {}
        for lam, coeff in self.to_schur(bound).items():
            for exps, c in sympy.Poly(coeff, *ts).terms():
                grouped.setdefault(exps, {})[lam] = int(c)
        rows = []
        for exps in sorted(grouped, key=lambda e: (sum(i * x for i, x in enumerate(e, 1)), e)):
            label = '*'.join(f"t{i}" + (f"^{e}" if e > 1 else '')
                             for i, e in enumerate(exps, 1) if e) or '1'
            rows.append({'t_monomial': label,
                         'schur': [{'partition': list(lam), 'coeff': c}
                                   for lam, c in sorted(grouped[exps].items(), reverse=True)]})
        return rows


def _bounded_exponents(variables: int, total: int) -> Iterator[Tuple[int, ...]]:
    """Vectors of `variables` nonnegative integers with sum at most `total`"""
    if variables == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _bounded_exponents(variables - 1, total - first):
            yield (first,) + rest


def multigraded_frobenius_S(n: int, k: int, bound: Optional[int] = None) -> FrobeniusSeries:
    """grFrob(S_{n,k}; t_1..t_n) in ribbon coordinates"""
    check_symmetric_bound(n, bound)
    if not 0 <= k <= n:
        raise DomainError(f"k must satisfy 0 <= k <= n, got {k}")
    ts = t_symbols(n)
    series = FrobeniusSeries(n)
    for alpha in compositions(n):
        if alpha.length > k:
            continue
        lead = sympy.Mul(*[ts[i - 1] for i in alpha.descent_set])
        inner = sympy.Add(*[
            sympy.Mul(*[ts[i] ** j for i, j in enumerate(js)])
            for js in _bounded_exponents(n - k, k - alpha.length)])
        series.add(alpha, lead * inner)
    logger.debug("multigraded Frobenius series of S_{%d,%d}: %d ribbons", n, k, len(series.terms))
    return series


def specialize(series: FrobeniusSeries, bound: Optional[int] = None) -> SchurVector:
    """Substitute t_i -> q^i and convert to Schur coordinates"""
    substitution = {t: q ** i for i, t in enumerate(t_symbols(series.n), 1)}
    result = FrobeniusSeries(series.n)
    for alpha, coeff in series.terms.items():
        result.add(alpha, sympy.sympify(coeff).subs(substitution))
    return result.to_schur(bound)


def q_frobenius_formula(n: int, k: int, bound: Optional[int] = None) -> SchurVector:
    """sum over alpha of q^maj(alpha) binom(n - l(alpha), k - l(alpha))_q r_alpha"""
    check_symmetric_bound(n, bound)
    series = FrobeniusSeries(n)
    for alpha in compositions(n):
        if alpha.length <= k:
            series.add(alpha, q ** alpha.maj * gaussian(n - alpha.length, k - alpha.length).as_expr())
    return series.to_schur(bound)


# ---------------------------------------------------------------------------
# Characters of the symmetric group
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _murnaghan_nakayama(beta: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    if not mu:
        return 1
    hook, rest = mu[0], mu[1:]
    present = set(beta)
    total = 0
    for b in beta:
        c = b - hook
        if c < 0 or c in present:
            continue
        height = sum(1 for x in beta if c < x < b)
        moved = tuple(sorted((present - {b}) | {c}, reverse=True))
        total += (-1) ** height * _murnaghan_nakayama(moved, rest)
    return total


def character_value(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi^lam on the class of cycle type mu"""
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise DomainError(f"{lam} and {mu} are partitions of different sizes")
    length = len(lam)
    beta = tuple(p + length - i for i, p in enumerate(lam, 1))
    return _murnaghan_nakayama(beta, mu)


def centralizer_size(mu: Sequence[int]) -> int:
    size = 1
    for part in set(mu):
        mult = list(mu).count(part)
        size *= part ** mult * math.factorial(mult)
    return size


def class_size(mu: Sequence[int]) -> int:
    return math.factorial(sum(mu)) // centralizer_size(mu)


def hook_dimension(lam: Sequence[int]) -> int:
    lam = check_partition(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return math.factorial(sum(lam)) // hooks


def class_representative(mu: Sequence[int]) -> Tuple[int, ...]:
    """One-line notation of a permutation of cycle type mu built from consecutive cycles"""
    perm: List[int] = []
    start = 1
    for part in check_partition(mu):
        perm.extend(range(start + 1, start + part))
        perm.append(start)
        start += part
    return tuple(perm)


@dataclass
class GradedCharacter:
    """One class function per degree; degrees[d][mu] is the trace on degree d"""

    n: int
    degrees: List[Dict[Partition, Fraction]] = field(default_factory=list)

    def trace(self, mu: Partition) -> List[Fraction]:
        return [slice_.get(tuple(mu), Fraction(0)) for slice_ in self.degrees]

    def dimensions(self) -> List[Fraction]:
        return self.trace((1,) * self.n)

    def to_dict(self) -> Dict[str, List[str]]:
        return {','.join(map(str, mu)): [str(v) for v in self.trace(mu)]
                for mu in partitions_of(self.n)}


def decompose_class_function(values: Mapping[Partition, Fraction], n: int) -> Dict[Partition, int]:
    """Multiplicities of the irreducibles in a class function, checked integral and nonnegative"""
    missing = [mu for mu in partitions_of(n) if mu not in values]
    if missing:
        raise DecompositionError(f"class function is missing the classes {missing}")
    order = math.factorial(n)
    result = {}
    for lam in partitions_of(n):
        total = sum(Fraction(class_size(mu)) * Fraction(values[mu]) * character_value(lam, mu)
                    for mu in partitions_of(n)) / order
        if total.denominator != 1 or total < 0:
            raise DecompositionError(f"multiplicity of s{list(lam)} is {total}, not a natural number")
        if total:
            result[lam] = int(total)
    return result


def frobenius_from_characters(char: GradedCharacter, n: Optional[int] = None,
                              bound: Optional[int] = None) -> SchurVector:
    n = char.n if n is None else n
    check_symmetric_bound(n, bound)
    result = SchurVector()
    for degree, values in enumerate(char.degrees):
        for lam, mult in decompose_class_function(values, n).items():
            result.add(lam, mult * q ** degree)
    return result


def schur_dimension(vector: SchurVector) -> sympy.Expr:
    """Replace each s_lambda by its dimension, keeping the grading"""
    return sympy.expand(sum((c * hook_dimension(lam) for lam, c in vector.coeffs.items()),
                            sympy.Integer(0)))
