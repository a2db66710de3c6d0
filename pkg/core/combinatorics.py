"""
Colored Combinatorics Module

Colored letters and words over [n] with colors in {0, ..., r-1}, the
ascent-starred encoding (g, lambda) of colored ordered set partitions,
faces (Z, g, lambda) with an uncolored zero block, and the statistics
des, maj, comaj and (for r = 1) hrs_maj defined on them.

Letters are compared in the color-heavy order: a < b iff a has the
larger color, or the colors agree and a has the smaller letter.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import binomial, factorial
from sympy.functions.combinatorial.numbers import stirling

from .errors import (
    DomainError,
    InvalidColorError,
    InvalidFaceError,
    MalformedPartitionError,
    ParseError,
    UnsupportedStatisticError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColoredLetter:
    """A letter of [n] carrying a color"""

    letter: int
    color: int = 0

    def __str__(self) -> str:
        return f"{self.letter}^{self.color}"


def letter_key(a: ColoredLetter, r: int) -> Tuple[int, int]:
    """Sort key realising the color-heavy order on letters"""
    if not 0 <= a.color < r:
        raise InvalidColorError(f"color {a.color} of letter {a.letter} is not in 0..{r - 1}")
    return (r - 1 - a.color, a.letter)


def compare_letters(a: ColoredLetter, b: ColoredLetter, r: int) -> int:
    """Return -1, 0 or 1 as a is less than, equal to or greater than b"""
    ka, kb = letter_key(a, r), letter_key(b, r)
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class ColoredWord:
    """A word of distinct colored letters from [n]"""

    letters: Tuple[ColoredLetter, ...]
    n: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise DomainError(f"r must be at least 1, got {self.r}")
        seen = set()
        for a in self.letters:
            if not 1 <= a.letter <= self.n:
                raise DomainError(f"letter {a.letter} is not in [1, {self.n}]")
            if not 0 <= a.color < self.r:
                raise InvalidColorError(f"color {a.color} of letter {a.letter} is not in 0..{self.r - 1}")
            if a.letter in seen:
                raise DomainError(f"letter {a.letter} occurs twice")
            seen.add(a.letter)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]], n: int, r: int) -> 'ColoredWord':
        return cls(tuple(ColoredLetter(a, c) for a, c in pairs), n, r)

    @classmethod
    def identity(cls, n: int, r: int) -> 'ColoredWord':
        return cls.from_pairs(((i, 0) for i in range(1, n + 1)), n, r)

    @property
    def perm(self) -> Tuple[int, ...]:
        return tuple(a.letter for a in self.letters)

    @property
    def colors(self) -> Tuple[int, ...]:
        return tuple(a.color for a in self.letters)

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(self.perm)

    @property
    def is_full(self) -> bool:
        return len(self.letters) == self.n

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self) -> str:
        return format_word(self)


def descent_set(w: ColoredWord) -> FrozenSet[int]:
    """Positions i (1-based) with w_i > w_{i+1} in the color-heavy order"""
    keys = [letter_key(a, w.r) for a in w.letters]
    return frozenset(i + 1 for i in range(len(keys) - 1) if keys[i] > keys[i + 1])


def des(w: ColoredWord) -> int:
    return len(descent_set(w))


def maj(w: ColoredWord) -> int:
    """Sum of colors plus r times the sum of descent positions"""
    return sum(w.colors) + w.r * sum(descent_set(w))


# ---------------------------------------------------------------------------
# Ordered set partitions and faces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderedSetPartition:
    """Ascent-starred representative (g, lambda) of a colored OSP of [n]

    The number of blocks k is not stored; validity is checked against the
    k supplied by the caller.
    """

    word: ColoredWord
    lam: Tuple[int, ...] = ()

    def __post_init__(self):
        _check_partition(self.lam)
        if not self.word.is_full:
            raise MalformedPartitionError("an ordered set partition needs a word on all of [n]")

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def r(self) -> int:
        return self.word.r

    def validate(self, k: int) -> None:
        _check_starred(self.word, self.lam, k, self.n - k, MalformedPartitionError)

    def __str__(self) -> str:
        return format_osp(self)


@dataclass(frozen=True)
class Face:
    """A face (Z, g, lambda): uncolored zero block Z and an OSP of [n] - Z"""

    zero_block: FrozenSet[int]
    word: ColoredWord
    lam: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'zero_block', frozenset(self.zero_block))
        _check_partition(self.lam)
        if self.zero_block & self.word.support:
            raise InvalidFaceError("zero block and word share letters")
        if self.zero_block | self.word.support != frozenset(range(1, self.word.n + 1)):
            raise InvalidFaceError("zero block and word do not cover [n]")

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def r(self) -> int:
        return self.word.r

    def validate(self, k: int) -> None:
        if len(self.zero_block) > self.n - k:
            raise InvalidFaceError(
                f"zero block of size {len(self.zero_block)} exceeds n-k = {self.n - k}")
        if k == 0:
            if self.lam or len(self.word):
                raise InvalidFaceError("for k = 0 the only face is ([n], empty word, empty lambda)")
            return
        _check_starred(self.word, self.lam, k, len(self.word) - k, InvalidFaceError)

    def __str__(self) -> str:
        return format_face(self)


def _check_partition(lam: Sequence[int]) -> None:
    if any(part < 1 for part in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise MalformedPartitionError(f"{tuple(lam)} is not a partition")


def _check_starred(word: ColoredWord, lam: Tuple[int, ...], k: int, max_part: int, error) -> None:
    d = des(word)
    if d >= k:
        raise error(f"des(g) = {d} is not below k = {k}")
    if len(lam) > k - d - 1:
        raise error(f"lambda {lam} has more than k-des(g)-1 = {k - d - 1} parts")
    if lam and lam[0] > max_part:
        raise error(f"lambda {lam} has a part above {max_part}")


def starred_ascents(word: ColoredWord, lam: Tuple[int, ...], k: int) -> List[int]:
    """Positions of the starred ascents encoded by lambda

    The j-th unstarred ascent counted from the right has lambda_j starred
    ascents to its left; ascents after the last unstarred one are starred.
    """
    descents = descent_set(word)
    ascents = [i for i in range(1, len(word)) if i not in descents]
    unstarred = k - 1 - len(descents)
    if unstarred < 0 or len(lam) > unstarred:
        raise MalformedPartitionError(f"lambda {lam} does not fit k = {k}")
    need = sorted(tuple(lam) + (0,) * (unstarred - len(lam)))
    stars: List[int] = []
    placed = 0
    for pos in ascents:
        if placed < unstarred and len(stars) == need[placed]:
            placed += 1
        else:
            stars.append(pos)
    if placed < unstarred:
        raise MalformedPartitionError(f"lambda {lam} needs more ascents than the word has")
    return stars


def _cuts(word: ColoredWord, lam: Tuple[int, ...], k: int) -> List[int]:
    starred = set(starred_ascents(word, lam, k))
    return [i for i in range(1, len(word)) if i not in starred]


def _blocks_of(word: ColoredWord, lam: Tuple[int, ...], k: int) -> List[Tuple[ColoredLetter, ...]]:
    blocks, start = [], 0
    for cut in _cuts(word, lam, k) + [len(word)]:
        blocks.append(tuple(word.letters[start:cut]))
        start = cut
    return blocks


def osp_to_blocks(p: OrderedSetPartition, k: int) -> List[Tuple[ColoredLetter, ...]]:
    """Block view of (g, lambda), each block sorted in the color-heavy order"""
    p.validate(k)
    return _blocks_of(p.word, p.lam, k)


def osp_from_blocks(blocks: Sequence[Iterable[ColoredLetter]], n: int, r: int) -> OrderedSetPartition:
    """Ascent-starred representative of an ordered set partition given by blocks"""
    blocks = [sorted(block, key=lambda a: letter_key(a, r)) for block in blocks]
    if any(not block for block in blocks):
        raise MalformedPartitionError("empty block")
    letters = [a.letter for block in blocks for a in block]
    if sorted(letters) != list(range(1, n + 1)):
        raise MalformedPartitionError(f"blocks do not partition [1, {n}]")
    word = ColoredWord(tuple(a for block in blocks for a in block), n, r)
    descents = descent_set(word)
    boundaries = set(itertools.accumulate(len(block) for block in blocks[:-1]))
    stars, lam = 0, []
    for pos in range(1, n):
        if pos in descents:
            continue
        if pos in boundaries:
            lam.append(stars)
        else:
            stars += 1
    lam = tuple(sorted((part for part in lam if part > 0), reverse=True))
    return OrderedSetPartition(word, lam)


def comaj_osp(p: OrderedSetPartition) -> int:
    """comaj(g, lambda) = maj(g) + r|lambda|"""
    return maj(p.word) + p.r * sum(p.lam)


def comaj_face(f: Face, n: int, k: int, r: int) -> int:
    """comaj(Z, g, lambda) = k r |Z| + maj(g) + r |lambda|"""
    if f.n != n or f.r != r:
        raise DomainError(f"face lives in (n, r) = ({f.n}, {f.r}), not ({n}, {r})")
    f.validate(k)
    return k * r * len(f.zero_block) + maj(f.word) + r * sum(f.lam)


def hrs_weights(p: OrderedSetPartition, k: int) -> Tuple[int, ...]:
    """w_i = number of blocks completed at or before position i (r = 1)"""
    if p.r != 1:
        raise UnsupportedStatisticError("hrs_maj is only defined for r = 1")
    p.validate(k)
    ends = _cuts(p.word, p.lam, k) + [p.n]
    return tuple(sum(1 for e in ends if e <= i) for i in range(1, p.n + 1))


def hrs_maj(p: OrderedSetPartition, k: int) -> int:
    """Weighted sum of w_i over the ascent positions of g (r = 1)"""
    weights = hrs_weights(p, k)
    descents = descent_set(p.word)
    return sum(weights[i - 1] for i in range(1, p.n) if i not in descents)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not 0 <= k <= n:
        raise DomainError(f"k must satisfy 0 <= k <= n, got k = {k}, n = {n}")


def partitions_in_box(max_parts: int, max_part: int) -> List[Tuple[int, ...]]:
    """All partitions fitting in a max_parts x max_part box, lexicographically"""
    if max_parts < 0 or max_part < 0:
        return []
    found = []
    for length in range(0, max_parts + 1 if max_part > 0 else 1):
        for combo in itertools.combinations_with_replacement(range(1, max_part + 1), length):
            found.append(tuple(sorted(combo, reverse=True)))
    return sorted(found)


def enumerate_words(n: int, r: int, letters: Optional[Iterable[int]] = None) -> Iterator[ColoredWord]:
    """Colored words on the given letters (default [n]) in (perm, colors) order"""
    letters = tuple(sorted(letters)) if letters is not None else tuple(range(1, n + 1))
    for perm in itertools.permutations(letters):
        for colors in itertools.product(range(r), repeat=len(letters)):
            yield ColoredWord(tuple(ColoredLetter(a, c) for a, c in zip(perm, colors)), n, r)


def enumerate_osp(n: int, k: int, r: int) -> Iterator[OrderedSetPartition]:
    _check_nk(n, k)
    for word in enumerate_words(n, r):
        d = des(word)
        if d >= k:
            continue
        for lam in partitions_in_box(k - d - 1, n - k):
            yield OrderedSetPartition(word, lam)


def enumerate_faces(n: int, k: int, r: int) -> Iterator[Face]:
    _check_nk(n, k)
    if k == 0:
        yield Face(frozenset(range(1, n + 1)), ColoredWord((), n, r), ())
        return
    zero_blocks = sorted(
        (z for size in range(n - k + 1) for z in itertools.combinations(range(1, n + 1), size)))
    for z in zero_blocks:
        rest = [i for i in range(1, n + 1) if i not in z]
        for word in enumerate_words(n, r, rest):
            d = des(word)
            if d >= k:
                continue
            for lam in partitions_in_box(k - d - 1, len(rest) - k):
                yield Face(frozenset(z), word, lam)


def count_words(n: int, r: int) -> int:
    return int(r ** n * factorial(n))


def count_osp(n: int, k: int, r: int) -> int:
    _check_nk(n, k)
    return int(r ** n * factorial(k) * stirling(n, k))


def count_faces(n: int, k: int, r: int) -> int:
    _check_nk(n, k)
    if k == 0:
        return 1
    return int(sum(binomial(n, z) * r ** (n - z) * factorial(k) * stirling(n - z, k)
                   for z in range(n - k + 1)))


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------

_LETTER = re.compile(r'^(\d+)(?:\^(\d+))?$')


def _letters(text: str, n: int) -> List[ColoredLetter]:
    tokens = [t for t in re.split(r'[\s,]+', text.strip()) if t]
    letters = []
    for token in tokens:
        if '^' not in token and len(token) > 1 and n <= 9 and token.isdigit():
            letters.extend(ColoredLetter(int(ch), 0) for ch in token)
            continue
        match = _LETTER.match(token)
        if not match:
            raise ParseError(f"cannot read letter {token!r}")
        letters.append(ColoredLetter(int(match.group(1)), int(match.group(2) or 0)))
    return letters


def _parse_lam(text: str) -> Tuple[int, ...]:
    text = text.strip().strip('()')
    if not text:
        return ()
    try:
        lam = tuple(int(part) for part in re.split(r'[\s,]+', text) if part)
    except ValueError:
        raise ParseError(f"cannot read partition {text!r}")
    _check_partition(lam)
    return lam


def _format_lam(lam: Tuple[int, ...]) -> str:
    return ','.join(str(part) for part in lam)


def parse_word(text: str, n: int, r: int) -> ColoredWord:
    """Read '4^3 2^2 3^2 ...'; a bare letter has color 0"""
    return ColoredWord(tuple(_letters(text, n)), n, r)


def format_word(w: ColoredWord) -> str:
    return ' '.join(str(a) for a in w.letters)


def parse_osp(text: str, n: int, r: int) -> OrderedSetPartition:
    """Read '(word; lambda)'"""
    inner = text.strip()
    if not (inner.startswith('(') and inner.endswith(')')) or inner.count(';') != 1:
        raise ParseError(f"expected '(word; lambda)', got {text!r}")
    word_text, lam_text = inner[1:-1].split(';')
    return OrderedSetPartition(parse_word(word_text, n, r), _parse_lam(lam_text))


def format_osp(p: OrderedSetPartition) -> str:
    return f"({format_word(p.word)}; {_format_lam(p.lam)})"


def parse_blocks(text: str, n: int, r: int) -> OrderedSetPartition:
    """Read 'B1|B2|...' where each block lists colored letters"""
    inner = text.strip().strip('()')
    blocks = [_letters(chunk.strip().strip('{}'), n) for chunk in inner.split('|')]
    return osp_from_blocks(blocks, n, r)


def format_blocks(blocks: Sequence[Sequence[ColoredLetter]]) -> str:
    return '|'.join(' '.join(str(a) for a in block) for block in blocks)


def parse_face(text: str, n: int, r: int) -> Face:
    """Read '(Z; word; lambda)' with Z written as '{1,4}'"""
    inner = text.strip()
    if not (inner.startswith('(') and inner.endswith(')')) or inner.count(';') != 2:
        raise ParseError(f"expected '(Z; word; lambda)', got {text!r}")
    z_text, word_text, lam_text = inner[1:-1].split(';')
    z_text = z_text.strip().strip('{}')
    try:
        zero_block = frozenset(int(t) for t in re.split(r'[\s,]+', z_text) if t)
    except ValueError:
        raise ParseError(f"cannot read zero block {z_text!r}")
    return Face(zero_block, parse_word(word_text, n, r), _parse_lam(lam_text))


def format_face(f: Face) -> str:
    zero = ','.join(str(i) for i in sorted(f.zero_block))
    return f"({{{zero}}}; {format_word(f.word)}; {_format_lam(f.lam)})"
