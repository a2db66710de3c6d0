"""
Exact Echelon Forms

Sparse row echelon form over the rationals. Rows are maps column -> Fraction
and the pivot of a row is its largest column under a supplied sort key, so
the columns left without a pivot after reducing a spanning set are exactly
the standard monomials of that slice.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Tuple

from .errors import CertificationError, DomainError

logger = logging.getLogger(__name__)

Row = Dict[Hashable, Fraction]


def _as_row(row) -> Row:
    items = row.items() if hasattr(row, 'items') else row
    return {c: Fraction(v) for c, v in items if v}


def _axpy(target: Row, factor: Fraction, source: Mapping[Hashable, Fraction]) -> None:
    """target += factor * source, dropping zeros"""
    for c, v in source.items():
        value = target.get(c, Fraction(0)) + factor * v
        if value:
            target[c] = value
        else:
            target.pop(c, None)


class EchelonBasis:
    """Incrementally built echelon basis keyed by pivot column

    With `track=True` every stored row remembers which combination of the
    labelled input rows produced it, which lets `express` write a vector in
    terms of the inputs.
    """

    def __init__(self, key: Callable[[Hashable], Tuple], track: bool = False):
        self.key = key
        self.track = track
        self._rows: Dict[Hashable, Row] = {}
        self._combos: Dict[Hashable, Row] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[Hashable]:
        return sorted(self._rows, key=self.key, reverse=True)

    def is_pivot(self, column: Hashable) -> bool:
        return column in self._rows

    def _reduce(self, row: Row, combo: Optional[Row], sign: int) -> Row:
        while True:
            present = [c for c in row if c in self._rows]
            if not present:
                return row
            column = max(present, key=self.key)
            factor = row[column]
            _axpy(row, -factor, self._rows[column])
            if combo is not None:
                _axpy(combo, sign * factor, self._combos[column])

    def reduce(self, row) -> Row:
        """Remainder of `row` after eliminating every pivot column"""
        return self._reduce(_as_row(row), None, 1)

    def add(self, row, label: Hashable = None) -> bool:
        """Insert a row; False when it already lies in the span"""
        combo = {label: Fraction(1)} if self.track else None
        reduced = self._reduce(_as_row(row), combo, -1)
        if not reduced:
            return False
        pivot = max(reduced, key=self.key)
        scale = 1 / reduced[pivot]
        self._rows[pivot] = {c: v * scale for c, v in reduced.items()}
        if combo is not None:
            self._combos[pivot] = {c: v * scale for c, v in combo.items() if v}
        return True

    def extend(self, rows: Iterable) -> int:
        added = 0
        for row in rows:
            added += self.add(row)
        return added

    def contains(self, row) -> bool:
        return not self.reduce(row)

    def express(self, row) -> Row:
        """Coefficients c_label with row = sum of c_label * (input row `label`)"""
        if not self.track:
            raise DomainError("express needs an EchelonBasis built with track=True")
        combo: Row = {}
        remainder = self._reduce(_as_row(row), combo, 1)
        if remainder:
            column = max(remainder, key=self.key)
            raise CertificationError(f"vector is outside the span (residual at {column})")
        return {label: v for label, v in combo.items() if v}


def rank_of(rows: Iterable, key: Callable[[Hashable], Tuple]) -> int:
    basis = EchelonBasis(key)
    basis.extend(rows)
    logger.debug("rank %d", basis.rank)
    return basis.rank
