"""Exact integer linear algebra: canonical reduced row echelon form.

Rows are integer vectors.  The canonical form of a row space is the
rational RREF with every row scaled to content-free integers and a
positive pivot, which is unique, so two spans are equal exactly when
their canonical rows are equal and results do not depend on input
order.  Entries in the structured matrices handled here stay tiny, so
plain Python integers are fast enough (measured well under the second
on the largest mandated systems).
"""

from __future__ import annotations

import math


def _content_normalize(row, start=0):
    """Divide by the gcd and make the first nonzero entry positive."""
    g = 0
    first = None
    for k in range(start, len(row)):
        x = row[k]
        if x:
            if first is None:
                first = x
            g = math.gcd(g, x)
            if g == 1 and first > 0:
                return row
    if first is None:
        return row
    if first < 0:
        g = -g
    if g not in (0, 1):
        for k in range(start, len(row)):
            row[k] //= g
    return row


class RowSpace:
    """Canonical echelon basis of the span of integer rows.

    ``rows`` may be dicts {column: value} or dense sequences.  Columns at
    or beyond ``pivot_limit`` never become pivots; rows with no nonzero
    entry before the limit are dropped (used for combination tags).
    """

    __slots__ = ("ncols", "pivot_limit", "_rows", "_pivots", "_pivot_of_col")

    def __init__(self, rows, ncols: int, pivot_limit=None):
        if ncols < 0:
            raise ValueError("ncols must be >= 0")
        self.ncols = ncols
        self.pivot_limit = ncols if pivot_limit is None else pivot_limit
        if not 0 <= self.pivot_limit <= ncols:
            raise ValueError("pivot_limit out of range")
        dense = []
        seen = set()
        for r in rows:
            row = self._densify(r)
            key = tuple(_content_normalize(list(row)))
            if any(key) and key not in seen:
                seen.add(key)
                dense.append(list(key))
        self._rows = []
        self._pivots = []
        self._pivot_of_col = {}
        for row in sorted(dense):  # fixed insertion order (canonical anyway)
            self._insert(row)
        self._back_substitute()
        order = sorted(range(len(self._rows)),
                       key=lambda idx: self._pivots[idx])
        self._rows = [self._rows[idx] for idx in order]
        self._pivots = [self._pivots[idx] for idx in order]
        self._pivot_of_col = {c: i for i, c in enumerate(self._pivots)}

    def _densify(self, r):
        if isinstance(r, dict):
            row = [0] * self.ncols
            for c, v in r.items():
                if not 0 <= c < self.ncols:
                    raise ValueError(f"column {c} out of range")
                row[c] = int(v)
            return row
        row = [int(v) for v in r]
        if len(row) != self.ncols:
            raise ValueError("dense row has wrong length")
        return row

    def _leading(self, row, start=0):
        for k in range(start, len(row)):
            if row[k]:
                return k
        return None

    def _insert(self, row):
        j = self._leading(row)
        while j is not None and j < self.pivot_limit:
            idx = self._pivot_of_col.get(j)
            if idx is None:
                _content_normalize(row, j)
                self._pivots.append(j)
                self._rows.append(row)
                self._pivot_of_col[j] = len(self._rows) - 1
                return
            self._eliminate(row, self._rows[idx], j)
            j = self._leading(row, j + 1)
        # zero within pivot range: drop (tag-only rows carry no new span)

    @staticmethod
    def _eliminate(row, piv, j):
        """row := (L/g)*row - (f/g)*piv so that row[j] becomes 0.

        piv has its leading entry at j, so only row needs scaling below j.
        """
        L = piv[j]
        f = row[j]
        g = math.gcd(L, f)
        a = L // g
        b = f // g
        if a == 1:
            for k in range(j, len(row)):
                pk = piv[k]
                if pk:
                    row[k] -= b * pk
        else:
            for k in range(j):
                row[k] *= a
            for k in range(j, len(row)):
                row[k] = a * row[k] - b * piv[k]

    def _back_substitute(self):
        order = sorted(range(len(self._rows)), key=lambda i: self._pivots[i])
        for pos in range(len(order) - 2, -1, -1):
            idx = order[pos]
            row = self._rows[idx]
            for later in order[pos + 1:]:
                j = self._pivots[later]
                if row[j]:
                    self._eliminate(row, self._rows[later], j)
            _content_normalize(row)

    # -- public surface ----------------------------------------------

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> tuple:
        return tuple(self._pivots)

    @property
    def rows(self) -> tuple:
        return tuple(tuple(r) for r in self._rows)

    def reduce(self, vec):
        """Reduce a vector against the basis.

        Returns (residual, alpha): residual == alpha*vec - (combination
        of stored rows), with alpha a positive integer.  The vector is in
        the span exactly when every residual entry before pivot_limit is
        zero (tag columns, if any, then hold the negated combination).
        """
        row = self._densify(vec)
        alpha = 1
        j = self._leading(row)
        while j is not None and j < self.pivot_limit:
            idx = self._pivot_of_col.get(j)
            if idx is None:
                j = self._leading(row, j + 1)
                continue
            piv = self._rows[idx]
            L = piv[j]
            f = row[j]
            g = math.gcd(L, f)
            a = L // g
            b = f // g
            if a != 1:
                alpha *= a
                for k in range(len(row)):
                    row[k] *= a
            for k in range(j, len(row)):
                pk = piv[k]
                if pk:
                    row[k] -= b * pk
            j = self._leading(row, j + 1)
        return row, alpha

    def contains(self, vec) -> bool:
        row, _ = self.reduce(vec)
        return not any(row[:self.pivot_limit])

    def __eq__(self, other):
        return (isinstance(other, RowSpace)
                and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ncols, self.rows))


def rank_of(rows, ncols: int) -> int:
    return RowSpace(rows, ncols).rank
