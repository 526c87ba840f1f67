"""Sparse reduced row echelon form over an exact field.

Vectors are dicts ``column -> nonzero scalar``.  Columns come from a
:class:`LabelIndex` that hands out dense indices in first-seen order, so the
pivot choice (smallest column index) is deterministic for a fixed input order.
"""

from __future__ import annotations

from collections import defaultdict

from .fields import Field


class LabelIndex:
    """Bijective, append-only registry label <-> column index."""

    def __init__(self):
        self._index: dict = {}
        self._labels: list = []

    def __len__(self):
        return len(self._labels)

    def __contains__(self, label):
        return label in self._index

    def col(self, label) -> int:
        idx = self._index.get(label)
        if idx is None:
            idx = len(self._labels)
            self._index[label] = idx
            self._labels.append(label)
        return idx

    def get(self, label):
        return self._index.get(label)

    def label(self, col: int):
        return self._labels[col]


def axpy(field: Field, v: dict, a, row: dict) -> None:
    """v += a*row in place, dropping cancelled entries."""
    for col, r in row.items():
        s = field.add(v.get(col, field.zero), field.mul(a, r))
        if s:
            v[col] = s
        else:
            v.pop(col, None)


class SpanBasis:
    """Fully reduced echelon basis: every row has pivot 1 and zeros at all other pivots."""

    def __init__(self, field: Field):
        self.field = field
        self.rows: dict[int, dict] = {}
        # column -> pivots of rows with a nonzero entry there (non-pivot columns only)
        self._occurs: dict[int, set] = defaultdict(set)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        """Remainder of ``v`` modulo the span; ``v`` is not modified."""
        f = self.field
        v = dict(v)
        # rows are fully reduced, so one pass over the original pivot columns suffices
        for col in [c for c in v if c in self.rows]:
            a = v.get(col)
            if a:
                axpy(f, v, f.neg(a), self.rows[col])
        return v

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def insert(self, v: dict) -> bool:
        """Add ``v`` to the span; return True iff the rank grew."""
        f = self.field
        r = self.reduce(v)
        if not r:
            return False
        pivot = min(r)
        inv = f.inv(r[pivot])
        if inv != f.one:
            r = {c: f.mul(a, inv) for c, a in r.items()}
        # clear the new pivot column from existing rows
        for p in list(self._occurs.pop(pivot, ())):
            row = self.rows[p]
            a = row[pivot]
            old_cols = set(row)
            axpy(f, row, f.neg(a), r)
            for c in old_cols - set(row):
                self._occurs[c].discard(p)
            for c in set(row) - old_cols:
                self._occurs[c].add(p)
        self.rows[pivot] = r
        for c in r:
            if c != pivot:
                self._occurs[c].add(pivot)
        return True

    def sorted_rows(self) -> list[tuple[int, dict]]:
        return sorted(self.rows.items())


def echelon_insert(basis: SpanBasis, v: dict) -> tuple[SpanBasis, bool]:
    was_new = basis.insert(v)
    return basis, was_new
