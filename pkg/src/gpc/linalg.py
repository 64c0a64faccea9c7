"""Sparse integer matrices and Smith normal form over Z.

All arithmetic uses Python ints, so nothing overflows; coefficient growth
during elimination is the price, mitigated by always pivoting on an entry of
minimal absolute value (ties broken by lowest row, then lowest column).
Entries of absolute value 1 are tracked in a lazy heap so the common
unit-pivot case needs no full matrix scan.

The elimination diagonalizes the matrix with unimodular row/column
operations; the divisibility chain d1 | d2 | ... is then restored by pairwise
gcd/lcm exchanges on the diagonal, which is an allowed SNF move.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Tuple


@dataclass
class SparseIntMatrix:
    rows: int
    cols: int
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (r, c), v in list(self.entries.items()):
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError("entry (%d, %d) outside %dx%d"
                                 % (r, c, self.rows, self.cols))
            if not v:
                del self.entries[(r, c)]

    @classmethod
    def from_dense(cls, data) -> "SparseIntMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged dense matrix")
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
        return cls(rows, cols, entries)

    def to_dense(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def add(self, r: int, c: int, v: int):
        """Accumulate into one entry, dropping it if the sum is zero."""
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise ValueError("entry (%d, %d) outside %dx%d" % (r, c, self.rows, self.cols))
        new = self.entries.get((r, c), 0) + v
        if new:
            self.entries[(r, c)] = new
        else:
            self.entries.pop((r, c), None)

    def get(self, r: int, c: int) -> int:
        return self.entries.get((r, c), 0)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def matmul(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch: %dx%d @ %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        rows_of_other: Dict[int, list] = {}
        for (k, j), v in other.entries.items():
            rows_of_other.setdefault(k, []).append((j, v))
        out: Dict[Tuple[int, int], int] = {}
        for (i, k), va in self.entries.items():
            for j, vb in rows_of_other.get(k, ()):
                key = (i, j)
                acc = out.get(key, 0) + va * vb
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return SparseIntMatrix(self.rows, other.cols, out)

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(self.cols, self.rows,
                               {(c, r): v for (r, c), v in self.entries.items()})


class _Eliminator:
    """Working state for the diagonalization pass."""

    def __init__(self, m: SparseIntMatrix):
        self.row_data: Dict[int, Dict[int, int]] = {}
        self.col_index: Dict[int, set] = {}
        self.unit_heap: list = []
        for (r, c), v in m.entries.items():
            self.row_data.setdefault(r, {})[c] = v
            self.col_index.setdefault(c, set()).add(r)
            if v in (1, -1):
                self.unit_heap.append((r, c))
        heapq.heapify(self.unit_heap)

    def value(self, r: int, c: int) -> int:
        return self.row_data.get(r, {}).get(c, 0)

    def _write(self, r: int, c: int, v: int):
        if v:
            self.row_data.setdefault(r, {})[c] = v
            self.col_index.setdefault(c, set()).add(r)
            if v in (1, -1):
                heapq.heappush(self.unit_heap, (r, c))
        else:
            row = self.row_data.get(r)
            if row and c in row:
                del row[c]
                if not row:
                    del self.row_data[r]
                col = self.col_index[c]
                col.discard(r)
                if not col:
                    del self.col_index[c]

    def row_op(self, dst: int, src: int, q: int):
        """row[dst] -= q * row[src]"""
        for c, v in list(self.row_data.get(src, {}).items()):
            self._write(dst, c, self.value(dst, c) - q * v)

    def col_op(self, dst: int, src: int, q: int):
        """col[dst] -= q * col[src]"""
        for r in list(self.col_index.get(src, ())):
            v = self.value(r, src)
            self._write(r, dst, self.value(r, dst) - q * v)

    def negate_row(self, r: int):
        for c, v in list(self.row_data.get(r, {}).items()):
            self.row_data[r][c] = -v

    def pick_pivot(self):
        """Nonzero entry of minimal |value|, ties by lowest row then column."""
        while self.unit_heap:
            r, c = self.unit_heap[0]
            if self.value(r, c) in (1, -1):
                return r, c
            heapq.heappop(self.unit_heap)  # stale
        best = None
        for r, row in self.row_data.items():
            for c, v in row.items():
                key = (abs(v), r, c)
                if best is None or key < best:
                    best = key
        return None if best is None else (best[1], best[2])

    def retire(self, r: int, c: int):
        """Remove the (clean) pivot row and column from the live matrix."""
        self._write(r, c, 0)


def smith_normal_form(m: SparseIntMatrix):
    """Invariant factors and rank of an integer matrix.

    Returns (factors, rank) with factors = (d1, d2, ..., dr), all positive,
    each dividing the next; rank is also the rank over Q.
    """
    work = _Eliminator(m)
    diag = []
    while True:
        pivot = work.pick_pivot()
        if pivot is None:
            break
        pr, pc = pivot
        if work.value(pr, pc) < 0:
            work.negate_row(pr)
        pv = work.value(pr, pc)

        clean = True
        # Clear the pivot column with row operations; leftover remainders are
        # strictly smaller than the pivot, so re-picking makes progress.
        for r in sorted(work.col_index.get(pc, ())):
            if r == pr:
                continue
            v = work.value(r, pc)
            q = v // pv
            if q:
                work.row_op(r, pr, q)
            if work.value(r, pc):
                clean = False
        if clean:
            for c in sorted(work.row_data.get(pr, {})):
                if c == pc:
                    continue
                v = work.value(pr, c)
                q = v // pv
                if q:
                    work.col_op(c, pc, q)
                if work.value(pr, c):
                    clean = False
        if clean:
            diag.append(pv)
            work.retire(pr, pc)

    ones = [d for d in diag if d == 1]
    rest = sorted(d for d in diag if d > 1)
    # Pairwise gcd/lcm exchanges restore the divisibility chain; diag(a, b) is
    # SNF-equivalent to diag(gcd(a,b), lcm(a,b)).
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            if b % a:
                g = gcd(a, b)
                rest[i], rest[j] = g, a * b // g
        tail = sorted(rest[i + 1:])
        rest[i + 1:] = tail
    factors = tuple(ones + rest)
    return factors, len(factors)


def rank(m: SparseIntMatrix) -> int:
    return smith_normal_form(m)[1]
