"""Exact linear algebra over Q(i).

Ranks and kernels are computed by fraction-free Bareiss elimination with
deterministic pivoting (first nonzero entry, columns scanned left to right).
Matrices arising from band-limited complexes split into many small blocks of
columns that share no rows; blocks are eliminated independently, which keeps
the elimination cheap without changing any result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .rationals import ONE, ZERO, GaussianRational


@dataclass
class RationalMatrix:
    """Sparse matrix with Gaussian-rational entries, keyed by (row, col)."""

    nrows: int
    ncols: int
    entries: dict = field(default_factory=dict)

    @classmethod
    def from_columns(cls, nrows: int, columns: "list[dict[int, GaussianRational]]"):
        m = cls(nrows, len(columns))
        for c, col in enumerate(columns):
            for r, v in col.items():
                if v:
                    m.entries[(r, c)] = v
        return m

    @classmethod
    def from_rows(cls, rows: "list[list]") -> "RationalMatrix":
        m = cls(len(rows), len(rows[0]) if rows else 0)
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    m.entries[(r, c)] = v
        return m

    def is_zero(self) -> bool:
        return not self.entries

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        by_col: dict[int, list] = {}
        for (r, c), v in self.entries.items():
            by_col.setdefault(c, []).append((r, v))
        acc: dict[tuple[int, int], GaussianRational] = {}
        for (k, c2), w in other.entries.items():
            for r, v in by_col.get(k, ()):
                key = (r, c2)
                cur = acc.get(key, ZERO) + v * w
                if cur:
                    acc[key] = cur
                elif key in acc:
                    del acc[key]
        return RationalMatrix(self.nrows, other.ncols, acc)

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        """Vertical stack; kernel of the result is the kernel intersection."""
        if self.ncols != other.ncols:
            raise ValueError("shape mismatch in stack")
        m = RationalMatrix(self.nrows + other.nrows, self.ncols, dict(self.entries))
        for (r, c), v in other.entries.items():
            m.entries[(r + self.nrows, c)] = v
        return m

    def _blocks(self):
        """Partition columns into groups connected through shared rows."""
        parent = list(range(self.ncols))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        row_col: dict[int, int] = {}
        for (r, c) in sorted(self.entries):
            if r in row_col:
                ra, rb = find(row_col[r]), find(c)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            else:
                row_col[r] = c
        groups: dict[int, list[int]] = {}
        for c in range(self.ncols):
            groups.setdefault(find(c), []).append(c)
        cols_by_root = [groups[root] for root in sorted(groups)]
        rows_of: dict[int, set] = {find(c): set() for c in range(self.ncols)}
        for (r, c) in self.entries:
            rows_of[find(c)].add(r)
        return [(sorted(rows_of[find(cols[0])]), cols) for cols in cols_by_root]

    def _dense_block(self, rows: list[int], cols: list[int]):
        block = [[ZERO] * len(cols) for _ in rows]
        rindex = {r: i for i, r in enumerate(rows)}
        cindex = {c: j for j, c in enumerate(cols)}
        for (r, c), v in self.entries.items():
            if r in rindex and c in cindex:
                block[rindex[r]][cindex[c]] = v
        return block

    def rank(self) -> int:
        return sum(len(_bareiss(self._dense_block(rows, cols))[0])
                   for rows, cols in self._blocks() if rows)

    def kernel_basis(self) -> "list[dict[int, GaussianRational]]":
        """Deterministic basis of the right kernel, one dict per vector."""
        vectors = []
        for rows, cols in self._blocks():
            if not rows:
                vectors.extend([{c: ONE} for c in cols])
                continue
            block = self._dense_block(rows, cols)
            pivots, echelon = _bareiss(block)
            pivot_cols = {c for _, c in pivots}
            for j in range(len(cols)):
                if j in pivot_cols:
                    continue
                local = {j: ONE}
                for r, c in reversed(pivots):
                    s = ZERO
                    for jj, vv in local.items():
                        if jj > c:
                            s = s + echelon[r][jj] * vv
                    if s:
                        local[c] = -s / echelon[r][c]
                vectors.append({cols[jj]: vv for jj, vv in sorted(local.items())})
        return vectors

    def kernel_dim(self) -> int:
        return self.ncols - self.rank()


def _bareiss(rows: "list[list[GaussianRational]]"):
    """Fraction-free row echelon reduction; returns (pivots, echelon rows).

    Entries are rescaled to Gaussian integers first so every interior
    division in the Bareiss recurrence is exact over Z[i].
    """
    if not rows:
        return [], rows
    nr, nc = len(rows), len(rows[0])
    denom = 1
    for row in rows:
        for v in row:
            denom = math.lcm(denom, v.re.denominator, v.im.denominator)
    if denom != 1:
        rows = [[v * denom for v in row] for row in rows]
    else:
        rows = [list(row) for row in rows]
    pivots = []
    prev = ONE
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if rows[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nr):
            head = rows[i][c]
            for j in range(c + 1, nc):
                rows[i][j] = (piv * rows[i][j] - head * rows[r][j]) / prev
            rows[i][c] = ZERO
        prev = piv
        pivots.append((r, c))
        r += 1
        if r == nr:
            break
    return pivots, rows


def invert_dense(rows: "list[list[GaussianRational]]"):
    """Exact inverse of a small square matrix (Gauss-Jordan over Q(i))."""
    n = len(rows)
    a = [list(row) + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        pr = next((i for i in range(col, n) if a[i][col]), None)
        if pr is None:
            raise ValueError("matrix is singular")
        a[col], a[pr] = a[pr], a[col]
        inv = ONE / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [v - f * w for v, w in zip(a[i], a[col])]
    return [row[n:] for row in a]


def det_dense(rows: "list[list[GaussianRational]]") -> GaussianRational:
    """Exact determinant by Bareiss reduction (last pivot)."""
    n = len(rows)
    if n == 0:
        return ONE
    work = [list(r) for r in rows]
    sign = 1
    prev = ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if work[i][c]), None)
        if pr is None:
            return ZERO
        if pr != c:
            work[c], work[pr] = work[pr], work[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                work[i][j] = (work[c][c] * work[i][j] - work[i][c] * work[c][j]) / prev
            work[i][c] = ZERO
        prev = work[c][c]
    return prev * sign
