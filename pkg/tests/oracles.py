"""Independent oracles used by the test suite.

Nothing here shares a code path with the library operators: scalars are
evaluated numerically, permutation signs are counted directly, the Lie
derivative uses the coordinate formula instead of the homotopy formula, and
ranks are recomputed with plain Gauss-Jordan elimination over the field.
"""

from __future__ import annotations

import cmath
import itertools

from pairform.charts import ChartKind
from pairform.exterior import Form, VectorField
from pairform.rationals import GaussianRational


def to_complex(c: GaussianRational) -> complex:
    return float(c.re) + 1j * float(c.im)


def eval_scalar(s, point) -> complex:
    """Evaluate at a real point (angles on tori; complex charts take the
    2n real coordinates x1..xn, y1..yn)."""
    chart = s.chart
    if chart.kind is ChartKind.AFFINE_COMPLEX:
        n = chart.dim
        zs = [point[j] + 1j * point[n + j] for j in range(n)]
        values = zs + [z.conjugate() for z in zs]
    else:
        values = list(point)
    total = 0j
    for alpha, k, c in s.terms:
        term = to_complex(c)
        for j, a in enumerate(alpha):
            term *= values[j] ** a
        if any(k):
            term *= cmath.exp(1j * sum(kk * x for kk, x in zip(k, point)))
        total += term
    return total


SAMPLE_POINTS = {
    1: [(0.7,), (-1.3,), (2.1,)],
    2: [(0.7, -1.3), (1.9, 0.4), (-0.6, 2.2)],
    3: [(0.7, -1.3, 1.9), (0.3, 2.1, -0.8), (-1.1, 0.5, 1.7)],
    4: [(0.7, -1.3, 1.9, 0.4), (0.3, 2.1, -0.8, 1.2), (-1.1, 0.5, 1.7, -0.9)],
}


def points_for(chart):
    return SAMPLE_POINTS[chart.nvars]


def scalars_close(a, b, tol=1e-9) -> bool:
    return all(abs(eval_scalar(a, p) - eval_scalar(b, p)) < tol
               for p in points_for(a.chart))


def perm_sign(seq) -> int:
    """Sign of the permutation sorting `seq`, 0 if entries repeat."""
    if len(set(seq)) != len(seq):
        return 0
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq))
                     if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def coordinate_lie(x: VectorField, a: Form) -> Form:
    """Lie derivative by the coordinate formula
    (L_X a)_I = X(a_I) + sum_r sum_j (e_{I_r} X^j) a_{I with r -> j}."""
    chart = a.chart
    if a.degree < 0 or a.degree > chart.nslots:
        return Form(chart, a.degree, ())
    out = []
    for idx in itertools.combinations(range(chart.nslots), a.degree):
        total = x.apply(a.component(idx))
        for r in range(a.degree):
            for j in range(chart.nslots):
                coef = x.components[j].wirtinger(idx[r])
                if coef.is_zero:
                    continue
                replaced = idx[:r] + (j,) + idx[r + 1:]
                sign = perm_sign(replaced)
                if sign:
                    total = total + a.component(tuple(sorted(replaced))) * coef * sign
        if not total.is_zero:
            out.append((idx, total))
    return Form(chart, a.degree, tuple(out))


def gauss_rank(matrix) -> int:
    """Plain Gauss-Jordan rank over Q(i) on a dense copy (no Bareiss, no blocks)."""
    rows = [[matrix.entries.get((r, c)) for c in range(matrix.ncols)]
            for r in range(matrix.nrows)]
    rows = [[0 if v is None else v for v in row] for row in rows]
    rank = 0
    for c in range(matrix.ncols):
        pivot = None
        for r in range(rank, matrix.nrows):
            if rows[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        head = rows[rank][c]
        rows[rank] = [v / head if v else v for v in rows[rank]]
        for r in range(matrix.nrows):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [v - f * w if w or v else v
                           for v, w in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def laplace_eigenvalue(k) -> int:
    """|k|^2, the flat-torus Laplacian eigenvalue of the mode e^{i<k,x>}."""
    return sum(v * v for v in k)
