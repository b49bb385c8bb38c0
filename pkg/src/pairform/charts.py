"""Model charts: real and complex affine space, and flat tori.

A chart fixes the coordinate system every expression in this package lives
on.  Real charts carry coordinates x1..xn; complex charts of complex
dimension n expose the 2n symbols z1..zn, zb1..zbn (zb = conjugate) and,
underneath them, the 2n real axes x1..xn, y1..yn.  Torus coordinates are
2*pi-periodic and the torus volume is normalised to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ChartKind(Enum):
    AFFINE = "affine-real"
    TORUS = "torus"
    AFFINE_COMPLEX = "affine-complex"
    TORUS_COMPLEX = "torus-complex"


class ChartMismatchError(ValueError):
    """Operands live on different charts."""


class ChartCompatibilityError(ValueError):
    """A term violates its chart's constraints (e.g. a polynomial on a torus)."""


@dataclass(frozen=True)
class Chart:
    kind: ChartKind
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("chart dimension must be >= 1")

    @property
    def is_complex(self) -> bool:
        return self.kind in (ChartKind.AFFINE_COMPLEX, ChartKind.TORUS_COMPLEX)

    @property
    def is_torus(self) -> bool:
        return self.kind in (ChartKind.TORUS, ChartKind.TORUS_COMPLEX)

    @property
    def nvars(self) -> int:
        """Length of exponent/frequency vectors (2n on complex charts)."""
        return 2 * self.dim if self.is_complex else self.dim

    @property
    def nslots(self) -> int:
        """Number of coframe slots: dx1..dxn, or dz1..dzn, dzb1..dzbn."""
        return self.nvars

    def var_name(self, j: int) -> str:
        if self.kind is ChartKind.AFFINE_COMPLEX:
            return f"z{j + 1}" if j < self.dim else f"zb{j - self.dim + 1}"
        if self.kind is ChartKind.TORUS_COMPLEX:
            return f"x{j + 1}" if j < self.dim else f"y{j - self.dim + 1}"
        return f"x{j + 1}"

    def slot_name(self, j: int) -> str:
        if self.is_complex:
            return f"dz[{j + 1}]" if j < self.dim else f"dzb[{j - self.dim + 1}]"
        return f"dx[{j + 1}]"

    def __str__(self) -> str:
        return f"{self.kind.value}({self.dim})"


def affine(n: int) -> Chart:
    return Chart(ChartKind.AFFINE, n)


def torus(n: int) -> Chart:
    return Chart(ChartKind.TORUS, n)


def affine_complex(n: int) -> Chart:
    return Chart(ChartKind.AFFINE_COMPLEX, n)


def torus_complex(n: int) -> Chart:
    return Chart(ChartKind.TORUS_COMPLEX, n)


def require_same_chart(*objs) -> Chart:
    charts = {o.chart for o in objs}
    if len(charts) != 1:
        raise ChartMismatchError(f"expected one chart, got {sorted(map(str, charts))}")
    return next(iter(charts))
