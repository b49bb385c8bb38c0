"""Calculus of pair forms.

A pair form of degree p bundles a p-form with a (p-1)-form on the same
chart.  A fixed vector field X turns the graded space of pairs into a
complex: the differential sends (phi, psi) to (d phi, L_X phi - d psi),
which squares to zero because the Lie derivative commutes with d.  The
wedge, contraction and Lie operators extend componentwise with signs that
make them (anti)derivations, and on flat tori a codifferential and a
Laplacian complete the picture.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charts import Chart, ChartKind, ChartMismatchError, require_same_chart
from .exterior import (
    Form,
    VectorField,
    codiff,
    ext_d,
    inner,
    interior,
    laplacian,
    lie,
    pullback,
    wedge,
    zero_form,
)
from .rationals import GaussianRational
from .scalar import ChartMap


@dataclass(frozen=True)
class PairForm:
    first: Form
    second: Form

    def __post_init__(self):
        if self.first.chart != self.second.chart:
            raise ChartMismatchError("pair components on different charts")
        if self.second.degree != self.first.degree - 1:
            raise ValueError(
                f"second component must have degree {self.first.degree - 1}, "
                f"got {self.second.degree}")

    @property
    def chart(self) -> Chart:
        return self.first.chart

    @property
    def degree(self) -> int:
        return self.first.degree

    @property
    def is_zero(self) -> bool:
        return self.first.is_zero and self.second.is_zero

    def __add__(self, other):
        if not isinstance(other, PairForm):
            return NotImplemented
        return PairForm(self.first + other.first, self.second + other.second)

    def __sub__(self, other):
        if not isinstance(other, PairForm):
            return NotImplemented
        return PairForm(self.first - other.first, self.second - other.second)

    def __neg__(self):
        return PairForm(-self.first, -self.second)

    def __mul__(self, other):
        return PairForm(self.first * other, self.second * other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.first} | {self.second})"


def pair(first: Form, second: Form) -> PairForm:
    return PairForm(first, second)


def zero_pair(chart: Chart, degree: int) -> PairForm:
    return PairForm(zero_form(chart, degree), zero_form(chart, degree - 1))


def from_form(phi: Form) -> PairForm:
    return PairForm(phi, zero_form(phi.chart, phi.degree - 1))


# -- graded algebra ---------------------------------------------------------


def pair_wedge(a: PairForm, b: PairForm) -> PairForm:
    """(phi, psi) ^ (phi', psi') = (phi^phi', (-1)^p phi^psi' + psi^phi')."""
    require_same_chart(a, b)
    sign = -1 if a.degree % 2 else 1
    return PairForm(
        wedge(a.first, b.first),
        wedge(a.first, b.second) * sign + wedge(a.second, b.first),
    )


# -- operators induced by a vector field -------------------------------------


def pair_d(x: VectorField, a: PairForm) -> PairForm:
    """The pair differential (d phi, L_X phi - d psi); squares to zero."""
    require_same_chart(x, a)
    return PairForm(ext_d(a.first), lie(x, a.first) - ext_d(a.second))


def pair_interior(x: VectorField, a: PairForm) -> PairForm:
    """(i_X phi, -i_X psi); an antiderivation of degree -1."""
    require_same_chart(x, a)
    return PairForm(interior(x, a.first), -interior(x, a.second))


def pair_lie(x: VectorField, a: PairForm) -> PairForm:
    """Componentwise Lie derivative; a degree-0 derivation."""
    require_same_chart(x, a)
    return PairForm(lie(x, a.first), lie(x, a.second))


def pair_d_lichnerowicz(eta: Form, a: PairForm) -> PairForm:
    """The pair differential (d phi - d eta ^ psi, -d psi) twisted by a 1-form."""
    require_same_chart(eta, a)
    if eta.degree != 1:
        raise ValueError("twisting form must be a 1-form")
    d_eta = ext_d(eta)
    return PairForm(ext_d(a.first) - wedge(d_eta, a.second), -ext_d(a.second))


def pair_pullback(cmap: ChartMap, a: PairForm) -> PairForm:
    """Componentwise pullback; natural for the pair operators."""
    return PairForm(pullback(cmap, a.first), pullback(cmap, a.second))


# -- cochain-level class maps -------------------------------------------------


def class_embed(x: VectorField, phi: Form) -> PairForm:
    """Send a closed form phi to the closed pair (phi, i_X phi)."""
    require_same_chart(x, phi)
    if not ext_d(phi).is_zero:
        raise ValueError("class_embed requires a closed form")
    return PairForm(phi, interior(x, phi))


def class_project(x: VectorField, a: PairForm) -> Form:
    """Send a closed pair (phi, psi) to the closed form i_X phi - psi."""
    require_same_chart(x, a)
    if not pair_d(x, a).is_zero:
        raise ValueError("class_project requires a closed pair")
    return interior(x, a.first) - a.second


def class_split(x: VectorField, a: PairForm) -> tuple:
    """Split a closed pair into its two closed-form class representatives."""
    return a.first, class_project(x, a)


def class_combine(x: VectorField, phi: Form, psi_hat: Form) -> PairForm:
    """Inverse of class_split on representatives: (phi, i_X phi - psi_hat)."""
    require_same_chart(x, phi, psi_hat)
    return PairForm(phi, interior(x, phi) - psi_hat)


def transfer(x: VectorField, y: VectorField, a: PairForm) -> PairForm:
    """Move a pair from the X-complex to the Y-complex: add i_(Y-X) phi."""
    require_same_chart(x, y, a)
    return PairForm(a.first, interior(y - x, a.first) + a.second)


# -- flat-torus harmonic theory ----------------------------------------------


def _require_killing(u: VectorField):
    if u.chart.kind is not ChartKind.TORUS:
        raise ChartMismatchError("harmonic pair operators require a real torus")
    if not u.is_constant():
        raise ValueError("the vector field must be constant (Killing)")


def pair_codiff(u: VectorField, a: PairForm) -> PairForm:
    """(delta phi + L_U psi, -delta psi); squares to zero for constant U."""
    require_same_chart(u, a)
    _require_killing(u)
    return PairForm(codiff(a.first) + lie(u, a.second), -codiff(a.second))


def pair_laplacian(u: VectorField, a: PairForm) -> PairForm:
    """Pair Laplacian as the anticommutator of pair_d and pair_codiff.

    The closed form (componentwise Laplacian plus the squared Lie
    derivative) is asserted against the composite on every call.
    """
    require_same_chart(u, a)
    _require_killing(u)
    out = pair_codiff(u, pair_d(u, a)) + pair_d(u, pair_codiff(u, a))
    expected = PairForm(
        laplacian(a.first) + lie(u, lie(u, a.first)),
        laplacian(a.second) + lie(u, lie(u, a.second)),
    )
    if out.first != expected.first or out.second != expected.second:
        raise AssertionError("pair Laplacian composite disagrees with its closed form")
    return out


def pair_codiff_skew(u: VectorField, a: PairForm) -> PairForm:
    """(delta phi - L_U psi, -delta psi): the true adjoint of pair_d.

    pair_codiff carries +L_U psi, which is adjoint to the L_X term of
    pair_d only if the Lie derivative were self-adjoint; for a Killing
    field it is skew-adjoint, so the sign here is flipped.  Both versions
    are exercised and reported by the check suites.
    """
    require_same_chart(u, a)
    _require_killing(u)
    return PairForm(codiff(a.first) - lie(u, a.second), -codiff(a.second))


def pair_laplacian_corrected(u: VectorField, a: PairForm) -> PairForm:
    """Anticommutator of pair_d with its true adjoint pair_codiff_skew.

    Componentwise this is the Laplacian minus the squared Lie derivative, a
    nonnegative operator whose kernel has the cohomology dimensions - the
    harmonic theory the sign-corrected adjoint buys back.
    """
    require_same_chart(u, a)
    _require_killing(u)
    out = pair_codiff_skew(u, pair_d(u, a)) + pair_d(u, pair_codiff_skew(u, a))
    expected = PairForm(
        laplacian(a.first) - lie(u, lie(u, a.first)),
        laplacian(a.second) - lie(u, lie(u, a.second)),
    )
    if out.first != expected.first or out.second != expected.second:
        raise AssertionError("corrected pair Laplacian disagrees with its closed form")
    return out


def pair_inner(a: PairForm, b: PairForm) -> GaussianRational:
    """<<(phi,psi),(phi',psi')>> = <phi,phi'> + <psi,psi'> on a torus."""
    require_same_chart(a, b)
    if a.degree != b.degree:
        raise ValueError("pair inner product requires equal degrees")
    return inner(a.first, b.first) + inner(a.second, b.second)
