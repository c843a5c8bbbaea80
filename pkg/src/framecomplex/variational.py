"""Edge-sequence constructions for Lagrangians on frame bundles.

A Lagrangian is a polynomial density L; the associated vector-valued function
is Lambda = L dt^1 ^ ... ^ dt^m.  None of the constructions below require L
to be homogeneous; homogeneity is a separate test.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .calculus import d_multi, delta_apply, dT, total_derivative, vertical_endo
from .errors import DomainError
from .forms import ScalarForm, VectorForm
from .geometry import BundleContext, intrinsic_order, projectable_to
from .homotopy import P_op, P_scalar, canonical_rep
from .multiindex import MultiIndex, enumerate_multiindices, multiindices_up_to
from .symexpr import PolyExpr, coord

__all__ = [
    "Lagrangian",
    "HomogeneityReport",
    "EulerLagrangeResult",
    "FundamentalFormResult",
    "is_homogeneous",
    "hilbert",
    "euler_lagrange",
    "euler_lagrange_coordinates",
    "helmholtz",
    "fundamental_form",
    "hilbert_comparison",
    "euler_lagrange_from_hilbert",
    "first_order_fundamental",
    "proportionality",
]

HELMHOLTZ_READING = "H(Phi) = d(Phi) - dT(P(d(Phi)))"


@dataclass(frozen=True)
class Lagrangian:
    ctx: BundleContext
    density: PolyExpr
    order: Optional[int] = None

    def __post_init__(self):
        for c in self.density.coordinates():
            self.ctx.check_coordinate(c)
        k = intrinsic_order(self.density)
        if self.order is None:
            object.__setattr__(self, "order", k)
        elif k > self.order:
            raise DomainError(f"density has order {k}, above the declared order {self.order}")

    @property
    def volume_form(self):
        """Lambda = L dt^1 ^ ... ^ dt^m, a 0-form of covalence m."""
        return VectorForm.volume(ScalarForm.function(self.ctx, self.density))

    def __add__(self, other):
        return Lagrangian(self.ctx, self.density + other.density, max(self.order, other.order))

    def scaled(self, c):
        return Lagrangian(self.ctx, self.density * c, self.order)


@dataclass
class HomogeneityReport:
    homogeneous: bool
    # (I, j, Delta^I_j(L), expected value)
    failures: List[Tuple[MultiIndex, int, PolyExpr, PolyExpr]] = field(default_factory=list)


def is_homogeneous(lag):
    """Check Delta^i_j(L) = delta^i_j L and Delta^I_j(L) = 0 for 1 < |I| <= k + 1."""
    ctx, L = lag.ctx, lag.density
    zero = PolyExpr()
    failures = []
    for p in range(1, lag.order + 2):
        for I in enumerate_multiindices(ctx.m, p):
            for j in range(1, ctx.m + 1):
                value = delta_apply(ctx, I, j, L)
                expected = L if (p == 1 and I[j - 1] == 1) else zero
                if value != expected:
                    failures.append((I, j, value, expected))
    return HomogeneityReport(not failures, failures)


def hilbert(lag):
    """The m scalar 1-forms P^i_(1) dL."""
    dL = ScalarForm.function(lag.ctx, lag.density).d()
    return [P_scalar(dL, i, 1) for i in range(1, lag.ctx.m + 1)]


def euler_lagrange_coordinates(lag):
    """sum_alpha sum_{|I| <= k} (-1)^|I| d_I(dL/du^alpha_I) du^alpha."""
    ctx = lag.ctx
    out = ScalarForm.zero(ctx, 1)
    for I in multiindices_up_to(ctx.m, lag.order):
        for a in range(1, ctx.n + 1):
            g = lag.density.partial(coord(a, I))
            if g.is_zero:
                continue
            g = d_multi(g, I)
            if I.degree % 2:
                g = -g
            out = out + ScalarForm.du(ctx, coord(a, MultiIndex.zero(ctx.m))) * g
    return out


@dataclass
class EulerLagrangeResult:
    form: VectorForm  # epsilon (x) d^m t, the canonical representative of d(Lambda)
    source: ScalarForm  # the scalar 1-form epsilon
    coordinate_formula: ScalarForm
    agree: bool


def euler_lagrange(lag):
    """Euler-Lagrange form computed twice: as the canonical representative of
    d(Lambda) and from the coordinate formula.  ``agree`` records whether the
    two routes coincide exactly; callers must check it.
    """
    form = canonical_rep(lag.volume_form.d())
    volume = tuple(range(1, lag.ctx.m + 1))
    source = form.components.get(volume, ScalarForm.zero(lag.ctx, 1))
    coords = euler_lagrange_coordinates(lag)
    return EulerLagrangeResult(form, source, coords, source == coords)


def helmholtz(phi):
    """Helmholtz-Sonin map on Omega^{1,m}: the canonical representative of d(phi).

    Vanishes on every Euler-Lagrange form.
    """
    if phi.degree != 1 or phi.covalence != phi.ctx.m:
        raise DomainError("the Helmholtz-Sonin map acts on forms of degree 1 and covalence m")
    dphi = phi.d()
    return dphi - dT(P_op(dphi))


def proportionality(a, b):
    """The rational c with a = c * b, or None if there is none (c = 1 when both vanish)."""
    if a.is_zero and b.is_zero:
        return Fraction(1)
    if b.is_zero or a.is_zero or a.terms.keys() != b.terms.keys():
        return None
    ratios = {Fraction(a.terms[k]) / b.terms[k] for k in a.terms}
    return ratios.pop() if len(ratios) == 1 else None


@dataclass
class FundamentalFormResult:
    theta: ScalarForm
    order: int
    projectable_to_first_order: bool
    closed: bool
    first_order_formula: Optional[ScalarForm]
    ratio: Optional[Fraction]  # theta = ratio * first_order_formula, when such a ratio exists


def first_order_fundamental(lag):
    """S^1 d S^2 d ... S^m dL, the classical form for first-order Lagrangians."""
    theta = ScalarForm.function(lag.ctx, lag.density).d()
    for i in range(lag.ctx.m, 0, -1):
        theta = vertical_endo(theta, i)
        if i > 1:
            theta = theta.d()
    return theta


def fundamental_form(lag):
    """Theta_m = (P d)^m Lambda, a scalar m-form."""
    phi = lag.volume_form
    for _ in range(lag.ctx.m):
        phi = P_op(phi.d())
    theta = phi.components.get((), ScalarForm.zero(lag.ctx, lag.ctx.m))
    alt = first_order_fundamental(lag) if lag.order <= 1 else None
    ratio = proportionality(theta, alt) if alt is not None else None
    return FundamentalFormResult(
        theta=theta,
        order=intrinsic_order(theta),
        projectable_to_first_order=projectable_to(theta, 1),
        closed=theta.d().is_zero,
        first_order_formula=alt,
        ratio=ratio,
    )


def hilbert_comparison(lag):
    """Compare Theta_1 = P(d Lambda) with sum_i theta^i (x) (d/dt^i -| d^m t).

    Returns (theta_1, assembled, ratio) where ratio is the constant c with
    theta_1 = c * assembled, or None when no such constant exists.
    """
    ctx = lag.ctx
    theta1 = P_op(lag.volume_form.d())
    forms = hilbert(lag)
    assembled = VectorForm.zero(ctx, 1, ctx.m - 1)
    full = tuple(range(1, ctx.m + 1))
    for p, i in enumerate(full):
        part = VectorForm.tensor(forms[i - 1], full[:p] + full[p + 1:])
        assembled = assembled + (-part if p % 2 else part)
    ratios = set()
    for dt in set(theta1.components) | set(assembled.components):
        a = theta1.components.get(dt, ScalarForm.zero(ctx, 1))
        b = assembled.components.get(dt, ScalarForm.zero(ctx, 1))
        if a.is_zero and b.is_zero:
            continue
        ratios.add(proportionality(a, b))
    ratio = ratios.pop() if len(ratios) == 1 else (Fraction(1) if not ratios else None)
    return theta1, assembled, ratio


def euler_lagrange_from_hilbert(lag):
    """dL - d_i theta^i using the Hilbert forms P^i_(1) dL."""
    dL = ScalarForm.function(lag.ctx, lag.density).d()
    out = dL
    for i, th in enumerate(hilbert(lag), start=1):
        out = out - total_derivative(th, i)
    return out
