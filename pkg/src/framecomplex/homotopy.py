"""The pseudo-homotopy operator P for d_T and the exactness machinery built on it.

P lowers covalence by one.  On a component phi_{i_1...i_s} it applies the
scalar operator

    P^j_(s) = sum_{|J| = 0}^{rk-1} c(J, r, s, m) d_J S^{J+1_j}

and contracts d/dt^j into the dt-monomial.  k is the intrinsic order of the
argument; since S^K kills every r-form of order k once |K| > rk, the cutoff
only drops vanishing terms.
"""

from fractions import Fraction
from math import factorial

from ._kernel import accumulate, mono_insert
from .calculus import dT, total_derivative, vertical_endo
from .errors import DomainError, VerificationError
from .forms import ScalarForm, VectorForm, normalize_bar
from .geometry import intrinsic_order
from .multiindex import MultiIndex, enumerate_multiindices

__all__ = [
    "P_coeff",
    "P_scalar",
    "P_op",
    "homotopy_residual",
    "canonical_rep",
    "poincare",
    "split_dT_d",
]


def P_coeff(J, r, s, m):
    """(-1)^|J| (m-s)! |J|! / (r^{|J|+1} (m-s+|J|+1)! J!)."""
    if r < 1:
        raise DomainError("P is only defined on forms of degree r >= 1")
    if not 1 <= s <= m:
        raise DomainError(f"covalence {s} out of range 1..{m}")
    p = J.degree
    num = factorial(m - s) * factorial(p)
    den = r ** (p + 1) * factorial(m - s + p + 1) * J.factorial
    return Fraction((-1) ** p * num, den)


class _VerticalCache:
    """Memoized S^K phi for one scalar form, built up one S^i at a time."""

    def __init__(self, phi):
        self.zero = ScalarForm.zero(phi.ctx, phi.degree)
        self.cache = {MultiIndex.zero(phi.ctx.m): phi}

    def get(self, K):
        hit = self.cache.get(K)
        if hit is not None:
            return hit
        dirs = K.directions()
        i = dirs[-1]
        prev = self.get(K.lowered(i))
        out = self.zero if prev.is_zero else vertical_endo(prev, i)
        self.cache[K] = out
        return out


def _last_slot(J):
    for q in range(len(J), 0, -1):
        if J[q - 1]:
            return q
    return None


def _sum_total_derivatives(ctx, degree, X):
    """Sum over J of d_J X[J], sharing total derivatives along a spanning tree of multi-indices."""
    W = dict(X)
    top = max((J.degree for J in W), default=0)
    for p in range(top, 0, -1):
        for J in [J for J in W if J.degree == p]:
            form = W.pop(J)
            if form.is_zero:
                continue
            i = _last_slot(J)
            parent = J.lowered(i)
            pushed = total_derivative(form, i)
            prev = W.get(parent)
            W[parent] = pushed if prev is None else prev + pushed
    return W.get(MultiIndex.zero(ctx.m), ScalarForm.zero(ctx, degree))


def _apply_P(ctx, r, s, entries):
    """sum over (sign, j, phi) of sign * P^j_(s)(phi)."""
    m = ctx.m
    X = {}
    for sign, j, phi in entries:
        k = intrinsic_order(phi)
        if k == 0 or phi.is_zero:
            continue
        cache = _VerticalCache(phi)
        unit = MultiIndex.unit(m, j)
        for p in range(r * k):
            for J in enumerate_multiindices(m, p):
                term = cache.get(J + unit)
                if term.is_zero:
                    continue
                c = P_coeff(J, r, s, m) * sign
                prev = X.get(J)
                X[J] = term * c if prev is None else prev + term * c
    return _sum_total_derivatives(ctx, r, X)


def P_scalar(phi, j, s):
    """The scalar operator P^j_(s) applied to a scalar r-form, r >= 1."""
    if phi.degree < 1:
        raise DomainError("P is only defined on forms of degree r >= 1")
    phi.ctx.check_frame_index(j)
    if not 1 <= s <= phi.ctx.m:
        raise DomainError(f"covalence {s} out of range 1..{phi.ctx.m}")
    return _apply_P(phi.ctx, phi.degree, s, [(1, j, phi)])


def P_op(phi):
    """The pseudo-homotopy operator on Omega^{r,s}, landing in Omega^{r,s-1}."""
    r, s, ctx = phi.degree, phi.covalence, phi.ctx
    if r < 1:
        raise DomainError("P is only defined on forms of degree r >= 1")
    if s <= 0:
        return VectorForm.zero(ctx, r, s - 1)
    grouped = {}
    for dt, theta in phi.components.items():
        for p, j in enumerate(dt):
            grouped.setdefault(dt[:p] + dt[p + 1:], []).append((-1 if p % 2 else 1, j, theta))
    out = {}
    for key in sorted(grouped):
        value = _apply_P(ctx, r, s, grouped[key])
        if not value.is_zero:
            out[key] = value
    return VectorForm._raw(ctx, r, s - 1, out)


def homotopy_residual(phi):
    """d_T P(phi) + P d_T(phi) - phi, which vanishes for r >= 1 and s <= m - 1."""
    if phi.degree < 1:
        raise DomainError("the homotopy identity needs form degree r >= 1")
    if phi.covalence > phi.ctx.m - 1 or phi.covalence < 0:
        raise DomainError(
            f"the homotopy identity is only claimed for covalence 0..{phi.ctx.m - 1}, got {phi.covalence}"
        )
    return dT(P_op(phi)) + P_op(dT(phi)) - phi


def canonical_rep(phi):
    """phi - d_T P(phi): the canonical representative of phi modulo d_T-exact forms."""
    if phi.degree < 1:
        raise DomainError("canonical representatives need form degree r >= 1")
    if phi.covalence != phi.ctx.m:
        raise DomainError(f"canonical representatives are for covalence m = {phi.ctx.m}")
    return phi - dT(P_op(phi))


def _poincare_scalar(phi):
    out = {}
    for (labels, mono), c in phi.terms.items():
        weight = Fraction(c, len(mono) + len(labels))
        for l, x in enumerate(labels):
            accumulate(
                out,
                (labels[:l] + labels[l + 1:], mono_insert(mono, x)),
                -weight if l % 2 else weight,
            )
    return ScalarForm._raw(phi.ctx, phi.degree - 1, out)


def poincare(omega):
    """Radial homotopy for d centred at the origin of the jet coordinates.

    Satisfies d(h w) + h(d w) = w for degree >= 1, and h(df) = f - f(0).
    """
    if omega.degree < 1:
        raise DomainError("the Poincare homotopy needs form degree >= 1")
    if isinstance(omega, ScalarForm):
        return _poincare_scalar(omega)
    return omega.map_components(_poincare_scalar, omega.degree - 1)


def split_dT_d(phi):
    """Write phi = d(psi) + d_T(phi1), given that d(phi) is d_T-exact.

    Returns ``(psi, phi1)`` with psi in Omega^{r-1,s} and phi1 in Omega^{r,s-1}.
    At degree 0 the decomposition holds modulo constant vector-valued functions
    and psi is the zero form of degree -1.
    Raises :class:`VerificationError` when the precondition fails.
    """
    ctx, r, s = phi.ctx, phi.degree, phi.covalence
    dphi = phi.d()
    if s == 0:
        if r == 0:
            rest = normalize_bar(phi)
            if not rest.is_zero:
                raise VerificationError("a non-constant 0-form of covalence 0 is not d_T d-closed", rest)
            return VectorForm.zero(ctx, -1, 0), VectorForm.zero(ctx, 0, -1)
        if not dphi.is_zero:
            raise VerificationError("covalence-0 form is not closed", dphi)
        return poincare(phi), VectorForm.zero(ctx, r, -1)
    if s < ctx.m:
        residual = dT(dphi)
        if not residual.is_zero:
            raise VerificationError("d_T d(phi) is not zero", residual)
        phi0 = P_op(dphi)
    else:
        phi0 = P_op(dphi)
        residual = dphi - dT(phi0)
        if not residual.is_zero:
            raise VerificationError("d(phi) is not d_T-exact", residual)
    phi1, _ = split_dT_d(phi0)
    rest = phi - dT(phi1)
    if r == 0:
        rest = normalize_bar(rest)
        if not rest.is_zero:
            raise VerificationError("remainder is not constant", rest)
        return VectorForm.zero(ctx, -1, s), phi1
    return poincare(rest), phi1
