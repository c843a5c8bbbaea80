"""Frame-bundle derivations: total derivatives d_i, contractions i_i,
vertical endomorphisms S^i, and their vector-valued combinations d_T, i_T, S.

All scalar operators act on the flat term dictionaries of :class:`ScalarForm`
and are extended componentwise (with the appropriate dt-algebra) to
:class:`VectorForm`.
"""

from ._kernel import accumulate, distinct_positions, label_replace, mono_insert, mono_replace
from .errors import DomainError
from .forms import ScalarForm, VectorForm
from .multiindex import MultiIndex
from .symexpr import PolyExpr, lowered, raised

__all__ = [
    "TangentField",
    "total_derivative",
    "contract_total",
    "vertical_endo",
    "vertical_endo_field",
    "total_derivative_field",
    "dT",
    "iT",
    "S_op",
    "delta_field",
    "delta_apply",
    "d_multi",
    "S_multi",
]


# scalar kernels on {(labels, mono): coeff}

def _td_terms(terms, i):
    out = {}
    for (labels, mono), c in terms.items():
        for p, x, mult in distinct_positions(mono):
            accumulate(out, (labels, mono_replace(mono, p, raised(x, i))), c * mult)
        for p, x in enumerate(labels):
            rep = label_replace(labels, p, raised(x, i))
            if rep is not None:
                new_labels, sign = rep
                accumulate(out, (new_labels, mono), c * sign)
    return out


def _contract_terms(terms, i):
    out = {}
    for (labels, mono), c in terms.items():
        for p, x in enumerate(labels):
            sign = -c if p % 2 else c
            accumulate(out, (labels[:p] + labels[p + 1:], mono_insert(mono, raised(x, i))), sign)
    return out


def _vertical_terms(terms, i):
    out = {}
    for (labels, mono), c in terms.items():
        for p, x in enumerate(labels):
            count = x.index[i - 1]
            if not count:
                continue
            rep = label_replace(labels, p, lowered(x, i))
            if rep is not None:
                new_labels, sign = rep
                accumulate(out, (new_labels, mono), c * count * sign)
    return out


def _scalar_td(phi, i):
    phi.ctx.check_frame_index(i)
    return ScalarForm._raw(phi.ctx, phi.degree, _td_terms(phi.terms, i))


def _scalar_contract(phi, i):
    phi.ctx.check_frame_index(i)
    if phi.degree <= 0:
        return ScalarForm.zero(phi.ctx, phi.degree - 1)
    return ScalarForm._raw(phi.ctx, phi.degree - 1, _contract_terms(phi.terms, i))


def _scalar_vertical(phi, i):
    phi.ctx.check_frame_index(i)
    return ScalarForm._raw(phi.ctx, phi.degree, _vertical_terms(phi.terms, i))


def total_derivative(x, i):
    """d_i: the action of the total derivative T_i, extended to forms by d_i(du_I) = du_{I+1_i}."""
    if isinstance(x, PolyExpr):
        wrapped = {((), mono): c for mono, c in x.terms.items()}
        return PolyExpr._raw({mono: c for (_, mono), c in _td_terms(wrapped, i).items()})
    if isinstance(x, ScalarForm):
        return _scalar_td(x, i)
    return x.map_components(lambda phi: _scalar_td(phi, i))


def contract_total(x, i):
    """i_i: contraction with T_i, so i_i(du^alpha_I) = u^alpha_{I+1_i}."""
    if isinstance(x, ScalarForm):
        return _scalar_contract(x, i)
    return x.map_components(lambda phi: _scalar_contract(phi, i), x.degree - 1)


def vertical_endo(x, i):
    """S^i acting on forms: S^i(f) = 0, S^i(du^alpha_J) = J(i) du^alpha_{J-1_i}."""
    if isinstance(x, ScalarForm):
        return _scalar_vertical(x, i)
    return x.map_components(lambda phi: _scalar_vertical(phi, i))


def d_multi(x, J):
    """d_J = composition of total derivatives, J(i) copies of d_i."""
    for i in J.directions():
        x = total_derivative(x, i)
    return x


def S_multi(x, J):
    """S^J = composition of vertical endomorphisms (not a derivation for |J| >= 2)."""
    for i in J.directions():
        x = vertical_endo(x, i)
        if x.is_zero:
            break
    return x


# vector-valued operators

def _raise_covalence(phi, scalar_op, degree):
    ctx = phi.ctx
    out = {}
    for dt, theta in phi.components.items():
        for i in range(1, ctx.m + 1):
            if i in dt:
                continue
            pos = sum(1 for q in dt if q < i)
            new_dt = dt[:pos] + (i,) + dt[pos:]
            term = scalar_op(theta, i)
            if pos % 2:
                term = -term
            _add_component(out, new_dt, term)
    return VectorForm._raw(ctx, degree, phi.covalence + 1, out)


def _add_component(out, dt, term):
    if term.is_zero:
        return
    prev = out.get(dt)
    if prev is not None:
        term = prev + term
    if term.is_zero:
        out.pop(dt, None)
    else:
        out[dt] = term


def dT(phi):
    """Total exterior derivative: (theta (x) w) -> d_i theta (x) (dt^i ^ w)."""
    return _raise_covalence(phi, _scalar_td, phi.degree)


def iT(phi):
    """(theta (x) w) -> i_i theta (x) (dt^i ^ w)."""
    if phi.degree <= 0:
        return VectorForm.zero(phi.ctx, phi.degree - 1, phi.covalence + 1)
    return _raise_covalence(phi, _scalar_contract, phi.degree - 1)


def S_op(phi):
    """(theta (x) w) -> S^i theta (x) (d/dt^i -| w)."""
    out = {}
    for dt, theta in phi.components.items():
        for p, i in enumerate(dt):
            term = _scalar_vertical(theta, i)
            if p % 2:
                term = -term
            _add_component(out, dt[:p] + dt[p + 1:], term)
    return VectorForm._raw(phi.ctx, phi.degree, phi.covalence - 1, out)


class TangentField:
    """A vector field along a projection, sum of coefficient * d/du^alpha_I.

    ``order`` is the jet order of the bundle the field is tangent to; when set,
    vertical endomorphisms drop components that would leave it.
    """

    __slots__ = ("ctx", "coefficients", "order")

    def __init__(self, ctx, coefficients=None, order=None):
        self.ctx = ctx
        self.order = order
        self.coefficients = {}
        for c, f in (coefficients or {}).items():
            ctx.check_coordinate(c)
            f = PolyExpr.constant(f) if not isinstance(f, PolyExpr) else f
            if not f.is_zero:
                self.coefficients[c] = self.coefficients.get(c, PolyExpr()) + f
        self.coefficients = {c: f for c, f in self.coefficients.items() if not f.is_zero}

    def __eq__(self, other):
        if not isinstance(other, TangentField):
            return NotImplemented
        return self.ctx == other.ctx and self.coefficients == other.coefficients and self.order == other.order

    def __hash__(self):
        return hash((self.ctx, self.order, frozenset(self.coefficients.items())))

    def __call__(self, f):
        """Apply the field to a function as a derivation."""
        out = PolyExpr()
        for c, coeff in self.coefficients.items():
            df = f.partial(c)
            if not df.is_zero:
                out = out + coeff * df
        return out

    def __repr__(self):
        parts = [f"({f!r}) d/d{c!r}" for c, f in sorted(self.coefficients.items())]
        return "TangentField(" + " + ".join(parts) + ")"


def total_derivative_field(ctx, i, k):
    """T_i = sum_{|I| <= k} u^alpha_{I+1_i} d/du^alpha_I."""
    from .multiindex import multiindices_up_to
    from .symexpr import coord

    ctx.check_frame_index(i)
    coeffs = {}
    for I in multiindices_up_to(ctx.m, k):
        for a in range(1, ctx.n + 1):
            c = coord(a, I)
            coeffs[c] = PolyExpr.variable(raised(c, i))
    return TangentField(ctx, coeffs, order=k)


def vertical_endo_field(v, i):
    """S^i on vector fields: d/du^alpha_I -> (I(i) + 1) d/du^alpha_{I+1_i}."""
    v.ctx.check_frame_index(i)
    out = {}
    for c, f in v.coefficients.items():
        if v.order is None or c.order < v.order:
            out[raised(c, i)] = f * (c.index[i - 1] + 1)
    return TangentField(v.ctx, out, order=v.order)


def delta_field(ctx, I, j, k):
    """Delta^I_j = S^I(T_j), with T_j truncated at order k."""
    if not isinstance(I, MultiIndex):
        I = MultiIndex(I)
    if len(I) != ctx.m:
        raise DomainError(f"multi-index {tuple(I)} does not have width {ctx.m}")
    v = total_derivative_field(ctx, j, k)
    for i in I.directions():
        v = vertical_endo_field(v, i)
    return v


def delta_apply(ctx, I, j, L):
    """Delta^I_j applied to the function L."""
    k = max((c.order for c in L.coordinates()), default=0)
    return delta_field(ctx, I, j, k)(L)
