"""Scalar r-forms on F^k_(m)E and forms valued in the exterior powers of R^m*.

A scalar form is stored flat: ``terms`` maps ``(labels, monomial)`` to a
nonzero rational, where ``labels`` is a strictly increasing tuple of jet
coordinates (the factors du^alpha_I of a wedge monomial) and ``monomial`` is
the coefficient monomial.  A vector-valued form maps strictly increasing
tuples of frame indices (the dt-monomials) to nonzero scalar forms.
"""

from fractions import Fraction

from ._kernel import accumulate, distinct_positions, label_insert, mono_mul, sort_with_sign
from .errors import DomainError
from .geometry import BundleContext
from .symexpr import PolyExpr, as_poly

__all__ = ["ScalarForm", "VectorForm", "wedge", "d", "component", "normalize_bar"]


class ScalarForm:
    __slots__ = ("ctx", "degree", "terms", "_hash")

    def __init__(self, ctx, degree, terms=None):
        if not isinstance(ctx, BundleContext):
            raise DomainError("ctx must be a BundleContext")
        if degree < -1:
            raise DomainError(f"invalid form degree {degree}")
        self.ctx = ctx
        self.degree = degree
        self.terms = {}
        self._hash = None
        for (labels, mono), c in (terms or {}).items():
            if len(labels) != degree:
                raise DomainError(f"wedge monomial {labels} does not have degree {degree}")
            for x in labels + mono:
                ctx.check_coordinate(x)
            signed = sort_with_sign(labels)
            if signed is None:
                continue
            labels, sign = signed
            accumulate(self.terms, (labels, tuple(sorted(mono))), c * sign)

    @classmethod
    def _raw(cls, ctx, degree, terms):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.degree = degree
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, ctx, degree):
        return cls._raw(ctx, degree, {})

    @classmethod
    def function(cls, ctx, f):
        """A polynomial viewed as a 0-form."""
        f = as_poly(f)
        for x in f.coordinates():
            ctx.check_coordinate(x)
        return cls._raw(ctx, 0, {((), mono): c for mono, c in f.terms.items()})

    @classmethod
    def du(cls, ctx, *coords):
        """The wedge monomial du^{c_1} ^ ... ^ du^{c_r}."""
        return cls(ctx, len(coords), {(tuple(coords), ()): 1})

    @classmethod
    def from_coefficients(cls, ctx, degree, coefficients):
        """Build from a mapping of label tuples (any order) to polynomials."""
        terms = {}
        for labels, f in coefficients.items():
            f = as_poly(f)
            for mono, c in f.terms.items():
                part = cls(ctx, degree, {(tuple(labels), mono): c})
                for key, v in part.terms.items():
                    accumulate(terms, key, v)
        return cls._raw(ctx, degree, terms)

    # views

    def coefficient(self, labels):
        """The polynomial multiplying the canonical wedge monomial ``labels``."""
        return PolyExpr._raw({mono: c for (lab, mono), c in self.terms.items() if lab == labels})

    def by_label(self):
        out = {}
        for (labels, mono), c in self.terms.items():
            out.setdefault(labels, {})[mono] = c
        return {labels: PolyExpr._raw(t) for labels, t in sorted(out.items())}

    def coordinates(self):
        out = set()
        for labels, mono in self.terms:
            out.update(labels)
            out.update(mono)
        return out

    def as_function(self):
        if self.degree != 0:
            raise DomainError("only 0-forms are functions")
        return PolyExpr._raw({mono: c for (_, mono), c in self.terms.items()})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # linear structure

    def _check_same(self, other):
        if not isinstance(other, ScalarForm):
            return False
        if other.ctx != self.ctx:
            raise DomainError("context mismatch")
        if other.degree != self.degree:
            raise DomainError(f"degree mismatch: {self.degree} vs {other.degree}")
        return True

    def __add__(self, other):
        if not self._check_same(other):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            accumulate(out, key, c)
        return ScalarForm._raw(self.ctx, self.degree, out)

    def __neg__(self):
        return ScalarForm._raw(self.ctx, self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not self._check_same(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return ScalarForm.zero(self.ctx, self.degree)
            return ScalarForm._raw(self.ctx, self.degree, {k: c * other for k, c in self.terms.items()})
        if isinstance(other, PolyExpr):
            out = {}
            for (labels, mono), c in self.terms.items():
                for m2, c2 in other.terms.items():
                    accumulate(out, (labels, mono_mul(mono, m2)), c * c2)
            return ScalarForm._raw(self.ctx, self.degree, out)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ScalarForm):
            return (self.ctx, self.degree, self.terms) == (other.ctx, other.degree, other.terms)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self.degree, frozenset(self.terms.items())))
        return self._hash

    # exterior algebra

    def wedge(self, other):
        if other.ctx != self.ctx:
            raise DomainError("context mismatch")
        out = {}
        for (la, ma), ca in self.terms.items():
            for (lb, mb), cb in other.terms.items():
                signed = sort_with_sign(la + lb)
                if signed is None:
                    continue
                labels, sign = signed
                accumulate(out, (labels, mono_mul(ma, mb)), ca * cb * sign)
        return ScalarForm._raw(self.ctx, self.degree + other.degree, out)

    def d(self):
        out = {}
        for (labels, mono), c in self.terms.items():
            for p, x, mult in distinct_positions(mono):
                ins = label_insert(labels, x)
                if ins is None:
                    continue
                new_labels, sign = ins
                accumulate(out, (new_labels, mono[:p] + mono[p + 1:]), c * mult * sign)
        return ScalarForm._raw(self.ctx, self.degree + 1, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (t[0][0], len(t[0][1]), t[0][1]))

    def __repr__(self):
        from .render import plain_scalar

        return f"ScalarForm(degree={self.degree}, {plain_scalar(self)})"


class VectorForm:
    """An element of Omega^{r,s}: scalar r-forms indexed by increasing s-tuples.

    The component stored under ``(i_1, ..., i_s)`` multiplies
    dt^{i_1} ^ ... ^ dt^{i_s}.  Covalence -1 or above m only admits the zero form.
    """

    __slots__ = ("ctx", "degree", "covalence", "components", "_hash")

    def __init__(self, ctx, degree, covalence, components=None):
        self.ctx = ctx
        self.degree = degree
        self.covalence = covalence
        self.components = {}
        self._hash = None
        if covalence < -1:
            raise DomainError(f"invalid covalence {covalence}")
        for dt, phi in (components or {}).items():
            dt = tuple(dt)
            if len(dt) != covalence:
                raise DomainError(f"dt monomial {dt} does not have length {covalence}")
            for i in dt:
                ctx.check_frame_index(i)
            if not isinstance(phi, ScalarForm):
                phi = ScalarForm.function(ctx, phi)
            if phi.ctx != ctx or phi.degree != degree:
                raise DomainError("component has the wrong context or degree")
            signed = sort_with_sign(dt)
            if signed is None or phi.is_zero:
                continue
            dt, sign = signed
            prev = self.components.get(dt)
            phi = phi * sign if prev is None else prev + phi * sign
            if phi.is_zero:
                self.components.pop(dt, None)
            else:
                self.components[dt] = phi

    @classmethod
    def _raw(cls, ctx, degree, covalence, components):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.degree = degree
        obj.covalence = covalence
        obj.components = components
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, ctx, degree, covalence):
        return cls._raw(ctx, degree, covalence, {})

    @classmethod
    def tensor(cls, theta, dt=()):
        """theta (x) dt^{i_1} ^ ... ^ dt^{i_s}; ``theta`` may be a ScalarForm or a polynomial."""
        return cls(theta.ctx, theta.degree, len(dt), {tuple(dt): theta})

    @classmethod
    def from_function(cls, ctx, f, dt=()):
        return cls.tensor(ScalarForm.function(ctx, f), dt)

    @classmethod
    def volume(cls, theta):
        """theta (x) dt^1 ^ ... ^ dt^m."""
        return cls.tensor(theta, tuple(range(1, theta.ctx.m + 1)))

    def coordinates(self):
        out = set()
        for phi in self.components.values():
            out |= phi.coordinates()
        return out

    @property
    def is_zero(self):
        return not self.components

    def __bool__(self):
        return bool(self.components)

    def map_components(self, fn, degree=None):
        """Apply a linear map of scalar forms to every component."""
        degree = self.degree if degree is None else degree
        out = {}
        for dt, phi in self.components.items():
            psi = fn(phi)
            if not psi.is_zero:
                out[dt] = psi
        return VectorForm._raw(self.ctx, degree, self.covalence, out)

    def _check_same(self, other):
        if not isinstance(other, VectorForm):
            return False
        if other.ctx != self.ctx:
            raise DomainError("context mismatch")
        if (other.degree, other.covalence) != (self.degree, self.covalence):
            raise DomainError(
                f"shape mismatch: ({self.degree},{self.covalence}) vs ({other.degree},{other.covalence})"
            )
        return True

    def __add__(self, other):
        if not self._check_same(other):
            return NotImplemented
        out = dict(self.components)
        for dt, phi in other.components.items():
            prev = out.get(dt)
            if prev is None:
                out[dt] = phi
            else:
                s = prev + phi
                if s.is_zero:
                    del out[dt]
                else:
                    out[dt] = s
        return VectorForm._raw(self.ctx, self.degree, self.covalence, out)

    def __neg__(self):
        return self.map_components(lambda phi: -phi)

    def __sub__(self, other):
        if not self._check_same(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PolyExpr)) and not isinstance(other, bool):
            return self.map_components(lambda phi: phi * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, VectorForm):
            return (self.ctx, self.degree, self.covalence, self.components) == (
                other.ctx, other.degree, other.covalence, other.components)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self.degree, self.covalence, frozenset(self.components.items())))
        return self._hash

    def component(self, dt):
        return component(self, dt)

    def wedge(self, other):
        return wedge(self, other)

    def d(self):
        return self.map_components(ScalarForm.d, self.degree + 1)

    def __repr__(self):
        from .render import plain_vector

        return f"VectorForm(r={self.degree}, s={self.covalence}, {plain_vector(self)})"


def wedge(a, b):
    """(theta (x) w) ^ (theta' (x) w') = (theta ^ theta') (x) (w ^ w')."""
    if isinstance(a, ScalarForm) and isinstance(b, ScalarForm):
        return a.wedge(b)
    if a.ctx != b.ctx:
        raise DomainError("context mismatch")
    out = {}
    for dta, pa in a.components.items():
        for dtb, pb in b.components.items():
            signed = sort_with_sign(dta + dtb)
            if signed is None:
                continue
            dt, sign = signed
            term = pa.wedge(pb)
            if sign < 0:
                term = -term
            prev = out.get(dt)
            term = term if prev is None else prev + term
            if term.is_zero:
                out.pop(dt, None)
            else:
                out[dt] = term
    return VectorForm._raw(a.ctx, a.degree + b.degree, a.covalence + b.covalence, out)


def d(x):
    """Exterior derivative; on vector-valued forms it acts on the scalar factor only."""
    return x.d()


def component(phi, dt):
    """Contract the value of ``phi`` with e_{i_1} ^ ... ^ e_{i_s}.

    Any ordering of the frame indices is accepted; permutations pick up a sign
    and repeated indices give zero.
    """
    dt = tuple(dt)
    if len(dt) != phi.covalence:
        raise DomainError(f"expected {phi.covalence} frame indices, got {dt}")
    for i in dt:
        phi.ctx.check_frame_index(i)
    signed = sort_with_sign(dt)
    if signed is None:
        return ScalarForm.zero(phi.ctx, phi.degree)
    key, sign = signed
    theta = phi.components.get(key)
    if theta is None:
        return ScalarForm.zero(phi.ctx, phi.degree)
    return theta if sign > 0 else -theta


def normalize_bar(phi):
    """Canonical representative in Omega^{0,s} modulo constant vector-valued functions."""
    if phi.degree != 0:
        return phi
    return phi.map_components(
        lambda th: ScalarForm._raw(th.ctx, 0, {k: c for k, c in th.terms.items() if k[1]})
    )
