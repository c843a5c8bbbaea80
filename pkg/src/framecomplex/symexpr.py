"""Exact polynomials over the rationals in the jet coordinates u^alpha_I."""

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import NamedTuple

from ._kernel import accumulate, distinct_positions, mono_mul
from .errors import DomainError
from .multiindex import MultiIndex

__all__ = ["JetCoordinate", "coord", "PolyExpr", "as_poly"]


class JetCoordinate(NamedTuple):
    """The coordinate u^alpha_I.

    Field order makes plain tuple comparison the canonical coordinate order:
    by derivative order, then multi-index, then fiber index.
    """

    order: int
    index: MultiIndex
    alpha: int

    def __repr__(self):
        return f"u[{self.alpha};{','.join(map(str, self.index))}]"


def coord(alpha, index):
    """Make u^alpha_I from a fiber index and a multi-index (or count tuple)."""
    if not isinstance(alpha, int) or alpha < 1:
        raise DomainError(f"fiber index must be a positive integer, got {alpha!r}")
    if not isinstance(index, MultiIndex):
        index = MultiIndex(index)
    return JetCoordinate(index.degree, index, alpha)


@lru_cache(maxsize=None)
def raised(c, i):
    """u^alpha_{I+1_i}."""
    idx = c.index.raised(i)
    return JetCoordinate(c.order + 1, idx, c.alpha)


@lru_cache(maxsize=None)
def lowered(c, i):
    """u^alpha_{I-1_i}, or None when I(i) = 0."""
    idx = c.index.lowered(i)
    if idx is None:
        return None
    return JetCoordinate(c.order - 1, idx, c.alpha)


def _mono_key(mono):
    return (len(mono), mono)


class PolyExpr:
    """A polynomial with rational coefficients in jet coordinates.

    ``terms`` maps monomials (sorted tuples of coordinates, repeated according
    to exponent) to nonzero coefficients.  The zero polynomial has no terms, so
    structural equality is value equality.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[mono] = c
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c):
        c = _check_scalar(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def variable(cls, c):
        return cls._raw({(c,): 1})

    # ring structure

    def __add__(self, other):
        other = as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            accumulate(out, mono, c)
        return PolyExpr._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyExpr._raw({mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other):
        other = as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return PolyExpr._raw({})
            return PolyExpr._raw({mono: c * other for mono, c in self.terms.items()})
        other = as_poly(other)
        if other is None:
            return NotImplemented
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                accumulate(out, mono_mul(ma, mb), ca * cb)
        return PolyExpr._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            raise DomainError("negative exponent on a polynomial")
        result = PolyExpr.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, PolyExpr):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    # calculus

    def partial(self, c):
        """Formal partial derivative with respect to the coordinate c."""
        out = {}
        for mono, coeff in self.terms.items():
            for p, x, mult in distinct_positions(mono):
                if x == c:
                    accumulate(out, mono[:p] + mono[p + 1:], coeff * mult)
                    break
        return PolyExpr._raw(out)

    def eval(self, point):
        """Exact value at ``point`` (a mapping from coordinates to rationals)."""
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            v = Fraction(coeff)
            for x in mono:
                try:
                    v *= point[x]
                except KeyError:
                    raise DomainError(f"no value assigned to coordinate {x!r}") from None
            total += v
        return total

    def constant_term(self):
        return self.terms.get((), 0)

    def coordinates(self):
        return {x for mono in self.terms for x in mono}

    def sorted_terms(self):
        """Terms in canonical order (graded, then lexicographic in coordinate order)."""
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]))

    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def __repr__(self):
        from .render import plain_poly

        return f"PolyExpr({plain_poly(self)})"


def _check_scalar(c):
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise DomainError(f"expected an exact rational, got {c!r}")
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def as_poly(x):
    """Coerce ints/Fractions to constant polynomials; other types give None."""
    if isinstance(x, PolyExpr):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return PolyExpr.constant(x)
    return None
