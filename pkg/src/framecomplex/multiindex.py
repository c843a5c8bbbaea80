"""Multi-indices I in N^m labelling derivative counts along the frame directions."""

from functools import lru_cache
from itertools import chain
from math import comb, factorial as _fact

from .errors import DomainError

__all__ = ["MultiIndex", "enumerate_multiindices", "multiindices_up_to", "sort_key"]


class MultiIndex(tuple):
    """Immutable tuple of non-negative derivative counts ``(I(1), ..., I(m))``.

    Frame directions are numbered from 1, as in the usual coordinate notation,
    so ``I[i - 1]`` is the count along direction ``i``.
    """

    __slots__ = ()

    def __new__(cls, counts):
        counts = tuple(counts)
        if not counts:
            raise DomainError("multi-index width must be at least 1")
        for c in counts:
            if not isinstance(c, int) or c < 0:
                raise DomainError(f"multi-index counts must be non-negative integers, got {counts}")
        return tuple.__new__(cls, counts)

    @classmethod
    def zero(cls, m):
        return cls((0,) * m)

    @classmethod
    def unit(cls, m, i):
        """The multi-index 1_i of width m."""
        _check_slot(m, i)
        return cls(1 if q == i else 0 for q in range(1, m + 1))

    @classmethod
    def from_directions(cls, m, directions):
        """Build a multi-index from a list of base directions, e.g. [1, 1, 2] -> (2, 1)."""
        counts = [0] * m
        for i in directions:
            _check_slot(m, i)
            counts[i - 1] += 1
        return cls(counts)

    @property
    def width(self):
        return len(self)

    @property
    def degree(self):
        return sum(self)

    @property
    def factorial(self):
        out = 1
        for c in self:
            out *= _fact(c)
        return out

    @property
    def weight(self):
        """Number of distinct orderings of the directions making up this index: |I|!/I!."""
        return _fact(self.degree) // self.factorial

    def directions(self):
        """The sorted list of base directions, inverse of :meth:`from_directions`."""
        return list(chain.from_iterable([i + 1] * c for i, c in enumerate(self)))

    def raised(self, i):
        _check_slot(len(self), i)
        return _raised(self, i)

    def lowered(self, i):
        """Subtract one at slot i; ``None`` when that count is already zero."""
        _check_slot(len(self), i)
        return _lowered(self, i)

    def __add__(self, other):
        if not isinstance(other, MultiIndex):
            return NotImplemented
        if len(other) != len(self):
            raise DomainError(f"width mismatch: {len(self)} vs {len(other)}")
        return MultiIndex(a + b for a, b in zip(self, other))

    def __mul__(self, other):
        # tuple repetition makes no sense for multi-indices
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"MultiIndex({tuple(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"


def _check_slot(m, i):
    if not isinstance(i, int) or not 1 <= i <= m:
        raise DomainError(f"frame index {i} out of range 1..{m}")


@lru_cache(maxsize=None)
def _raised(idx, i):
    c = list(idx)
    c[i - 1] += 1
    return tuple.__new__(MultiIndex, c)


@lru_cache(maxsize=None)
def _lowered(idx, i):
    if idx[i - 1] == 0:
        return None
    c = list(idx)
    c[i - 1] -= 1
    return tuple.__new__(MultiIndex, c)


def sort_key(idx):
    """Canonical order: by degree, then lexicographically."""
    return (sum(idx), tuple(idx))


@lru_cache(maxsize=None)
def _enumerate(m, p):
    if m == 1:
        return ((p,),)
    out = []
    for first in range(p, -1, -1):
        for rest in _enumerate(m - 1, p - first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_multiindices(m, p):
    """All width-m multi-indices of degree exactly p, in canonical order."""
    if m < 1:
        raise DomainError("width must be positive")
    if p < 0:
        return []
    out = sorted((MultiIndex(c) for c in _enumerate(m, p)), key=sort_key)
    assert len(out) == comb(m + p - 1, p)
    return out


def multiindices_up_to(m, k):
    """All width-m multi-indices with degree at most k, in canonical order."""
    return [I for p in range(k + 1) for I in enumerate_multiindices(m, p)]
