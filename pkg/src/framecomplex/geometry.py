"""Bundle bookkeeping for the m-frame bundles of E = R^n.

Jet coordinates are shared between all orders, so pulling back along the
projection from order k' to order k is the identity on coordinate
expressions.  The order of an object is metadata, recovered from the
coordinates that actually occur in it.
"""

from dataclasses import dataclass
from math import comb

from .errors import DomainError

__all__ = ["BundleContext", "dimension", "intrinsic_order", "projectable_to"]


@dataclass(frozen=True)
class BundleContext:
    """Number of frame directions ``m`` and fiber dimension ``n``.

    Frames only exist when m <= n; that open condition is invisible to
    polynomial identities and is not enforced.
    """

    m: int
    n: int

    def __post_init__(self):
        for name in ("m", "n"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise DomainError(f"{name} must be a positive integer, got {v!r}")

    def check_frame_index(self, i):
        if not isinstance(i, int) or not 1 <= i <= self.m:
            raise DomainError(f"frame index {i} out of range 1..{self.m}")

    def check_coordinate(self, c):
        if not 1 <= c.alpha <= self.n:
            raise DomainError(f"fiber index {c.alpha} out of range 1..{self.n}")
        if len(c.index) != self.m:
            raise DomainError(f"multi-index {tuple(c.index)} does not have width {self.m}")

    def as_header(self):
        return {"m": self.m, "n": self.n}


def dimension(ctx, k):
    """dim F^k_(m)E = n * #{I : |I| <= k} = n * C(m + k, k)."""
    if k < 0:
        raise DomainError("order must be non-negative")
    return ctx.n * comb(ctx.m + k, k)


def intrinsic_order(x):
    """Largest |I| among the coordinates occurring in x (0 for constants)."""
    return max((c.order for c in x.coordinates()), default=0)


def projectable_to(x, l):
    return intrinsic_order(x) <= l
