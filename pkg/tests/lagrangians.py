"""Curated first-order Lagrangians shared by the variational and acceptance tests."""

from framecomplex import BundleContext, Lagrangian, total_derivative

from helpers import u

CTX1 = BundleContext(1, 2)
CTX2 = BundleContext(2, 3)


def minor(a, b):
    """du^a ^ du^b pulled back along a 2-frame: u^a_(1,0) u^b_(0,1) - u^a_(0,1) u^b_(1,0)."""
    return u(a, 1, 0) * u(b, 0, 1) - u(a, 0, 1) * u(b, 1, 0)


def _lag(ctx, f):
    return Lagrangian(ctx, f, order=1)


def null_m1():
    return [
        _lag(CTX1, total_derivative(u(1) * u(2), 1)),
        _lag(CTX1, total_derivative(u(1) ** 2 * u(2), 1)),
        _lag(CTX1, total_derivative(u(2) ** 3, 1)),
    ]


def nonnull_m1():
    return [
        _lag(CTX1, u(1) * u(2, 1)),
        _lag(CTX1, u(1) ** 2 * u(2, 1)),
        _lag(CTX1, u(2) * u(1, 1) - u(1) * u(2, 1)),
    ]


def null_m2():
    return [
        _lag(CTX2, minor(1, 2)),
        _lag(CTX2, u(1, 0, 0) * minor(1, 2)),
        _lag(CTX2, (u(2, 0, 0) ** 2 + u(1, 0, 0)) * minor(1, 2)),
    ]


def nonnull_m2():
    return [
        _lag(CTX2, u(3, 0, 0) * minor(1, 2)),
        _lag(CTX2, u(2, 0, 0) * minor(1, 3)),
        _lag(CTX2, u(3, 0, 0) * minor(1, 2) + u(1, 0, 0) * minor(2, 3)),
    ]
