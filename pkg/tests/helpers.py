from framecomplex import PolyExpr, ScalarForm, coord


def u(alpha, *counts):
    """The polynomial u^alpha_I; counts default to the zero multi-index of width 1."""
    return PolyExpr.variable(coord(alpha, counts or (0,)))


def du(ctx, alpha, *counts):
    return ScalarForm.du(ctx, coord(alpha, counts or (0,) * ctx.m))


def fn(ctx, f):
    return ScalarForm.function(ctx, f)


