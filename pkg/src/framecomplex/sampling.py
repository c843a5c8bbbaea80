"""Seeded random polynomials, forms and Lagrangians for fuzzing the identities."""

from fractions import Fraction
from itertools import combinations

from .forms import ScalarForm, VectorForm
from .multiindex import multiindices_up_to
from .symexpr import PolyExpr, coord

__all__ = ["coordinates_up_to", "random_poly", "random_scalar_form", "random_vector_form", "random_lagrangian"]


def coordinates_up_to(ctx, k):
    return [coord(a, I) for I in multiindices_up_to(ctx.m, k) for a in range(1, ctx.n + 1)]


def _coeff(rng):
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den) if den != 1 else num


def random_poly(rng, ctx, k, max_degree=2, max_terms=3, min_degree=0):
    pool = coordinates_up_to(ctx, k)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(min_degree, max_degree)
        mono = tuple(sorted(rng.choice(pool) for _ in range(deg)))
        terms[mono] = terms.get(mono, 0) + _coeff(rng)
    return PolyExpr(terms)


def random_scalar_form(rng, ctx, r, k, max_degree=2, max_terms=3):
    """A random scalar r-form of intrinsic order exactly k (unless it cancels)."""
    pool = coordinates_up_to(ctx, k)
    top = [c for c in pool if c.order == k]
    terms = {}
    for t in range(rng.randint(1, max_terms)):
        if r > len(pool):
            break
        labels = tuple(rng.sample(pool, r))
        if t == 0 and r and k and not any(c.order == k for c in labels):
            labels = (rng.choice([c for c in top if c not in labels[1:]]),) + labels[1:]
        deg = rng.randint(0, max_degree)
        mono = tuple(sorted(rng.choice(pool) for _ in range(deg)))
        if t == 0 and r == 0 and k and deg == 0:
            mono = (rng.choice(top),)
        part = ScalarForm(ctx, r, {(labels, mono): _coeff(rng)})
        for key, c in part.terms.items():
            terms[key] = terms.get(key, 0) + c
    return ScalarForm(ctx, r, terms)


def random_vector_form(rng, ctx, r, s, k, max_degree=2, max_terms=3, max_components=None):
    tuples = list(combinations(range(1, ctx.m + 1), s))
    if max_components is not None and len(tuples) > max_components:
        tuples = rng.sample(tuples, max_components)
    components = {}
    for dt in tuples:
        components[dt] = random_scalar_form(rng, ctx, r, k, max_degree, max_terms)
    return VectorForm(ctx, r, s, components)


def random_lagrangian(rng, ctx, k, max_degree=3, max_terms=4):
    """A random polynomial density of order exactly k (no constant-only terms)."""
    pool = coordinates_up_to(ctx, k)
    top = [c for c in pool if c.order == k]
    f = random_poly(rng, ctx, k, max_degree=max_degree, max_terms=max_terms, min_degree=1)
    return f + PolyExpr({(rng.choice(top), rng.choice(pool)): _coeff(rng)})
