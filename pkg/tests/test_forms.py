import random

import pytest
from hypothesis import given, settings, strategies as st

from framecomplex import BundleContext, DomainError, ScalarForm, VectorForm, component, d, normalize_bar, wedge
from framecomplex.sampling import random_scalar_form, random_vector_form

from helpers import du, fn, u

CTX = BundleContext(2, 2)
seeds = st.integers(0, 10 ** 6)


def vec(seed, r, s, k=1):
    return random_vector_form(random.Random(seed), CTX, r, s, k, max_terms=2)


def test_wedge_examples(ctx22):
    a = VectorForm.tensor(du(ctx22, 1), (1,))
    b = VectorForm.tensor(du(ctx22, 2), (2,))
    assert wedge(a, b) == VectorForm.tensor(du(ctx22, 1).wedge(du(ctx22, 2)), (1, 2))
    assert wedge(a, VectorForm.tensor(du(ctx22, 2), (1,))).is_zero


def test_wedge_beyond_top_covalence(ctx12):
    a = VectorForm.tensor(du(ctx12, 1), (1,))
    out = wedge(a, a)
    assert out.is_zero and out.covalence == 2


def test_wedge_context_mismatch(ctx12, ctx22):
    with pytest.raises(DomainError):
        wedge(VectorForm.tensor(du(ctx12, 1)), VectorForm.tensor(du(ctx22, 1)))


def test_scalar_wedge_sign(ctx12):
    assert du(ctx12, 2).wedge(du(ctx12, 1)) == -du(ctx12, 1).wedge(du(ctx12, 2))
    assert du(ctx12, 1).wedge(du(ctx12, 1)).is_zero


def test_d_examples(ctx12, ctx22):
    assert d(fn(ctx12, u(1)) .wedge(du(ctx12, 2))) == du(ctx12, 1).wedge(du(ctx12, 2))
    assert d(VectorForm.from_function(ctx22, u(1, 0, 0), (1,))) == VectorForm.tensor(du(ctx22, 1), (1,))


def test_combine_examples(ctx22):
    x = VectorForm.tensor(du(ctx22, 1), (1,))
    assert (x + (-1) * x).is_zero
    assert x * u(2, 0, 0) == VectorForm.tensor(du(ctx22, 1) * u(2, 0, 0), (1,))
    y = VectorForm.tensor(du(ctx22, 2), (2,))
    assert (x + y).components == {(1,): du(ctx22, 1), (2,): du(ctx22, 2)}


def test_combine_shape_mismatch(ctx22):
    with pytest.raises(DomainError):
        VectorForm.tensor(du(ctx22, 1), (1,)) + VectorForm.tensor(du(ctx22, 1), (1, 2))
    with pytest.raises(DomainError):
        du(ctx22, 1) + fn(ctx22, u(1, 0, 0))


def test_component_skew_extension(ctx22):
    theta = du(ctx22, 1) * u(2, 1, 0)
    Phi = VectorForm.tensor(theta, (1, 2))
    assert component(Phi, (1, 2)) == theta
    assert component(Phi, (2, 1)) == -theta
    assert component(Phi, (1, 1)).is_zero


@pytest.mark.parametrize("bad", [(0, 1), (1, 3), (1,)])
def test_component_malformed(ctx22, bad):
    with pytest.raises(DomainError):
        component(VectorForm.tensor(du(ctx22, 1), (1, 2)), bad)


def test_constructor_canonicalizes(ctx22):
    Phi = VectorForm(ctx22, 1, 2, {(2, 1): du(ctx22, 1)})
    assert Phi.components == {(1, 2): -du(ctx22, 1)}
    assert VectorForm(ctx22, 1, 2, dict(Phi.components)) == Phi


def test_normalize_bar(ctx22):
    Phi = VectorForm.from_function(ctx22, u(1, 0, 0) + 3, (1,))
    assert normalize_bar(Phi) == VectorForm.from_function(ctx22, u(1, 0, 0), (1,))
    assert normalize_bar(VectorForm.from_function(ctx22, 5, (2,))).is_zero


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_graded_commutativity(seed, r, s, r2, s2):
    a, b = vec(seed, r, s), vec(seed + 1, r2, s2)
    assert wedge(a, b) == wedge(b, a) * (-1) ** (r * r2 + s * s2)


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(0, 1), st.integers(0, 1), st.integers(0, 1))
def test_wedge_associative(seed, s1, s2, s3):
    a, b, c = vec(seed, 1, s1), vec(seed + 1, 0, s2), vec(seed + 2, 1, s3)
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_d_antiderivation(seed, r, s, r2, s2):
    a, b = vec(seed, r, s), vec(seed + 1, r2, s2)
    assert d(wedge(a, b)) == wedge(d(a), b) + wedge(a, d(b)) * (-1) ** r


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 3), st.integers(0, 2))
def test_d_squared(seed, r, s):
    assert d(d(vec(seed, r, s, k=2))).is_zero


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 3))
def test_canonicalization_idempotent(seed, r):
    phi = random_scalar_form(random.Random(seed), CTX, r, 2)
    again = ScalarForm(CTX, r, dict(phi.terms))
    assert again == phi and again.terms == phi.terms


def test_zero_coefficients_are_dropped(ctx22):
    x = du(ctx22, 1) * u(1, 0, 0)
    phi = ScalarForm(ctx22, 1, {k: 0 for k in x.terms})
    assert phi.is_zero and phi.terms == {}
    assert VectorForm.tensor(phi, (1,)).is_zero
