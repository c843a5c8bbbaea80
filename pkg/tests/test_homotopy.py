import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from framecomplex import (BundleContext, DomainError, Lagrangian, MultiIndex, P_coeff, P_op, P_scalar, ScalarForm,
                          VectorForm, VerificationError, canonical_rep, d, dT, homotopy_residual, intrinsic_order,
                          poincare, split_dT_d)
from framecomplex.sampling import random_scalar_form, random_vector_form

from helpers import du, fn, u

seeds = st.integers(0, 10 ** 6)


def counterexample(m=3, n=2):
    """sum over i, j of delta_ab du^a_i ^ du^b_j (x) dt^i ^ dt^j, stored on i < j."""
    ctx = BundleContext(m, n)
    comps = {}
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            theta = ScalarForm.zero(ctx, 2)
            for a in range(1, n + 1):
                theta = theta + du(ctx, a, *MultiIndex.unit(m, i)).wedge(du(ctx, a, *MultiIndex.unit(m, j)))
            comps[(i, j)] = theta * 2
    return VectorForm(ctx, 2, 2, comps)


@pytest.mark.parametrize("J, r, s, m, value", [
    ((0,), 1, 1, 1, 1),
    ((0, 0), 2, 2, 2, Fraction(1, 2)),
    ((1, 0), 2, 2, 2, Fraction(-1, 8)),
    ((0, 1), 2, 2, 2, Fraction(-1, 8)),
])
def test_P_coeff(J, r, s, m, value):
    assert P_coeff(MultiIndex(J), r, s, m) == value


def test_P_coeff_domain():
    with pytest.raises(DomainError):
        P_coeff(MultiIndex((0,)), 0, 1, 1)
    with pytest.raises(DomainError):
        P_coeff(MultiIndex((0, 0)), 1, 3, 2)


def test_P_scalar_examples(ctx12):
    dL = d(fn(ctx12, u(1, 1) ** 2))
    assert P_scalar(dL, 1, 1) == du(ctx12, 1) * (2 * u(1, 1))
    assert P_scalar(du(ctx12, 1, 1), 1, 1) == du(ctx12, 1)
    assert P_scalar(du(ctx12, 1) * u(2), 1, 1).is_zero


def test_P_scalar_rejects_functions(ctx12):
    with pytest.raises(DomainError):
        P_scalar(fn(ctx12, u(1)), 1, 1)


def test_P_op_examples(ctx12):
    Phi = VectorForm.tensor(du(ctx12, 1), ())
    out = P_op(Phi)
    assert out.is_zero and out.covalence == -1
    dLam = d(VectorForm.volume(fn(ctx12, u(1) * u(2, 1))))
    assert P_op(dLam) == VectorForm.tensor(du(ctx12, 2) * u(1))


def test_counterexample():
    Phi = counterexample()
    assert dT(Phi).is_zero
    P = P_op(Phi)
    assert dT(P) == Phi
    assert intrinsic_order(P) >= 1
    assert homotopy_residual(Phi).is_zero


def test_homotopy_residual_domain(ctx12, ctx22):
    with pytest.raises(DomainError):
        homotopy_residual(VectorForm.volume(du(ctx12, 1)))
    with pytest.raises(DomainError):
        homotopy_residual(VectorForm.from_function(ctx22, u(1, 0, 0)))


@settings(max_examples=25, deadline=None)
@given(seeds, st.sampled_from([2, 3]), st.integers(1, 2), st.integers(0, 2), st.integers(1, 2))
def test_homotopy_identity(seed, m, r, s, k):
    ctx = BundleContext(m, 2)
    s = min(s, m - 1)
    Phi = random_vector_form(random.Random(seed), ctx, r, s, k, max_terms=2)
    assert homotopy_residual(Phi).is_zero


@settings(max_examples=15, deadline=None)
@given(seeds, st.integers(1, 2))
def test_order_zero_forms(seed, s):
    ctx = BundleContext(3, 2)
    Phi = random_vector_form(random.Random(seed), ctx, 1, s, 0)
    assert P_op(Phi).is_zero
    assert P_op(dT(Phi)) == Phi


@settings(max_examples=25, deadline=None)
@given(seeds, st.integers(1, 2), st.integers(1, 2), st.integers(1, 2))
def test_order_bound(seed, r, s, k):
    Phi = random_vector_form(random.Random(seed), BundleContext(2, 2), r, s, k, max_terms=2)
    assert intrinsic_order(P_op(Phi)) <= (r + 1) * intrinsic_order(Phi) - 1


def test_negative_control_at_top_covalence(ctx12):
    dLam = Lagrangian(ctx12, u(1) * u(2, 1)).volume_form.d()
    assert dT(P_op(dLam)) != dLam


def test_canonical_rep_example(ctx12):
    dLam = Lagrangian(ctx12, u(1) * u(2, 1)).volume_form.d()
    eps = du(ctx12, 1) * u(2, 1) - du(ctx12, 2) * u(1, 1)
    assert canonical_rep(dLam) == VectorForm.tensor(eps, (1,))
    assert canonical_rep(VectorForm.zero(ctx12, 1, 1)).is_zero


def test_canonical_rep_domain(ctx22):
    with pytest.raises(DomainError):
        canonical_rep(VectorForm.tensor(du(ctx22, 1), (1,)))


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(1, 2))
def test_canonical_rep_class_independent_and_idempotent(seed, m):
    rng = random.Random(seed)
    ctx = BundleContext(m, 2)
    Phi = random_vector_form(rng, ctx, 1, m, 1, max_terms=2)
    X = random_vector_form(rng, ctx, 1, m - 1, 1, max_terms=2)
    rep = canonical_rep(Phi)
    assert canonical_rep(Phi + dT(X)) == rep
    assert canonical_rep(rep) == rep


def test_poincare_examples(ctx12):
    assert poincare(du(ctx12, 1)) == fn(ctx12, u(1))
    assert poincare(du(ctx12, 1) * u(1)) == fn(ctx12, Fraction(1, 2) * u(1) ** 2)
    assert poincare(d(fn(ctx12, u(1) * u(2)))) == fn(ctx12, u(1) * u(2))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 3))
def test_poincare_contract(seed, r):
    ctx = BundleContext(2, 2)
    omega = random_scalar_form(random.Random(seed), ctx, r, 1)
    if r == 0:
        f = omega.as_function()
        assert poincare(d(omega)) == fn(ctx, f - f.constant_term())
    else:
        assert d(poincare(omega)) + poincare(d(omega)) == omega


def test_split_examples(ctx22):
    Psi, Phi1 = split_dT_d(VectorForm.zero(ctx22, 1, 1))
    assert Psi.is_zero and Phi1.is_zero
    g = u(1, 1, 0) * u(2, 0, 0) + 3 * u(1, 0, 0) + 4
    Psi, Phi1 = split_dT_d(VectorForm.tensor(d(fn(ctx22, g))))
    assert Psi == VectorForm.from_function(ctx22, g - 4)
    assert Phi1.is_zero


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(0, 2))
def test_split_recomposes(seed, s):
    rng = random.Random(seed)
    ctx = BundleContext(2, 2)
    Psi0 = random_vector_form(rng, ctx, 0, s, 1, max_terms=2)
    X0 = random_vector_form(rng, ctx, 1, s - 1, 1, max_terms=2) if s else VectorForm.zero(ctx, 1, -1)
    Phi = d(Psi0) + (dT(X0) if s else VectorForm.zero(ctx, 1, 0))
    Psi, Phi1 = split_dT_d(Phi)
    recomposed = d(Psi) + (dT(Phi1) if s else VectorForm.zero(ctx, 1, 0))
    assert recomposed == Phi


def test_split_rejects_nonexact(ctx12):
    Phi = VectorForm.tensor(du(ctx12, 1) * u(2))
    with pytest.raises(VerificationError) as err:
        split_dT_d(Phi)
    assert not err.value.residual.is_zero
