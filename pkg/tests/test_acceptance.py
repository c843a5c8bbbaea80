"""Acceptance checks, one printed PASS/FAIL line per criterion.

All comparisons are exact rational equality.  Run with ``pytest -s`` to see
the lines.
"""

import random
import time

from framecomplex import (BundleContext, Lagrangian, P_op, VectorForm, canonical_rep, d, dimension, dT, euler_lagrange,
                          fundamental_form, helmholtz, intrinsic_order, is_homogeneous, poincare,
                          split_dT_d)
from framecomplex.multiindex import multiindices_up_to
from framecomplex.render import plain_scalar
from framecomplex.sampling import random_lagrangian, random_scalar_form, random_vector_form
from framecomplex.verify import fuzz_bicomplex, fuzz_homotopy, fuzz_commutator, fuzz_rearrangement

import lagrangians
from helpers import du, u
from test_homotopy import counterexample

SEED = 2024
C1 = BundleContext(1, 2)


def report(number, label, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number} {label}"
    print(line + (f": {detail}" if detail else ""))
    assert ok, line + (f": {detail}" if detail else "")


def _failed(results):
    return [r for r in results if not r.ok]


def test_criterion_01_homotopy_theorem():
    start = time.perf_counter()
    results = []
    for m in (2, 3):
        ctx = BundleContext(m, 2)
        for k in (1, 2):
            for r in (1, 2):
                for s in range(m):
                    results.append(fuzz_homotopy(ctx, k, r, s, 20, SEED))
    elapsed = time.perf_counter() - start
    bad = _failed(results)
    cases = sum(r.cases for r in results)
    detail = f"{len(results)} configurations, {cases} forms, {elapsed:.1f}s"
    if bad:
        detail += f"; first failure {bad[0].name}: {bad[0].counterexample}"
    report(1, "homotopy identity dT P + P dT = id", not bad and elapsed < 120, detail)


def test_criterion_02_commutator_identity():
    results = [fuzz_commutator(m, r, 50, SEED) for m in (1, 2, 3) for r in range(4)]
    bad = _failed(results)
    detail = f"{sum(r.cases for r in results)} forms over r in 0..3, m in 1..3"
    report(2, "S^i d_j - d_j S^i = r delta^i_j", not bad, detail if not bad else bad[0].counterexample)


def test_criterion_03_rearrangement_identity():
    results = [fuzz_rearrangement(m, p, 25, SEED) for m in (2, 3) for p in (1, 2)]
    bad = _failed(results)
    detail = f"{sum(r.cases for r in results)} forms over p in 1..2, m in 2..3"
    report(3, "weighted d_I S^I operator identity", not bad, detail if not bad else bad[0].counterexample)


def test_criterion_04_bicomplex():
    results = [res for m in (1, 2, 3) for res in fuzz_bicomplex(m, 40, SEED)]
    bad = _failed(results)
    detail = ", ".join(sorted({r.name.split(" m=")[0] for r in results}))
    report(4, "bicomplex identities", not bad, detail if not bad else f"{bad[0].name}: {bad[0].counterexample}")


def test_criterion_05_counterexample():
    Phi = counterexample(3, 2)
    primitive = P_op(Phi)
    closed = dT(Phi).is_zero
    recovered = dT(primitive) == Phi
    order = intrinsic_order(primitive)
    report(5, "dT-closed form without an order-0 primitive", closed and recovered and order >= 1,
           f"dT Phi = 0: {closed}, dT P Phi = Phi: {recovered}, order of P Phi = {order}")


def test_criterion_06_euler_lagrange_routes():
    total = 0
    disagreements = []
    for m in (1, 2):
        ctx = BundleContext(m, 2)
        rng = random.Random(f"{SEED}-el-{m}")
        for k in (1, 2):
            for _ in range(20):
                lag = Lagrangian(ctx, random_lagrangian(rng, ctx, k))
                total += 1
                if not euler_lagrange(lag).agree:
                    disagreements.append(lag.density)
    worked = euler_lagrange(Lagrangian(C1, u(1) * u(2, 1)))
    worked_ok = worked.agree and worked.source == du(C1, 1) * u(2, 1) - du(C1, 2) * u(1, 1)
    null = euler_lagrange(Lagrangian(C1, u(1, 1) * u(2) + u(1) * u(2, 1)))
    null_ok = null.agree and null.form.is_zero
    report(6, "Euler-Lagrange routes agree", not disagreements and worked_ok and null_ok,
           f"{total} random Lagrangians, worked example {plain_scalar(worked.source)}, null example zero: {null_ok}")


def test_criterion_07_helmholtz():
    total, nonzero = 0, 0
    for m in (1, 2):
        ctx = BundleContext(m, 2)
        rng = random.Random(f"{SEED}-helmholtz-{m}")
        for k in (1, 2):
            for _ in range(10):
                total += 1
                eps = euler_lagrange(Lagrangian(ctx, random_lagrangian(rng, ctx, k))).form
                nonzero += not helmholtz(eps).is_zero
    control = helmholtz(VectorForm.tensor(du(C1, 2) * u(1), (1,)))
    report(7, "H(eps(L)) = 0 and non-variational control", nonzero == 0 and not control.is_zero,
           f"{total - nonzero}/{total} source forms annihilated, control nonzero: {not control.is_zero}")


def test_criterion_08_fundamental_form():
    rows = []
    for m, null, nonnull in ((1, lagrangians.null_m1(), lagrangians.nonnull_m1()),
                             (2, lagrangians.null_m2(), lagrangians.nonnull_m2())):
        for lag, expect_closed in [(L, True) for L in null] + [(L, False) for L in nonnull]:
            res = fundamental_form(lag)
            rows.append((m, expect_closed, res.closed, res.projectable_to_first_order,
                         is_homogeneous(lag).homogeneous))
    ok = all(c == e and p and h for _, e, c, p, h in rows)
    counts = {m: sum(1 for row in rows if row[0] == m) for m in (1, 2)}
    report(8, "Theta_m closed iff null, projectable to order 1", ok,
           f"{counts[1]} Lagrangians for m=1, {counts[2]} for m=2, all homogeneous")


def test_criterion_09_splitting():
    ctx = BundleContext(2, 2)
    rng = random.Random(f"{SEED}-split")
    failures = 0
    cases = 0
    for s in (0, 1, 2):
        for _ in range(8):
            cases += 1
            Psi0 = random_vector_form(rng, ctx, 0, s, rng.randint(0, 1), max_terms=2)
            if s:
                X0 = random_vector_form(rng, ctx, 1, s - 1, 1, max_terms=2)
                Phi = d(Psi0) + dT(X0)
            else:
                Phi = d(Psi0)
            Psi, Phi1 = split_dT_d(Phi)
            recomposed = d(Psi) + dT(Phi1) if s else d(Psi)
            failures += recomposed != Phi
    contract_failures = 0
    for r in range(1, 4):
        for _ in range(10):
            omega = random_scalar_form(rng, ctx, r, 1)
            contract_failures += d(poincare(omega)) + poincare(d(omega)) != omega
        f = random_scalar_form(rng, ctx, 0, 1)
        g = f.as_function()
        contract_failures += poincare(d(f)).as_function() != g - g.constant_term()
    report(9, "split recomposition and Poincare contract", failures == 0 and contract_failures == 0,
           f"{cases - failures}/{cases} splits recompose, {33 - contract_failures}/33 contract checks")


def test_criterion_10_negative_control():
    dLam = Lagrangian(C1, u(1) * u(2, 1)).volume_form.d()
    gap = dLam - dT(P_op(dLam))
    eps = euler_lagrange(Lagrangian(C1, u(1) * u(2, 1))).form
    report(10, "homotopy identity fails at covalence m", not gap.is_zero and gap == eps == canonical_rep(dLam),
           "dLambda - dT P dLambda equals the nonzero Euler-Lagrange form")


def test_criterion_11_dimension():
    mismatches = []
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for k in range(5):
                if dimension(BundleContext(m, n), k) != n * len(multiindices_up_to(m, k)):
                    mismatches.append((m, n, k))
    report(11, "dimension formula matches enumeration", not mismatches, f"{45 - len(mismatches)}/45 (m, n, k)")


def test_criterion_12_second_order_stretch():
    # Not gating in spirit: no genuinely second-order homogeneous polynomial
    # Lagrangian of low degree exists, so a non-homogeneous second-order
    # density and a first-order homogeneous one declared at k = 2 stand in.
    ctx = BundleContext(2, 2)
    second = Lagrangian(ctx, u(1, 2, 0) * u(2, 0, 1) + u(1, 1, 1) * u(2, 0, 0))
    declared = Lagrangian(BundleContext(2, 3), lagrangians.nonnull_m2()[0].density, order=2)
    orders = [fundamental_form(second).order, fundamental_form(declared).order]
    report(12, "(Pd)^2 Lambda order at most 4 (stretch)", max(orders) <= 4,
           f"orders {orders[0]} (second-order L, not homogeneous) and {orders[1]} (homogeneous L, k=2)")
