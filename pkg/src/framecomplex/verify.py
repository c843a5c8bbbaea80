"""Randomized exact checks of the operator identities.

Every check draws its cases from a ``random.Random`` seeded by a string built
from the user seed and the check parameters, so results are reproducible and
independent of the order in which checks run.
"""

import random
from dataclasses import dataclass
from typing import Optional

from .calculus import S_multi, d_multi, dT, total_derivative, vertical_endo
from .forms import ScalarForm
from .geometry import BundleContext
from .homotopy import homotopy_residual
from .multiindex import enumerate_multiindices
from .render import plain_scalar, plain_vector
from .sampling import random_scalar_form, random_vector_form

__all__ = [
    "CheckResult",
    "commutator_residual",
    "rearrangement_residual",
    "fuzz_homotopy",
    "fuzz_commutator",
    "fuzz_rearrangement",
    "fuzz_bicomplex",
    "fuzz_identities",
]


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: int = 0
    counterexample: Optional[str] = None

    @property
    def ok(self):
        return self.failures == 0

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.cases - self.failures}/{self.cases}"

    def record(self, residual, witness):
        if not residual.is_zero:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = witness()


def _rng(seed, *parts):
    return random.Random("-".join(map(str, (seed,) + parts)))


def _show(x):
    return plain_scalar(x) if isinstance(x, ScalarForm) else plain_vector(x)


def commutator_residual(phi, i, j):
    """S^i d_j phi - d_j S^i phi - r delta^i_j phi."""
    lhs = vertical_endo(total_derivative(phi, j), i) - total_derivative(vertical_endo(phi, i), j)
    if i == j:
        lhs = lhs - phi * phi.degree
    return lhs


def _weighted(phi, p):
    """sum_{|I| = p} (|I|!/I!) d_I S^I phi."""
    out = ScalarForm.zero(phi.ctx, phi.degree)
    if p < 0:
        return out
    for I in enumerate_multiindices(phi.ctx.m, p):
        term = S_multi(phi, I)
        if not term.is_zero:
            out = out + d_multi(term, I) * I.weight
    return out


def rearrangement_residual(phi, j, p):
    """Weighted d_I S^I d_j minus d_j(weighted d_I S^I + r p weighted d_J S^J), |J| = p - 1."""
    lhs = _weighted(total_derivative(phi, j), p)
    inner = _weighted(phi, p) + _weighted(phi, p - 1) * (phi.degree * p)
    return lhs - total_derivative(inner, j)


def fuzz_homotopy(ctx, k, r, s, cases, seed):
    rng = _rng(seed, "homotopy", ctx.m, ctx.n, k, r, s)
    result = CheckResult(f"homotopy m={ctx.m} n={ctx.n} k={k} r={r} s={s}", cases)
    for _ in range(cases):
        phi = random_vector_form(rng, ctx, r, s, k)
        result.record(homotopy_residual(phi), lambda: _show(phi))
    return result


def fuzz_commutator(m, r, cases, seed, n=2, k=2):
    ctx = BundleContext(m, n)
    rng = _rng(seed, "commutator", m, r)
    result = CheckResult(f"commutator m={m} r={r}", cases)
    for _ in range(cases):
        phi = random_scalar_form(rng, ctx, r, rng.randint(1, k))
        i, j = rng.randint(1, m), rng.randint(1, m)
        if rng.random() < 0.5:
            j = i
        result.record(commutator_residual(phi, i, j), lambda: f"i={i} j={j} phi={_show(phi)}")
    return result


def fuzz_rearrangement(m, p, cases, seed, n=2, k=2):
    ctx = BundleContext(m, n)
    rng = _rng(seed, "rearrangement", m, p)
    result = CheckResult(f"rearrangement m={m} p={p}", cases)
    for _ in range(cases):
        r = rng.randint(0, 2)
        phi = random_scalar_form(rng, ctx, r, rng.randint(1, k), max_terms=2)
        j = rng.randint(1, m)
        result.record(rearrangement_residual(phi, j, p), lambda: f"j={j} phi={_show(phi)}")
    return result


def fuzz_bicomplex(m, cases, seed, n=2, k=2):
    """d^2 = 0, dT^2 = 0, d dT = dT d, [d, d_i] = 0, [d_i, d_j] = 0, [S^i, S^j] = 0."""
    ctx = BundleContext(m, n)
    rng = _rng(seed, "bicomplex", m)
    results = {name: CheckResult(f"{name} m={m}", cases) for name in
               ("d^2", "dT^2", "[d,dT]", "[d,d_i]", "[d_i,d_j]", "[S^i,S^j]")}
    for _ in range(cases):
        r = rng.randint(0, 2)
        s = rng.randint(0, m)
        phi = random_vector_form(rng, ctx, r, s, rng.randint(0, k))
        i, j = rng.randint(1, m), rng.randint(1, m)
        witness = lambda: f"i={i} j={j} phi={_show(phi)}"
        results["d^2"].record(phi.d().d(), witness)
        results["dT^2"].record(dT(dT(phi)), witness)
        results["[d,dT]"].record(dT(phi).d() - dT(phi.d()), witness)
        results["[d,d_i]"].record(total_derivative(phi, i).d() - total_derivative(phi.d(), i), witness)
        results["[d_i,d_j]"].record(
            total_derivative(total_derivative(phi, i), j) - total_derivative(total_derivative(phi, j), i), witness)
        results["[S^i,S^j]"].record(
            vertical_endo(vertical_endo(phi, i), j) - vertical_endo(vertical_endo(phi, j), i), witness)
    return list(results.values())


def fuzz_identities(cases, seed):
    out = []
    for m in (1, 2, 3):
        for r in (0, 1, 2, 3):
            out.append(fuzz_commutator(m, r, cases, seed))
    for m in (2, 3):
        for p in (1, 2):
            out.append(fuzz_rearrangement(m, p, cases, seed))
    for m in (1, 2, 3):
        out.extend(fuzz_bicomplex(m, cases, seed))
    return out
