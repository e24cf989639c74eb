"""Self-checks of the engine that need no published numbers.

Each check returns a list of :class:`CheckResult`; the CLI's ``verify``
command and the test-suite both run them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, List

from . import linalg
from .bundles import dual, symmetric_power
from .chow import gram_matrix, pushforward_dual_basis
from .invariants import conic_setup, fact_identity_rhs, gw_lines
from .spaces import grassmannian, projective_bundle
from .symfunc import BoxShape, lr_oracle, schur_product


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def poincare_duality(spaces: Iterable) -> List[CheckResult]:
    out = []
    for space in spaces:
        bad = []
        for d in range(space.dim + 1):
            det = linalg.det(gram_matrix(space, d))
            if det not in (1, -1):
                bad.append((d, det))
        out.append(CheckResult(f"poincare duality on {space.name} (dim {space.dim})",
                               not bad, f"bad codims: {bad}" if bad else ""))
    return out


def grassmannians(max_n2: int = 8, max_n3: int = 12):
    for n in range(3, max_n2 + 1):
        yield grassmannian(2, n)[0]
    for n in range(4, max_n3 + 1):
        yield grassmannian(3, n)[0]


def conic_towers(max_k: int = 6):
    for k in range(3, max_k + 1):
        s = conic_setup(k)
        yield s.conics
        yield s.pointed_planes
        yield s.pointed_conics


def lr_agreement(samples: int = 200, seed: int = 0, max_rows: int = 3, max_cols: int = 6
                 ) -> List[CheckResult]:
    rng = random.Random(seed)
    mismatches = []
    for _ in range(samples):
        box = BoxShape(rng.randint(1, max_rows), rng.randint(1, max_cols))
        parts = box.partitions()
        lam, mu = rng.choice(parts), rng.choice(parts)
        got = schur_product(lam, mu, box)
        want = {nu: c for nu in box.partitions(sum(lam) + sum(mu))
                if (c := lr_oracle(lam, mu, nu))}
        if got != want:
            mismatches.append((lam, mu, box))
    return [CheckResult(f"Pieri products agree with LR tableaux ({samples} pairs)",
                        not mismatches, f"mismatches: {mismatches[:5]}" if mismatches else "")]


def fact_identity(max_k: int = 10) -> List[CheckResult]:
    bad = []
    total = 0
    for k in range(3, max_k + 1):
        for i in range(1, k):
            for j in range(1, k - i):
                total += 1
                if gw_lines(k, i, j) != fact_identity_rhs(k, i, j):
                    bad.append((k, i, j))
    return [CheckResult(f"line invariants satisfy the n^1_b relation ({total} cases)",
                        not bad, f"failures: {bad}" if bad else "")]


def hyperplane_normalisation(ks: Iterable[int] = range(3, 11)) -> List[CheckResult]:
    out = []
    for k in ks:
        s = conic_setup(k)
        ph = s.incidence_class(1)
        p1 = pushforward_dual_basis(s.f, s.pointed_conics.one())
        ok = ph == 2 * s.conics.one() and not p1
        out.append(CheckResult(f"f_*(h) = 2 and f_*(1) = 0 for k={k}", ok,
                               "" if ok else f"f_*(h) = {ph!r}, f_*(1) = {p1!r}"))
    return out


def fiber_normalisation(spaces: Iterable) -> List[CheckResult]:
    out = []
    for p in spaces:
        got = p.fiber_integral(p.zeta ** (p.rank - 1))
        out.append(CheckResult(f"pi_*(zeta^(r-1)) = 1 on {p.name}", got == p.base.one()))
    return out


def engine_suite() -> List[CheckResult]:
    """Fast subset used by ``verify --scope engine``."""
    results = []
    results += poincare_duality(grassmannians(6, 8))
    results += poincare_duality(conic_towers(4))
    results += lr_agreement(100)
    g, q = grassmannian(2, 4)
    towers = [projective_bundle(g, dual(symmetric_power(2, q)))[0]] + list(conic_towers(4))
    results += fiber_normalisation(towers)
    return results
