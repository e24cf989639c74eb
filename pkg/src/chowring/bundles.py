"""Chern-class calculus for bundles known only through rank and total Chern class.

Every Chern class is truncated at the dimension of the ambient space and
nowhere else, so formal quotients (virtual bundles) may carry classes above
their rank.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .chow import ChowClass, Space, Terms, label_degree
from .errors import DegreeError, RankError, SpaceMismatchError, UnsupportedRankError
from .symfunc import ElementaryPoly, SymPoly, reduce_to_elementary


@dataclass(frozen=True, eq=False)
class BundleClass:
    rank: int
    chern: ChowClass

    def __post_init__(self):
        if self.rank < 0:
            raise RankError(f"negative rank {self.rank}")
        if self.chern.part(0) != self.chern.space.one():
            raise ValueError("total Chern class must have constant term 1")

    @property
    def space(self) -> Space:
        return self.chern.space

    def c(self, i: int) -> ChowClass:
        """The i-th Chern class."""
        if i == 0:
            return self.space.one()
        return self.chern.part(i)

    def top(self) -> ChowClass:
        return self.c(self.rank)

    def __eq__(self, other):
        return (isinstance(other, BundleClass) and self.rank == other.rank
                and self.chern == other.chern)

    def __repr__(self):
        return f"BundleClass(rank={self.rank}, c={self.chern!r})"


def trivial(space: Space, rank: int = 1) -> BundleClass:
    return BundleClass(rank, space.one())


def line_bundle(t: ChowClass) -> BundleClass:
    if t and t.codim != 1:
        raise DegreeError("first Chern class of a line bundle must have codimension 1")
    return BundleClass(1, t.space.one() + t)


def _same_space(e: BundleClass, f: BundleClass) -> None:
    if e.space != f.space:
        raise SpaceMismatchError("bundles live on different spaces")


def direct_sum(e: BundleClass, f: BundleClass) -> BundleClass:
    _same_space(e, f)
    return BundleClass(e.rank + f.rank, e.chern * f.chern)


def dual(e: BundleClass) -> BundleClass:
    flipped = {k: (-v if label_degree(k) % 2 else v) for k, v in e.chern.terms.items()}
    return BundleClass(e.rank, ChowClass(e.space, flipped))


def _binom(n: int, k: int) -> int:
    """Binomial coefficient, extended to negative ``n`` as a power-series coefficient."""
    if k < 0:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def tensor_by_line(e: BundleClass, t: ChowClass) -> BundleClass:
    """E tensor L with c_1(L) = t.

    Uses c(E (x) L) = sum_i c_i(E) (1 + t)^(rank - i), which is the splitting
    principle for genuine bundles and the natural extension for formal ones.
    """
    if t.space != e.space:
        raise SpaceMismatchError("line class lives on a different space")
    if t and t.codim != 1:
        raise DegreeError("tensor_by_line needs a codimension-1 class")
    space = e.space
    powers = [space.one()]
    for _ in range(space.dim):
        powers.append(powers[-1] * t)
    total = space.zero()
    for i, ci in sorted(e.chern.graded().items()):
        series = space.zero()
        for j in range(space.dim - i + 1):
            b = _binom(e.rank - i, j)
            if b and powers[j]:
                series = series + powers[j] * b
        total = total + ci * series
    return BundleClass(e.rank, total)


def _multisets(q: int, k: int):
    """Exponent vectors of length q summing to k."""
    for cut in itertools.combinations(range(k + q - 1), q - 1):
        bounds = (-1,) + cut + (k + q - 1,)
        yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(q))


def _times_linear(p: SymPoly, coeffs: Tuple[int, ...], max_degree: int) -> SymPoly:
    """p * (1 + sum coeffs[i] x_i), truncated."""
    out = dict(p)
    q = len(coeffs)
    for mono, c in p.items():
        if sum(mono) >= max_degree:
            continue
        for i in range(q):
            if coeffs[i]:
                m = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
                out[m] = out.get(m, 0) + c * coeffs[i]
    return {m: c for m, c in out.items() if c}


@functools.lru_cache(maxsize=None)
def symmetric_power_universal(k: int, q: int, max_degree: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """Total Chern class of S^k of a rank-q bundle in terms of e_1..e_q.

    Computed in the formal root ring, truncated at ``max_degree``.
    """
    p: SymPoly = {(0,) * q: 1}
    for m in _multisets(q, k):
        p = _times_linear(p, m, max_degree)
    return tuple(sorted(reduce_to_elementary(p, q).items()))


def evaluate_elementary(ep, gens: List[ChowClass], space: Space) -> ChowClass:
    """Substitute Chern classes for e_1..e_q in an elementary polynomial."""
    cache: Dict[Tuple[int, ...], ChowClass] = {(0,) * len(gens): space.one()}

    def mono(exps: Tuple[int, ...]) -> ChowClass:
        hit = cache.get(exps)
        if hit is None:
            j = max(i for i, e in enumerate(exps) if e)
            prev = exps[:j] + (exps[j] - 1,) + exps[j + 1:]
            hit = cache[exps] = mono(prev) * gens[j]
        return hit

    out: Terms = {}
    for exps, coeff in sorted(ep):
        if sum(i * e for i, e in enumerate(exps, start=1)) > space.dim:
            continue
        for kk, v in mono(tuple(exps)).terms.items():
            out[kk] = out.get(kk, 0) + coeff * v
    return ChowClass(space, out)


def symmetric_power(k: int, e: BundleClass) -> BundleClass:
    if k < 1:
        raise ValueError(f"symmetric power index must be positive, got {k}")
    q = e.rank
    if q < 1 or q > 3:
        raise UnsupportedRankError(f"symmetric powers implemented for ranks 1..3, got {q}")
    rank = _binom(k + q - 1, q - 1)
    ep = symmetric_power_universal(k, q, e.space.dim)
    return BundleClass(rank, evaluate_elementary(ep, [e.c(i) for i in range(1, q + 1)], e.space))


def chern_inverse(c: ChowClass, max_degree: int | None = None) -> ChowClass:
    """Inverse of a total class with unit constant term, as a truncated series."""
    space = c.space
    top = space.dim if max_degree is None else min(max_degree, space.dim)
    parts = c.graded()
    inv = [space.one()]
    for n in range(1, top + 1):
        s = space.zero()
        for i in range(1, n + 1):
            ci = parts.get(i)
            if ci:
                s = s - ci * inv[n - i]
        inv.append(s)
    total: Terms = {}
    for s in inv:
        total.update(s.terms)
    return ChowClass(space, total)


def quotient_chern(total: BundleClass, sub: BundleClass, max_degree: int | None = None) -> BundleClass:
    """Chern class of total/sub, i.e. c(total) * c(sub)^-1.

    Also serves for kernels: ker(E -> F) = quotient_chern(E, F).
    ``max_degree`` optionally stops the series early; the result is then only
    valid up to that codimension.
    """
    _same_space(total, sub)
    if sub.rank > total.rank:
        raise RankError(f"sub rank {sub.rank} exceeds total rank {total.rank}")
    space = total.space
    top = space.dim if max_degree is None else min(max_degree, space.dim)
    inv = chern_inverse(sub.chern, top)
    prod = ChowClass(space, space._mul(total.chern.terms, inv.terms, top))
    return BundleClass(total.rank - sub.rank, prod)


def kernel_chern(total: BundleClass, image: BundleClass, max_degree: int | None = None) -> BundleClass:
    return quotient_chern(total, image, max_degree)
