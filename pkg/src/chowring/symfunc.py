"""Partition combinatorics and symmetric-function algebra.

Schur classes are products in the Chow ring of a Grassmannian: a class is a
dict ``{partition: coefficient}`` and partitions that do not fit the
Grassmannian's box are dropped as soon as they appear.  Products go through
Jacobi-Trudi and repeated Pieri steps; :func:`lr_oracle` counts
Littlewood-Richardson tableaux directly and exists to check them.

The second half of the module handles symmetric polynomials in at most three
formal Chern roots and rewrites them in elementary symmetric generators.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from .errors import AsymmetryError, InvalidInputError, UnsupportedRankError

Partition = Tuple[int, ...]
SchurVector = Dict[Partition, int]
# exponent tuple -> coefficient, one slot per formal root
SymPoly = Dict[Tuple[int, ...], int]
# exponent tuple over (e_1, ..., e_q) -> coefficient
ElementaryPoly = Dict[Tuple[int, ...], int]

MAX_ROWS = 3


def partition(*parts: int) -> Partition:
    """Validate and normalise ``parts`` into a partition tuple.

    Trailing zeros are stripped; anything else that is not a weakly
    decreasing sequence of positive integers is rejected.
    """
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise InvalidInputError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InvalidInputError(f"partition must be weakly decreasing: {parts}")
    return parts


def weight(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


@dataclass(frozen=True)
class BoxShape:
    """Support of the Schubert basis of G(rows, rows + cols)."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InvalidInputError(f"box sides must be positive: {self}")

    @property
    def full(self) -> Partition:
        return (self.cols,) * self.rows

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def fits(self, lam: Partition) -> bool:
        return len(lam) <= self.rows and (not lam or lam[0] <= self.cols)

    def partitions(self, w: int | None = None) -> List[Partition]:
        """All partitions in the box, or only those of weight ``w``.

        Ordered by weight, then reverse-lexicographically within a weight.
        """
        if w is None:
            return [lam for d in range(self.size + 1) for lam in self.partitions(d)]
        return list(_box_partitions(w, self.rows, self.cols))

    def complement(self, lam: Partition) -> Partition:
        """Partition dual to ``lam`` under the Poincare pairing."""
        padded = lam + (0,) * (self.rows - len(lam))
        return partition(*(self.cols - p for p in reversed(padded)))


def _box_partitions(w: int, rows: int, cols: int) -> Iterator[Partition]:
    if w == 0:
        yield ()
        return
    if rows == 0 or w > rows * cols:
        return
    for first in range(min(w, cols), 0, -1):
        for rest in _box_partitions(w - first, rows - 1, first):
            yield (first,) + rest


def _require_fits(lam: Partition, box: BoxShape) -> None:
    if not box.fits(lam):
        raise InvalidInputError(f"partition {lam} does not fit {box}")


def _horizontal_strips(lam: Partition, a: int, box: BoxShape) -> Iterator[Partition]:
    """Partitions obtained from ``lam`` by adding a horizontal strip of size ``a``
    without leaving ``box``."""
    padded = list(lam) + [0] * (box.rows - len(lam))

    def grow(i: int, remaining: int, acc: List[int]) -> Iterator[List[int]]:
        if i == box.rows:
            if remaining == 0:
                yield acc
            return
        # row i may grow up to the old length of row i-1 (strip condition)
        cap = box.cols if i == 0 else padded[i - 1]
        for add in range(min(remaining, cap - padded[i]), -1, -1):
            yield from grow(i + 1, remaining - add, acc + [padded[i] + add])

    for nu in grow(0, a, []):
        yield partition(*nu)


def pieri_multiply(v: SchurVector, a: int, box: BoxShape) -> SchurVector:
    """Multiply ``v`` by the single-row class sigma_a (= h_a)."""
    if a < 0:
        raise InvalidInputError(f"Pieri degree must be non-negative, got {a}")
    out: SchurVector = {}
    for lam, coeff in v.items():
        _require_fits(lam, box)
        for nu in _horizontal_strips(lam, a, box):
            out[nu] = out.get(nu, 0) + coeff
    return {nu: c for nu, c in out.items() if c}


def jacobi_trudi(lam: Partition) -> List[Tuple[int, Tuple[int, ...]]]:
    """Expand s_lam = det(h_{lam_i - i + j}) into signed h-monomials.

    Each monomial is a sorted tuple of positive h-indices (h_0 = 1 is
    omitted); like terms are collected.
    """
    if len(lam) > MAX_ROWS:
        raise UnsupportedRankError(
            f"Jacobi-Trudi is limited to {MAX_ROWS} rows, got {lam}")
    n = len(lam)
    terms: Dict[Tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(n)):
        idx = [lam[i] - i + perm[i] for i in range(n)]
        if any(x < 0 for x in idx):
            continue
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if perm[i] > perm[j])
        mono = tuple(sorted((x for x in idx if x > 0), reverse=True))
        terms[mono] = terms.get(mono, 0) + (-1) ** inversions
    return [(c, m) for m, c in sorted(terms.items(), reverse=True) if c]


@functools.lru_cache(maxsize=None)
def schur_product(lam: Partition, mu: Partition, box: BoxShape) -> SchurVector:
    """sigma_lam * sigma_mu in the Chow ring of the Grassmannian with ``box``.

    The returned dict is shared through the cache; callers must not mutate it.
    """
    _require_fits(lam, box)
    _require_fits(mu, box)
    if weight(lam) + weight(mu) > box.size:
        return {}
    if len(mu) > len(lam) or (len(mu) == len(lam) and mu > lam):
        lam, mu = mu, lam
    out: SchurVector = {}
    for sign, hmono in jacobi_trudi(mu):
        v: SchurVector = {lam: sign}
        for a in hmono:
            v = pieri_multiply(v, a, box)
            if not v:
                break
        for nu, c in v.items():
            out[nu] = out.get(nu, 0) + c
    return {nu: c for nu, c in out.items() if c}


def lr_oracle(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam,mu} by tableau enumeration.

    Counts fillings of nu/lam with content mu whose rows weakly increase,
    columns strictly increase, and whose reverse reading word (rows right to
    left, top to bottom) is a lattice word.
    """
    if weight(nu) != weight(lam) + weight(mu):
        return 0
    if len(lam) > len(nu) or any(l > n for l, n in zip(lam, nu)):
        return 0
    lam_p = lam + (0,) * (len(nu) - len(lam))
    cells = [(r, c) for r in range(len(nu))
             for c in range(nu[r] - 1, lam_p[r] - 1, -1)]
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def place(pos: int) -> int:
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        total = 0
        for v in range(1, len(mu) + 1):
            if counts[v] == mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            right = filling.get((r, c + 1))
            if right is not None and v > right:
                continue
            above = filling.get((r - 1, c))
            if above is not None and v <= above:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            total += place(pos + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return place(0)


# ---------------------------------------------------------------------------
# symmetric polynomials in formal roots


def _check_symmetric(p: SymPoly, q: int) -> None:
    for i in range(q - 1):
        for mono, coeff in p.items():
            swapped = list(mono)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if p.get(tuple(swapped), 0) != coeff:
                raise AsymmetryError(
                    f"polynomial is not invariant under swapping variables "
                    f"{i} and {i + 1} (monomial {mono})")


def poly_mul(p: SymPoly, r: SymPoly, max_degree: int | None = None) -> SymPoly:
    out: SymPoly = {}
    for m1, c1 in p.items():
        d1 = sum(m1)
        for m2, c2 in r.items():
            if max_degree is not None and d1 + sum(m2) > max_degree:
                continue
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def elementary(i: int, q: int) -> SymPoly:
    """e_i in q variables."""
    out: SymPoly = {}
    for subset in itertools.combinations(range(q), i):
        out[tuple(1 if j in subset else 0 for j in range(q))] = 1
    return out


class _ElementaryExpander:
    """Memoised root-ring expansions of e_1^x e_2^y e_3^z."""

    def __init__(self, q: int):
        self.q = q
        self.gens = [elementary(i, q) for i in range(1, q + 1)]
        self.cache: Dict[Tuple[int, ...], SymPoly] = {(0,) * q: {(0,) * q: 1}}

    def expand(self, exps: Tuple[int, ...]) -> SymPoly:
        hit = self.cache.get(exps)
        if hit is not None:
            return hit
        if self.q == 3 and exps[2] > 0:
            # e_3 is a pure monomial: shift instead of multiplying
            base = self.expand(exps[:2] + (0,))
            z = exps[2]
            result = {(m[0] + z, m[1] + z, m[2] + z): c for m, c in base.items()}
        else:
            j = max(i for i, e in enumerate(exps) if e > 0)
            prev = list(exps)
            prev[j] -= 1
            result = poly_mul(self.expand(tuple(prev)), self.gens[j])
        self.cache[exps] = result
        return result


@functools.lru_cache(maxsize=4)
def _expander(q: int) -> _ElementaryExpander:
    return _ElementaryExpander(q)


def reduce_to_elementary(p: SymPoly, q: int | None = None) -> ElementaryPoly:
    """Rewrite a symmetric polynomial in the elementary symmetric generators.

    Leading-term subtraction: the lexicographically largest monomial
    ``x^a y^b z^c`` (a >= b >= c) is cancelled by ``e1^(a-b) e2^(b-c) e3^c``.
    Returns ``{(i_1, ..., i_q): coeff}`` meaning ``coeff * prod e_j^{i_j}``.
    """
    if q is None:
        q = len(next(iter(p))) if p else 1
    if q < 1 or q > MAX_ROWS:
        raise UnsupportedRankError(f"symmetric reduction supports 1..3 roots, got {q}")
    if any(len(m) != q for m in p):
        raise InvalidInputError(f"monomials must have {q} exponents")
    _check_symmetric(p, q)
    rest = {m: c for m, c in p.items() if c}
    expander = _expander(q)
    out: ElementaryPoly = {}
    while rest:
        lead = max(rest)
        coeff = rest[lead]
        exps = tuple(lead[i] - (lead[i + 1] if i + 1 < q else 0) for i in range(q))
        out[exps] = out.get(exps, 0) + coeff
        for m, c in expander.expand(exps).items():
            v = rest.get(m, 0) - coeff * c
            if v:
                rest[m] = v
            else:
                rest.pop(m, None)
    return out


def expand_elementary(ep: ElementaryPoly, q: int) -> SymPoly:
    """Inverse of :func:`reduce_to_elementary`: substitute e_i back."""
    expander = _expander(q)
    out: SymPoly = {}
    for exps, coeff in ep.items():
        for m, c in expander.expand(tuple(exps)).items():
            out[m] = out.get(m, 0) + coeff * c
    return {m: c for m, c in out.items() if c}
