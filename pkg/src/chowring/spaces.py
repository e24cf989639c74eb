"""Concrete spaces: a point, Grassmannians, and towers of projective bundles.

Conventions: ``G(q, n)`` parametrises rank-q quotients of an n-dimensional
space, ``Q`` is its universal quotient with ``c_i(Q) = sigma_(1^i)``, and
``P(E)`` is the space of rank-1 quotients of E.  On ``P(E)`` the class
``zeta = c_1(O(1))`` of the universal quotient line satisfies

    zeta^r - c_1(E) zeta^(r-1) + c_2(E) zeta^(r-2) - ... + (-1)^r c_r(E) = 0.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .bundles import BundleClass
from .chow import ChowClass, Label, Morphism, Space, Terms, _Puller
from .errors import InvalidInputError, SpaceMismatchError, UnsupportedRankError
from .symfunc import BoxShape, jacobi_trudi, schur_product


class Point(Space):
    name = "point"

    def __init__(self):
        super().__init__()
        self.dim = 0

    @property
    def key(self):
        return ("point",)

    def basis(self, d: int) -> List[Label]:
        return [((), ())] if d == 0 else []

    def _mul(self, x: Terms, y: Terms, maxdeg: int) -> Terms:
        if maxdeg < 0:
            return {}
        v = x.get(((), ()), 0) * y.get(((), ()), 0)
        return {((), ()): v} if v else {}

    def _integrate(self, x: Terms) -> int:
        return x.get(((), ()), 0)

    def generators(self) -> List[ChowClass]:
        return []

    def expand_label(self, label: Label, pull: _Puller) -> ChowClass:
        return pull.source.one()

    def relation_values(self, pull: _Puller) -> List[ChowClass]:
        return []


class Grassmannian(Space):
    """G(q, n): rank-q quotients of an n-dimensional vector space."""

    def __init__(self, q: int, n: int):
        super().__init__()
        if not 1 <= q < n:
            raise InvalidInputError(f"need 1 <= q < n, got q={q}, n={n}")
        if q > 3:
            raise UnsupportedRankError(f"quotient rank {q} > 3 is not supported")
        self.q, self.n = q, n
        self.box = BoxShape(q, n - q)
        self.dim = q * (n - q)
        self.name = f"G({q},{n})"
        self._basis = {d: [(lam, ()) for lam in self.box.partitions(d)]
                       for d in range(self.dim + 1)}
        self._top = (self.box.full, ())
        self._table: Dict[Tuple, List[Tuple[Label, int]]] = {}

    @property
    def key(self):
        return ("G", self.q, self.n)

    def basis(self, d: int) -> List[Label]:
        return list(self._basis.get(d, []))

    def sigma(self, *parts: int) -> ChowClass:
        from .symfunc import partition
        lam = partition(*parts)
        if not self.box.fits(lam):
            return self.zero()
        return self.element((lam, ()))

    def _product(self, lam, mu) -> List[Tuple[Label, int]]:
        key = (lam, mu) if lam >= mu else (mu, lam)
        hit = self._table.get(key)
        if hit is None:
            hit = [((nu, ()), c) for nu, c in schur_product(key[0], key[1], self.box).items()]
            self._table[key] = hit
        return hit

    def _mul(self, x: Terms, y: Terms, maxdeg: int) -> Terms:
        out: Terms = {}
        ys = [(mu, sum(mu), b) for (mu, _), b in y.items()]
        for (lam, _), a in x.items():
            wl = sum(lam)
            for mu, wm, b in ys:
                if wl + wm > maxdeg:
                    continue
                ab = a * b
                for nu, c in self._product(lam, mu):
                    out[nu] = out.get(nu, 0) + ab * c
        return {k: v for k, v in out.items() if v}

    def _integrate(self, x: Terms) -> int:
        return x.get(self._top, 0)

    def tautological_quotient(self) -> BundleClass:
        """The universal quotient bundle Q."""
        c = self.one()
        for i in range(1, self.q + 1):
            c = c + self.sigma(*([1] * i))
        return BundleClass(self.q, c)

    def generators(self) -> List[ChowClass]:
        return [self.sigma(*([1] * i)) for i in range(1, self.q + 1)]

    def _h_image(self, a: int, pull: _Puller) -> ChowClass:
        # h_a = sum_{i>=1} (-1)^(i+1) e_i h_(a-i), valid because e_i = 0 for i > q
        key = ("G-h", a)
        hit = pull.cache.get(key)
        if hit is not None:
            return hit
        if a == 0:
            hit = pull.source.one()
        else:
            hit = pull.source.zero()
            for i in range(1, min(a, self.q) + 1):
                term = pull.images[i - 1] * self._h_image(a - i, pull)
                hit = hit + term if i % 2 else hit - term
        pull.cache[key] = hit
        return hit

    def expand_label(self, label: Label, pull: _Puller) -> ChowClass:
        lam, _ = label
        key = ("G-sigma", lam)
        hit = pull.cache.get(key)
        if hit is not None:
            return hit
        out = pull.source.zero()
        for sign, hmono in jacobi_trudi(lam):
            term = pull.source.one()
            for a in hmono:
                term = term * self._h_image(a, pull)
            out = out + term * sign
        pull.cache[key] = out
        return out

    def relation_values(self, pull: _Puller) -> List[ChowClass]:
        return [self._h_image(a, pull) for a in range(self.n - self.q + 1, self.n + 1)]


class ProjectiveBundle(Space):
    """P(E) over ``base``: rank-1 quotients of a bundle E of rank r."""

    def __init__(self, base: Space, bundle: BundleClass, name: str | None = None):
        super().__init__()
        if bundle.space != base:
            raise SpaceMismatchError("bundle does not live on the base space")
        if bundle.rank < 1:
            raise InvalidInputError("projective bundle needs rank >= 1")
        self.base = base
        self.bundle = bundle
        self.rank = r = bundle.rank
        self.dim = base.dim + r - 1
        self.level = getattr(base, "level", 0) + 1
        self.name = name or f"P(rank {r}) over {base.name}"
        # (-1)^(i+1) c_i(E) as raw base terms, so that zeta^r = sum_i rel[i] zeta^(r-i)
        self._relation = {i: {k: (v if i % 2 else -v) for k, v in bundle.c(i).terms.items()}
                          for i in range(1, r + 1)}
        self._basis: Dict[int, List[Label]] = {}
        for d in range(self.dim + 1):
            self._basis[d] = [(lam, exps + (e,))
                              for e in range(min(r - 1, d) + 1)
                              for lam, exps in base.basis(d - e)]
        self._gen_index = len(base.generators())
        self._key = ("P", base.key, r, frozenset(bundle.chern.terms.items()))

    @property
    def key(self):
        return self._key

    def basis(self, d: int) -> List[Label]:
        return list(self._basis.get(d, []))

    @property
    def zeta(self) -> ChowClass:
        return self.element(((), (0,) * (self.level - 1) + (1,)))

    def ancestors(self) -> List[Space]:
        chain: List[Space] = [self]
        s: Space = self
        while isinstance(s, ProjectiveBundle):
            s = s.base
            chain.append(s)
        return chain

    def lift(self, x: ChowClass) -> ChowClass:
        """Pull a class from any space below this one in the tower."""
        chain = self.ancestors()
        for depth, s in enumerate(chain):
            if s is x.space or s == x.space:
                pad = (0,) * depth
                return ChowClass(self, {(lam, exps + pad): v for (lam, exps), v in x.terms.items()})
        raise SpaceMismatchError(f"{x.space!r} is not below {self!r}")

    def _split(self, x: Terms) -> Dict[int, Terms]:
        out: Dict[int, Terms] = {}
        for (lam, exps), v in x.items():
            out.setdefault(exps[-1], {})[(lam, exps[:-1])] = v
        return out

    def _add_into(self, acc: Dict[int, Terms], e: int, terms: Terms, sign: int = 1) -> None:
        slot = acc.setdefault(e, {})
        for k, v in terms.items():
            slot[k] = slot.get(k, 0) + sign * v

    def _mul(self, x: Terms, y: Terms, maxdeg: int) -> Terms:
        maxdeg = min(maxdeg, self.dim)
        base = self.base
        xs, ys = self._split(x), self._split(y)
        acc: Dict[int, Terms] = {}
        for e, xb in xs.items():
            for f, yb in ys.items():
                lim = maxdeg - e - f
                if lim < 0:
                    continue
                prod = base._mul(xb, yb, lim)
                if prod:
                    self._add_into(acc, e + f, prod)
        return self._assemble(self._reduce(acc, maxdeg))

    def _reduce(self, acc: Dict[int, Terms], maxdeg: int) -> Dict[int, Terms]:
        r = self.rank
        if not acc:
            return acc
        for m in range(max(acc), r - 1, -1):
            a = acc.pop(m, None)
            if not a:
                continue
            for i, rel in self._relation.items():
                lim = maxdeg - (m - i)
                if not rel or lim < 0:
                    continue
                prod = self.base._mul(a, rel, lim)
                if prod:
                    self._add_into(acc, m - i, prod)
        return acc

    def _assemble(self, acc: Dict[int, Terms]) -> Terms:
        out: Terms = {}
        for e, terms in acc.items():
            for (lam, exps), v in terms.items():
                if v:
                    out[(lam, exps + (e,))] = v
        return out

    def fiber_integral(self, x: ChowClass) -> ChowClass:
        """pi_*: the coefficient of zeta^(r-1), as a class on the base."""
        if x.space != self:
            raise SpaceMismatchError("class does not live on this bundle")
        top = self.rank - 1
        return ChowClass(self.base, {(lam, exps[:-1]): v for (lam, exps), v in x.terms.items()
                                     if exps[-1] == top})

    def _integrate(self, x: Terms) -> int:
        top = self.rank - 1
        return self.base._integrate({(lam, exps[:-1]): v for (lam, exps), v in x.items()
                                     if exps[-1] == top})

    def generators(self) -> List[ChowClass]:
        return [self.lift(g) for g in self.base.generators()] + [self.zeta]

    def _zeta_power(self, e: int, pull: _Puller) -> ChowClass:
        key = ("zeta", self.level, e)
        hit = pull.cache.get(key)
        if hit is None:
            hit = pull.source.one() if e == 0 else self._zeta_power(e - 1, pull) * pull.images[self._gen_index]
            pull.cache[key] = hit
        return hit

    def expand_label(self, label: Label, pull: _Puller) -> ChowClass:
        lam, exps = label
        below = self.base.expand_label((lam, exps[:-1]), pull)
        e = exps[-1]
        return below if e == 0 else below * self._zeta_power(e, pull)

    def _pull_base_class(self, x: ChowClass, pull: _Puller) -> ChowClass:
        out = pull.source.zero()
        for label, v in x.terms.items():
            out = out + self.base.expand_label(label, pull) * v
        return out

    def relation_values(self, pull: _Puller) -> List[ChowClass]:
        r = self.rank
        rel = self._zeta_power(r, pull)
        for i in range(1, r + 1):
            term = self._pull_base_class(self.bundle.c(i), pull) * self._zeta_power(r - i, pull)
            rel = rel - term if i % 2 else rel + term
        return self.base.relation_values(pull) + [rel]


def point() -> Point:
    return Point()


def grassmannian(q: int, n: int) -> Tuple[Grassmannian, BundleClass]:
    g = Grassmannian(q, n)
    return g, g.tautological_quotient()


def projective_bundle(base: Space, e: BundleClass, name: str | None = None
                      ) -> Tuple[ProjectiveBundle, ChowClass, Morphism]:
    p = ProjectiveBundle(base, e, name)
    pi = Morphism(p, base, [p.lift(g) for g in base.generators()], name="pi")
    return p, p.zeta, pi


def pull_to_total(e: BundleClass, tower: Space) -> BundleClass:
    """Pull a bundle on some base of ``tower`` up to ``tower`` itself."""
    if e.space == tower:
        return e
    if not isinstance(tower, ProjectiveBundle):
        raise SpaceMismatchError(f"{tower!r} is not a tower over {e.space!r}")
    return BundleClass(e.rank, tower.lift(e.chern))


def tautological_sub_line(p: ProjectiveBundle) -> BundleClass:
    """O(-1): the line of E^dual cut out by a point of P(E), c_1 = -zeta."""
    return BundleClass(1, p.one() - p.zeta)


def projective_space(n: int) -> Tuple[ProjectiveBundle, ChowClass, Morphism]:
    pt = Point()
    return projective_bundle(pt, BundleClass(n + 1, pt.one()), name=f"P^{n}")
