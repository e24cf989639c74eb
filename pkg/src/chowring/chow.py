"""Graded Chow rings with an explicit integral basis.

A :class:`Space` knows its basis, how to multiply basis expansions and how to
integrate top-degree classes.  Basis labels are ``(partition, exponents)``
pairs: the Schubert class on the underlying Grassmannian and the powers of
the tautological classes of each projective-bundle level above it.  Because
labels are canonical, the same space built twice yields identical labels.

Pushforward along a :class:`Morphism` is not built in per morphism type; it
is recovered from pullback by Poincare duality (see
:func:`pushforward_dual_basis`).
"""

from __future__ import annotations

import threading
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from . import linalg
from .errors import DegreeError, InvalidInputError, SpaceMismatchError
from .symfunc import Partition

Label = Tuple[Partition, Tuple[int, ...]]
Terms = Dict[Label, int]


def label_degree(label: Label) -> int:
    lam, exps = label
    return sum(lam) + sum(exps)


class Space:
    """Abstract finite graded ring with a free basis and a degree map.

    Subclasses implement ``basis``, ``_mul``, ``_integrate``, ``generators``,
    ``expand_label`` and ``relation_values``.
    """

    dim: int
    name: str = "space"

    def __init__(self):
        self._gram_cache: Dict[int, List[List[int]]] = {}
        self._gram_lock = threading.Lock()

    # --- structure supplied by subclasses -----------------------------
    def basis(self, d: int) -> List[Label]:
        raise NotImplementedError

    def _mul(self, x: Terms, y: Terms, maxdeg: int) -> Terms:
        raise NotImplementedError

    def _integrate(self, x: Terms) -> int:
        raise NotImplementedError

    def generators(self) -> List["ChowClass"]:
        """Ring generators, in the order morphisms list their images."""
        raise NotImplementedError

    def expand_label(self, label: Label, pull: "_Puller") -> "ChowClass":
        """Image of a basis element under the ring map described by ``pull``."""
        raise NotImplementedError

    def relation_values(self, pull: "_Puller") -> List["ChowClass"]:
        """Images of the defining relations; all must vanish for a ring map."""
        raise NotImplementedError

    @property
    def key(self) -> tuple:
        raise NotImplementedError

    # --- shared machinery ---------------------------------------------
    def __eq__(self, other):
        return self is other or (isinstance(other, Space) and self.key == other.key)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"<{self.name} dim={self.dim}>"

    def full_basis(self) -> List[Label]:
        return [b for d in range(self.dim + 1) for b in self.basis(d)]

    def one(self) -> "ChowClass":
        return ChowClass(self, {self.basis(0)[0]: 1})

    def zero(self) -> "ChowClass":
        return ChowClass(self, {})

    def element(self, label: Label, coeff: int = 1) -> "ChowClass":
        return ChowClass(self, {label: coeff} if coeff else {})

    def __contains__(self, label) -> bool:
        return label in set(self.basis(label_degree(label)))


class ChowClass:
    """Integer combination of basis labels of ``space`` (possibly inhomogeneous)."""

    __slots__ = ("space", "terms")

    def __init__(self, space: Space, terms: Terms):
        self.space = space
        self.terms = {k: v for k, v in terms.items() if v}

    # --- arithmetic -----------------------------------------------------
    def _check(self, other: "ChowClass") -> None:
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatchError(f"{self.space!r} vs {other.space!r}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.space.one() * other
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return ChowClass(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.space, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowClass(self.space, {k: v * other for k, v in self.terms.items()})
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidInputError("negative powers are not defined")
        result, base = self.space.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.space.one() * other
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (lam, exps), c in sorted(self.terms.items(), key=lambda kv: (label_degree(kv[0]), kv[0])):
            mono = []
            if lam:
                mono.append("s" + ",".join(map(str, lam)))
            mono += [f"z{i}^{e}" if e > 1 else f"z{i}" for i, e in enumerate(exps) if e]
            parts.append(f"{c}*{'*'.join(mono)}" if mono else str(c))
        return " + ".join(parts)

    # --- grading ----------------------------------------------------------
    def degrees(self) -> List[int]:
        return sorted({label_degree(k) for k in self.terms})

    def part(self, d: int) -> "ChowClass":
        """Homogeneous component of codimension ``d``."""
        return ChowClass(self.space, {k: v for k, v in self.terms.items() if label_degree(k) == d})

    def graded(self) -> Dict[int, "ChowClass"]:
        return {d: self.part(d) for d in self.degrees()}

    @property
    def codim(self) -> int:
        """Codimension of a homogeneous non-zero class."""
        degs = self.degrees()
        if len(degs) != 1:
            raise DegreeError(f"class is not homogeneous (degrees {degs})")
        return degs[0]

    def coefficient(self, label: Label) -> int:
        return self.terms.get(label, 0)


def multiply(x: ChowClass, y: ChowClass) -> ChowClass:
    """Product in the Chow ring; components beyond the dimension vanish."""
    x._check(y)
    space = x.space
    return ChowClass(space, space._mul(x.terms, y.terms, space.dim))


def integrate(x: ChowClass) -> int:
    """Degree of a top-codimension class."""
    if not x.terms:
        return 0
    degs = x.degrees()
    if degs != [x.space.dim]:
        raise DegreeError(
            f"can only integrate classes of codimension {x.space.dim}, got degrees {degs}")
    return x.space._integrate(x.terms)


def gram_matrix(space: Space, d: int) -> List[List[int]]:
    """Pairing matrix between the codim-``d`` and codim-``(dim - d)`` bases."""
    if not 0 <= d <= space.dim:
        raise InvalidInputError(f"codimension {d} out of range 0..{space.dim}")
    cached = space._gram_cache.get(d)
    if cached is not None:
        return cached
    rows = space.basis(d)
    cols = space.basis(space.dim - d)
    mat = [[space._integrate(space._mul({b: 1}, {g: 1}, space.dim)) for g in cols]
           for b in rows]
    with space._gram_lock:
        space._gram_cache.setdefault(d, mat)
    return space._gram_cache[d]


class _Puller:
    """Evaluation context for pulling basis labels back along a ring map.

    Holds the generator images plus caches that the target space's
    ``expand_label`` is free to use.
    """

    def __init__(self, source: Space, images: Sequence[ChowClass]):
        self.source = source
        self.images = list(images)
        self.cache: Dict[object, ChowClass] = {}


class Morphism:
    """A map ``source -> target`` given by pullbacks of target generators."""

    def __init__(self, source: Space, target: Space, images: Sequence[ChowClass], name: str = "f"):
        gens = target.generators()
        if len(images) != len(gens):
            raise InvalidInputError(
                f"{name}: target has {len(gens)} generators, got {len(images)} images")
        for im in images:
            if im.space != source:
                raise SpaceMismatchError(f"{name}: generator image not in the source space")
        self.source = source
        self.target = target
        self.name = name
        self._puller = _Puller(source, images)
        self._label_cache: Dict[Label, ChowClass] = {}
        self._lock = threading.Lock()

    @property
    def relative_dimension(self) -> int:
        return self.source.dim - self.target.dim

    @property
    def images(self) -> List[ChowClass]:
        return list(self._puller.images)

    def pull_label(self, label: Label) -> ChowClass:
        hit = self._label_cache.get(label)
        if hit is None:
            with self._lock:
                hit = self.target.expand_label(label, self._puller)
                self._label_cache[label] = hit
        return hit

    def relation_images(self) -> List[ChowClass]:
        with self._lock:
            return self.target.relation_values(self._puller)

    def __repr__(self):
        return f"<Morphism {self.name}: {self.source!r} -> {self.target!r}>"


def pullback_apply(f: Morphism, x: ChowClass) -> ChowClass:
    """Ring-map image f*(x)."""
    if x.space != f.target:
        raise SpaceMismatchError(f"{f.name}*: class does not live on {f.target!r}")
    out: Terms = {}
    for label, c in x.terms.items():
        for k, v in f.pull_label(label).terms.items():
            out[k] = out.get(k, 0) + c * v
    return ChowClass(f.source, out)


def pushforward_dual_basis(f: Morphism, x: ChowClass) -> ChowClass:
    """Gysin pushforward f_*(x), characterised by the projection formula.

    Solves ``int_target y * b = int_source x * f^*(b)`` for every basis class
    ``b`` of complementary codimension.  The solution must be integral.
    """
    if x.space != f.source:
        raise SpaceMismatchError(f"{f.name}_*: class does not live on {f.source!r}")
    if not x.terms:
        return f.target.zero()
    p = x.codim
    d = p - f.relative_dimension
    if d < 0 or d > f.target.dim:
        return f.target.zero()
    target = f.target
    rows = target.basis(d)
    cols = target.basis(target.dim - d)
    gram = gram_matrix(target, d)
    rhs = [integrate(x * pullback_apply(f, target.element(g))) for g in cols]
    coeffs = linalg.solve_integral(linalg.transpose(gram), rhs)
    return ChowClass(target, dict(zip(rows, coeffs)))


def pairing(x: ChowClass, y: ChowClass) -> int:
    """``integrate(x * y)`` restricted to the top-degree part of the product."""
    prod = multiply(x, y)
    return integrate(prod.part(x.space.dim)) if prod else 0


def linear_combination(space: Space, pairs: Iterable[Tuple[int, ChowClass]]) -> ChowClass:
    out: Terms = {}
    for c, cls in pairs:
        for k, v in cls.terms.items():
            out[k] = out.get(k, 0) + c * v
    return ChowClass(space, out)


def map_terms(fn: Callable[[Label], Label], x: ChowClass, space: Space) -> ChowClass:
    return ChowClass(space, {fn(k): v for k, v in x.terms.items()})
