"""Curve counts on Calabi-Yau hypersurfaces.

* weighted lines on the Calabi-Yau hypersurfaces of P(2,1^4) and P(4,1^4)
  (plus the classical quintic);
* Gromov-Witten invariants n^a_b(1) of lines on the degree-(k+2)
  hypersurface in P^(k+1), via Schubert calculus on G(2, k+2);
* Gromov-Witten invariants n^a_b(2) of conics, via the space of conics
  P(S^2 Q*) over G(3, k+2) and the space of pointed conics above it.
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .bundles import (BundleClass, direct_sum, dual, line_bundle, quotient_chern,
                      symmetric_power, tensor_by_line, trivial)
from .chow import ChowClass, Morphism, integrate, pushforward_dual_basis
from .errors import DivisibilityError, InvalidIncidenceError, InvalidWeightError
from .spaces import (Grassmannian, ProjectiveBundle, grassmannian, projective_bundle,
                     pull_to_total, tautological_sub_line)

FAMILIES = ("weighted-lines", "gw-lines", "gw-conics")


def incidence(k: int, a: int, b: int) -> Tuple[int, int, int]:
    """Complete (a, b) to (a, b, c) with a + b + c = k, all positive."""
    c = k - a - b
    if k < 3 or a < 1 or b < 1 or c < 1:
        raise InvalidIncidenceError(
            f"need positive a, b, c with a + b + c = k; got k={k}, a={a}, b={b}, c={c}")
    return a, b, c


def _canonical(k: int, a: int, b: int) -> Tuple[int, int, int]:
    return tuple(sorted(incidence(k, a, b)))


# ---------------------------------------------------------------------------
# lines


def lines_on_quintic() -> int:
    g, q = grassmannian(2, 5)
    return integrate(symmetric_power(5, q).c(6))


def weighted_lines_bundle(k: int) -> Tuple[ProjectiveBundle, BundleClass]:
    """The space M of weighted lines in P(k,1^4) and the bundle whose top
    Chern class counts those lying on the weight-(k+4) hypersurface."""
    if k not in (2, 4):
        raise InvalidWeightError(
            f"weight {k} is not allowed: it must divide the degree {k + 4}, so k is 2 or 4")
    g, q = grassmannian(2, 4)
    one = trivial(g)
    sym = {j: symmetric_power(j, q) for j in range(k, k + 5, k)}
    # equations x_0 - f_k: a line in C + S^k Q, so M = P((C + S^k Q)^*)
    m, zeta, _ = projective_bundle(g, dual(direct_sum(one, sym[k])), name=f"M[weight {k}]")
    numerator, denominator = one, one
    for j in range(k, k + 5, k):
        numerator = direct_sum(numerator, sym[j])
        if j + k <= k + 4:
            denominator = direct_sum(denominator, sym[j])
    sub = tensor_by_line(pull_to_total(denominator, m), tautological_sub_line(m).c(1))
    return m, quotient_chern(pull_to_total(numerator, m), sub)


@functools.lru_cache(maxsize=None)
def weighted_lines_count(k: int) -> int:
    m, b = weighted_lines_bundle(k)
    return integrate(b.c(b.rank))


@functools.lru_cache(maxsize=None)
def _lines_setup(k: int) -> Tuple[Grassmannian, ChowClass]:
    g, q = grassmannian(2, k + 2)
    return g, symmetric_power(k + 2, q).c(k + 3)


@functools.lru_cache(maxsize=None)
def _gw_lines_sorted(k: int, inc: Tuple[int, int, int]) -> int:
    g, fano = _lines_setup(k)
    cls = fano
    for a in inc:
        cls = cls * g.sigma(a - 1)
    return integrate(cls)


def gw_lines(k: int, a: int, b: int) -> int:
    """n^a_b(1): degree of c_{k+3}(S^{k+2}Q) sigma_{a-1} sigma_{b-1} sigma_{c-1}."""
    return _gw_lines_sorted(k, _canonical(k, a, b))


def fact_identity_rhs(k: int, i: int, j: int) -> int:
    """Right-hand side of the relation expressing n^i_j(1) through the n^1_b(1)."""
    if i < 1 or j < 1 or i + j >= k:
        raise InvalidIncidenceError(f"need i, j >= 1 and i + j < k; got k={k}, i={i}, j={j}")
    return (sum(gw_lines(k, 1, i + l) for l in range(j))
            - sum(gw_lines(k, 1, l) for l in range(1, j)))


# ---------------------------------------------------------------------------
# conics


@dataclass
class ConicSetup:
    """Spaces and classes shared by every conic invariant for one k."""

    k: int
    grassmannian: Grassmannian
    conics: ProjectiveBundle          # P(S^2 Q^*) over G(3, k+2)
    pointed_planes: ProjectiveBundle  # P(Q) over G(3, k+2)
    pointed_conics: ProjectiveBundle  # P(W^*) over the pointed planes
    f: Morphism                       # pointed conics -> conics
    hyperplane: ChowClass             # h on the pointed conics
    F: BundleClass
    W: BundleClass
    conic_class: ChowClass            # c_{2k+5}(F)
    _pushforwards: Dict[int, ChowClass] = field(default_factory=dict)

    def incidence_class(self, a: int) -> ChowClass:
        """f_*(h^a): conics meeting a general codimension-a linear space (times 2 for a = 1)."""
        hit = self._pushforwards.get(a)
        if hit is None:
            hit = self._pushforwards[a] = pushforward_dual_basis(self.f, self.hyperplane ** a)
        return hit


@functools.lru_cache(maxsize=None)
def conic_setup(k: int) -> ConicSetup:
    g, q = grassmannian(3, k + 2)
    s2 = symmetric_power(2, q)
    m, zeta_m, _ = projective_bundle(g, dual(s2), name=f"M[k={k}]")
    sub = tensor_by_line(pull_to_total(symmetric_power(k, q), m), tautological_sub_line(m).c(1))
    big_f = quotient_chern(pull_to_total(symmetric_power(k + 2, q), m), sub)

    # pointed planes: a point of the plane is a rank-1 quotient of Q, and its
    # quotient line is O(1) of P^(k+1) pulled back
    h_space, zeta_h, _ = projective_bundle(g, q, name=f"H[k={k}]")
    w = quotient_chern(pull_to_total(s2, h_space), line_bundle(2 * zeta_h))
    mp, zeta_p, _ = projective_bundle(h_space, dual(w), name=f"M'[k={k}]")
    f = Morphism(mp, m, [mp.lift(gen) for gen in g.generators()] + [zeta_p], name="f")
    return ConicSetup(k=k, grassmannian=g, conics=m, pointed_planes=h_space,
                      pointed_conics=mp, f=f, hyperplane=mp.lift(zeta_h),
                      F=big_f, W=w, conic_class=big_f.c(big_f.rank))


@functools.lru_cache(maxsize=None)
def _gw_conics_sorted(k: int, inc: Tuple[int, int, int]) -> int:
    setup = conic_setup(k)
    cls = setup.conic_class
    for a in inc:
        cls = cls * setup.incidence_class(a)
    return integrate(cls)


def gw_conics(k: int, a: int, b: int) -> int:
    """n^a_b(2) = int_M c_{2k+5}(F) f_*(h^a) f_*(h^b) f_*(h^c)."""
    return _gw_conics_sorted(k, _canonical(k, a, b))


def gw_to_curve_count(value: int, d: int, inc: Tuple[int, int, int]) -> int:
    """Divide out one factor of d per incidence index equal to 1."""
    divisor = d ** sum(1 for i in inc if i == 1)
    if value % divisor:
        raise DivisibilityError(f"{value} is not divisible by {divisor} = {d}^#(indices equal to 1)")
    return value // divisor


# ---------------------------------------------------------------------------
# request/response wrappers used by the CLI


@dataclass(frozen=True)
class InvariantRequest:
    family: str
    k: int
    incidence: Optional[Tuple[int, int, int]] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidIncidenceError(f"unknown family {self.family!r}")
        if self.family == "weighted-lines":
            if self.incidence is not None:
                raise InvalidIncidenceError("weighted lines take no incidence")
            if self.k not in (1, 2, 4):
                raise InvalidWeightError(
                    f"weight {self.k} is not allowed: it must divide {self.k + 4}")
        else:
            if self.incidence is None or len(self.incidence) != 3:
                raise InvalidIncidenceError("incidence must be a triple (a, b, c)")
            a, b, c = self.incidence
            if incidence(self.k, a, b) != (a, b, c):
                raise InvalidIncidenceError(f"a + b + c must equal k={self.k}")

    @property
    def degree(self) -> int:
        return 2 if self.family == "gw-conics" else 1


@dataclass(frozen=True)
class InvariantResult:
    request: InvariantRequest
    value: int
    curve_count: Optional[int]
    elapsed_ms: float


def evaluate(req: InvariantRequest) -> InvariantResult:
    start = time.perf_counter()
    if req.family == "weighted-lines":
        # weight 1 is the ordinary quintic in P^4
        value = lines_on_quintic() if req.k == 1 else weighted_lines_count(req.k)
        count: Optional[int] = value
    else:
        a, b, _ = req.incidence
        fn = gw_lines if req.family == "gw-lines" else gw_conics
        value = fn(req.k, a, b)
        count = gw_to_curve_count(value, req.degree, req.incidence)
    elapsed = (time.perf_counter() - start) * 1000.0
    return InvariantResult(req, value, count, round(elapsed, 3))


def clear_caches() -> None:
    """Drop every memoised space, class and invariant (used for cold timings)."""
    from . import bundles, symfunc

    for fn in (weighted_lines_count, _lines_setup, _gw_lines_sorted, conic_setup,
               _gw_conics_sorted, bundles.symmetric_power_universal, symfunc.schur_product,
               symfunc._expander):
        fn.cache_clear()
