import random

import pytest

from chowring import linalg
from chowring.bundles import direct_sum, dual, symmetric_power, tensor_by_line, trivial
from chowring.chow import ChowClass, gram_matrix, integrate
from chowring.errors import SpaceMismatchError, UnsupportedRankError
from chowring.invariants import conic_setup
from chowring.spaces import (Grassmannian, grassmannian, projective_bundle,
                             projective_space, pull_to_total, tautological_sub_line)


def test_grassmannian_basics():
    g, q = grassmannian(2, 4)
    assert g.dim == 4
    assert len(g.full_basis()) == 6
    assert q.c(1) == g.sigma(1)
    assert q.c(2) == g.sigma(1, 1)
    with pytest.raises(UnsupportedRankError):
        grassmannian(4, 6)


def test_quintic_lines():
    g, q = grassmannian(2, 5)
    assert integrate(symmetric_power(5, q).c(6)) == 2875


def test_spaces_built_twice_are_equal():
    assert Grassmannian(3, 7) == Grassmannian(3, 7)
    a = projective_bundle(*grassmannian(2, 4))[0]
    b = projective_bundle(*grassmannian(2, 4))[0]
    assert a == b and a.basis(3) == b.basis(3)


def test_projective_space():
    p, h, pi = projective_space(4)
    assert p.dim == 4
    assert not h ** 5
    assert integrate(h ** 4) == 1
    for j in range(4):
        assert not p.fiber_integral(h ** j)


def test_weighted_lines_space_dimension():
    g, q = grassmannian(2, 4)
    m, _, _ = projective_bundle(g, dual(direct_sum(trivial(g), symmetric_power(4, q))))
    assert m.dim == 9


@pytest.mark.parametrize("k", [3, 4, 5])
def test_dimension_bookkeeping(k):
    s = conic_setup(k)
    gdim = 3 * (k - 1)
    assert s.grassmannian.dim == gdim
    assert s.conics.dim == gdim + 5 == 3 * k + 2
    assert s.pointed_planes.dim == gdim + 2
    assert s.pointed_conics.dim == s.pointed_planes.dim + 4


def _grothendieck_residual(p):
    zeta = p.zeta
    r = p.rank
    total = p.zero()
    for i in range(r + 1):
        term = p.lift(p.bundle.c(i)) * zeta ** (r - i)
        total = total + term if i % 2 == 0 else total - term
    return total


def test_grothendieck_relation_residual():
    s = conic_setup(4)
    g, q = grassmannian(2, 5)
    towers = [s.conics, s.pointed_planes, s.pointed_conics,
              projective_bundle(g, dual(symmetric_power(3, q)))[0]]
    for p in towers:
        assert not _grothendieck_residual(p)


def test_fiber_base_factorisation():
    g, q = grassmannian(3, 6)
    p, zeta, pi = projective_bundle(g, dual(symmetric_power(2, q)))
    rng = random.Random(4)
    for _ in range(15):
        alpha = ChowClass(g, {b: rng.randint(-9, 9) for b in g.basis(g.dim)})
        assert integrate(p.lift(alpha) * zeta ** (p.rank - 1)) == integrate(alpha)


def test_fiber_normalisation():
    g, q = grassmannian(2, 6)
    for e in (q, dual(symmetric_power(3, q)), symmetric_power(2, q)):
        p, zeta, _ = projective_bundle(g, e)
        assert p.fiber_integral(zeta ** (p.rank - 1)) == g.one()


def test_pull_to_total():
    s = conic_setup(3)
    g, q = s.grassmannian, s.grassmannian.tautological_quotient()
    on_m = pull_to_total(q, s.conics)
    assert on_m.rank == 3
    assert on_m.c(2) == s.conics.lift(q.c(2))
    two_levels = pull_to_total(q, s.pointed_conics)
    assert two_levels.chern == s.pointed_conics.lift(pull_to_total(q, s.pointed_planes).chern)
    assert on_m.chern * s.conics.one() == on_m.chern
    with pytest.raises(SpaceMismatchError):
        pull_to_total(pull_to_total(q, s.pointed_planes), s.conics)


def test_tautological_sub_line():
    g, q = grassmannian(3, 5)
    m, zeta, _ = projective_bundle(g, dual(symmetric_power(2, q)))
    o_minus = tautological_sub_line(m)
    assert o_minus.c(1) == -zeta
    assert tensor_by_line(o_minus, zeta) == trivial(m)
    assert tensor_by_line(pull_to_total(symmetric_power(2, q), m), -zeta).rank == 6


@pytest.mark.parametrize("q,n", [(2, n) for n in range(3, 9)] + [(3, n) for n in range(4, 10)])
def test_grassmannian_poincare_duality(q, n):
    g = grassmannian(q, n)[0]
    for d in range(g.dim + 1):
        assert len(g.basis(d)) == len(g.basis(g.dim - d))
        assert linalg.det(gram_matrix(g, d)) in (1, -1)
