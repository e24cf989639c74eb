import random

import pytest

from chowring import linalg
from chowring.chow import (ChowClass, Morphism, gram_matrix, integrate, multiply,
                           pullback_apply, pushforward_dual_basis)
from chowring.errors import (DegreeError, IntegralityError, InvalidInputError,
                             SpaceMismatchError)
from chowring.invariants import conic_setup
from chowring.spaces import grassmannian, projective_bundle, projective_space


@pytest.fixture(scope="module")
def g24():
    return grassmannian(2, 4)[0]


def test_multiply_examples(g24):
    s1 = g24.sigma(1)
    assert s1 * s1 == g24.sigma(2) + g24.sigma(1, 1)
    x = g24.sigma(2, 1) + 3 * g24.sigma(1)
    assert g24.one() * x == x
    # codim 3 times codim 2 exceeds dim 4
    assert not multiply(g24.sigma(2, 1), g24.sigma(2))


def test_multiply_space_mismatch(g24):
    other = grassmannian(2, 5)[0]
    with pytest.raises(SpaceMismatchError):
        g24.sigma(1) * other.sigma(1)


def test_integrate_examples(g24):
    assert integrate(g24.sigma(2, 2)) == 1
    assert integrate(g24.sigma(1) ** 4) == 2
    with pytest.raises(DegreeError):
        integrate(g24.sigma(1))
    with pytest.raises(DegreeError):
        integrate(g24.sigma(2, 2) + g24.sigma(1))


def test_gram_examples(g24):
    assert gram_matrix(g24, 2) == [[1, 0], [0, 1]]
    assert gram_matrix(g24, 0) == [[1]]
    p3, h, _ = projective_space(3)
    assert gram_matrix(p3, 1) == [[1]]
    assert integrate(h ** 3) == 1
    with pytest.raises(InvalidInputError):
        gram_matrix(g24, 5)


def test_integrate_is_symmetric_and_multilinear():
    g = grassmannian(3, 6)[0]
    rng = random.Random(1)
    for _ in range(20):
        d1, d2 = rng.randint(0, 9), rng.randint(0, 9)
        d3 = 9 - d1 - d2
        if d3 < 0:
            continue
        x, y, z = (ChowClass(g, {b: rng.randint(-5, 5) for b in g.basis(d)}) for d in (d1, d2, d3))
        assert integrate(x * y * z) == integrate(z * x * y) == integrate(y * z * x)
        y2 = ChowClass(g, {b: rng.randint(-5, 5) for b in g.basis(d2)})
        assert integrate(x * (y + 3 * y2) * z) == integrate(x * y * z) + 3 * integrate(x * y2 * z)


# --- morphisms on the pointed-conic tower ---------------------------------------

@pytest.fixture(scope="module")
def conics4():
    return conic_setup(4)


def test_pullback_examples(conics4):
    f, m, mp = conics4.f, conics4.conics, conics4.pointed_conics
    assert pullback_apply(f, m.one()) == mp.one()
    assert pullback_apply(f, m.zeta) == mp.zeta
    assert all(not r for r in f.relation_images())
    with pytest.raises(SpaceMismatchError):
        pullback_apply(f, mp.one())


def test_pullback_is_ring_map(conics4):
    f, m = conics4.f, conics4.conics
    rng = random.Random(2)
    labels = m.full_basis()
    for _ in range(20):
        x = m.element(rng.choice(labels))
        y = m.element(rng.choice(labels))
        assert pullback_apply(f, x * y) == pullback_apply(f, x) * pullback_apply(f, y)


def test_pushforward_examples(conics4):
    f, m, mp = conics4.f, conics4.conics, conics4.pointed_conics
    assert pushforward_dual_basis(f, conics4.hyperplane) == 2 * m.one()
    assert not pushforward_dual_basis(f, mp.one())


def test_projection_formula(conics4):
    f, m, mp = conics4.f, conics4.conics, conics4.pointed_conics
    rng = random.Random(3)
    for _ in range(20):
        p = rng.randint(1, mp.dim)
        alpha = mp.element(rng.choice(mp.basis(p)))
        beta_codim = m.dim - (p - 1)
        if not 0 <= beta_codim <= m.dim:
            continue
        beta = m.element(rng.choice(m.basis(beta_codim)))
        lhs = integrate(pushforward_dual_basis(f, alpha) * beta)
        rhs = integrate(alpha * pullback_apply(f, beta))
        assert lhs == rhs


def test_pushforward_along_bundle_projection():
    g, q = grassmannian(2, 5)
    p, zeta, pi = projective_bundle(g, q)
    assert pushforward_dual_basis(pi, zeta ** (p.rank - 1)) == g.one()
    assert not pushforward_dual_basis(pi, p.one())
    # dual-basis pushforward agrees with fibre-coefficient extraction
    for label in p.basis(4):
        x = p.element(label) * zeta
        assert pushforward_dual_basis(pi, x) == p.fiber_integral(x)


def test_tower_integration_both_orders():
    g, q = grassmannian(2, 4)
    p, zeta, pi = projective_bundle(g, q)
    for label in p.basis(p.dim):
        x = p.element(label)
        assert integrate(x) == integrate(p.fiber_integral(x))
        assert integrate(x) == integrate(pushforward_dual_basis(pi, x))


def test_morphism_needs_all_generator_images(conics4):
    with pytest.raises(InvalidInputError):
        Morphism(conics4.pointed_conics, conics4.conics, [conics4.pointed_conics.zeta])


# --- exact linear algebra ------------------------------------------------------------

def test_linalg():
    assert linalg.det([[2, 1], [1, 1]]) == 1
    assert linalg.det([[0, 1], [1, 0]]) == -1
    assert linalg.det([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0
    assert linalg.solve_integral([[2, 1], [1, 1]], [3, 2]) == [1, 1]
    with pytest.raises(IntegralityError):
        linalg.solve_integral([[2]], [1])
