import itertools
import math
import random

import pytest
import sympy

from chowring.bundles import (BundleClass, _multisets, direct_sum, dual, line_bundle,
                              quotient_chern, symmetric_power, symmetric_power_universal,
                              tensor_by_line, trivial)
from chowring.errors import DegreeError, RankError, UnsupportedRankError
from chowring.spaces import grassmannian, projective_bundle, projective_space, pull_to_total


@pytest.fixture(scope="module")
def g26():
    return grassmannian(2, 6)


def test_direct_sum_examples(g26):
    g, q = g26
    e = symmetric_power(3, q)
    s = direct_sum(trivial(g), e)
    assert s.rank == e.rank + 1 and s.chern == e.chern
    g4, q4 = grassmannian(2, 4)
    b = direct_sum(direct_sum(trivial(g4), symmetric_power(4, q4)), symmetric_power(8, q4))
    assert b.rank == 15


def test_whitney_on_line_bundles():
    # P^2 x-ish check: two line bundles on P^3
    p, h, _ = projective_space(3)
    l1, l2 = line_bundle(2 * h), line_bundle(-h)
    s = direct_sum(l1, l2)
    assert s.chern == (p.one() + 2 * h) * (p.one() - h)
    with pytest.raises(DegreeError):
        line_bundle(h * h)


def test_dual(g26):
    g, q = g26
    assert dual(q).chern == g.one() - g.sigma(1) + g.sigma(1, 1)
    e = symmetric_power(3, q)
    assert dual(dual(e)) == e
    assert dual(trivial(g, 4)) == trivial(g, 4)


def test_tensor_by_line_examples():
    p, h, _ = projective_space(4)
    assert tensor_by_line(line_bundle(2 * h), 3 * h).c(1) == 5 * h
    # rank 2: (1 + a + t)(1 + b + t)
    g, q = grassmannian(2, 6)
    m, zeta, _ = projective_bundle(g, q)
    qm = pull_to_total(q, m)
    t = zeta
    e = tensor_by_line(qm, t)
    assert e.c(1) == qm.c(1) + 2 * t
    assert e.c(2) == qm.c(2) + qm.c(1) * t + t * t
    assert tensor_by_line(qm, m.zero()) == qm


def test_tensor_by_line_rejects_non_divisor(g26):
    g, q = g26
    with pytest.raises(DegreeError):
        tensor_by_line(q, g.sigma(2))


def test_symmetric_square_rank_two():
    # oracle: roots {2a, a+b, 2b}, expanded with sympy and rewritten by hand
    a, b = sympy.symbols("a b")
    e1, e2 = a + b, a * b
    lhs = sympy.expand((1 + 2 * a) * (1 + a + b) * (1 + 2 * b))
    rhs = sympy.expand(1 + 3 * e1 + (2 * e1 ** 2 + 4 * e2) + 4 * e1 * e2)
    assert lhs == rhs
    g, q = grassmannian(2, 7)  # relations start in degree 6, beyond what we test
    c1, c2 = q.c(1), q.c(2)
    expected = g.one() + 3 * c1 + (2 * c1 * c1 + 4 * c2) + 4 * c1 * c2
    assert symmetric_power(2, q).chern == expected


def test_symmetric_power_basics(g26):
    g, q = g26
    assert symmetric_power(1, q) == q
    assert symmetric_power(8, q).rank == 9
    assert symmetric_power(2, grassmannian(3, 6)[1]).rank == 6
    with pytest.raises(UnsupportedRankError):
        symmetric_power(2, trivial(g, 4))


@pytest.mark.parametrize("k", range(1, 9))
def test_first_chern_class_of_symmetric_power(k):
    g, q = grassmannian(2, 8)
    assert symmetric_power(k, q).c(1) == (k * (k + 1) // 2) * q.c(1)


def _root_oracle(k, q, max_degree, roots):
    """Graded pieces of prod over multisets (1 + t * m.x) at integer roots."""
    coeffs = [1] + [0] * max_degree
    for m in _multisets(q, k):
        w = sum(mi * xi for mi, xi in zip(m, roots))
        coeffs = [coeffs[0]] + [coeffs[d] + w * coeffs[d - 1] for d in range(1, max_degree + 1)]
    return coeffs


def _elementary_values(roots):
    return [sum(math.prod(c) for c in itertools.combinations(roots, i))
            for i in range(1, len(roots) + 1)]


@pytest.mark.parametrize("q,k,max_degree", [(2, k, 2 * k + 3) for k in range(1, 9)]
                         + [(3, 1, 12), (3, 2, 12), (3, 12, 12)])
def test_symmetric_power_matches_root_oracle(q, k, max_degree):
    universal = symmetric_power_universal(k, q, max_degree)
    rng = random.Random(k * 10 + q)
    for _ in range(5):
        roots = [rng.randint(-7, 7) for _ in range(q)]
        evals = _elementary_values(roots)
        by_degree = [0] * (max_degree + 1)
        for exps, c in universal:
            deg = sum(i * e for i, e in enumerate(exps, start=1))
            by_degree[deg] += c * math.prod(v ** e for v, e in zip(evals, exps))
        assert by_degree == _root_oracle(k, q, max_degree, roots)


def test_quotient_examples(g26):
    g, q = g26
    s, t = symmetric_power(2, q), symmetric_power(3, q)
    assert quotient_chern(direct_sum(s, t), s) == t
    with pytest.raises(RankError):
        quotient_chern(q, s)


def test_whitney_for_quotients():
    g, q = grassmannian(3, 7)
    m, zeta, _ = projective_bundle(g, dual(symmetric_power(2, q)))
    big = pull_to_total(symmetric_power(4, q), m)
    sub = tensor_by_line(pull_to_total(symmetric_power(2, q), m), -zeta)
    quo = quotient_chern(big, sub)
    assert quo.rank == 15 - 6
    assert sub.chern * quo.chern == big.chern


def test_bundle_needs_unit_constant_term(g26):
    g, _ = g26
    with pytest.raises(ValueError):
        BundleClass(1, 2 * g.one())
