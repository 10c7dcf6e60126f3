import random
from fractions import Fraction

import pytest

from theta_dims import groups, oracle, perm
from theta_dims.errors import GeneratorsDontGenerate, TooLarge
from theta_dims.oracle import RationalMatrix
from theta_dims.perm import AUG_KERNEL, EVEN, FULL, GROUP_ALGEBRA, ODD, PI_PI


def test_orbit_cyclic_examples():
    assert oracle.dim_invariants_orbit(groups.make_cyclic(6), ODD, FULL, [1]) == 7
    assert oracle.dim_invariants_orbit(groups.make_cyclic(3), EVEN, FULL, [1]) == 0
    assert oracle.dim_invariants_orbit(groups.make_cyclic(7), ODD, FULL, [1]) == 8


def test_orbit_rejects_non_generating_set():
    with pytest.raises(GeneratorsDontGenerate):
        oracle.dim_invariants_orbit(groups.make_cyclic(6), ODD, FULL, [2])


def test_orbit_matches_perm_on_battery():
    for name, G in groups.battery_groups():
        for parity in (EVEN, ODD):
            for symmetry in (FULL, PI_PI):
                assert oracle.dim_invariants_orbit(G, parity, symmetry) == (
                    perm.dim_invariants_perm(G, GROUP_ALGEBRA, parity, symmetry)
                ), (name, parity, symmetry)


def test_orbit_generator_set_independence():
    for name, G in [("Z10", groups.make_cyclic(10)), ("D4", groups.make_permutation_group([(1, 2, 3, 0), (3, 2, 1, 0)])), ("SL2F3", groups.make_sl2(3))]:
        gens_small = groups.generating_set(G)
        gens_all = [g for g in range(G.order) if g != G.identity] or [G.identity]
        for parity in (EVEN, ODD):
            a = oracle.dim_invariants_orbit(G, parity, FULL, gens_small)
            b = oracle.dim_invariants_orbit(G, parity, FULL, gens_all)
            assert a == b, (name, parity)


def test_reynolds_examples():
    assert oracle.dim_invariants_reynolds(groups.make_cyclic(3), AUG_KERNEL, ODD) == 1
    assert oracle.dim_invariants_reynolds(groups.make_cyclic(6), AUG_KERNEL, ODD) == 3
    assert oracle.dim_invariants_reynolds(groups.make_cyclic(5), AUG_KERNEL, EVEN) == 0


def test_reynolds_size_guard():
    with pytest.raises(TooLarge):
        oracle.dim_invariants_reynolds(groups.make_cyclic(13), GROUP_ALGEBRA, ODD)
    # override raises the limit
    assert oracle.dim_invariants_reynolds(
        groups.make_cyclic(13), AUG_KERNEL, EVEN, order_limit=13
    ) == perm.dim_invariants_perm(groups.make_cyclic(13), AUG_KERNEL, EVEN, FULL)


def test_reynolds_matches_perm_small_battery():
    for name, G in groups.battery_groups():
        if G.order > 8:
            continue
        for module in (GROUP_ALGEBRA, AUG_KERNEL):
            for parity in (EVEN, ODD):
                assert oracle.dim_invariants_reynolds(G, module, parity) == (
                    perm.dim_invariants_perm(G, module, parity, FULL)
                ), (name, module, parity)


def test_build_module_actions_shapes():
    mats, dim = oracle.build_module_actions(groups.make_cyclic(2), GROUP_ALGEBRA, ODD)
    assert len(mats) == 8 and dim == 4
    assert all(m.dimension == 4 for m in mats)
    mats, dim = oracle.build_module_actions(groups.make_cyclic(4), AUG_KERNEL, EVEN)
    assert len(mats) == 32 and dim == 1
    with pytest.raises(TooLarge):
        oracle.build_module_actions(groups.make_cyclic(13), GROUP_ALGEBRA, ODD)


def test_identity_element_acts_as_identity_matrix():
    G = groups.make_cyclic(3)
    mats, dim = oracle.build_module_actions(G, AUG_KERNEL, ODD)
    eye = RationalMatrix([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])
    assert mats[0] == eye  # untwisted (0, 0) is the identity for a cyclic group


def test_action_matrices_multiply_like_the_group():
    G = groups.make_cyclic(3)
    mats, dim = oracle.build_module_actions(G, GROUP_ALGEBRA, EVEN)
    elements = [
        perm.CosetElement(twisted, g, h)
        for twisted in (False, True)
        for g in range(3)
        for h in range(3)
    ]
    lookup = dict(zip(elements, mats))
    rng = random.Random(6)
    for _ in range(20):
        s, t = rng.choice(elements), rng.choice(elements)
        assert lookup[s].matmul(lookup[t]) == lookup[perm.compose(G, s, t)]


def brute_rank_over_q(rows):
    m = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def test_rational_matrix_rank_against_gaussian_oracle():
    rng = random.Random(11)
    for trial in range(40):
        n = rng.randint(1, 7)
        rows = [
            [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
            for _ in range(n)
        ]
        assert RationalMatrix(rows).rank() == brute_rank_over_q(rows)


def test_rational_matrix_trace_and_shape_guard():
    m = RationalMatrix([[1, 2], [3, 4]])
    assert m.trace() == 5
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])
