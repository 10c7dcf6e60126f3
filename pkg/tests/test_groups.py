import itertools
import json
import random

import numpy as np
import pytest

from theta_dims import groups
from theta_dims.errors import FixtureMismatch, NotAGroup, TooLarge

# latin square with identity 0 and two-sided inverses that is not associative:
# (1*1)*2 = 2 but 1*(1*2) = 4
NONASSOC_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def brute_sl2_order(p):
    return sum(
        1
        for a, b, c, d in itertools.product(range(p), repeat=4)
        if (a * d - b * c) % p == 1
    )


def brute_class_sizes(G):
    n = G.order
    left = set(range(n))
    sizes = []
    while left:
        g = min(left)
        cls = {G.mul(G.mul(h, g), G.inv(h)) for h in range(n)}
        sizes.append(len(cls))
        left -= cls
    return sorted(sizes)


def s3_cayley_table():
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    return [
        [index[tuple(a[b[i]] for i in range(3))] for b in perms]
        for a in perms
    ]


def test_make_cyclic_basics():
    G1 = groups.make_cyclic(1)
    assert G1.order == 1 and G1.identity == 0
    G6 = groups.make_cyclic(6)
    assert G6.inv(2) == 4
    assert groups.conjugacy_classes(groups.make_cyclic(15)).num_classes == 15
    with pytest.raises(ValueError):
        groups.make_cyclic(0)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_make_sl2_order_matches_brute_enumeration(p):
    assert groups.make_sl2(p).order == brute_sl2_order(p)


def test_make_sl2_rejects_bad_p():
    for p in (4, 17, 1):
        with pytest.raises(ValueError):
            groups.make_sl2(p)


@pytest.mark.parametrize("p", [7, 11, 13])
def test_make_sl2_larger_primes(p):
    G = groups.make_sl2(p)
    assert G.order == p * (p * p - 1)
    # for odd p the class count is p + 4
    assert groups.conjugacy_classes(G).num_classes == p + 4
    if p == 7:
        groups.validate_group(G)


def test_constructed_groups_satisfy_axioms():
    for name, G in groups.battery_groups():
        groups.validate_group(G)
    groups.validate_group(groups.make_sl2(5))


def test_make_from_cayley_trivial_and_s3():
    assert groups.make_from_cayley([[0]]).order == 1
    S3 = groups.make_from_cayley(s3_cayley_table())
    assert S3.order == 6
    cd = groups.conjugacy_classes(S3)
    assert cd.num_classes == 3
    assert sorted(cd.sizes) == brute_class_sizes(S3) == [1, 2, 3]


def test_make_from_cayley_rejections():
    with pytest.raises(NotAGroup, match="associativity.*witness"):
        groups.make_from_cayley(NONASSOC_LOOP)
    with pytest.raises(NotAGroup, match="identity"):
        groups.make_from_cayley([[0, 0], [0, 0]])
    with pytest.raises(NotAGroup, match="square"):
        groups.make_from_cayley([[0, 1]])
    with pytest.raises(NotAGroup):
        groups.make_from_cayley([[0, 7], [1, 0]])


def test_direct_product_small():
    V4 = groups.make_direct_product(groups.make_cyclic(2), groups.make_cyclic(2))
    assert V4.order == 4
    assert all(V4.mul(x, x) == V4.identity for x in range(4))
    G36 = groups.make_direct_product(groups.make_cyclic(6), groups.make_cyclic(6))
    assert G36.order == 36
    groups.validate_group(G36)
    with pytest.raises(TooLarge):
        big = groups.make_cyclic(2048)
        groups.make_direct_product(big, big)


def test_direct_product_sl2f5_square():
    G = groups.make_sl2(5)
    GG = groups.make_direct_product(G, G)
    assert GG.order == 14400
    n = GG.order
    idx = np.arange(n)
    assert (GG.mul_table[GG.identity] == idx).all()
    assert (GG.mul_table[idx, GG.inv_table] == GG.identity).all()
    # spot-check products against the factorwise definition
    rng = random.Random(1)
    for _ in range(50):
        a, b = rng.randrange(n), rng.randrange(n)
        ga, ha = divmod(a, 120)
        gb, hb = divmod(b, 120)
        assert GG.mul(a, b) == G.mul(ga, gb) * 120 + G.mul(ha, hb)


def test_pow():
    G6 = groups.make_cyclic(6)
    assert G6.pow(5, 3) == 3
    assert G6.pow(G6.identity, 12345) == G6.identity
    G = groups.make_sl2(5)
    mats = groups.sl2_matrices(5)
    alpha = mats.index((2, 0, 0, 3))
    minus_i = mats.index((4, 0, 0, 4))
    cd = groups.conjugacy_classes(G)
    assert cd.class_of[G.pow(alpha, 2)] == cd.class_of[minus_i]


def test_conjugacy_classes_sl2f5():
    cd = groups.conjugacy_classes(groups.make_sl2(5))
    assert cd.num_classes == 9
    assert sorted(cd.sizes) == [1, 1, 12, 12, 12, 12, 20, 20, 30]
    assert sum(cd.sizes) == 120
    assert all(120 % s == 0 for s in cd.sizes)


def test_conjugacy_invariant_under_relabeling():
    rng = random.Random(7)
    for name, G in [("S3", groups.make_from_cayley(s3_cayley_table())), ("Q8", groups.make_quaternion8())]:
        base = sorted(groups.conjugacy_classes(G).sizes)
        a = rng.randrange(G.order)
        relabeled = G.conjugate_by(a)
        groups.validate_group(relabeled)
        assert sorted(groups.conjugacy_classes(relabeled).sizes) == base


def test_class_power_map_well_defined():
    for name, G in groups.battery_groups():
        cd = groups.conjugacy_classes(G)
        for k in (2, 3, 5):
            mapping = groups.class_power_map(G, cd, k)
            for g in range(G.order):
                assert cd.class_of[G.pow(g, k)] == mapping[cd.class_of[g]]


def test_class_power_map_rejects_small_k():
    G = groups.make_cyclic(4)
    with pytest.raises(ValueError):
        groups.class_power_map(G, groups.conjugacy_classes(G), 1)


def test_class_power_map_z5():
    G = groups.make_cyclic(5)
    cd = groups.conjugacy_classes(G)
    mapping = groups.class_power_map(G, cd, 2)
    assert mapping[cd.class_of[1]] == cd.class_of[2]


def test_inversion_on_classes():
    G = groups.make_sl2(5)
    perm, orbits = groups.inversion_on_classes(G, groups.conjugacy_classes(G))
    assert perm == tuple(range(9)) and orbits == 9

    Z5 = groups.make_cyclic(5)
    perm, orbits = groups.inversion_on_classes(Z5, groups.conjugacy_classes(Z5))
    assert perm == (0, 4, 3, 2, 1) and orbits == 3

    Z4 = groups.make_cyclic(4)
    perm, orbits = groups.inversion_on_classes(Z4, groups.conjugacy_classes(Z4))
    assert perm == (0, 3, 2, 1) and orbits == 3


def test_inversion_orbit_count_cyclic():
    for n in range(1, 25):
        G = groups.make_cyclic(n)
        _, orbits = groups.inversion_on_classes(G, groups.conjugacy_classes(G))
        assert orbits == n // 2 + 1


def test_inversion_consistent_with_elements():
    for name, G in groups.battery_groups():
        cd = groups.conjugacy_classes(G)
        perm, _ = groups.inversion_on_classes(G, cd)
        for g in range(G.order):
            assert cd.class_of[G.inv(g)] == perm[cd.class_of[g]]


def test_fixture_clean():
    G = groups.make_sl2(5)
    fx = groups.load_sl2_fixture()
    assert len(fx.matrices) == 120
    report = groups.verify_sl2f5_fixture(G, fx)
    assert report.ok


def test_fixture_single_relabel():
    G = groups.make_sl2(5)
    fx = groups.load_sl2_fixture()
    labels = list(fx.class_labels)
    g1 = fx.names.index("g1")
    labels[g1] = "c4"
    bad = groups.Sl2Fixture(fx.prime, fx.names, fx.matrices, tuple(labels))
    report = groups.verify_sl2f5_fixture(G, bad)
    assert len(report.mismatches) == 1
    assert "g1" in report.mismatches[0]


def test_fixture_missing_element():
    G = groups.make_sl2(5)
    fx = groups.load_sl2_fixture()
    bad = groups.Sl2Fixture(fx.prime, fx.names[:-1], fx.matrices[:-1], fx.class_labels[:-1])
    with pytest.raises(FixtureMismatch, match="119"):
        groups.verify_sl2f5_fixture(G, bad)


def test_fixture_duplicate_matrix():
    G = groups.make_sl2(5)
    fx = groups.load_sl2_fixture()
    mats = list(fx.matrices)
    mats[1] = mats[0]
    bad = groups.Sl2Fixture(fx.prime, fx.names, tuple(mats), fx.class_labels)
    with pytest.raises(FixtureMismatch, match="bijection"):
        groups.verify_sl2f5_fixture(G, bad)


def test_fixture_bad_determinant(tmp_path):
    raw = json.loads(groups.default_fixture_path().read_text())
    raw["elements"][0]["matrix"] = [[1, 1], [1, 1]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(raw))
    fx = groups.load_sl2_fixture(path)
    with pytest.raises(FixtureMismatch, match="determinant"):
        groups.verify_sl2f5_fixture(groups.make_sl2(5), fx)


def test_generating_set():
    for name, G in groups.battery_groups():
        gens = groups.generating_set(G)
        assert len(gens) <= 3
    assert groups.generating_set(groups.make_cyclic(1)) == []
