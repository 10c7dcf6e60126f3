"""Finite groups as dense index tables, with conjugacy structure.

Elements are dense integer indices 0..n-1 and the product is a flat n x n
lookup table. Class indices are ordered by smallest member, so every
derived quantity is deterministic across runs and platforms.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import FixtureMismatch, NotAGroup, TooLarge

EXHAUSTIVE_ASSOC_LIMIT = 64  # above this, associativity is spot-checked
ASSOC_SAMPLE_FACTOR = 10  # sampled triples >= factor * n^2
DIRECT_PRODUCT_LIMIT = 1 << 20

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def _index_dtype(n: int) -> type:
    if n <= 0xFF:
        return np.uint8
    if n <= 0xFFFF:
        return np.uint16
    return np.uint32


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group on indices 0..order-1 with full lookup tables."""

    mul_table: np.ndarray  # shape (n, n)
    inv_table: np.ndarray  # shape (n,)
    identity: int
    labels: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return self.mul_table.shape[0]

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inv_table[x])

    def pow(self, g: int, k: int) -> int:
        """g**k by repeated squaring; k >= 0."""
        if k < 0:
            raise ValueError(f"exponent must be nonnegative, got {k}")
        acc = self.identity
        base = int(g)
        while k:
            if k & 1:
                acc = int(self.mul_table[acc, base])
            base = int(self.mul_table[base, base])
            k >>= 1
        return acc

    def label(self, x: int) -> str:
        if self.labels is None:
            return str(int(x))
        return self.labels[int(x)]

    def conjugate_by(self, a: int) -> "GroupTable":
        """The same group with elements relabeled by x -> a x a^-1."""
        n = self.order
        p = self.mul_table[self.mul_table[a], self.inv_table[a]]
        pinv = np.empty(n, dtype=p.dtype)
        pinv[p] = np.arange(n, dtype=p.dtype)
        mul = p[self.mul_table[np.ix_(pinv, pinv)]]
        inv = p[self.inv_table[pinv]]
        return GroupTable(_freeze(mul), _freeze(inv), int(p[self.identity]))


@dataclass(frozen=True, eq=False)
class ConjugacyData:
    """Partition of a group into conjugacy classes, ordered by class minimum."""

    class_of: np.ndarray  # element index -> class index
    reps: tuple[int, ...]  # smallest member of each class
    sizes: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.reps)


def _require_valid_index_table(rows) -> np.ndarray:
    arr = np.asarray(rows)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotAGroup(f"table must be square and nonempty, got shape {arr.shape}")
    n = arr.shape[0]
    if not np.issubdtype(arr.dtype, np.integer):
        raise NotAGroup("table entries must be integers")
    if arr.min() < 0 or arr.max() >= n:
        raise NotAGroup(f"table entries must lie in 0..{n - 1}")
    return arr.astype(_index_dtype(n))


def _check_associativity(mul: np.ndarray, rng_seed: int = 0) -> None:
    n = mul.shape[0]
    if n <= EXHAUSTIVE_ASSOC_LIMIT:
        left = mul[mul]  # left[x, y, z] = (x*y)*z
        right = mul[:, mul]  # right[x, y, z] = x*(y*z)
        if not np.array_equal(left, right):
            x, y, z = (int(v) for v in np.argwhere(left != right)[0])
            raise NotAGroup(f"associativity fails at witness triple ({x}, {y}, {z})")
        return
    rng = np.random.default_rng(rng_seed)
    count = ASSOC_SAMPLE_FACTOR * n * n
    for start in range(0, count, 1 << 20):
        m = min(1 << 20, count - start)
        x = rng.integers(0, n, size=m)
        y = rng.integers(0, n, size=m)
        z = rng.integers(0, n, size=m)
        bad = mul[mul[x, y], z] != mul[x, mul[y, z]]
        if bad.any():
            i = int(np.argmax(bad))
            raise NotAGroup(
                f"associativity fails at witness triple ({int(x[i])}, {int(y[i])}, {int(z[i])})"
            )


def validate_group(G: GroupTable, rng_seed: int = 0) -> None:
    """Check identity, inverse and associativity laws; raise NotAGroup on failure.

    Associativity is exhaustive up to order 64, sampled (>= 10 n^2 random
    triples) above that.
    """
    mul, inv, e = G.mul_table, G.inv_table, G.identity
    n = G.order
    idx = np.arange(n)
    if not (np.array_equal(mul[e], idx) and np.array_equal(mul[:, e], idx)):
        raise NotAGroup(f"element {e} is not a two-sided identity")
    bad = (mul[idx, inv] != e) | (mul[inv, idx] != e)
    if bad.any():
        raise NotAGroup(f"element {int(np.argmax(bad))} has no two-sided inverse")
    _check_associativity(mul, rng_seed)


def make_cyclic(n: int) -> GroupTable:
    """The cyclic group of order n, written additively: mul(i, j) = (i+j) mod n."""
    if n < 1:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    idx = np.arange(n)
    mul = (idx[:, None] + idx[None, :]) % n
    inv = (-idx) % n
    dt = _index_dtype(n)
    return GroupTable(_freeze(mul.astype(dt)), _freeze(inv.astype(dt)), 0)


def sl2_matrices(p: int) -> list[tuple[int, int, int, int]]:
    """All (a, b, c, d) with ad - bc = 1 mod p, in lexicographic order."""
    out = []
    for a, b, c in itertools.product(range(p), repeat=3):
        if a == 0:
            if b == 0:
                continue
            # -bc = 1 fixes c; d is free
            if (-b * c) % p == 1:
                out.extend((a, b, c, d) for d in range(p))
        else:
            d = (1 + b * c) * pow(a, -1, p) % p
            out.append((a, b, c, d))
    # itertools order above is lex on (a, b, c); within a block d ascends or is
    # determined, so the full list is lex on (a, b, c, d) already
    return out


def make_sl2(p: int) -> GroupTable:
    """2x2 determinant-1 matrices over F_p, enumerated lexicographically."""
    if p not in _SMALL_PRIMES:
        raise ValueError(f"p must be a prime <= 13, got {p}")
    mats = sl2_matrices(p)
    n = len(mats)
    assert n == p * (p * p - 1)
    index = {m: i for i, m in enumerate(mats)}
    arr = np.array(mats, dtype=np.int64)
    a, b, c, d = arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]
    dt = _index_dtype(n)
    mul = np.empty((n, n), dtype=dt)
    for i, (ai, bi, ci, di) in enumerate(mats):
        pa = (ai * a + bi * c) % p
        pb = (ai * b + bi * d) % p
        pc = (ci * a + di * c) % p
        pd = (ci * b + di * d) % p
        mul[i] = [index[key] for key in zip(pa.tolist(), pb.tolist(), pc.tolist(), pd.tolist())]
    inv = np.array([index[(di, (-bi) % p, (-ci) % p, ai)] for ai, bi, ci, di in mats], dtype=dt)
    e = index[(1, 0, 0, 1)]
    labels = tuple(f"[{ai},{bi};{ci},{di}]" for ai, bi, ci, di in mats)
    return GroupTable(_freeze(mul), _freeze(inv), e, labels)


def make_from_cayley(rows, labels: tuple[str, ...] | None = None) -> GroupTable:
    """Build and fully validate a group from an untrusted multiplication table."""
    mul = _require_valid_index_table(rows)
    n = mul.shape[0]
    idx = np.arange(n)
    identity = None
    for e in range(n):
        if np.array_equal(mul[e], idx) and np.array_equal(mul[:, e], idx):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no two-sided identity element")
    inv = np.empty(n, dtype=mul.dtype)
    for x in range(n):
        ys = np.flatnonzero(mul[x] == identity)
        if len(ys) != 1 or mul[ys[0], x] != identity:
            raise NotAGroup(f"element {x} has no two-sided inverse")
        inv[x] = ys[0]
    _check_associativity(mul)
    return GroupTable(_freeze(mul), _freeze(inv), identity, labels)


def make_direct_product(G: GroupTable, H: GroupTable) -> GroupTable:
    """Componentwise product on pairs encoded as i*|H| + j."""
    nG, nH = G.order, H.order
    n = nG * nH
    if n > DIRECT_PRODUCT_LIMIT:
        raise TooLarge(f"direct product order {n} exceeds {DIRECT_PRODUCT_LIMIT}")
    dt = _index_dtype(n)
    q = np.arange(n) // nH
    r = np.arange(n) % nH
    mul = np.empty((n, n), dtype=dt)
    gmul = G.mul_table.astype(np.int64)
    hmul = H.mul_table.astype(np.int64)
    for i in range(n):  # row-blocked to keep peak memory at one extra row
        mul[i] = gmul[q[i], q] * nH + hmul[r[i], r]
    inv = (G.inv_table.astype(np.int64)[q] * nH + H.inv_table.astype(np.int64)[r]).astype(dt)
    e = G.identity * nH + H.identity
    labels = None
    if G.labels is not None and H.labels is not None:
        labels = tuple(f"({G.labels[a]},{H.labels[b]})" for a, b in zip(q.tolist(), r.tolist()))
    return GroupTable(_freeze(mul), _freeze(inv), e, labels)


def make_permutation_group(generators: list[tuple[int, ...]]) -> GroupTable:
    """Close a set of permutations under composition and build the Cayley table.

    Elements are ordered lexicographically as permutation tuples.
    """
    if not generators:
        raise ValueError("need at least one generator")
    m = len(generators[0])
    ident = tuple(range(m))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = tuple(g[p[i]] for i in range(m))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    elems = sorted(seen)
    index = {p: i for i, p in enumerate(elems)}
    rows = [
        [index[tuple(a[b[i]] for i in range(m))] for b in elems]
        for a in elems
    ]
    labels = tuple("".join(map(str, p)) if m <= 10 else str(p) for p in elems)
    return make_from_cayley(rows, labels)


def conjugacy_classes(G: GroupTable) -> ConjugacyData:
    """Conjugacy classes by orbit closure, indexed by smallest representative."""
    n = G.order
    mul, inv = G.mul_table, G.inv_table
    all_h = np.arange(n)
    class_of = np.full(n, -1, dtype=np.int32)
    reps: list[int] = []
    sizes: list[int] = []
    for g in range(n):
        if class_of[g] >= 0:
            continue
        members = np.unique(mul[mul[all_h, g], inv[all_h]])
        class_of[members] = len(reps)
        reps.append(g)
        sizes.append(len(members))
    return ConjugacyData(_freeze(class_of), tuple(reps), tuple(sizes))


def class_power_map(G: GroupTable, cd: ConjugacyData, k: int) -> tuple[int, ...]:
    """For each class [r], the class of r**k. Well-defined for any k >= 2."""
    if k < 2:
        raise ValueError(f"power map needs k >= 2, got {k}")
    return tuple(int(cd.class_of[G.pow(r, k)]) for r in cd.reps)


def inversion_on_classes(G: GroupTable, cd: ConjugacyData) -> tuple[tuple[int, ...], int]:
    """The involution [x] -> [x^-1] on classes, and its orbit count."""
    perm = tuple(int(cd.class_of[G.inv(r)]) for r in cd.reps)
    orbit_count = sum(1 for c, t in enumerate(perm) if t >= c)
    return perm, orbit_count


def generating_set(G: GroupTable) -> list[int]:
    """A small generating set, chosen greedily by ascending element index."""
    n = G.order
    gens: list[int] = []
    closure = {G.identity}
    for g in range(n):
        if len(closure) == n:
            break
        if g in closure:
            continue
        gens.append(g)
        frontier = list(closure)
        closure.add(g)
        frontier.append(g)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    for y in (G.mul(x, s), G.mul(s, x)):
                        if y not in closure:
                            closure.add(y)
                            nxt.append(y)
            frontier = nxt
    return gens


# -- reference data for SL2(F5) ------------------------------------------------


@dataclass(frozen=True)
class Sl2Fixture:
    """Reference list of all elements of SL2(F_p) with expected class labels."""

    prime: int
    names: tuple[str, ...]
    matrices: tuple[tuple[int, int, int, int], ...]
    class_labels: tuple[str, ...]


@dataclass(frozen=True)
class FixtureReport:
    """Outcome of checking a fixture against the constructed group."""

    mismatches: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.mismatches


def default_fixture_path() -> Path:
    return Path(__file__).parent / "data" / "sl2f5_elements.json"


def load_sl2_fixture(path: str | Path | None = None) -> Sl2Fixture:
    """Load an element fixture file ({prime, elements:[{name, matrix, class}]})."""
    raw = json.loads(Path(path or default_fixture_path()).read_text())
    p = int(raw["prime"])
    names, mats, labels = [], [], []
    for rec in raw["elements"]:
        (a, b), (c, d) = rec["matrix"]
        names.append(str(rec["name"]))
        mats.append((int(a), int(b), int(c), int(d)))
        labels.append(str(rec["class"]))
    return Sl2Fixture(p, tuple(names), tuple(mats), tuple(labels))


def verify_sl2f5_fixture(G: GroupTable, fx: Sl2Fixture) -> FixtureReport:
    """Check the fixture against G = make_sl2(fx.prime).

    Structural failures (wrong cardinality, bad determinants, no bijection
    with the enumerated elements) raise FixtureMismatch. Per-element class
    disagreements are collected in the returned report.
    """
    p = fx.prime
    expected = sl2_matrices(p)
    if G.order != len(expected):
        raise FixtureMismatch(f"group order {G.order} != {len(expected)}")
    if len(fx.matrices) != len(expected):
        raise FixtureMismatch(
            f"fixture lists {len(fx.matrices)} elements, expected {len(expected)}"
        )
    for name, (a, b, c, d) in zip(fx.names, fx.matrices):
        if (a * d - b * c) % p != 1:
            raise FixtureMismatch(f"{name} has determinant != 1 mod {p}")
    index = {m: i for i, m in enumerate(expected)}
    if set(fx.matrices) != set(index):
        missing = sorted(set(index) - set(fx.matrices))[:3]
        raise FixtureMismatch(f"fixture is not a bijection; e.g. missing {missing}")

    cd = conjugacy_classes(G)
    # pick the label <-> computed-class correspondence by majority vote, then
    # flag the elements that disagree with it
    votes: dict[str, Counter] = defaultdict(Counter)
    for mat, label in zip(fx.matrices, fx.class_labels):
        votes[label][int(cd.class_of[index[mat]])] += 1
    if len(votes) != cd.num_classes:
        raise FixtureMismatch(
            f"fixture names {len(votes)} classes, group has {cd.num_classes}"
        )
    label_class = {label: c.most_common(1)[0][0] for label, c in votes.items()}
    if len(set(label_class.values())) != cd.num_classes:
        raise FixtureMismatch("fixture labels do not separate the computed classes")
    class_label = {v: k for k, v in label_class.items()}
    mismatches = []
    for name, mat, label in zip(fx.names, fx.matrices, fx.class_labels):
        cidx = int(cd.class_of[index[mat]])
        if cidx != label_class[label]:
            mismatches.append(f"{name}: labeled {label}, computed class is {class_label[cidx]}")
    return FixtureReport(tuple(mismatches))


def fixture_class_order(G: GroupTable, fx: Sl2Fixture) -> dict[str, int]:
    """Map each fixture class label to the computed class index it names."""
    report = verify_sl2f5_fixture(G, fx)
    if not report.ok:
        raise FixtureMismatch("; ".join(report.mismatches))
    expected = sl2_matrices(fx.prime)
    index = {m: i for i, m in enumerate(expected)}
    cd = conjugacy_classes(G)
    return {
        label: int(cd.class_of[index[mat]])
        for mat, label in zip(fx.matrices, fx.class_labels)
    }


# -- standard test battery -----------------------------------------------------


def make_quaternion8() -> GroupTable:
    """The quaternion group {±1, ±i, ±j, ±k} of order 8."""
    # element = (axis, sign) with axes 1,i,j,k; index = axis*2 + (sign<0)
    prod = {
        (1, 1): (0, -1), (2, 2): (0, -1), (3, 3): (0, -1),
        (1, 2): (3, 1), (2, 1): (3, -1),
        (2, 3): (1, 1), (3, 2): (1, -1),
        (3, 1): (2, 1), (1, 3): (2, -1),
    }

    def axis_mul(x, y):
        if x == 0:
            return y, 1
        if y == 0:
            return x, 1
        return prod[(x, y)]

    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    rows = []
    for i in range(8):
        ax, sx = i // 2, -1 if i % 2 else 1
        row = []
        for j in range(8):
            ay, sy = j // 2, -1 if j % 2 else 1
            az, sz = axis_mul(ax, ay)
            s = sx * sy * sz
            row.append(az * 2 + (1 if s < 0 else 0))
        rows.append(row)
    return make_from_cayley(rows, tuple(names))


def battery_groups() -> list[tuple[str, GroupTable]]:
    """The standard cross-validation battery of small groups."""
    groups: list[tuple[str, GroupTable]] = []
    for n in range(1, 13):
        groups.append((f"Z{n}", make_cyclic(n)))
    groups.append(("Z2xZ2", make_direct_product(make_cyclic(2), make_cyclic(2))))
    groups.append(("S3", make_permutation_group([(1, 0, 2), (1, 2, 0)])))
    groups.append(("Q8", make_quaternion8()))
    groups.append(("D4", make_permutation_group([(1, 2, 3, 0), (3, 2, 1, 0)])))
    groups.append(("SL2F3", make_sl2(3)))
    return groups
