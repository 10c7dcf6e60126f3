"""Independent brute-force verifiers for the invariant dimensions.

Two routes that share nothing with the character computations:

* orbit counting on the monomial basis of the cubic powers of the group
  algebra, with a sign-tracking union-find (a wedge orbit dies when some
  stabilizer element acts by -1);
* the exact group-average projector on explicit action matrices, whose
  rank is the invariant dimension.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from .errors import GeneratorsDontGenerate, ProjectorNotIdempotent, TooLarge
from .groups import GroupTable, generating_set
from .perm import (
    EVEN,
    FULL,
    GROUP_ALGEBRA,
    MODULES,
    PARITIES,
    SYMMETRIES,
    CosetElement,
    _check_choice,
    permutation_of,
)

REYNOLDS_ORDER_LIMIT = 12
_INT64_LIMIT = int(np.iinfo(np.int64).max)


def wedge_canonical(triple) -> tuple[int, tuple[int, int, int]] | None:
    """Sort a wedge monomial; return (sign, sorted triple), or None if it dies."""
    x, y, z = triple
    if x == y or y == z or x == z:
        return None
    sign = 1
    if x > y:
        x, y, sign = y, x, -sign
    if y > z:
        y, z, sign = z, y, -sign
    if x > y:
        x, y, sign = y, x, -sign
    return sign, (x, y, z)


def sym_canonical(triple) -> tuple[int, int, int]:
    """Sort a symmetric monomial."""
    return tuple(sorted(triple))


def _wedge_basis(n: int) -> list[tuple[int, int, int]]:
    return list(itertools.combinations(range(n), 3))


def _sym_basis(n: int) -> list[tuple[int, int, int]]:
    return list(itertools.combinations_with_replacement(range(n), 3))


def _verify_generators(G: GroupTable, generators) -> list[int]:
    gens = [int(g) for g in generators]
    reached = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = G.mul(x, s)
                if y not in reached:
                    reached.add(y)
                    nxt.append(y)
        frontier = nxt
    if len(reached) != G.order:
        raise GeneratorsDontGenerate(
            f"generators reach {len(reached)} of {G.order} elements"
        )
    return gens


class _SignedUnionFind:
    """Union-find whose nodes carry a sign relative to their root.

    Uniting two nodes whose implied relative sign conflicts with an edge
    marks the whole orbit as sign-killed.
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.sign = bytearray(n)  # parity bit of the sign to the parent
        self.size = [1] * n
        self.killed = bytearray(n)  # meaningful at roots

    def find(self, x: int) -> tuple[int, int]:
        parent, sign = self.parent, self.sign
        root, s = x, 0
        while parent[root] != root:
            s ^= sign[root]
            root = parent[root]
        cur, cs = x, s  # path compression, re-rooting the signs
        while parent[cur] != root:
            nxt, old = parent[cur], sign[cur]
            parent[cur] = root
            sign[cur] = cs
            cur, cs = nxt, cs ^ old
        return root, s

    def union(self, x: int, y: int, edge_sign: int) -> None:
        rx, sx = self.find(x)
        ry, sy = self.find(y)
        if rx == ry:
            if sx ^ sy != edge_sign:
                self.killed[rx] = 1
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
            sx, sy = sy, sx
        self.parent[ry] = rx
        self.sign[ry] = sx ^ sy ^ edge_sign
        self.size[rx] += self.size[ry]
        self.killed[rx] |= self.killed[ry]

    def orbit_counts(self) -> tuple[int, int]:
        """(number of orbits, number of sign-killed orbits)."""
        total = killed = 0
        for x in range(len(self.parent)):
            if self.parent[x] == x:
                total += 1
                killed += self.killed[x]
        return total, killed


def _symmetry_permutations(G: GroupTable, gens: list[int], symmetry: str) -> list[np.ndarray]:
    perms = []
    for s in gens:
        perms.append(permutation_of(G, CosetElement(False, s, G.identity)))
        perms.append(permutation_of(G, CosetElement(False, G.identity, s)))
    if symmetry == FULL:
        perms.append(np.asarray(G.inv_table))
    return perms


def dim_invariants_orbit(
    G: GroupTable,
    parity: str,
    symmetry: str = FULL,
    generators=None,
) -> int:
    """Invariant dimension of the cubic power of the group algebra by orbit
    counting over monomials, using only symmetry generators."""
    _check_choice(parity, PARITIES, "parity")
    _check_choice(symmetry, SYMMETRIES, "symmetry")
    if generators is None:
        generators = generating_set(G)
    gens = _verify_generators(G, generators)
    n = G.order
    wedge = parity == EVEN
    basis = _wedge_basis(n) if wedge else _sym_basis(n)
    if not basis:
        return 0
    arr = np.array(basis, dtype=np.int64)
    if not wedge:
        # shift a multiset x<=y<=z to a strict triple over n+2 points
        arr = arr + np.arange(3, dtype=np.int64)
        m = n + 2
    else:
        m = n

    def rank_of(rows: np.ndarray) -> np.ndarray:
        x, y, z = rows[:, 0], rows[:, 1], rows[:, 2]
        return z * (z - 1) * (z - 2) // 6 + y * (y - 1) // 2 + x

    base_rank = rank_of(arr)
    # the combinadic rank is the union-find node id; it must be a bijection
    assert np.array_equal(np.sort(base_rank), np.arange(len(basis)))

    uf = _SignedUnionFind(len(basis))
    raw = np.array(basis, dtype=np.int64)
    sources = base_rank.tolist()
    for p in _symmetry_permutations(G, gens, symmetry):
        # int64 up front: the rank arithmetic overflows narrow index dtypes
        images = p[raw].astype(np.int64)
        signs = np.zeros(len(basis), dtype=np.int64)
        if wedge:
            a, b, c = images[:, 0], images[:, 1], images[:, 2]
            signs = ((a > b).astype(np.int64) + (a > c) + (b > c)) & 1
        images = np.sort(images, axis=1)
        if not wedge:
            images = images + np.arange(3, dtype=np.int64)
        targets = rank_of(images)
        for i, j, s in zip(sources, targets.tolist(), signs.tolist()):
            uf.union(i, j, s)

    total, killed = uf.orbit_counts()
    return total - killed if wedge else total


# -- explicit matrices and the averaged projector --------------------------------


class RationalMatrix:
    """A dense square matrix of exact rationals."""

    def __init__(self, rows):
        self.rows = [[Fraction(v) for v in row] for row in rows]
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.dimension)), Fraction(0))

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        n = self.dimension
        cols = list(zip(*other.rows))
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def _integer_rows(self) -> list[list[int]]:
        scaled = []
        for row in self.rows:
            lcm = 1
            for v in row:
                lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
            scaled.append([int(v * lcm) for v in row])
        return scaled

    def rank(self) -> int:
        """Exact rank by fraction-free (division-free pivoting) elimination."""
        m = self._integer_rows()
        n = self.dimension
        if n == 0:
            return 0
        rank = 0
        prev = 1
        for col in range(n):
            pivot_row = next((r for r in range(rank, n) if m[r][col] != 0), None)
            if pivot_row is None:
                continue
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
            pivot = m[rank][col]
            top = m[rank]
            for r in range(rank + 1, n):
                factor = m[r][col]
                row = m[r]
                for c in range(col, n):
                    q, rem = divmod(row[c] * pivot - factor * top[c], prev)
                    assert rem == 0  # Bareiss divisions are exact
                    row[c] = q
            prev = pivot
            rank += 1
            if rank == n:
                break
        return rank


def _module_generators(G: GroupTable, sigma: CosetElement, module: str):
    """Images of the module basis under sigma, as sparse columns.

    For the group algebra the basis is e_x and each image is one basis
    vector. For the augmentation kernel the basis is f_x = e_x - e_1
    (x != identity), so an image is a difference of at most two of them.
    """
    p = permutation_of(G, sigma)
    e = G.identity
    if module == GROUP_ALGEBRA:
        return [[(int(p[x]), 1)] for x in range(G.order)], G.order
    slots = [x for x in range(G.order) if x != e]
    index = {x: i for i, x in enumerate(slots)}
    base = int(p[e])
    cols = []
    for x in slots:
        img = int(p[x])
        col = []
        if img != e:
            col.append((index[img], 1))
        if base != e:
            col.append((index[base], -1))
        cols.append(col)
    return cols, len(slots)


def _symmetry_elements(G: GroupTable):
    n = G.order
    for twisted in (False, True):
        for g in range(n):
            for h in range(n):
                yield CosetElement(twisted, g, h)


def _lifted_columns(G: GroupTable, sigma: CosetElement, module: str, parity: str, basis, index):
    """Sparse columns of sigma acting on the cubic monomial basis."""
    cols, _dim = _module_generators(G, sigma, module)
    wedge = parity == EVEN
    out = []
    for mono in basis:
        acc: dict[tuple[int, int, int], int] = {}
        for (i1, a1), (i2, a2), (i3, a3) in itertools.product(*(cols[x] for x in mono)):
            coeff = a1 * a2 * a3
            if wedge:
                canon = wedge_canonical((i1, i2, i3))
                if canon is None:
                    continue
                s, key = canon
                coeff *= s
            else:
                key = sym_canonical((i1, i2, i3))
            acc[key] = acc.get(key, 0) + coeff
        out.append([(index[k], v) for k, v in acc.items() if v])
    return out


def _monomial_basis(dim: int, parity: str):
    basis = _wedge_basis(dim) if parity == EVEN else _sym_basis(dim)
    return basis, {m: i for i, m in enumerate(basis)}


def build_module_actions(
    G: GroupTable, module: str, parity: str, *, order_limit: int = REYNOLDS_ORDER_LIMIT
) -> tuple[list[RationalMatrix], int]:
    """Explicit matrices of every symmetry element on the cubic power.

    Returns one matrix per element of the doubled-and-swapped group, in the
    order untwisted pairs then twisted pairs (each lexicographic in (g, h)),
    together with the matrix dimension.
    """
    _check_choice(module, MODULES, "module")
    _check_choice(parity, PARITIES, "parity")
    if G.order > order_limit:
        raise TooLarge(f"group order {G.order} exceeds the guard {order_limit}")
    mod_dim = G.order if module == GROUP_ALGEBRA else G.order - 1
    basis, index = _monomial_basis(mod_dim, parity)
    dim = len(basis)
    matrices = []
    for sigma in _symmetry_elements(G):
        m = [[0] * dim for _ in range(dim)]
        for j, col in enumerate(_lifted_columns(G, sigma, module, parity, basis, index)):
            for i, v in col:
                m[i][j] = v
        matrices.append(RationalMatrix(m))
    return matrices, dim


def dim_invariants_reynolds(
    G: GroupTable, module: str, parity: str, *, order_limit: int = REYNOLDS_ORDER_LIMIT
) -> int:
    """Invariant dimension as the exact rank of the group-average projector."""
    _check_choice(module, MODULES, "module")
    _check_choice(parity, PARITIES, "parity")
    if G.order > order_limit:
        raise TooLarge(f"group order {G.order} exceeds the guard {order_limit}")
    mod_dim = G.order if module == GROUP_ALGEBRA else G.order - 1
    basis, index = _monomial_basis(mod_dim, parity)
    dim = len(basis)
    group_size = 2 * G.order**2
    if dim == 0:
        return 0
    acc = np.zeros((dim, dim), dtype=np.int64)
    for sigma in _symmetry_elements(G):
        for j, col in enumerate(_lifted_columns(G, sigma, module, parity, basis, index)):
            for i, v in col:
                acc[i, j] += v
    # int64 products must be provably exact before checking idempotence
    bound = int(np.abs(acc).max())
    assert dim * bound * bound < _INT64_LIMIT and group_size * bound < _INT64_LIMIT
    if not np.array_equal(acc @ acc, group_size * acc):
        raise ProjectorNotIdempotent(
            f"averaged action is not a projector (module={module}, parity={parity})"
        )
    projector = RationalMatrix(
        [[Fraction(int(v), group_size) for v in row] for row in acc]
    )
    rank = projector.rank()
    if projector.trace() != rank:
        raise ProjectorNotIdempotent(
            f"projector trace {projector.trace()} != rank {rank}"
        )
    return rank
