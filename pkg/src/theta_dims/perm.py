"""Invariant dimensions via fixed-point characters of basis permutations.

The doubled group acts on the group-algebra basis by x -> g x h^-1, and the
extra involution acts by basis-level inversion x -> x^-1 (so the coset
element tau*(g,h) sends x to h x^-1 g^-1). Everything here is exact: traces
are integer fixed-point counts, and the single division happens at the end.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NonIntegralDimension, SimplificationMismatch
from .groups import GroupTable, conjugacy_classes

GROUP_ALGEBRA = "group-algebra"
AUG_KERNEL = "aug-kernel"
MODULES = (GROUP_ALGEBRA, AUG_KERNEL)

EVEN = "even"
ODD = "odd"
PARITIES = (EVEN, ODD)

FULL = "full"
PI_PI = "pi-pi"
SYMMETRIES = (FULL, PI_PI)


def _check_choice(value: str, allowed: tuple[str, ...], what: str) -> str:
    if value not in allowed:
        raise ValueError(f"{what} must be one of {allowed}, got {value!r}")
    return value


@dataclass(frozen=True)
class CosetElement:
    """An element of the doubled-and-swapped symmetry group, acting on basis
    indices by x -> g x h^-1 (untwisted) or x -> h x^-1 g^-1 (twisted)."""

    twisted: bool
    g: int
    h: int


def act(G: GroupTable, sigma: CosetElement, x: int) -> int:
    """Apply sigma to a single basis index."""
    if sigma.twisted:
        return G.mul(G.mul(sigma.h, G.inv(x)), G.inv(sigma.g))
    return G.mul(G.mul(sigma.g, x), G.inv(sigma.h))


def compose(G: GroupTable, s: CosetElement, t: CosetElement) -> CosetElement:
    """The coset element acting as s after t (function composition)."""
    if not s.twisted and not t.twisted:
        return CosetElement(False, G.mul(s.g, t.g), G.mul(s.h, t.h))
    if not s.twisted and t.twisted:
        return CosetElement(True, G.mul(s.h, t.g), G.mul(s.g, t.h))
    if s.twisted and not t.twisted:
        return CosetElement(True, G.mul(s.g, t.g), G.mul(s.h, t.h))
    return CosetElement(False, G.mul(s.h, t.g), G.mul(s.g, t.h))


def permutation_of(G: GroupTable, sigma: CosetElement) -> np.ndarray:
    """The full permutation array of sigma on basis indices."""
    mul, inv = G.mul_table, G.inv_table
    if sigma.twisted:
        return mul[mul[sigma.h, inv], inv[sigma.g]]
    return mul[mul[sigma.g], inv[sigma.h]]


def fixed_points(G: GroupTable, sigma: CosetElement) -> int:
    """Number of basis indices fixed by sigma (its permutation character)."""
    p = permutation_of(G, sigma)
    return int((p == np.arange(G.order)).sum())


def cube_character(c1, c2, c3, parity: str) -> Fraction:
    """Trace on the cubic power of a map with traces c1, c2, c3 at powers 1,2,3.

    Alternating cube for parity "even", symmetric cube for "odd".
    """
    _check_choice(parity, PARITIES, "parity")
    c1, c2, c3 = Fraction(c1), Fraction(c2), Fraction(c3)
    sign = -1 if parity == EVEN else 1
    return (c1**3 + sign * 3 * c2 * c1 + 2 * c3) / 6


def _cube_numerator(c1: int, c2: int, c3: int, sign: int) -> int:
    return c1 * c1 * c1 + sign * 3 * c2 * c1 + 2 * c3


def _counts(G: GroupTable, perms: np.ndarray) -> tuple[list, list, list]:
    """Fixed-point counts of each row permutation, its square and its cube."""
    idx = np.arange(G.order)[None, :]
    p2 = np.take_along_axis(perms, perms, axis=1)
    p3 = np.take_along_axis(perms, p2, axis=1)
    return (
        (perms == idx).sum(axis=1).tolist(),
        (p2 == idx).sum(axis=1).tolist(),
        (p3 == idx).sum(axis=1).tolist(),
    )


def _untwisted_block(G: GroupTable, g: int) -> np.ndarray:
    """Permutations of all untwisted (g, h) for fixed g, one row per h."""
    mul, inv = G.mul_table, G.inv_table
    return np.ascontiguousarray(mul[mul[g]][:, inv].T)


def _twisted_block(G: GroupTable, g: int, hx: np.ndarray) -> np.ndarray:
    """Permutations of all twisted (g, h) for fixed g, one row per h."""
    return G.mul_table[hx, G.inv_table[g]]


def _sum_untwisted(G: GroupTable, gs, shift: int, sign: int) -> int:
    total = 0
    for g in gs:
        c1s, c2s, c3s = _counts(G, _untwisted_block(G, g))
        for c1, c2, c3 in zip(c1s, c2s, c3s):
            total += _cube_numerator(c1 - shift, c2 - shift, c3 - shift, sign)
    return total


def _sum_twisted(G: GroupTable, gs, shift: int, sign: int) -> int:
    mul, inv = G.mul_table, G.inv_table
    hx = mul[:, inv]  # hx[h, x] = h * x^-1
    total = 0
    for g in gs:
        c1s, c2s, c3s = _counts(G, _twisted_block(G, g, hx))
        for c1, c2, c3 in zip(c1s, c2s, c3s):
            total += _cube_numerator(c1 - shift, c2 - shift, c3 - shift, sign)
    return total


def _chunked(n: int, workers: int) -> list[range]:
    workers = max(1, min(workers, n)) if n else 1
    bounds = [round(i * n / workers) for i in range(workers + 1)]
    return [range(a, b) for a, b in zip(bounds, bounds[1:]) if a < b]


def _sum_over_coset(G: GroupTable, shift: int, sign: int, twisted: bool, workers: int) -> int:
    fn = _sum_twisted if twisted else _sum_untwisted
    chunks = _chunked(G.order, workers)
    if len(chunks) <= 1:
        return fn(G, range(G.order), shift, sign)
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        parts = pool.map(lambda gs: fn(G, gs, shift, sign), chunks)
        return sum(parts)


def _sum_untwisted_by_class_pairs(G: GroupTable, shift: int, sign: int) -> int:
    cd = conjugacy_classes(G)
    total = 0
    for ci, ri in enumerate(cd.reps):
        block = _untwisted_block(G, ri)[np.array(cd.reps)]
        c1s, c2s, c3s = _counts(G, block)
        for cj in range(cd.num_classes):
            weight = cd.sizes[ci] * cd.sizes[cj]
            total += weight * _cube_numerator(
                c1s[cj] - shift, c2s[cj] - shift, c3s[cj] - shift, sign
            )
    return total


def dim_invariants_perm(
    G: GroupTable,
    module: str = GROUP_ALGEBRA,
    parity: str = EVEN,
    symmetry: str = FULL,
    *,
    workers: int = 1,
    use_class_pairs: bool = False,
) -> int:
    """Exact invariant dimension of the cubic power of the chosen module.

    Averages the alternating/symmetric cube character over the doubled group
    (symmetry "pi-pi") or over the doubled group extended by the inversion
    involution (symmetry "full"). Squares and cubes of each coset permutation
    are formed by explicit composition, never by algebraic shortcuts.
    """
    _check_choice(module, MODULES, "module")
    _check_choice(parity, PARITIES, "parity")
    _check_choice(symmetry, SYMMETRIES, "symmetry")
    n = G.order
    shift = 1 if module == AUG_KERNEL else 0
    sign = -1 if parity == EVEN else 1
    if use_class_pairs:
        total = _sum_untwisted_by_class_pairs(G, shift, sign)
    else:
        total = _sum_over_coset(G, shift, sign, twisted=False, workers=workers)
    group_size = n * n
    if symmetry == FULL:
        total += _sum_over_coset(G, shift, sign, twisted=True, workers=workers)
        group_size *= 2
    dim = Fraction(total, 6 * group_size)
    if dim.denominator != 1 or dim < 0:
        raise NonIntegralDimension(
            f"average {dim} is not a nonnegative integer "
            f"(module={module}, parity={parity}, symmetry={symmetry})"
        )
    return int(dim)


def twisted_coset_average(
    G: GroupTable, module: str = GROUP_ALGEBRA, parity: str = EVEN
) -> Fraction:
    """Average of the cube character over the twisted coset only.

    Computed twice: directly over all pairs (g, h), and by the reduced
    single sum over w (one coset element tau*(e, w) standing in for the
    |G| pairs with h*g = w, with its square and cube obtained by explicit
    permutation composition). The two routes must agree exactly.
    """
    _check_choice(module, MODULES, "module")
    _check_choice(parity, PARITIES, "parity")
    n = G.order
    shift = 1 if module == AUG_KERNEL else 0
    sign = -1 if parity == EVEN else 1
    direct = Fraction(_sum_over_coset(G, shift, sign, twisted=True, workers=1), 6 * n * n)

    # row w of hx is the permutation of tau*(e, w): x -> w * x^-1
    hx = G.mul_table[:, G.inv_table]
    c1s, c2s, c3s = _counts(G, hx)
    reduced_total = sum(
        _cube_numerator(c1 - shift, c2 - shift, c3 - shift, sign)
        for c1, c2, c3 in zip(c1s, c2s, c3s)
    )
    reduced = Fraction(reduced_total, 6 * n)
    if direct != reduced:
        raise SimplificationMismatch(
            f"direct twisted average {direct} != reduced single-sum value {reduced}"
        )
    return direct
