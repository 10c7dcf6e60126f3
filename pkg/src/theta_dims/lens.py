"""Closed forms for cyclic groups: partition counts and weight systems.

For the cyclic group of order n the four invariant dimensions reduce to
p3(n), p3(n-6), p3(n-3), p3(n-6), where p3(m) counts partitions of m into
at most three parts. The weight-system maps realize the same numbers as
ranks of explicitly computed vectors, giving yet another route.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import HalfwayPoint
from .perm import EVEN, PARITIES, _check_choice

# incremental tables for partitions into parts of size <= 2 and <= 3
_P2 = [1]
_P3 = [1]


def p3_dp(m: int) -> int:
    """Partitions of m into at most three parts, by dynamic programming."""
    if m < 0:
        return 0
    while len(_P3) <= m:
        j = len(_P3)
        _P2.append((0 if j < 2 else _P2[j - 2]) + 1)
        _P3.append((0 if j < 3 else _P3[j - 3]) + _P2[j])
    return _P3[m]


def p3_closed(m: int) -> int:
    """Partitions of m into at most three parts: nearest integer to (m+3)^2/12."""
    if m < 0:
        raise ValueError(f"closed form needs m >= 0, got {m}")
    q = (m + 3) ** 2
    if q % 12 == 6:
        raise HalfwayPoint(f"(m+3)^2 = {q} sits exactly between multiples of 12")
    return (q + 6) // 12


@dataclass(frozen=True)
class LensDims:
    """The four invariant dimensions for the cyclic group of order n."""

    n: int
    odd_group_algebra: int
    even_group_algebra: int
    odd_aug_kernel: int
    even_aug_kernel: int


def lens_dims(n: int) -> LensDims:
    """Closed-form dimensions (p3(n), p3(n-6), p3(n-3), p3(n-6))."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return LensDims(n, p3_dp(n), p3_dp(n - 6), p3_dp(n - 3), p3_dp(n - 6))


@dataclass(frozen=True)
class WeightVector:
    """A sparse signed combination of canonical cubic monomials mod n."""

    n: int
    parity: str
    coeffs: tuple[tuple[tuple[int, int, int], int], ...]  # sorted, nonzero

    def as_dict(self) -> dict[tuple[int, int, int], int]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs


def _canonical_term(triple, parity: str):
    """(sign, sorted triple), or None when a repeated wedge index kills it."""
    x, y, z = triple
    if parity == EVEN:
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
    return 1, tuple(sorted(triple))


def weight_map(n: int, a: int, b: int, c: int, parity: str) -> WeightVector:
    """The two-term difference pattern of a cubic monomial, canonicalized.

    Sends the monomial on exponents (a, b, c) to the sum of the monomials on
    (b-a, c-b, a-c) and (a-b, b-c, c-a), all mod n.
    """
    _check_choice(parity, PARITIES, "parity")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    acc: dict[tuple[int, int, int], int] = {}
    for triple in (
        ((b - a) % n, (c - b) % n, (a - c) % n),
        ((a - b) % n, (b - c) % n, (c - a) % n),
    ):
        term = _canonical_term(triple, parity)
        if term is None:
            continue
        sign, key = term
        acc[key] = acc.get(key, 0) + sign
    coeffs = tuple(sorted((k, v) for k, v in acc.items() if v))
    return WeightVector(n, parity, coeffs)


def _monomials(n: int, parity: str):
    if parity == EVEN:
        return itertools.combinations(range(n), 3)
    return itertools.combinations_with_replacement(range(n), 3)


def _rank_of_rows(rows) -> int:
    """Rank of sparse integer rows by fraction-free echelon reduction."""
    pivots: dict[tuple[int, int, int], dict] = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            if lead not in pivots:
                pivots[lead] = row
                rank += 1
                break
            piv = pivots[lead]
            a, b = piv[lead], row[lead]
            row = {
                k: v
                for k in set(row) | set(piv)
                if (v := row.get(k, 0) * a - piv.get(k, 0) * b) != 0
            }
    return rank


def _orbit_representatives(n: int, parity: str):
    """One canonical monomial per orbit under index shifts and negation."""
    reps = set()
    for mono in _monomials(n, parity):
        images = []
        for flip in (1, -1):
            base = tuple(flip * v % n for v in mono)
            for k in range(n):
                images.append(tuple(sorted((v + k) % n for v in base)))
        reps.add(min(images))
    return sorted(reps)


def weight_rank(n: int, parity: str) -> int:
    """Exact rank of the span of the weight map over all cubic monomials.

    Orbit representatives span the same space; for small n both ranks are
    computed and checked against each other.
    """
    _check_choice(parity, PARITIES, "parity")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    full = _rank_of_rows(
        weight_map(n, *mono, parity).coeffs for mono in _monomials(n, parity)
    )
    if n <= 12:
        reduced = _rank_of_rows(
            weight_map(n, *mono, parity).coeffs for mono in _orbit_representatives(n, parity)
        )
        assert reduced == full  # representatives must span the whole image
    return full
