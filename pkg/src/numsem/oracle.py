"""Brute-force reference implementations for differential testing.

Everything here works from first definitions: subset scans with explicit
closure checks, recursive partition generation, and a popcount-ordered
hitting-set search.  None of it calls the tree or Apery-vector algorithms
it exists to validate.  Hard caps keep the exponential scans inside a
predictable envelope and fail loudly with CapacityExceeded instead of
degrading.

Performance is a non-goal; the only concession is a per-Frobenius cache
of the subset scan, which changes nothing about how the answer is
computed.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from . import errors
from .core import NumericalSemigroup, Submonoid, contains_genset, gap_key, normalize_genset

MAX_FROBENIUS = 16
MAX_PARTITION_TARGET = 40
MAX_HITTING_TARGET = 14


@lru_cache(maxsize=None)
def _semigroups_with_frobenius(frobenius: int) -> tuple[NumericalSemigroup, ...]:
    """Every numerical semigroup with the given Frobenius number.

    Scans all subsets X of [1, F-1] and keeps {0} | X | {F+1, ->} when it
    is additively closed.  A sum landing on a gap at or below F (including
    F itself) is a closure failure; sums above F are always members.
    """
    full = (1 << (frobenius + 1)) - 1
    found = []
    for bits in range(1 << max(frobenius - 1, 0)):
        mask = bits << 1 | 1
        closed = True
        probe = bits << 1
        while probe:
            low = probe & -probe
            x = low.bit_length() - 1
            probe ^= low
            if (mask << x) & full & ~mask:
                closed = False
                break
        if closed:
            found.append(NumericalSemigroup(frobenius, mask))
    return tuple(sorted(found, key=gap_key))


def all_semigroups_with_frobenius(frobenius: int, required=()) -> list[NumericalSemigroup]:
    """All numerical semigroups with Frobenius number F that contain the required set."""
    if frobenius < 1:
        raise ValueError("the Frobenius number must be positive")
    if frobenius > MAX_FROBENIUS:
        raise errors.CapacityExceeded(
            f"subset scan is capped at F <= {MAX_FROBENIUS}, got {frobenius}"
        )
    required = normalize_genset(required)
    return [s for s in _semigroups_with_frobenius(frobenius) if contains_genset(s, required)]


def irreducibles_bruteforce(frobenius: int, required=()) -> list[NumericalSemigroup]:
    """Definition-level irreducibles: maximal among all semigroups with this Frobenius number.

    A strict superset with the same Frobenius number automatically
    contains the required set too, so maximality can be tested inside the
    filtered family.
    """
    family = all_semigroups_with_frobenius(frobenius, required)
    masks = [s.member_mask() for s in family]
    keep = []
    for i, s in enumerate(family):
        if not any(j != i and masks[i] & ~masks[j] == 0 for j in range(len(family))):
            keep.append(s)
    return keep


def iter_partitions(target: int) -> Iterator[tuple[int, ...]]:
    """All partitions of ``target`` in non-increasing form, lexicographically descending."""
    if target < 1:
        raise ValueError("partitions are defined for positive integers")
    if target > MAX_PARTITION_TARGET:
        raise errors.CapacityExceeded(
            f"partition enumeration is capped at {MAX_PARTITION_TARGET}, got {target}"
        )

    def rec(remaining: int, cap: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    yield from rec(target, target, [])


def partitions(target: int) -> list[tuple[int, ...]]:
    """Materialized :func:`iter_partitions`."""
    return list(iter_partitions(target))


def summand_sets(required, forbidden) -> frozenset[frozenset[int]]:
    """Distinct summand sets of partitions of the forbidden values, minus monoid members.

    For each partition of each forbidden value, take the set of its
    summands and drop those generated by the required set.  These are the
    sets a valid solution must hit.
    """
    required = normalize_genset(required)
    forbidden = normalize_genset(forbidden)
    if not forbidden:
        return frozenset()
    if forbidden[-1] > MAX_PARTITION_TARGET:
        raise errors.CapacityExceeded(
            f"partition enumeration is capped at {MAX_PARTITION_TARGET}, got {forbidden[-1]}"
        )
    monoid = Submonoid(required, forbidden[-1])
    family = set()
    for b in forbidden:
        for p in iter_partitions(b):
            family.add(frozenset(x for x in set(p) if x not in monoid))
    return frozenset(family)


def minimal_hitting_sets(required, forbidden) -> list[tuple[int, ...]]:
    """Inclusion-minimal sets hitting every summand set, from first principles.

    Candidates are subsets of [1, max(forbidden)] minus the monoid of the
    required set: larger integers never occur in a partition of a
    forbidden value, and monoid members never occur in a summand set, so
    both are dead weight no minimal solution can carry.  Scanning
    candidates by ascending size means any hitting set with no previously
    found subset is itself minimal.
    """
    forbidden = normalize_genset(forbidden)
    if forbidden and forbidden[-1] > MAX_HITTING_TARGET:
        raise errors.CapacityExceeded(
            f"hitting-set search is capped at max(B) <= {MAX_HITTING_TARGET}, got {forbidden[-1]}"
        )
    family = summand_sets(required, forbidden)
    if frozenset() in family:
        return []
    if not family:
        return [()]
    monoid = Submonoid(normalize_genset(required), forbidden[-1])
    universe = [x for x in range(1, forbidden[-1] + 1) if x not in monoid]
    index = {x: i for i, x in enumerate(universe)}
    target_masks = [sum(1 << index[x] for x in xs) for xs in family]
    found: list[int] = []
    results: list[tuple[int, ...]] = []
    for size in range(len(universe) + 1):
        for combo in combinations(range(len(universe)), size):
            kmask = sum(1 << i for i in combo)
            if any(f & kmask == f for f in found):
                continue
            if all(kmask & t for t in target_masks):
                found.append(kmask)
                results.append(tuple(universe[i] for i in combo))
    return sorted(results)
