"""Maximal numerical semigroups containing a required set and avoiding a
forbidden set.

For a single forbidden value b, the maximal avoiders are exactly the
irreducible semigroups with Frobenius number b containing the required
set.  For several forbidden values, every avoider is an intersection of
single-value avoiders, and intersections translate into componentwise
maxima of Apery vectors taken at the common modulus n = max(forbidden) + 1
(which exceeds every relevant Frobenius number, so it is a member
everywhere).  Because the componentwise order on Apery vectors reverses
inclusion, the maximal avoiders are precisely the semigroups of the
Pareto-minimal joined vectors.

The join product over the per-value vector families can blow up, so the
product is streamed one family at a time, keeping only Pareto-minimal
partial joins: if p <= q componentwise then p joined with any suffix
stays below q joined with the same suffix, so dropping q loses no minimal
element.  A hard cap on the nominal product size fails loudly before any
expansion starts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import errors
from .core import (
    AperyVector,
    NumericalSemigroup,
    Submonoid,
    apery_vector,
    avoids_genset,
    contains_genset,
    gap_key,
    normalize_genset,
    semigroup_from_apery_vector,
)
from .irreducible import enumerate_irreducibles

MAX_JOIN_PRODUCT = 10**7


@dataclass(frozen=True)
class AvoidanceProblem:
    """A feasible (required, forbidden) instance and its working modulus."""

    required: tuple[int, ...]
    forbidden: tuple[int, ...]
    modulus: int


def check_feasible(required, forbidden) -> bool:
    """True when no forbidden value is generated by the required set."""
    required = normalize_genset(required)
    forbidden = normalize_genset(forbidden)
    if not forbidden:
        return True
    monoid = Submonoid(required, forbidden[-1])
    return not any(b in monoid for b in forbidden)


def make_problem(required, forbidden) -> AvoidanceProblem:
    """Normalize and validate; Infeasible carries the witness combination."""
    required = normalize_genset(required)
    forbidden = normalize_genset(forbidden)
    if not forbidden:
        raise ValueError("the forbidden set must contain a positive integer")
    monoid = Submonoid(required, forbidden[-1])
    for b in forbidden:
        if b in monoid:
            raise errors.Infeasible(b, monoid.decompose(b))
    return AvoidanceProblem(required, forbidden, forbidden[-1] + 1)


def irreducible_vectors(required, forbidden_value: int, modulus: int) -> list[AperyVector]:
    """Apery vectors, at the given modulus, of the maximal avoiders of one value."""
    if modulus <= forbidden_value:
        raise ValueError("the modulus must exceed the forbidden value")
    return [
        apery_vector(s, modulus)
        for s in enumerate_irreducibles(required, forbidden_value)
    ]


def _pareto_minimal_coords(vectors: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Keep v iff no other distinct tuple is componentwise <= v.

    Plain quadratic filter; the fronts involved here stay small.
    """
    unique = sorted(set(vectors))
    return [
        v
        for v in unique
        if not any(u != v and all(a <= b for a, b in zip(u, v)) for u in unique)
    ]


def pareto_minimal(vectors) -> list[AperyVector]:
    """Vectors minimal under the componentwise order; pairwise incomparable."""
    vectors = list(vectors)
    if not vectors:
        return []
    modulus = vectors[0].modulus
    if any(v.modulus != modulus for v in vectors):
        raise errors.ModulusMismatch("minimality needs a single modulus")
    keep = _pareto_minimal_coords([v.coords for v in vectors])
    return [AperyVector(modulus, c) for c in keep]


def maximal_avoiding(required, forbidden, *, workers: int = 1) -> list[NumericalSemigroup]:
    """All maximal semigroups containing the required set and avoiding the forbidden one.

    Raises Infeasible when a forbidden value is generated by the required
    set, and CapacityExceeded when the nominal join product is too large.
    Output is sorted by gap list.  Every returned semigroup is rebuilt
    from its minimal vector through the round-trip-checked constructor, so
    a front element outside the vector image cannot slip through.
    """
    problem = make_problem(required, forbidden)
    families = [
        [
            apery_vector(s, problem.modulus)
            for s in enumerate_irreducibles(problem.required, b, workers=workers)
        ]
        for b in problem.forbidden
    ]
    if math.prod(len(f) for f in families) > MAX_JOIN_PRODUCT:
        raise errors.CapacityExceeded(
            f"join product exceeds {MAX_JOIN_PRODUCT} combinations"
        )
    front = [v.coords for v in families[0]]
    for family in families[1:]:
        joined = {
            tuple(map(max, p, e.coords)) for p in front for e in family
        }
        front = _pareto_minimal_coords(list(joined))
    front = _pareto_minimal_coords(front)
    result = [
        semigroup_from_apery_vector(AperyVector(problem.modulus, coords))
        for coords in front
    ]
    for s in result:
        assert contains_genset(s, problem.required), s
        assert avoids_genset(s, problem.forbidden), s
    return sorted(result, key=gap_key)
