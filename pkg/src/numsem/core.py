"""Core value types and primitive operations for numerical semigroups.

A numerical semigroup S is a subset of N = {0, 1, 2, ...} that contains 0,
is closed under addition, and has finite complement.  Its basic invariants
are the Frobenius number F(S), the largest integer outside S, and the
genus g(S), the size of the complement.  Since every integer above F(S)
belongs to S, the pair (F, membership bitmap on [0, F]) is a complete
canonical encoding; equality, hashing, intersection and subset tests all
reduce to integer bit operations.

Conventions:
  * The full semigroup N is encoded as F = 0 with bitmap {0}.  It has no
    gaps.  Callers that want the classical value -1 for F(N) apply that at
    the presentation layer (see the CLI module).
  * Submonoids of (N, +) generated by an arbitrary finite set (the gcd may
    exceed 1) are never materialized as infinite sets; they are bounded
    membership tables built by the standard coin-problem dynamic program.
  * All comparisons against F/2 are done in integers on 2x vs F.

The Apery set of a nonzero member n collects, for each residue class mod
n, the least member in that class.  Dropping the zero entry and indexing
by residue yields a tuple in N^(n-1) that determines the semigroup
completely; the componentwise max of two such tuples is the tuple of the
intersection, and the componentwise order reverses inclusion.  Those three
facts drive the enumeration modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import errors


def normalize_genset(raw) -> tuple[int, ...]:
    """Canonical generator tuple: sorted, deduplicated, zeros dropped.

    The input {0} normalizes to the empty tuple, which generates the
    trivial monoid {0}.  Negative entries are rejected.
    """
    values = sorted({int(x) for x in raw})
    if values and values[0] < 0:
        raise ValueError(f"generators must be non-negative, got {values[0]}")
    return tuple(v for v in values if v > 0)


class Submonoid:
    """Membership table on [0, bound] for the monoid generated by a finite set.

    Membership means representability as a non-negative integer combination
    of the generators, i.e. the unbounded coin problem; the table is filled
    by one forward dynamic-programming pass per generator.  Instances are
    immutable values.
    """

    __slots__ = ("generators", "bound", "_mask")

    def __init__(self, generators, bound: int):
        if bound < 1:
            raise ValueError("bound must be >= 1")
        gens = normalize_genset(generators)
        mask = 1
        for g in gens:
            if g > bound:
                continue
            for x in range(g, bound + 1):
                if mask >> (x - g) & 1:
                    mask |= 1 << x
        self.generators = gens
        self.bound = bound
        self._mask = mask

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.bound:
            raise ValueError(f"{x} is outside the table bound {self.bound}")
        return bool(self._mask >> x & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Submonoid):
            return NotImplemented
        return self.bound == other.bound and self._mask == other._mask

    def __hash__(self) -> int:
        return hash((self.bound, self._mask))

    def __repr__(self) -> str:
        return f"Submonoid({list(self.generators)}, bound={self.bound})"

    def member_mask(self) -> int:
        """Bitmap of members on [0, bound]; bit x is set iff x is a member."""
        return self._mask

    def elements(self) -> tuple[int, ...]:
        """All members up to the bound, ascending."""
        return tuple(x for x in range(self.bound + 1) if self._mask >> x & 1)

    def decompose(self, x: int) -> list[tuple[int, int]] | None:
        """One representation of x as ``sum(coeff * gen)``, or None if x is not a member.

        Returns (coefficient, generator) pairs with positive coefficients,
        generators ascending.  Used for infeasibility diagnostics, so
        clarity beats speed.
        """
        if x == 0:
            return []
        if x < 0 or x > self.bound or x not in self:
            return None
        via = [0] * (x + 1)
        reach = [False] * (x + 1)
        reach[0] = True
        for g in self.generators:
            if g > x:
                break
            for v in range(g, x + 1):
                if not reach[v] and reach[v - g]:
                    reach[v] = True
                    via[v] = g
        counts: dict[int, int] = {}
        v = x
        while v:
            g = via[v]
            counts[g] = counts.get(g, 0) + 1
            v -= g
        return [(counts[g], g) for g in sorted(counts)]


class NumericalSemigroup:
    """A numerical semigroup as the pair (Frobenius number, small-element bitmap).

    Instances are immutable values: equality and hashing use the canonical
    pair, and every operation returns a fresh instance.  The raw
    constructor trusts the caller on closure; use :meth:`from_small_elements`
    for a fully validated build or :meth:`from_generators` to close a
    generating set with gcd 1.
    """

    __slots__ = ("frobenius", "_mask", "_msg", "_genus")

    def __init__(self, frobenius: int, mask: int):
        if frobenius < 0:
            raise ValueError("frobenius must be non-negative")
        if not mask & 1:
            raise ValueError("0 must be a member")
        if mask >> (frobenius + 1):
            raise ValueError("bitmap extends beyond the Frobenius number")
        if frobenius == 0:
            if mask != 1:
                raise ValueError("the full-semigroup encoding is F=0 with bitmap {0}")
        elif mask >> frobenius & 1:
            raise errors.FrobeniusPresent(frobenius)
        self.frobenius = frobenius
        self._mask = mask
        self._msg: tuple[int, ...] | None = None
        self._genus: int | None = None

    @classmethod
    def from_small_elements(cls, members, frobenius: int) -> "NumericalSemigroup":
        """Validated construction from the members below the Frobenius number.

        ``members`` must contain 0, must not contain ``frobenius``, and
        must be additively closed when every integer above ``frobenius``
        counts as a member.
        """
        if frobenius < 0:
            raise ValueError("frobenius must be non-negative")
        mask = 0
        for m in members:
            if m < 0 or m > frobenius:
                raise ValueError(f"member {m} outside [0, {frobenius}]")
            if m == frobenius and frobenius > 0:
                raise errors.FrobeniusPresent(frobenius)
            mask |= 1 << m
        if not mask & 1:
            raise ValueError("0 must be a member")
        full = (1 << (frobenius + 1)) - 1
        for x in range(1, frobenius + 1):
            if not mask >> x & 1:
                continue
            bad = (mask << x) & full & ~mask
            if bad:
                y = (bad & -bad).bit_length() - 1 - x
                raise errors.ClosureViolation(min(x, y), max(x, y))
        return cls(frobenius, mask)

    @classmethod
    def from_generators(cls, generators) -> "NumericalSemigroup":
        """The semigroup generated by a set with gcd 1.

        Convenience constructor: closes the generators by dynamic
        programming, growing the table until a full run of min(generators)
        consecutive members appears, which certifies that everything above
        is a member.
        """
        gens = normalize_genset(generators)
        if not gens:
            raise ValueError("a numerical semigroup needs at least one positive generator")
        if math.gcd(*gens) != 1:
            raise ValueError(f"gcd({list(gens)}) != 1: the complement is infinite")
        if gens[0] == 1:
            return cls(0, 1)
        step = gens[0]
        bound = 2 * gens[-1]
        while True:
            table = Submonoid(gens, bound)
            mask = table.member_mask()
            run = (1 << step) - 1 << (bound - step + 1)
            if mask & run == run:
                break
            bound *= 2
        frob = bound
        while mask >> frob & 1:
            frob -= 1
        return cls(frob, mask & ((1 << (frob + 1)) - 1))

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return bool(self._mask >> x & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.frobenius == other.frobenius and self._mask == other._mask

    def __hash__(self) -> int:
        return hash((self.frobenius, self._mask))

    def __repr__(self) -> str:
        gens = ",".join(str(g) for g in self.minimal_generators())
        return f"<{gens}>"

    @property
    def is_full(self) -> bool:
        """True for the full semigroup N (encoded as F = 0)."""
        return self.frobenius == 0

    def member_mask(self, limit: int | None = None) -> int:
        """Bitmap of members on [0, limit] (default: [0, F]), implicit members included."""
        if limit is None or limit == self.frobenius:
            return self._mask
        if limit < self.frobenius:
            return self._mask & ((1 << (limit + 1)) - 1)
        high = ((1 << (limit - self.frobenius)) - 1) << (self.frobenius + 1)
        return self._mask | high

    def small_elements(self) -> tuple[int, ...]:
        """Members in [0, F], ascending."""
        return tuple(x for x in range(self.frobenius + 1) if self._mask >> x & 1)

    def gaps(self) -> tuple[int, ...]:
        """The complement N \\ S, ascending.  Empty exactly for the full semigroup."""
        return tuple(x for x in range(1, self.frobenius + 1) if not self._mask >> x & 1)

    @property
    def genus(self) -> int:
        """Number of gaps."""
        if self._genus is None:
            self._genus = self.frobenius + 1 - self._mask.bit_count()
        return self._genus

    def minimal_generators(self) -> tuple[int, ...]:
        """The unique minimal system of generators.

        Computed as the nonzero members that are not a sum of two nonzero
        members.  No minimal generator exceeds 2F + 1: any x > 2F + 1
        splits as (x - F - 1) + (F + 1) with both parts members, so the
        scan window [1, 2F + 2] is exhaustive.  The result is cached;
        recomputation is idempotent, so concurrent calls are harmless.
        """
        if self._msg is None:
            window = 2 * self.frobenius + 2
            mask = self.member_mask(window)
            sums = 0
            for x in range(1, window + 1):
                if mask >> x & 1:
                    sums |= (mask & ~1) << x
            self._msg = tuple(
                x for x in range(1, window + 1) if mask >> x & 1 and not sums >> x & 1
            )
        return self._msg

    def issubset(self, other: "NumericalSemigroup") -> bool:
        """Set inclusion; integers above both Frobenius numbers are shared."""
        limit = max(self.frobenius, other.frobenius)
        return not self.member_mask(limit) & ~other.member_mask(limit)

    def exchange(self, remove: int, add: int) -> "NumericalSemigroup":
        """The value with member ``remove`` dropped and gap ``add`` filled.

        This is the elementary tree move; both positions must lie in
        [1, F).  The caller guarantees the result is closed (true whenever
        {remove, add} = {x, F - x} under the tree-step side conditions).
        """
        if not (0 < remove < self.frobenius) or not self._mask >> remove & 1:
            raise ValueError(f"{remove} is not a removable member")
        if not (0 < add < self.frobenius) or self._mask >> add & 1:
            raise ValueError(f"{add} is not a gap below the Frobenius number")
        return NumericalSemigroup(self.frobenius, self._mask & ~(1 << remove) | 1 << add)


FULL_SEMIGROUP = NumericalSemigroup(0, 1)


@dataclass(frozen=True)
class AperyVector:
    """Least members per nonzero residue class mod the modulus, as a tuple.

    coords[i] is the least member congruent to i + 1; it is positive and
    congruent to its index.  The componentwise order on these tuples
    reverses semigroup inclusion, and the componentwise max corresponds to
    intersection.
    """

    modulus: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if len(self.coords) != self.modulus - 1:
            raise ValueError(f"expected {self.modulus - 1} coordinates, got {len(self.coords)}")
        for i, c in enumerate(self.coords, start=1):
            if c < 1 or c % self.modulus != i % self.modulus:
                raise ValueError(f"coordinate {c} at residue {i} violates the congruence")

    def join(self, other: "AperyVector") -> "AperyVector":
        """Componentwise maximum (the vector of the intersection)."""
        if self.modulus != other.modulus:
            raise errors.ModulusMismatch(f"{self.modulus} != {other.modulus}")
        return AperyVector(self.modulus, tuple(map(max, self.coords, other.coords)))

    def leq(self, other: "AperyVector") -> bool:
        """Componentwise order; a partial order, not total."""
        if self.modulus != other.modulus:
            raise errors.ModulusMismatch(f"{self.modulus} != {other.modulus}")
        return all(a <= b for a, b in zip(self.coords, other.coords))


def minimal_generating_set(generators) -> tuple[int, ...]:
    """Minimal system of generators of the monoid closure of a finite set.

    Ascending scan: a generator is kept exactly when the ones kept so far
    do not already produce it.  Works for any gcd.
    """
    gens = normalize_genset(generators)
    if not gens:
        raise ValueError("the generator set must contain a positive integer")
    bound = gens[-1]
    mask = 1
    kept = []
    for m in gens:
        if mask >> m & 1:
            continue
        kept.append(m)
        for x in range(m, bound + 1):
            if mask >> (x - m) & 1:
                mask |= 1 << x
    return tuple(kept)


def apery(s: NumericalSemigroup, n: int) -> frozenset[int]:
    """The Apery set of n in s: least member of each residue class mod n.

    n must be a nonzero member.  Each representative is at most F + n,
    since everything above F is a member.
    """
    if n < 1 or n not in s:
        raise errors.NotAMember(f"{n} is not a nonzero member")
    least = []
    for i in range(n):
        x = i
        while x not in s:
            x += n
        least.append(x)
    return frozenset(least)


def apery_vector(s: NumericalSemigroup, n: int) -> AperyVector:
    """The Apery set with the zero entry dropped, indexed by residue."""
    if n < 2:
        raise ValueError("apery vectors need modulus at least 2")
    if n not in s:
        raise errors.NotAMember(f"{n} is not a nonzero member")
    coords = []
    for i in range(1, n):
        x = i
        while x not in s:
            x += n
        coords.append(x)
    return AperyVector(n, tuple(coords))


def semigroup_from_apery_vector(v: AperyVector) -> NumericalSemigroup:
    """The semigroup generated by the coordinates together with the modulus.

    When v is the Apery vector of some semigroup, the result round-trips
    to v; the round trip is always checked and a failure raises
    NotInImage.  The congruence invariant forces gcd 1, and every integer
    at or above max(coords) lies in the result (it exceeds the least
    member of its residue class), so a table up to max(coords) suffices.
    """
    n = v.modulus
    bound = max(max(v.coords), n)
    table = Submonoid(v.coords + (n,), bound)
    mask = table.member_mask()
    frob = 0
    for x in range(bound, 0, -1):
        if not mask >> x & 1:
            frob = x
            break
    if frob == 0:
        result = FULL_SEMIGROUP
    else:
        result = NumericalSemigroup(frob, mask & ((1 << (frob + 1)) - 1))
    if apery_vector(result, n) != v:
        raise errors.NotInImage(f"{v.coords} is not an Apery vector for modulus {n}")
    return result


def intersect(s: NumericalSemigroup, t: NumericalSemigroup) -> NumericalSemigroup:
    """Membership conjunction; the Frobenius number is the max of the two."""
    frob = max(s.frobenius, t.frobenius)
    mask = s.member_mask(frob) & t.member_mask(frob)
    if frob == 0:
        return FULL_SEMIGROUP
    return NumericalSemigroup(frob, mask)


def contains_genset(s: NumericalSemigroup, required) -> bool:
    """True when every element of the (normalized) set is a member."""
    return all(a in s for a in normalize_genset(required))


def avoids_genset(s: NumericalSemigroup, forbidden) -> bool:
    """True when no element of the (normalized) set is a member."""
    return not any(b in s for b in normalize_genset(forbidden))


def gap_key(s: NumericalSemigroup) -> tuple[int, ...]:
    """Canonical sort key: the gap list, compared lexicographically.

    Gaps determine the semigroup, so this is a strict total order; every
    enumeration in this package emits its results sorted by it.
    """
    return s.gaps()
