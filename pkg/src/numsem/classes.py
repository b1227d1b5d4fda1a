"""Expansion of irreducibles into their equivalence classes, and all
semigroups with a fixed Frobenius number.

Two semigroups with Frobenius number F containing the required set A are
equivalent when their irreducible closures coincide.  Each class is an
interval in the inclusion order: its maximum is the irreducible closure S
itself and its minimum is

    bottom = <A | {x in S : 2x < F}> | {F+1, ->},

so a class member is exactly a semigroup squeezed between bottom and S.
The difference set S \\ bottom lives strictly above F/2: call its
elements removable.  Adding a removable d to bottom drags along its
closure trace, the removable elements of the form d + (member of bottom);
the class is precisely {bottom | trace(X) : X a subset of the removable
set}, with duplicate traces collapsing.

The union of the classes over all irreducibles yields every semigroup
with Frobenius number F containing A, each exactly once.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import errors
from .core import NumericalSemigroup, Submonoid, contains_genset, gap_key
from .irreducible import IrreducibleContext, _expand_levels, make_context

MAX_REMOVABLE = 30


@dataclass(frozen=True)
class FrobeniusClass:
    """One equivalence class: the interval between its top and bottom members."""

    top: NumericalSemigroup
    bottom: NumericalSemigroup
    removable: tuple[int, ...]
    members: tuple[NumericalSemigroup, ...]


def class_minimum(s: NumericalSemigroup, ctx: IrreducibleContext) -> NumericalSemigroup:
    """The smallest semigroup sharing the irreducible closure of s.

    Generated by the required set together with the members of s below
    F/2, plus everything above F.
    """
    frob = ctx.frobenius
    half = tuple(x for x in s.small_elements() if x and 2 * x < frob)
    table = Submonoid(ctx.required + half, frob)
    return NumericalSemigroup(frob, table.member_mask())


def _singleton_traces(
    bottom: NumericalSemigroup, removable: tuple[int, ...]
) -> dict[int, frozenset[int]]:
    """trace(d) = {e removable : e - d is in bottom}; d itself always qualifies."""
    return {
        d: frozenset(e for e in removable if (e - d) in bottom)
        for d in removable
    }


def _trace_family(
    bottom: NumericalSemigroup, removable: tuple[int, ...]
) -> frozenset[frozenset[int]]:
    """Distinct unions of singleton traces over all subsets of the removable set."""
    if len(removable) > MAX_REMOVABLE:
        raise errors.CapacityExceeded(
            f"class expansion is capped at {MAX_REMOVABLE} removable elements,"
            f" got {len(removable)}"
        )
    singles = _singleton_traces(bottom, removable)
    family = set()
    for bits in range(1 << len(removable)):
        trace: frozenset[int] = frozenset()
        for i, d in enumerate(removable):
            if bits >> i & 1:
                trace |= singles[d]
        family.add(trace)
    return frozenset(family)


def closure_trace(values, cls: FrobeniusClass) -> frozenset[int]:
    """The removable elements dragged in when the given removables join the bottom."""
    chosen = frozenset(values)
    if not chosen <= frozenset(cls.removable):
        raise errors.NotInD(f"{sorted(chosen - frozenset(cls.removable))} are not removable")
    singles = _singleton_traces(cls.bottom, cls.removable)
    trace: frozenset[int] = frozenset()
    for d in chosen:
        trace |= singles[d]
    return trace


def trace_family(cls: FrobeniusClass) -> frozenset[frozenset[int]]:
    """All distinct closure traces of the class."""
    return _trace_family(cls.bottom, cls.removable)


def frobenius_class(s: NumericalSemigroup, ctx: IrreducibleContext) -> FrobeniusClass:
    """Materialize the class of an irreducible: bottom, removable set, and all members.

    Each member is rebuilt through the validating constructor even though
    the trace construction guarantees closure; the cheap re-check guards
    the differential suite against drift.
    """
    frob = ctx.frobenius
    bottom = class_minimum(s, ctx)
    bottom_mask = bottom.member_mask()
    removable = tuple(x for x in s.small_elements() if not bottom_mask >> x & 1)
    assert all(2 * d > frob for d in removable), (s, removable)
    members = []
    for trace in _trace_family(bottom, removable):
        mask = bottom_mask
        for d in trace:
            mask |= 1 << d
        member = NumericalSemigroup.from_small_elements(
            [x for x in range(frob + 1) if mask >> x & 1], frob
        )
        assert contains_genset(member, ctx.required), member
        members.append(member)
    members.sort(key=gap_key)
    assert s in members, "the class must contain its top"
    return FrobeniusClass(s, bottom, removable, tuple(members))


def enumerate_with_frobenius(required, frobenius: int, *, workers: int = 1) -> list[NumericalSemigroup]:
    """Every numerical semigroup with Frobenius number F containing the required set.

    Enumerates the irreducibles, expands each class, and concatenates.
    Classes of distinct irreducibles are provably disjoint; the merge
    asserts it.  Raises Infeasible when F is generated by the required
    set.  Output is sorted by gap list.
    """
    ctx = make_context(required, frobenius)
    tops = _expand_levels(ctx, workers)
    if workers > 1 and len(tops) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            expanded = list(pool.map(lambda t: frobenius_class(t, ctx), tops))
    else:
        expanded = [frobenius_class(t, ctx) for t in tops]
    union: set[NumericalSemigroup] = set()
    total = 0
    for cls in expanded:
        union.update(cls.members)
        total += len(cls.members)
    assert len(union) == total, "classes of distinct irreducibles must be disjoint"
    return sorted(union, key=gap_key)
