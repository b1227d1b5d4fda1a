"""Class expansion: bottoms, closure traces, and all semigroups with fixed F."""

import pytest

from numsem import errors
from numsem.classes import (
    _trace_family,
    class_minimum,
    closure_trace,
    enumerate_with_frobenius,
    frobenius_class,
    trace_family,
)
from numsem.core import FULL_SEMIGROUP, NumericalSemigroup, gap_key
from numsem.irreducible import enumerate_irreducibles, irreducible_closure, make_context
from numsem.oracle import all_semigroups_with_frobenius

sg = NumericalSemigroup.from_generators


@pytest.fixture
def ctx4_11():
    return make_context([4], 11)


class TestClassMinimum:
    def test_strict_bottom(self, ctx4_11):
        assert class_minimum(sg([4, 6, 9]), ctx4_11) == sg([4, 13, 14, 15])

    def test_self_bottom(self, ctx4_11):
        assert class_minimum(sg([4, 5]), ctx4_11) == sg([4, 5])
        assert class_minimum(sg([2, 13]), ctx4_11) == sg([2, 13])


class TestClosureTrace:
    def test_single_element_drags_its_translates(self, ctx4_11):
        cls = frobenius_class(sg([4, 6, 9]), ctx4_11)
        assert closure_trace({6}, cls) == frozenset({6, 10})
        assert closure_trace({9}, cls) == frozenset({9})
        assert closure_trace(set(), cls) == frozenset()

    def test_outside_removable_set(self, ctx4_11):
        cls = frobenius_class(sg([4, 6, 9]), ctx4_11)
        with pytest.raises(errors.NotInD):
            closure_trace({5}, cls)


class TestTraceFamily:
    def test_golden_family(self, ctx4_11):
        cls = frobenius_class(sg([4, 6, 9]), ctx4_11)
        assert trace_family(cls) == frozenset(
            frozenset(x)
            for x in [set(), {9}, {10}, {6, 10}, {9, 10}, {6, 9, 10}]
        )

    def test_empty_removable(self, ctx4_11):
        cls = frobenius_class(sg([4, 5]), ctx4_11)
        assert trace_family(cls) == frozenset({frozenset()})

    def test_size_bound(self):
        ctx = make_context([], 9)
        for top in enumerate_irreducibles([], 9):
            cls = frobenius_class(top, ctx)
            assert len(trace_family(cls)) <= 2 ** len(cls.removable)

    def test_capacity_guard(self):
        with pytest.raises(errors.CapacityExceeded):
            _trace_family(FULL_SEMIGROUP, tuple(range(100, 131)))


class TestFrobeniusClass:
    def test_golden_members(self, ctx4_11):
        cls = frobenius_class(sg([4, 6, 9]), ctx4_11)
        assert cls.top == sg([4, 6, 9])
        assert cls.bottom == sg([4, 13, 14, 15])
        assert cls.removable == (6, 9, 10)
        assert set(cls.members) == {
            sg([4, 6, 9]),
            sg([4, 6, 13, 15]),
            sg([4, 9, 10, 15]),
            sg([4, 9, 14, 15]),
            sg([4, 10, 13, 15]),
            sg([4, 13, 14, 15]),
        }

    def test_singleton_classes(self, ctx4_11):
        assert frobenius_class(sg([4, 5]), ctx4_11).members == (sg([4, 5]),)
        assert frobenius_class(sg([2, 13]), ctx4_11).members == (sg([2, 13]),)

    def test_members_are_the_interval(self, ctx4_11):
        # A semigroup belongs to the class iff it sits between bottom and top.
        family = all_semigroups_with_frobenius(11, [4])
        for top in enumerate_irreducibles([4], 11):
            cls = frobenius_class(top, ctx4_11)
            interval = [
                t for t in family if cls.bottom.issubset(t) and t.issubset(cls.top)
            ]
            assert sorted(cls.members, key=gap_key) == interval

    def test_closure_fiber(self, ctx4_11):
        for top in enumerate_irreducibles([4], 11):
            cls = frobenius_class(top, ctx4_11)
            for member in cls.members:
                assert irreducible_closure(member) == top


class TestEnumerateWithFrobenius:
    def test_golden_eight(self):
        result = enumerate_with_frobenius([4], 11)
        assert [s.minimal_generators() for s in result] == [
            (4, 13, 14, 15),
            (4, 10, 13, 15),
            (4, 9, 14, 15),
            (4, 9, 10, 15),
            (4, 6, 13, 15),
            (4, 6, 9),
            (4, 5),
            (2, 13),
        ]

    def test_infeasible(self):
        with pytest.raises(errors.Infeasible):
            enumerate_with_frobenius([1], 1)

    def test_empty_required_matches_oracle(self):
        assert enumerate_with_frobenius([], 3) == all_semigroups_with_frobenius(3)

    def test_classes_partition_the_family(self):
        ctx = make_context([], 10)
        tops = enumerate_irreducibles([], 10)
        classes = [frobenius_class(t, ctx) for t in tops]
        union = set()
        for cls in classes:
            union.update(cls.members)
        assert len(union) == sum(len(c.members) for c in classes)
        assert union == set(all_semigroups_with_frobenius(10))

    def test_genus_floor_with_equality_at_tops(self):
        tops = set(enumerate_irreducibles([4], 11))
        for s in enumerate_with_frobenius([4], 11):
            floor = (11 + 2) // 2
            assert s.genus >= floor
            assert (s.genus == floor) == (s in tops)

    def test_workers_do_not_change_output(self):
        assert enumerate_with_frobenius([], 11, workers=4) == enumerate_with_frobenius([], 11)

    def test_matches_oracle_on_sample(self):
        for required, frob in [((), 7), ((2,), 9), ((4,), 10), ((3, 5), 7)]:
            assert enumerate_with_frobenius(required, frob) == all_semigroups_with_frobenius(
                frob, required
            )
