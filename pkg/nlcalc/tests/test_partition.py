#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

from collections import Counter

import pytest
from hypothesis import given, strategies as st

import nlcalc.core.partition as partition
from nlcalc.core.entities import (Partition, EntityDataValueException,
                                  EntityOverflowException, INT64_MAX)


@st.composite
def partitions(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Partition(())
    k = draw(st.integers(min_value=1, max_value=n))
    binAssignments = draw(st.lists(st.integers(min_value=0, max_value=k - 1),
                                   min_size=n, max_size=n))
    return Partition(sorted(Counter(binAssignments).values(), reverse=True))


def parts(values):
    return [p.parts for p in values]


def test_Conjugate_TransposesTheDiagram():
    assert(partition.conjugate((4, 2, 1)).parts == (3, 2, 1, 1))
    assert(partition.conjugate(()).isEmpty())


@given(partitions())
def test_Conjugate_IsAnInvolution(p):
    assert(partition.conjugate(partition.conjugate(p)) == p)
    assert(partition.conjugate(p).size() == p.size())


def test_MeetAndJoin_AreComponentwise():
    assert(partition.meet((3, 1), (2, 2)).parts == (2, 1))
    assert(partition.join((3, 1), (2, 2)).parts == (3, 2))
    assert(partition.meet((2,), (1, 1)).parts == (1,))
    assert(partition.sym_diff_size((3, 1), (2, 2)) == 2)


@given(partitions(), partitions())
def test_MeetAndJoin_PreserveTotalSize(a, b):
    assert(partition.meet(a, b).size() + partition.join(a, b).size() ==
           a.size() + b.size())
    assert(a.contains(partition.meet(a, b)))
    assert(partition.join(a, b).contains(b))


def test_UnionSorted_AndSorts():
    assert(partition.union_sorted((3, 1), (2, 2)).parts == (3, 2, 2, 1))
    assert(partition.sort1((3, 1), (2, 2)).parts == (3, 2))
    assert(partition.sort2((3, 1), (2, 2)).parts == (2, 1))


def test_HalfFloorAndCeil():
    assert(partition.half_floor((3, 1), (2, 2)).parts == (2, 1))
    assert(partition.half_ceil((3, 1), (2, 2)).parts == (3, 2))


def test_AddAndScale():
    assert(partition.add((2, 1), (1, 1, 1)).parts == (3, 2, 1))
    assert(partition.scale(3, (2, 1)).parts == (6, 3))
    with pytest.raises(EntityDataValueException):
        partition.scale(0, (2, 1))
    with pytest.raises(EntityOverflowException):
        partition.scale(2, (INT64_MAX // 2 + 1,))


def test_SubpartitionsOfSize_LexicographicallyDecreasing():
    assert(parts(partition.subpartitions_of_size((2, 2), 2)) ==
           [(2,), (1, 1)])
    assert(parts(partition.subpartitions_of_size((3, 1), 0)) == [()])
    assert(partition.subpartitions_of_size((1,), 2) == [])


@given(partitions(), st.integers(min_value=0, max_value=8))
def test_SubpartitionsOfSize_AreDistinctAndContained(bound, size):
    found = partition.subpartitions_of_size(bound, size)
    assert(len(set(found)) == len(found))
    assert(all(bound.contains(p) and p.size() == size for p in found))


def test_PartitionsOf_Counts():
    assert(parts(partition.partitions_of(4)) ==
           [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
    assert(parts(partition.partitions_of(0)) == [()])
    assert([len(partition.partitions_of(n)) for n in range(1, 9)] ==
           [1, 2, 3, 5, 7, 11, 15, 22])
    assert(len(partition.partitions_up_to(3)) == 7)


def test_PartitionsInBox_AndComplement():
    assert(parts(partition.partitions_in_box(2, 2)) ==
           [(), (1,), (2,), (1, 1), (2, 1), (2, 2)])
    assert(partition.complement_in_box((2, 1), 2, 2).parts == (1,))
    assert(partition.complement_in_box((), 2, 3).parts == (3, 3))
    with pytest.raises(EntityDataValueException):
        partition.complement_in_box((3,), 2, 2)


def test_HorizontalStrips():
    assert(set(parts(partition.horizontal_strips_removed((2, 1), 1))) ==
           {(1, 1), (2,)})
    assert(set(parts(partition.horizontal_strips_added((1,), 2))) ==
           {(3,), (2, 1)})
    assert(partition.is_horizontal_strip((3, 1), (1,)))
    assert(not partition.is_horizontal_strip((2, 2), (1, 1)))
    assert(not partition.is_horizontal_strip((2,), (1, 1)))


@given(partitions(), st.integers(min_value=0, max_value=4))
def test_HorizontalStrips_AddedAndRemovedAreDual(p, size):
    for grown in partition.horizontal_strips_added(p, size):
        assert(partition.is_horizontal_strip(grown, p))
        assert(p in partition.horizontal_strips_removed(grown, size))


def test_Boxes():
    assert(parts(partition.boxes_added((1,))) == [(2,), (1, 1)])
    assert(parts(partition.boxes_removed((2, 1))) == [(1, 1), (2,)])
    assert(partition.boxes_removed(()) == [])


def test_ShapePredicates():
    assert(partition.is_rectangle((2, 2)))
    assert(not partition.is_rectangle(()))
    assert(partition.is_single_row((3,)))
    assert(partition.is_single_column((1, 1, 1)))
    assert(not partition.is_single_column((2, 1)))


def test_ParseAndFormat():
    assert(partition.parse_partition("4,2,1") == Partition((4, 2, 1)))
    assert(partition.format_partition(()) == "-")
    with pytest.raises(EntityDataValueException):
        partition.parse_partition("4,,1")
