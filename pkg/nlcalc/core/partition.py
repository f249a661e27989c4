#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Partition:
    Shape-level arithmetic on partitions: conjugation, meet and join,
    sums and averages, and the deterministic generators used by every
    enumeration in NLCalc.

    Public functions accept Partitions (or part sequences) and return
    Partitions. The underscore helpers work on canonical part tuples and
    are what the hot loops of the other modules call.
"""

from itertools import zip_longest
import logging

from nlcalc.core.config import memoized
from nlcalc.core.entities import (Partition, EntityDataValueException)

logger = logging.getLogger(__name__)


def asPartition(value):
    """Coerces a Partition or part sequence to a Partition."""
    if isinstance(value, Partition):
        return value
    return Partition(value)


def partsOf(value):
    """Canonical part tuple of a Partition or part sequence."""
    return asPartition(value).parts


def _canonical(values):
    values = tuple(values)
    end = len(values)
    while end > 0 and values[end - 1] == 0:
        end -= 1
    return values[:end]


######
# Tuple-level helpers
######
def _conjugate(parts):
    if not parts:
        return ()
    return tuple(sum(1 for part in parts if part > column)
                 for column in range(parts[0]))


def _meet(a, b):
    return _canonical(min(x, y) for x, y in zip(a, b))


def _join(a, b):
    return tuple(max(x, y) for x, y in zip_longest(a, b, fillvalue=0))


def _contains(outer, inner):
    if len(inner) > len(outer):
        return False
    return all(small <= big for small, big in zip(inner, outer))


@memoized
def _subpartitions(bound, size):
    """All α ⊆ bound with |α| = size, lexicographically decreasing."""
    results = []

    def extend(index, remaining, ceiling, prefix):
        if remaining == 0:
            results.append(tuple(prefix))
            return
        if index >= len(bound):
            return
        top = min(ceiling, bound[index], remaining)
        for value in range(top, 0, -1):
            capacity = value + sum(min(value, limit)
                                   for limit in bound[index + 1:])
            if capacity < remaining:
                break
            prefix.append(value)
            extend(index + 1, remaining - value, value, prefix)
            prefix.pop()

    if size < 0:
        return ()
    extend(0, size, size, [])
    return tuple(results)


@memoized
def _stripsRemoved(parts, size):
    """All κ ⊆ parts such that parts/κ is a horizontal strip of `size`."""
    results = []
    length = len(parts)

    def extend(index, remaining, prefix):
        if index == length:
            if remaining == 0:
                results.append(_canonical(prefix))
            return
        below = parts[index + 1] if index + 1 < length else 0
        most = min(parts[index] - below, remaining)
        for removed in range(most, -1, -1):
            prefix.append(parts[index] - removed)
            extend(index + 1, remaining - removed, prefix)
            prefix.pop()

    extend(0, size, [])
    return tuple(results)


@memoized
def _stripsAdded(parts, size):
    """All κ ⊇ parts such that κ/parts is a horizontal strip of `size`."""
    results = []
    padded = parts + (0,)

    def extend(index, remaining, prefix):
        if index == len(padded):
            if remaining == 0:
                results.append(_canonical(prefix))
            return
        if index == 0:
            most = remaining
        else:
            most = min(padded[index - 1] - padded[index], remaining)
        for added in range(most, -1, -1):
            prefix.append(padded[index] + added)
            extend(index + 1, remaining - added, prefix)
            prefix.pop()

    extend(0, size, [])
    return tuple(results)


def _boxesAdded(parts):
    padded = parts + (0,)
    return tuple(_canonical(padded[:row] + (padded[row] + 1,) +
                            padded[row + 1:])
                 for row in range(len(padded))
                 if row == 0 or padded[row - 1] > padded[row])


def _boxesRemoved(parts):
    padded = parts + (0,)
    return tuple(_canonical(padded[:row] + (padded[row] - 1,) +
                            padded[row + 1:])
                 for row in range(len(parts))
                 if padded[row] > padded[row + 1])


######
# Public operations
######
def conjugate(p):
    """The transpose diagram."""
    return Partition.fromCanonical(_conjugate(partsOf(p)))


def meet(a, b):
    """Componentwise minimum μ∧ν."""
    return Partition.fromCanonical(_meet(partsOf(a), partsOf(b)))


def join(a, b):
    """Componentwise maximum μ∨ν."""
    return Partition.fromCanonical(_join(partsOf(a), partsOf(b)))


def sym_diff_size(a, b):
    """|μΔν| = |μ| + |ν| - 2|μ∧ν|."""
    a, b = asPartition(a), asPartition(b)
    return a.size() + b.size() - 2 * sum(_meet(a.parts, b.parts))


def union_sorted(a, b):
    """Multiset union of the parts, sorted decreasing."""
    return Partition.fromCanonical(
        tuple(sorted(partsOf(a) + partsOf(b), reverse=True)))


def add(a, b):
    """
    Componentwise sum.

    Raises
    ------
    EntityOverflowException
        A part or the size leaves the 64-bit range.
    """
    return Partition(x + y for x, y in zip_longest(partsOf(a), partsOf(b),
                                                   fillvalue=0))


def scale(k, p):
    """
    kλ = (kλ_1, kλ_2, ...).

    Raises
    ------
    EntityDataValueException
        k is not a positive integer.
    EntityOverflowException
        A part or the size leaves the 64-bit range.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise EntityDataValueException(
            "scale expects <k> to be a positive integer. Received "
            "{k}.".format(k=k))
    return Partition(k * part for part in partsOf(p))


def half_floor(a, b):
    """⌊(μ+ν)/2⌋ coordinatewise."""
    return Partition((x + y) // 2
                     for x, y in zip_longest(partsOf(a), partsOf(b),
                                             fillvalue=0))


def half_ceil(a, b):
    """⌈(μ+ν)/2⌉ coordinatewise."""
    return Partition((x + y + 1) // 2
                     for x, y in zip_longest(partsOf(a), partsOf(b),
                                             fillvalue=0))


def sort1(a, b):
    """(ρ_1, ρ_3, ρ_5, ...) where ρ = union_sorted(a, b)."""
    return Partition.fromCanonical(union_sorted(a, b).parts[0::2])


def sort2(a, b):
    """(ρ_2, ρ_4, ρ_6, ...) where ρ = union_sorted(a, b)."""
    return Partition.fromCanonical(union_sorted(a, b).parts[1::2])


def subpartitions_of_size(bound, s):
    """
    All partitions α ⊆ bound with |α| = s, each exactly once, in
    lexicographically decreasing order.
    """
    return [Partition.fromCanonical(parts)
            for parts in _subpartitions(partsOf(bound), s)]


def partitions_of(n):
    """All partitions of n, lexicographically decreasing."""
    return [Partition.fromCanonical(parts)
            for parts in _subpartitions((n,) * n, n)]


def partitions_up_to(max_size):
    """All partitions of size 0..max_size; by size, then decreasing."""
    partitions = []
    for size in range(max_size + 1):
        partitions.extend(partitions_of(size))
    return partitions


def partitions_in_box(rows, cols):
    """All partitions inside the rows×cols rectangle, by size, then
    decreasing."""
    bound = (cols,) * rows if cols > 0 else ()
    partitions = []
    for size in range(rows * cols + 1):
        partitions.extend(Partition.fromCanonical(parts)
                          for parts in _subpartitions(bound, size))
    return partitions


def complement_in_box(p, rows, cols):
    """
    λ∨ = (b - λ_a, ..., b - λ_1) inside the a×b rectangle.

    Raises
    ------
    EntityDataValueException
        λ does not fit in the rectangle.
    """
    p = asPartition(p)
    if p.length() > rows or (p.length() > 0 and p.part(1) > cols):
        raise EntityDataValueException(
            "{p} does not fit in a {rows}x{cols} rectangle.".format(
                p=p, rows=rows, cols=cols))
    return Partition(cols - p.part(row) for row in range(rows, 0, -1))


def horizontal_strips_removed(p, j):
    return [Partition.fromCanonical(parts)
            for parts in _stripsRemoved(partsOf(p), j)]


def horizontal_strips_added(p, j):
    return [Partition.fromCanonical(parts)
            for parts in _stripsAdded(partsOf(p), j)]


def is_horizontal_strip(outer, inner):
    """True when inner ⊆ outer and no two cells of outer/inner share a
    column."""
    outer, inner = partsOf(outer), partsOf(inner)
    if not _contains(outer, inner):
        return False
    innerPadded = inner + (0,) * (len(outer) - len(inner))
    return all(outer[row + 1] <= innerPadded[row]
               for row in range(len(outer) - 1))


def boxes_added(p):
    return [Partition.fromCanonical(parts)
            for parts in _boxesAdded(partsOf(p))]


def boxes_removed(p):
    return [Partition.fromCanonical(parts)
            for parts in _boxesRemoved(partsOf(p))]


def is_rectangle(p):
    parts = partsOf(p)
    return len(parts) > 0 and parts[0] == parts[-1]


def is_single_row(p):
    return len(partsOf(p)) == 1


def is_single_column(p):
    parts = partsOf(p)
    return len(parts) > 0 and parts[0] == 1


def parse_partition(text):
    """
    Reads the text encoding `4,2,1` (`-` for the empty partition).

    Raises
    ------
    EntityDataValueException
        Negative or non-decimal parts, empty fields, or increasing parts.
    """
    return Partition.fromText(text)


def format_partition(p):
    return asPartition(p).toText()
