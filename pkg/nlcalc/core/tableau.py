#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Tableau:
    Littlewood-Richardson tableaux: ballot tests, enumeration, and the
    coefficients c_{μ,ν}^λ every other module is built on.

    An LR tableau of shape λ/μ and content ν is described row by row by
    how many of each letter the row holds. A row is then the weakly
    increasing word 1^x1 2^x2 ..., so semistandardness reduces to a column
    condition against the row above, and the ballot condition to

        #{i in rows above} >= #{i+1 in rows above} + #{i+1 in this row}.

    Entries in row r never exceed r, and never exceed ℓ(ν).
"""

from math import factorial
import logging

from nlcalc.core.config import memoized
from nlcalc.core.entities import Filling, EntityDataValueException
from nlcalc.core.partition import (partsOf, _contains,
                                   _subpartitions, _boxesRemoved)

logger = logging.getLogger(__name__)


def is_ballot(f):
    """
    True iff every prefix of the row reading word (rows top to bottom,
    each read right to left) has at least as many i's as (i+1)'s.
    """
    counts = {}
    for letter in f.rowword():
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


def rowword(f):
    return f.rowword()


def is_semistandard(shape, rows):
    """
    True when `rows` fill the skew shape with weakly increasing rows and
    strictly increasing columns.
    """
    try:
        Filling(shape=shape, rows=rows)
    except EntityDataValueException:
        return False
    return True


def content(f):
    """The ContentVector of a filling."""
    return f.content()


def _rowCounts(outer, inner, letters):
    """
    Yields one tuple per LR tableau: for each row, the tuple of letter
    counts (x_1, ..., x_letters). The search fills rows top to bottom and,
    inside a row, letters in increasing order.
    """
    rows = len(outer)
    innerPadded = inner + (0,) * (rows - len(inner))
    lengths = [outer[row] - innerPadded[row] for row in range(rows)]
    totals = [0] * len(letters)
    chosen = []

    def fillRow(row):
        if row == rows:
            if all(total == target for total, target in zip(totals, letters)):
                yield tuple(chosen)
            return
        counts = [0] * len(letters)
        yield from fillLetter(row, 0, lengths[row], 0, 0, counts)

    def fillLetter(row, letter, remaining, placed, placedAbove, counts):
        # placed: cells of this row holding letters < letter.
        # placedAbove: cells of the row above holding letters < letter.
        if remaining == 0 or letter == min(row + 1, len(letters)):
            if remaining != 0:
                return
            for index, count in enumerate(counts):
                totals[index] += count
            chosen.append(tuple(counts))
            yield from fillRow(row + 1)
            chosen.pop()
            for index, count in enumerate(counts):
                totals[index] -= count
            return
        most = min(remaining, letters[letter] - totals[letter])
        if letter > 0:
            most = min(most, totals[letter - 1] - totals[letter])
        if row > 0:
            most = min(most, innerPadded[row - 1] + placedAbove -
                       innerPadded[row] - placed)
        aboveCount = chosen[row - 1][letter] if row > 0 else 0
        isLast = letter == min(row + 1, len(letters)) - 1
        for count in range(most, -1, -1):
            if isLast and count != remaining:
                continue
            counts[letter] = count
            yield from fillLetter(row, letter + 1, remaining - count,
                                  placed + count, placedAbove + aboveCount,
                                  counts)
        counts[letter] = 0

    yield from fillRow(0)


def _lrPossible(mu, nu, lam):
    return (sum(mu) + sum(nu) == sum(lam) and _contains(lam, mu) and
            _contains(lam, nu))


@memoized
def _lrCount(lam, inner, letters):
    if not _lrPossible(inner, letters, lam):
        return 0
    if not letters:
        return 1
    return sum(1 for _ in _rowCounts(lam, inner, letters))


def _lr(mu, nu, lam):
    """c_{μ,ν}^λ on part tuples. The smaller factor is used as content."""
    if (sum(nu), nu) > (sum(mu), mu):
        mu, nu = nu, mu
    return _lrCount(lam, mu, nu)


def lr_coefficient(mu, nu, lam):
    """
    The Littlewood-Richardson coefficient c_{μ,ν}^λ: the number of ballot
    semistandard tableaux of shape λ/μ and content ν.

    Returns 0 without enumerating when μ ⊄ λ, ν ⊄ λ or
    |μ| + |ν| ≠ |λ|.
    """
    return _lr(partsOf(mu), partsOf(nu), partsOf(lam))


def enumerate_lr_tableaux(shape, content):
    """
    All LR tableaux of the given skew shape and content.

    Tableaux come in a fixed order: rows are decided top to bottom, and
    within a row the count of each letter is tried from largest to
    smallest, letters in increasing order.

    Parameters
    ----------
    shape : SkewShape
    content : Partition

    Returns
    -------
    list of Filling
    """
    outer = shape.getOuter().parts
    inner = shape.getInner().parts
    letters = partsOf(content)
    if shape.size() != sum(letters) or not _contains(outer, letters):
        return []
    fillings = []
    for counts in _rowCounts(outer, inner, letters):
        rows = []
        for rowCounts in counts:
            row = []
            for letter, count in enumerate(rowCounts, start=1):
                row.extend([letter] * count)
            rows.append(row)
        fillings.append(Filling(shape=shape, rows=rows))
    return fillings


@memoized
def _lrExpand(mu, nu):
    """
    {λ: c_{μ,ν}^λ} by growing μ with a horizontal strip of ν_1 ones, then
    ν_2 twos, and so on, under the lattice condition
    Σ_{rows ≤ r} #(i+1) ≤ Σ_{rows < r} #i.
    """
    results = {}
    letters = len(nu)

    def placeLetter(letter, shape, previous):
        if letter == letters:
            key = tuple(part for part in shape if part > 0)
            results[key] = results.get(key, 0) + 1
            return
        padded = shape + [0]
        options = []

        def distribute(row, remaining, counts, ownSum, previousSum):
            if row == len(padded):
                if remaining == 0:
                    options.append(list(counts))
                return
            if row == 0:
                most = remaining
            else:
                most = min(remaining, padded[row - 1] - padded[row])
            if previous is not None:
                most = min(most, previousSum - ownSum)
            nextPrevious = previousSum + (
                previous[row] if previous is not None and
                row < len(previous) else 0)
            for count in range(most, -1, -1):
                counts.append(count)
                distribute(row + 1, remaining - count, counts,
                           ownSum + count, nextPrevious)
                counts.pop()

        distribute(0, nu[letter], [], 0, 0)
        for counts in options:
            grown = [part + count for part, count in zip(padded, counts)]
            placeLetter(letter + 1, grown, counts)

    placeLetter(0, list(mu), None)
    return tuple(sorted(results.items()))


def _lrProduct(mu, nu):
    """(λ, c) items of s_μ s_ν on part tuples; the shorter factor is
    placed letter by letter."""
    if (len(nu), nu) > (len(mu), mu):
        mu, nu = nu, mu
    return _lrExpand(mu, nu)


def lr_expand(mu, nu):
    """
    The Schur expansion of s_μ s_ν as {λ: c_{μ,ν}^λ} on part tuples.
    Agrees with lr_coefficient term by term.
    """
    return dict(_lrProduct(partsOf(mu), partsOf(nu)))


@memoized
def _skewCoefficients(outer, inner):
    """{β: c_{inner,β}^{outer}} with positive coefficients."""
    if not _contains(outer, inner):
        return ()
    size = sum(outer) - sum(inner)
    coefficients = []
    for beta in _subpartitions(outer, size):
        coefficient = _lr(inner, beta, outer)
        if coefficient > 0:
            coefficients.append((beta, coefficient))
    return tuple(coefficients)


def standard_count(lam):
    """
    f^λ, the number of standard Young tableaux of shape λ, by the hook
    length formula.
    """
    parts = partsOf(lam)
    columns = [sum(1 for part in parts if part > column)
               for column in range(parts[0] if parts else 0)]
    hooks = 1
    for row, part in enumerate(parts):
        for column in range(part):
            hooks *= (part - column) + (columns[column] - row) - 1
    return factorial(sum(parts)) // hooks


@memoized
def _standardByCorners(parts):
    if not parts:
        return 1
    return sum(_standardByCorners(smaller) for smaller in _boxesRemoved(parts))


def standard_count_by_enumeration(lam):
    """f^λ by removing the largest entry from each corner in turn."""
    return _standardByCorners(partsOf(lam))

