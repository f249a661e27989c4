#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

from collections import Counter
from math import comb

from hypothesis import given, settings, strategies as st

import nlcalc.core.tableau as tableau
from nlcalc.core.entities import EntityFactory, Partition


@st.composite
def partitions(draw, max_n=4):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Partition(())
    k = draw(st.integers(min_value=1, max_value=n))
    binAssignments = draw(st.lists(st.integers(min_value=0, max_value=k - 1),
                                   min_size=n, max_size=n))
    return Partition(sorted(Counter(binAssignments).values(), reverse=True))


def test_LRCoefficient_WorkedExample():
    assert(tableau.lr_coefficient((3, 1), (4, 2, 1), (5, 4, 2)) == 2)
    assert(tableau.lr_coefficient((4, 2, 1), (3, 1), (5, 4, 2)) == 2)


def test_LRCoefficient_VanishesWithoutEnumeration():
    assert(tableau.lr_coefficient((2,), (1,), (2, 2)) == 0)
    assert(tableau.lr_coefficient((3,), (1,), (2, 2)) == 0)
    assert(tableau.lr_coefficient((), (2, 1), (2, 1)) == 1)


def test_EnumerateLRTableaux_WorkedExample():
    shape = EntityFactory.makeSkewShapeEntity((5, 4, 2), (3, 1))
    fillings = tableau.enumerate_lr_tableaux(shape, (4, 2, 1))
    assert([filling.getRows() for filling in fillings] ==
           [((1, 1), (1, 1, 2), (2, 3)), ((1, 1), (1, 2, 2), (1, 3))])
    assert(all(tableau.is_ballot(filling) for filling in fillings))
    assert(all(tableau.content(filling).toPartition() == Partition((4, 2, 1))
               for filling in fillings))


def test_EnumerateLRTableaux_EmptyWhenSizesDiffer():
    shape = EntityFactory.makeSkewShapeEntity((3, 1), (1,))
    assert(tableau.enumerate_lr_tableaux(shape, (2,)) == [])


def test_IsBallot():
    shape = EntityFactory.makeSkewShapeEntity((2, 1))
    good = EntityFactory.makeFillingEntity(shape, [[1, 1], [2]])
    bad = EntityFactory.makeFillingEntity(
        EntityFactory.makeSkewShapeEntity((2, 1), (1,)), [[2], [1]])
    assert(tableau.is_ballot(good))
    assert(tableau.rowword(bad) == (2, 1))
    assert(not tableau.is_ballot(bad))


def test_IsSemistandard():
    shape = EntityFactory.makeSkewShapeEntity((2, 2))
    assert(tableau.is_semistandard(shape, [[1, 1], [2, 2]]))
    assert(not tableau.is_semistandard(shape, [[1, 2], [2, 2]]))
    assert(not tableau.is_semistandard(shape, [[2, 1], [3, 3]]))


def test_LRExpand_KnownProduct():
    assert(tableau.lr_expand((1,), (1,)) == {(2,): 1, (1, 1): 1})
    assert(tableau.lr_expand((2, 1), (2, 1)) ==
           {(4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2,
            (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1})


@settings(max_examples=40, deadline=None)
@given(partitions(), partitions())
def test_LRExpand_AgreesWithLRCoefficient(mu, nu):
    expansion = tableau.lr_expand(mu, nu)
    assert(expansion == tableau.lr_expand(nu, mu))
    for lam, coefficient in expansion.items():
        assert(tableau.lr_coefficient(mu, nu, lam) == coefficient)


@settings(max_examples=40, deadline=None)
@given(partitions(), partitions())
def test_LRExpand_CountsStandardTableaux(mu, nu):
    total = sum(coefficient * tableau.standard_count(lam)
                for lam, coefficient in tableau.lr_expand(mu, nu).items())
    assert(total == comb(mu.size() + nu.size(), mu.size()) *
           tableau.standard_count(mu) * tableau.standard_count(nu))


def test_StandardCount_HookLengthFormula():
    assert(tableau.standard_count((3, 2)) == 5)
    assert(tableau.standard_count((2, 2)) == 2)
    assert(tableau.standard_count(()) == 1)


@given(partitions(max_n=7))
def test_StandardCount_MatchesEnumeration(lam):
    assert(tableau.standard_count(lam) ==
           tableau.standard_count_by_enumeration(lam))
