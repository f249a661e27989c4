#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import nlcalc.core.inequalities as inequalities
from nlcalc.core.entities import Partition
from nlcalc.core.newell_littlewood import nl_number
from nlcalc.core.partition import partitions_up_to
from nlcalc.core.tableau import lr_coefficient


@st.composite
def partitions(draw, max_n=4):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Partition(())
    k = draw(st.integers(min_value=1, max_value=n))
    binAssignments = draw(st.lists(st.integers(min_value=0, max_value=k - 1),
                                   min_size=n, max_size=n))
    return Partition(sorted(Counter(binAssignments).values(), reverse=True))


def _twoRowPartitions(maxSize):
    return [partition for partition in partitions_up_to(maxSize)
            if partition.length() <= 2]


def test_Tau():
    assert(inequalities.tau((1,)) == ())
    assert(inequalities.tau((2,)) == (1,))
    assert(inequalities.tau((1, 3)) == (1,))
    assert(inequalities.tau((2, 3)) == (1, 1))
    assert(inequalities.tau((3, 1)) == (1,))


def test_HornTriples_DimensionTwo():
    triples = inequalities.horn_triples(2)
    assert(len(triples) == 3)
    assert([(t.getI(), t.getJ(), t.getK()) for t in triples] ==
           [((1,), (1,), (1,)), ((1,), (2,), (2,)), ((2,), (1,), (2,))])
    assert(triples[0].describe() == "lam1 <= mu1 + nu1")
    assert(inequalities.horn_triples(1) == [])


def test_HornTriples_RejectsNonPositiveDimension():
    with pytest.raises(inequalities.InequalityException):
        inequalities.horn_triples(0)


def test_HornTriples_AreLRPositive():
    for triple in inequalities.horn_triples(4):
        tauI, tauJ, tauK = triple.getTaus()
        assert(lr_coefficient(tauI, tauJ, tauK) > 0)
        assert(len(triple.getI()) == triple.getD() < 4)


def test_HornViolations_ReportTheInequality():
    violations = list(inequalities.horn_violations((1, 1), (1, 1), (4,)))
    assert(violations[0] == "lam1 <= mu1 + nu1 (4 > 2)")
    assert(not inequalities.horn_holds((1, 1), (1, 1), (4,)))


def test_HornViolations_RejectsSmallDimension():
    with pytest.raises(inequalities.InequalityException):
        list(inequalities.horn_violations((1, 1, 1), (1,), (2,), n=2))


def test_LRPositiveViaHorn():
    assert(inequalities.lr_positive_via_horn((1,), (1,), (2,)))
    assert(inequalities.lr_positive_via_horn((2,), (2,), (3, 1)))
    assert(not inequalities.lr_positive_via_horn((1, 1), (1, 1), (4,)))
    with pytest.raises(inequalities.InequalityException):
        inequalities.lr_positive_via_horn((1,), (1,), (1,))


@settings(max_examples=40, deadline=None)
@given(partitions(max_n=3), partitions(max_n=3), st.data())
def test_LRPositiveViaHorn_AgreesWithLR(mu, nu, data):
    size = mu.size() + nu.size()
    candidates = [lam for lam in partitions_up_to(size)
                  if lam.size() == size]
    lam = data.draw(st.sampled_from(candidates))
    assert(inequalities.lr_positive_via_horn(mu, nu, lam) ==
           (lr_coefficient(mu, nu, lam) > 0))


def test_ExtendedWeylIndices():
    assert(inequalities.extended_weyl_indices(1) == [])
    assert(inequalities.extended_weyl_indices(2) ==
           [inequalities.ExtWeylIndex(1, 2, 1, 2, 0, 0, 0)])
    for index in inequalities.extended_weyl_indices(4):
        assert(1 <= index.k <= index.i < index.j <= index.l <= 4)
        assert(0 <= index.p <= index.m <= index.M)


def test_ExtendedWeylViolations_ReportTheRoles():
    violations = list(inequalities.extended_weyl_violations((4,), (2,), (),
                                                            n=2))
    assert(violations[0] == "mu1 - mu2 + lam2 - lam1 <= nu1 + nu2 (4 > 2)")
    assert(not inequalities.extended_weyl_holds((4,), (2,), (), n=2))
    assert(inequalities.extended_weyl_holds((4,), (2,), ()))


def test_Inequalities_PassAVanishingTriple():
    assert(nl_number((6,), (4, 2, 2), (4, 4)) == 0)
    assert(inequalities.horn_holds((6,), (4, 2, 2), (4, 4), n=3))
    assert(inequalities.extended_weyl_holds((6,), (4, 2, 2), (4, 4), n=3))


@settings(max_examples=40, deadline=None)
@given(partitions(), partitions(), partitions())
def test_Inequalities_AreNecessary(mu, nu, lam):
    if nl_number(mu, nu, lam) > 0:
        assert(inequalities.horn_holds(mu, nu, lam))
        assert(inequalities.extended_weyl_holds(mu, nu, lam))


def test_NL2Check_Decisions():
    assert(inequalities.nl2_member((1, 1), (1, 1), (1, 1)))
    decision = inequalities.nl2_check((1,), (1,), (1,))
    assert(not decision.isMember())
    assert(decision.getViolation() == "parity: |mu| + |nu| + |lam| is odd")
    decision = inequalities.nl2_check((5,), (1,), (1, 1))
    assert(not decision)
    assert(decision.getViolation() == "triangle: |mu| <= |nu| + |lam|")


def test_NL2Check_RejectsThreeParts():
    with pytest.raises(inequalities.InequalityException):
        inequalities.nl2_check((1, 1, 1), (1,), (2,))


def test_NL2Check_AgreesWithNLNumber():
    candidates = _twoRowPartitions(4)
    for mu, nu, lam in product(candidates, repeat=3):
        assert(inequalities.nl2_member(mu, nu, lam) ==
               (nl_number(mu, nu, lam) > 0))


def _twoRowPartitionsWithParts(maxPart):
    return [Partition(tuple(part for part in (first, second) if part))
            for first in range(maxPart + 1) for second in range(first + 1)]


@pytest.mark.slow
def test_NL2Check_AgreesWithNLNumberForPartsUpToSix():
    candidates = _twoRowPartitionsWithParts(6)
    assert(len(candidates) == 28)
    for mu, nu, lam in product(candidates, repeat=3):
        assert(inequalities.nl2_member(mu, nu, lam) ==
               (nl_number(mu, nu, lam) > 0))


@pytest.mark.slow
def test_Inequalities_AreNecessaryUpToSizeSixInDimensionThree():
    candidates = [partition for partition in partitions_up_to(6)
                  if partition.length() <= 3]
    positive = 0
    for mu, nu, lam in product(candidates, repeat=3):
        if nl_number(mu, nu, lam) > 0:
            positive += 1
            assert(inequalities.horn_holds(mu, nu, lam, n=3))
            assert(inequalities.extended_weyl_holds(mu, nu, lam, n=3))
    assert(positive > 0)
