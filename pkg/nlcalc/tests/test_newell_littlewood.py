#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

from collections import Counter
import itertools
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

import nlcalc.core.newell_littlewood as nl
from nlcalc.core.entities import (EntityFactory, ExpansionTypeException,
                                  Partition)
from nlcalc.core.partition import conjugate, partitions_up_to
from nlcalc.core.tableau import is_ballot, lr_coefficient


@st.composite
def partitions(draw, max_n=4):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Partition(())
    k = draw(st.integers(min_value=1, max_value=n))
    binAssignments = draw(st.lists(st.integers(min_value=0, max_value=k - 1),
                                   min_size=n, max_size=n))
    return Partition(sorted(Counter(binAssignments).values(), reverse=True))


def test_NLProduct_ReproducesTheTwoByTwoTable(appendixProducts):
    for (mu, nu), expected in appendixProducts.items():
        assert(nl.nl_product(mu, nu).toPartTuples() == expected)
        assert(nl.nl_product(nu, mu).toPartTuples() == expected)


def test_NLProduct_KeepsTheSingleColumnTerm():
    product = nl.nl_product((1, 1), (2, 1))
    assert(product.coefficient((1, 1, 1)) == 1)
    assert(product.coefficient((3,)) == 1)


def test_NLProduct_CommutesWithConjugation():
    for mu, nu in [((1, 1), (2, 1)), ((2,), (2, 1)), ((2, 1), (2, 2)),
                   ((3, 1), (2,))]:
        product = nl.nl_product(mu, nu).toPartTuples()
        conjugated = nl.nl_product(conjugate(mu), conjugate(nu))
        assert({conjugate(lam).parts: coefficient
                for lam, coefficient in product.items()} ==
               conjugated.toPartTuples())


def test_NLProduct_SquareOfTwoTwoHasTwentyOneTerms():
    product = nl.nl_product((2, 2), (2, 2))
    assert(len(product) == 21)
    assert(product.coefficient((2, 2)) == 2)
    assert(product.coefficient((3, 2, 1)) == 2)


def test_NLNumber_KnownValues():
    assert(nl.nl_number((2, 2), (2, 2), (2, 2)) == 2)
    assert(nl.nl_number((6,), (4, 2, 2), (4, 4)) == 0)
    assert(nl.nl_number((1,), (1,), (1,)) == 0)
    assert(nl.nl_number((1, 1), (1, 1), (1, 1)) == 1)
    assert(nl.nl_number((), (2, 1), (2, 1)) == 1)


def test_VanishingReason():
    assert(nl.vanishing_reason((1,), (1,), (1,)) == "parity")
    assert(nl.vanishing_reason((4,), (1,), (1,)) == "triangle")
    assert(nl.vanishing_reason((2,), (2,), (1, 1, 1, 1)) == "meet")
    assert(nl.vanishing_reason((2, 2), (2, 2), (2, 2)) is None)


@settings(max_examples=30, deadline=None)
@given(partitions(), partitions(), partitions())
def test_NLNumber_IsSymmetric(mu, nu, lam):
    value = nl.nl_number(mu, nu, lam)
    for triple in permutations((mu, nu, lam)):
        assert(nl.nl_number(*triple) == value)


@pytest.mark.slow
def test_NLNumber_IsSymmetricUpToSizeFive():
    candidates = [partition.parts for partition in partitions_up_to(5)]
    values = {triple: nl.nl_number(*triple)
              for triple in itertools.product(candidates, repeat=3)}
    for triple, value in values.items():
        for permuted in permutations(triple):
            assert(values[permuted] == value)


@settings(max_examples=30, deadline=None)
@given(partitions(), partitions(), partitions())
def test_NLNumber_AgreesWithSkewFormula(mu, nu, lam):
    assert(nl.nl_number_asymmetric(mu, nu, lam) ==
           nl.nl_number(mu, nu, lam))


def test_NLNumberAsymmetric_KnownValues():
    assert(nl.nl_number_asymmetric((), (), ()) == 1)
    assert(nl.nl_number_asymmetric((1,), (1,), ()) == 1)
    assert(nl.nl_number_asymmetric((2, 2), (2, 2), (2, 2)) == 2)
    assert(nl.nl_number_asymmetric((1,), (1,), (1,)) == 0)


def test_NLNumberAsymmetric_AgreesUpToSizeThree():
    small = list(partitions_up_to(3))
    for mu in small:
        for nu in small:
            for lam in small:
                assert(nl.nl_number_asymmetric(mu, nu, lam) ==
                       nl.nl_number(mu, nu, lam))


@settings(max_examples=30, deadline=None)
@given(partitions(), partitions())
def test_NLNumber_ReducesToLRWhenSizesAdd(mu, nu):
    for lam in nl.nl_product(mu, nu).support():
        if lam.size() == mu.size() + nu.size():
            assert(nl.nl_number(mu, nu, lam) ==
                   lr_coefficient(mu, nu, lam))


def test_NLWitnesses_SumToTheNumber():
    witnesses = nl.nl_witnesses((2, 1), (2, 1), (2, 1, 1))
    assert(sum(w.getMultiplicity() for w in witnesses) == 3)
    assert(nl.nl_witnesses((1,), (1,), (1,)) == [])


def test_NLWitnesses_OfTheUnitTriple():
    witnesses = nl.nl_witnesses((1, 1), (1, 1), (1, 1))
    assert(witnesses == [EntityFactory.makeWitnessEntity((1,), (1,), (1,),
                                                         1)])


def test_KTProduct_IsBilinear(appendixProducts):
    left = EntityFactory.makeKTExpansionEntity({(1,): 1, (2,): 2})
    right = EntityFactory.makeKTExpansionEntity({(1, 1): 1})
    expected = Counter()
    expected.update(appendixProducts[((1,), (1, 1))])
    for parts, coefficient in appendixProducts[((2,), (1, 1))].items():
        expected[parts] += 2 * coefficient
    assert(nl.kt_product(left, right).toPartTuples() == dict(expected))


def test_KTProduct_RejectsSchurExpansions():
    schur = EntityFactory.makeSchurExpansionEntity({(1,): 1})
    with pytest.raises(ExpansionTypeException):
        nl.kt_product(schur, schur)


def test_NLPieri_WorkedExample():
    expansion = nl.nl_pieri((2, 1), 3)
    assert(expansion.toPartTuples() ==
           {(5, 1): 1, (4, 2): 1, (4, 1, 1): 1, (3, 2, 1): 1, (3, 1): 2,
            (2, 1, 1): 1, (4,): 1, (2, 2): 1, (2,): 1, (1, 1): 1})
    assert(expansion == nl.nl_product((2, 1), (3,)))


@settings(max_examples=30, deadline=None)
@given(partitions(), st.integers(min_value=0, max_value=3))
def test_NLPieri_MatchesProduct(mu, p):
    assert(nl.nl_pieri(mu, p) == nl.nl_product(mu, (p,) if p else ()))


@given(partitions())
def test_BoxProduct_MatchesProduct(mu):
    assert(nl.box_product(mu) == nl.nl_product(mu, (1,)))


def test_HProfile_KnownProfiles():
    assert(nl.h_profile((2, 2), (2, 2)).getValues() == (1, 2, 6, 8, 6))
    assert(nl.h_profile((3,), (2, 1)).getValues() == (2, 5, 4))


def test_OscillatingCount():
    assert(nl.oscillating_count((2, 1), 3) == 2)
    assert(nl.oscillating_count((), 2) == 1)
    assert(nl.oscillating_count((2, 1), 2) == 0)


def test_OscillatingCount_IsACoefficientOfBoxPowers():
    power = EntityFactory.makeKTExpansionEntity({(): 1})
    box = EntityFactory.makeKTExpansionEntity({(1,): 1})
    for _ in range(4):
        power = nl.kt_product(power, box)
    for lam, coefficient in power.terms():
        assert(nl.oscillating_count(lam, 4) == coefficient)


def test_DetectionWitness_SmallCases():
    assert(nl.detection_witness((3, 1)).parts == (2,))
    assert(nl.detection_witness((2, 2)).parts == (1, 1))
    assert(nl.detection_witness(()).parts == ())


def test_DetectionWitness_LargeExample():
    lam = (14, 11, 10, 8, 8, 7, 6, 6, 5, 5, 4, 3, 2, 1)
    assert(nl.detection_witness(lam).parts ==
           (7, 6, 5, 4, 4, 4, 3, 3, 3, 2, 2, 1, 1))


def test_DetectionWitness_RejectsOddSize():
    with pytest.raises(nl.DetectionException):
        nl.detection_witness((2, 1))


def test_DetectionFilling_IsAnLRTableau():
    filling = nl.detection_filling((3, 1))
    assert(filling.getRows() == ((1,), (1,)))
    filling = nl.detection_filling((3, 2, 1))
    mu = filling.getShape().getInner()
    assert(mu.parts == (2, 1))
    assert(is_ballot(filling))
    assert(filling.content().toPartition() == mu)
    assert(lr_coefficient(mu, mu, (3, 2, 1)) > 0)
