#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Analysis:
    Sweeps that test the structural theorems and conjectures about
    Newell-Littlewood numbers over every small input, plus the exact
    rank computation for the Kleber products.

    Every scan returns a ScanReport. Inputs are generated in a fixed
    order and, with threads > 1, evaluated in a process pool whose results
    are consumed in input order, so reports do not depend on the number
    of workers. Counterexamples are logged and passed to
    `onCounterexample` the moment they are consumed.
"""

from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import combinations_with_replacement, product
import logging
import random

from nlcalc.core.config import getSetting
from nlcalc.core.entities import (Partition, NLFunctionSample, ScanReport,
                                  KleberResult, HypothesisResult)
from nlcalc.core.partition import (asPartition, partsOf, meet, join, scale,
                                   half_floor, half_ceil, sort1, sort2,
                                   union_sorted, add, partitions_up_to,
                                   partitions_in_box, complement_in_box,
                                   is_rectangle, is_single_row,
                                   is_single_column, _contains)
from nlcalc.core.tableau import _lr
from nlcalc.core.newell_littlewood import (nl_number, nl_product, h_profile,
                                           detection_witness,
                                           DetectionException,
                                           _nlNumber, _nlProduct,
                                           _vanishingReason)
from nlcalc.core.inequalities import horn_holds, extended_weyl_holds

logger = logging.getLogger(__name__)

FAMILIES = ("row", "column", "diagonal")


class AnalysisException(ValueError):
    """Raised for invalid sweep parameters."""


def _checkNonNegative(name, value, minimum=0):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise AnalysisException(
            "<{name}> must be an integer >= {minimum}. Received "
            "{value}.".format(name=name, minimum=minimum, value=value))


def _asList(parts):
    return list(parts)


def _runScan(scanName, parameters, items, checker, threads=None,
             onCounterexample=None):
    """
    Applies `checker` to every item and collects the counterexamples it
    returns. `checker` must be picklable when threads > 1.
    """
    report = ScanReport(scanName, parameters)
    if threads is None:
        threads = getSetting('threads')
    logger.info("Starting scan %s over %d inputs with %s.", scanName,
                len(items), parameters)

    def consume(results):
        for counterexamples in results:
            report.addChecked()
            for counterexample in counterexamples:
                logger.warning("Counterexample in %s: %s", scanName,
                               counterexample)
                report.addCounterexample(counterexample)
                if onCounterexample is not None:
                    onCounterexample(counterexample)

    if threads <= 1 or len(items) < 2:
        consume(map(checker, items))
    else:
        chunksize = max(1, len(items) // (threads * 4))
        with ProcessPoolExecutor(max_workers=threads) as executor:
            consume(executor.map(checker, items, chunksize=chunksize))
    logger.info("Finished scan %s: %d checked, %d counterexamples.",
                scanName, report.getCheckedCount(),
                len(report.getCounterexamples()))
    return report


def _partsUpTo(maxSize):
    return [partition.parts for partition in partitions_up_to(maxSize)]


def _unorderedPairs(maxSize):
    return list(combinations_with_replacement(_partsUpTo(maxSize), 2))


######
# Sequences
######
def is_unimodal(sequence):
    """Weakly increasing up to a maximum, weakly decreasing after it."""
    values = list(sequence)
    position = 0
    while position + 1 < len(values) and values[position + 1] >= \
            values[position]:
        position += 1
    return all(values[index + 1] <= values[index]
               for index in range(position, len(values) - 1))


def is_log_concave(sequence):
    values = list(sequence)
    return all(values[index] ** 2 >= values[index - 1] * values[index + 1]
               for index in range(1, len(values) - 1))


######
# Unimodality of h-profiles
######
def _unimodalityChecker(pair):
    mu, nu = pair
    values = h_profile(mu, nu).getValues()
    if is_unimodal(values):
        return []
    return [{"mu": _asList(mu), "nu": _asList(nu), "profile": list(values)}]


def check_unimodality(max_size, threads=None, onCounterexample=None):
    """
    h_profile(μ, ν) is unimodal for every unordered pair with
    |μ|, |ν| <= max_size.
    """
    _checkNonNegative("max_size", max_size)
    return _runScan("unimodality", {"max_size": max_size},
                    _unorderedPairs(max_size), _unimodalityChecker,
                    threads, onCounterexample)


######
# Saturation
######
def _homogeneouslyVanishes(mu, nu, lam):
    """True when a condition preserved by scaling already forces N = 0."""
    if _vanishingReason(mu, nu, lam) in ("triangle", "meet"):
        return True
    n = max(len(mu), len(nu), len(lam), 1)
    return (not extended_weyl_holds(mu, nu, lam, n) or
            not horn_holds(mu, nu, lam, n))


def _saturationChecker(maxK, triple):
    mu, nu, lam = triple
    if _nlNumber(mu, nu, lam) > 0 or _homogeneouslyVanishes(mu, nu, lam):
        return []
    for k in range(2, maxK + 1):
        scaled = tuple(scale(k, parts).parts for parts in triple)
        value = _nlNumber(*scaled)
        if value > 0:
            return [{"mu": _asList(mu), "nu": _asList(nu),
                     "lam": _asList(lam), "k": k, "scaled": value,
                     "unscaled": 0}]
    return []


def _inFamily(family, triple):
    if family is None:
        return True
    if family == "diagonal":
        return triple[0] == triple[1] == triple[2]
    test = is_single_row if family == "row" else is_single_column
    return any(test(parts) for parts in triple)


def check_saturation(max_size, max_k, family=None, threads=None,
                     onCounterexample=None):
    """
    N(kμ, kν, kλ) > 0 implies N(μ, ν, λ) > 0 for 2 <= k <= max_k, over
    unordered triples with sizes <= max_size and even total size.

    Parameters
    ----------
    family : str, optional
        "row" or "column" keeps triples in which one partition is a single
        row (column); "diagonal" keeps μ = ν = λ.
    """
    _checkNonNegative("max_size", max_size)
    _checkNonNegative("max_k", max_k, minimum=1)
    if family is not None and family not in FAMILIES:
        raise AnalysisException(
            "Unknown family <{family}>; expected one of {known}.".format(
                family=family, known=", ".join(FAMILIES)))
    triples = [triple for triple in combinations_with_replacement(
        _partsUpTo(max_size), 3)
        if sum(map(sum, triple)) % 2 == 0 and _inFamily(family, triple)]
    parameters = {"max_size": max_size, "max_k": max_k}
    if family is not None:
        parameters["family"] = family
    return _runScan("saturation", parameters, triples,
                    partial(_saturationChecker, max_k), threads,
                    onCounterexample)


######
# Dilations
######
def nl_function(mu, nu, lam, max_k):
    """k ↦ N(kμ, kν, kλ) for k = 1..max_k."""
    _checkNonNegative("max_k", max_k, minimum=1)
    mu, nu, lam = asPartition(mu), asPartition(nu), asPartition(lam)
    values = [nl_number(scale(k, mu), scale(k, nu), scale(k, lam))
              for k in range(1, max_k + 1)]
    return NLFunctionSample(mu, nu, lam, values)


HYPOTHESIS_TRIPLE = ((2, 1, 1), (2, 1, 1), (1, 1, 1, 1))


def check_floor_hypotheses(max_k):
    """
    Compares N at the odd dilations 2k-1 with k(k+2)(k+1)/3 and at the even
    dilations 2k with (2k+3)(k+2)(k+1)/6 for ((2,1,1), (2,1,1), (1,1,1,1)).
    Both closed forms are conjectural; results are reported, not asserted.
    """
    _checkNonNegative("max_k", max_k, minimum=1)
    results = []
    for k in range(1, max_k + 1):
        for name, dilation, expected in (
                ("odd", 2 * k - 1, k * (k + 2) * (k + 1) // 3),
                ("even", 2 * k, (2 * k + 3) * (k + 2) * (k + 1) // 6)):
            observed = nl_number(*(scale(dilation, parts)
                                   for parts in HYPOTHESIS_TRIPLE))
            results.append(HypothesisResult(name, k, expected, observed))
    return results


def fulton_counterexample():
    """(N((1,1)^3), N((2,2)^3)): positive at k = 1 yet not equal to 1 at
    k = 2."""
    return (nl_number((1, 1), (1, 1), (1, 1)),
            nl_number((2, 2), (2, 2), (2, 2)))


######
# Multiplicity-free products
######
def is_nl_multiplicity_free(mu, nu):
    """
    s_[μ]s_[ν] has all coefficients 0 or 1 exactly when one factor is ∅
    or a single box, or one factor is a single row or a single column and
    the other is a rectangle.
    """
    mu, nu = asPartition(mu), asPartition(nu)
    if mu.size() <= 1 or nu.size() <= 1:
        return True
    for first, second in ((mu, nu), (nu, mu)):
        if ((is_single_row(first) or is_single_column(first)) and
                is_rectangle(second)):
            return True
    return False


def _multiplicityFreeChecker(pair):
    mu, nu = pair
    predicted = is_nl_multiplicity_free(mu, nu)
    largest = max((coefficient for _, coefficient in _nlProduct(mu, nu)),
                  default=0)
    if predicted == (largest <= 1):
        return []
    return [{"mu": _asList(mu), "nu": _asList(nu), "predicted": predicted,
             "max_coeff": largest}]


def check_multiplicity_free(max_size, threads=None, onCounterexample=None):
    _checkNonNegative("max_size", max_size)
    return _runScan("mf", {"max_size": max_size}, _unorderedPairs(max_size),
                    _multiplicityFreeChecker, threads, onCounterexample)


######
# Meet and join
######
def meetjoin_differences(mu, nu):
    """
    s_[μ∧ν]s_[μ∨ν], s_[⌊(μ+ν)/2⌋]s_[⌈(μ+ν)/2⌉] and
    s_[sort1(μ,ν)]s_[sort2(μ,ν)], each minus s_[μ]s_[ν]. All three are
    Koike-Terada nonnegative.
    """
    base = nl_product(mu, nu)
    return tuple(nl_product(left, right) - base
                 for left, right in ((meet(mu, nu), join(mu, nu)),
                                     (half_floor(mu, nu), half_ceil(mu, nu)),
                                     (sort1(mu, nu), sort2(mu, nu))))


def _meetjoinChecker(pair):
    mu, nu = pair
    counterexamples = []
    for name, difference in zip(("meetjoin", "average", "sort"),
                                meetjoin_differences(mu, nu)):
        if difference.minCoefficient() < 0:
            counterexamples.append({"mu": _asList(mu), "nu": _asList(nu),
                                    "difference": name,
                                    "min_coeff": difference.minCoefficient()})
    return counterexamples


def check_meetjoin(max_size, threads=None, onCounterexample=None):
    _checkNonNegative("max_size", max_size)
    return _runScan("meetjoin", {"max_size": max_size},
                    _unorderedPairs(max_size), _meetjoinChecker, threads,
                    onCounterexample)


######
# Shape of the support
######
def _shapeChecker(pair):
    mu, nu = pair
    terms = dict(_nlProduct(mu, nu))
    meetSize = sum(partsOf(meet(mu, nu)))
    lowest = sum(mu) + sum(nu) - 2 * meetSize
    highest = sum(mu) + sum(nu)
    sizes = {sum(lam) for lam in terms}
    counterexamples = []
    if sizes != set(range(lowest, highest + 1, 2)):
        counterexamples.append({"mu": _asList(mu), "nu": _asList(nu),
                                "sizes": sorted(sizes)})
    for lam in sorted(terms):
        size = sum(lam)
        if size > lowest and not any(
                sum(other) == size - 2 and _contains(lam, other)
                for other in terms):
            counterexamples.append({"mu": _asList(mu), "nu": _asList(nu),
                                    "lam": _asList(lam),
                                    "missing": "down"})
        if size < highest and not any(
                sum(other) == size + 2 and _contains(other, lam)
                for other in terms):
            counterexamples.append({"mu": _asList(mu), "nu": _asList(nu),
                                    "lam": _asList(lam), "missing": "up"})
    return counterexamples


def check_shape(max_size, threads=None, onCounterexample=None):
    """
    The support sizes of s_[μ]s_[ν] are exactly |μΔν|, |μΔν|+2, ...,
    |μ|+|ν|, and every support element has a support element two boxes
    smaller inside it and one two boxes larger around it, except at the
    extreme sizes.
    """
    _checkNonNegative("max_size", max_size)
    return _runScan("shape", {"max_size": max_size},
                    _unorderedPairs(max_size), _shapeChecker, threads,
                    onCounterexample)


######
# Associativity
######
def _associativityChecker(quadruple):
    mu, nu, lam, tau = quadruple
    left = sum(coefficient * _nlNumber(theta, lam, tau)
               for theta, coefficient in _nlProduct(mu, nu))
    right = sum(coefficient * _nlNumber(mu, theta, tau)
                for theta, coefficient in _nlProduct(nu, lam))
    if left == right:
        return []
    return [{"mu": _asList(mu), "nu": _asList(nu), "lam": _asList(lam),
             "tau": _asList(tau), "left": left, "right": right}]


def check_associativity(max_size, samples=0, random_max_size=None,
                        seed=None, threads=None, onCounterexample=None):
    """
    Σ_θ N(μ,ν,θ) N(θ,λ,τ) = Σ_θ N(ν,λ,θ) N(μ,θ,τ) for every quadruple with
    sizes <= max_size, then for `samples` quadruples drawn with the given
    seed from sizes <= random_max_size.
    """
    _checkNonNegative("max_size", max_size)
    _checkNonNegative("samples", samples)
    if random_max_size is None:
        random_max_size = max_size
    _checkNonNegative("random_max_size", random_max_size)
    if seed is None:
        seed = getSetting('randomSeed')
    partitions = _partsUpTo(max_size)
    quadruples = list(product(partitions, repeat=4))
    generator = random.Random(seed)
    pool = _partsUpTo(random_max_size)
    quadruples.extend(tuple(generator.choice(pool) for _ in range(4))
                      for _ in range(samples))
    return _runScan("associativity",
                    {"max_size": max_size, "samples": samples,
                     "random_max_size": random_max_size, "seed": seed},
                    quadruples, _associativityChecker, threads,
                    onCounterexample)


######
# Monotonicity
######
def _monotonicityChecker(maxT, triple):
    mu, nu, lam = triple
    base = _nlNumber(mu, nu, lam)
    counterexamples = []
    for t in range(1, maxT + 1):
        for operation, grow in (("union", lambda parts: union_sorted(
                                    parts, (t,)).parts),
                                ("column", lambda parts: add(
                                    parts, (1,) * t).parts)):
            grown = _nlNumber(grow(mu), nu, grow(lam))
            if grown < base:
                counterexamples.append(
                    {"mu": _asList(mu), "nu": _asList(nu),
                     "lam": _asList(lam), "t": t, "operation": operation,
                     "before": base, "after": grown})
    return counterexamples


def check_monotonicity(max_size, max_t=2, threads=None,
                       onCounterexample=None):
    """
    N(μ∪(t), ν, λ∪(t)) >= N(μ,ν,λ) and N(μ+(1^t), ν, λ+(1^t)) >= N(μ,ν,λ)
    for ordered triples with sizes <= max_size, even total, and
    1 <= t <= max_t.
    """
    _checkNonNegative("max_size", max_size)
    _checkNonNegative("max_t", max_t, minimum=1)
    triples = [triple for triple in product(_partsUpTo(max_size), repeat=3)
               if sum(map(sum, triple)) % 2 == 0]
    return _runScan("monotonicity", {"max_size": max_size, "max_t": max_t},
                    triples, partial(_monotonicityChecker, max_t), threads,
                    onCounterexample)


######
# Detection
######
def _hahnChecker(lam):
    value = _nlNumber(lam, lam, lam)
    even = sum(lam) % 2 == 0
    if (value > 0) != even:
        return [{"lam": _asList(lam), "nl": value}]
    if even:
        try:
            mu = detection_witness(lam)
        except DetectionException as exception:
            return [{"lam": _asList(lam), "witness_error": str(exception)}]
        if _lr(mu.parts, mu.parts, lam) == 0:
            return [{"lam": _asList(lam), "witness": mu.toList()}]
    return []


def check_hahn(max_size, threads=None, onCounterexample=None):
    """N(λ,λ,λ) > 0 exactly when |λ| is even, with the detection witness
    verified for every even λ."""
    _checkNonNegative("max_size", max_size)
    return _runScan("hahn", {"max_size": max_size}, _partsUpTo(max_size),
                    _hahnChecker, threads, onCounterexample)


######
# Kleber products
######
def fraction_free_rank(matrix):
    """
    Exact rank of an integer matrix by fraction-free (Bareiss)
    elimination. Columns without a pivot are skipped.
    """
    rows = [list(row) for row in matrix]
    if not rows:
        return 0
    columns = len(rows[0])
    rank = 0
    previous = 1
    for column in range(columns):
        pivot = next((row for row in range(rank, len(rows))
                      if rows[row][column] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pivotValue = rows[rank][column]
        for row in range(rank + 1, len(rows)):
            factor = rows[row][column]
            for other in range(column + 1, columns):
                numerator = (pivotValue * rows[row][other] -
                             factor * rows[rank][other])
                quotient, remainder = divmod(numerator, previous)
                if remainder:
                    raise AnalysisException(
                        "Inexact division in fraction-free elimination.")
                rows[row][other] = quotient
            rows[row][column] = 0
        previous = pivotValue
        rank += 1
        if rank == len(rows):
            break
    return rank


def kleber_pairs(a, b):
    """Unordered pairs {λ, λ∨} inside the a×b rectangle (a rows, b
    columns), smaller part tuple first."""
    pairs = set()
    for lam in partitions_in_box(a, b):
        dual = complement_in_box(lam, a, b)
        pairs.add(tuple(sorted((lam.parts, dual.parts))))
    return sorted(pairs)


def kleber_rank(a, b):
    """
    The exact rank of the coefficient matrix of the products
    s_[λ]s_[λ∨] over the unordered pairs inside the a×b rectangle.
    """
    _checkNonNegative("a", a, minimum=1)
    _checkNonNegative("b", b, minimum=1)
    pairs = kleber_pairs(a, b)
    products = [dict(_nlProduct(lam, dual)) for lam, dual in pairs]
    support = sorted({parts for terms in products for parts in terms},
                     key=Partition.fromCanonical)
    matrix = [[terms.get(parts, 0) for parts in support]
              for terms in products]
    rank = fraction_free_rank(matrix)
    logger.info("Kleber %dx%d: rank %d of %d pairs.", a, b, rank, len(pairs))
    return KleberResult(a, b, rank, len(pairs))
