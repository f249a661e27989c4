#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Newell-Littlewood:
    The numbers N_{μ,ν,λ} = Σ_{α,β,γ} c_{α,β}^μ c_{α,γ}^ν c_{β,γ}^λ, their
    witnesses, the products s_[μ]s_[ν] in the Koike-Terada basis, the Pieri
    and box rules, and the explicit construction behind N_{λ,λ,λ} > 0 for
    even |λ|.
"""

import logging

from nlcalc.core.config import memoized
from nlcalc.core.entities import (Partition, SkewShape, Filling, Witness,
                                  HProfile, KTExpansion,
                                  EntityDataValueException,
                                  ExpansionTypeException)
from nlcalc.core.partition import (partsOf, _meet, _subpartitions,
                                   _stripsRemoved, _stripsAdded,
                                   _boxesAdded, _boxesRemoved)
from nlcalc.core.tableau import (_lr, _lrProduct, _skewCoefficients,
                                 is_ballot)
from nlcalc.core import symfunc

logger = logging.getLogger(__name__)


class DetectionException(ValueError):
    """Raised when no detection witness exists or the construction fails."""


######
# Vanishing conditions
######
def _vanishingReason(mu, nu, lam):
    """
    The first elementary reason for N_{μ,ν,λ} = 0, or None. "parity" is the
    only reason that can disappear after scaling all three partitions.
    """
    sizeMu, sizeNu, sizeLam = sum(mu), sum(nu), sum(lam)
    if (sizeMu + sizeNu + sizeLam) % 2:
        return "parity"
    if (sizeMu > sizeNu + sizeLam or sizeNu > sizeMu + sizeLam or
            sizeLam > sizeMu + sizeNu):
        return "triangle"
    meetMuNu = sum(_meet(mu, nu))
    meetMuLam = sum(_meet(mu, lam))
    meetNuLam = sum(_meet(nu, lam))
    # α ⊆ μ∧ν, β ⊆ μ∧λ, γ ⊆ ν∧λ with |α|+|β| = |μ| and so on.
    if (meetMuNu + meetMuLam < sizeMu or meetMuNu + meetNuLam < sizeNu or
            meetMuLam + meetNuLam < sizeLam):
        return "meet"
    return None


def vanishing_reason(mu, nu, lam):
    """
    Returns "parity", "triangle" or "meet" when an elementary condition
    forces N_{μ,ν,λ} = 0, and None otherwise.
    """
    return _vanishingReason(partsOf(mu), partsOf(nu), partsOf(lam))


def _witnessTerms(mu, nu, lam):
    """Yields (α, β, γ, multiplicity) with every LR factor positive."""
    alphaSize = (sum(mu) + sum(nu) - sum(lam)) // 2
    for alpha in _subpartitions(_meet(mu, nu), alphaSize):
        gammas = _skewCoefficients(nu, alpha)
        if not gammas:
            continue
        for beta, muCoefficient in _skewCoefficients(mu, alpha):
            for gamma, nuCoefficient in gammas:
                lamCoefficient = _lr(beta, gamma, lam)
                if lamCoefficient:
                    yield (alpha, beta, gamma,
                           muCoefficient * nuCoefficient * lamCoefficient)


@memoized
def _nlNumber(mu, nu, lam):
    if _vanishingReason(mu, nu, lam) is not None:
        return 0
    return sum(term[3] for term in _witnessTerms(mu, nu, lam))


def nl_number(mu, nu, lam):
    """
    N_{μ,ν,λ}. The sum runs over α ⊆ μ∧ν with |α| = (|μ|+|ν|-|λ|)/2 and
    the β, γ with c_{α,β}^μ > 0 and c_{α,γ}^ν > 0; parity, triangle and
    meet failures return 0 before any enumeration.
    """
    return _nlNumber(partsOf(mu), partsOf(nu), partsOf(lam))


def nl_witnesses(mu, nu, lam):
    """
    All witnesses (α, β, γ) of N_{μ,ν,λ}, with multiplicity
    c_{α,β}^μ c_{α,γ}^ν c_{β,γ}^λ. The multiplicities sum to nl_number.
    """
    mu, nu, lam = partsOf(mu), partsOf(nu), partsOf(lam)
    if _vanishingReason(mu, nu, lam) is not None:
        return []
    return [Witness(alpha=alpha, beta=beta, gamma=gamma,
                    multiplicity=multiplicity)
            for alpha, beta, gamma, multiplicity
            in _witnessTerms(mu, nu, lam)]


def nl_number_asymmetric(mu, nu, lam):
    """
    N_{μ,ν,λ} as Σ_{α ⊆ μ∧ν} ⟨s_{μ/α} s_{ν/α}, s_λ⟩, one product of skew
    Schur functions per α.
    """
    mu, nu, lam = partsOf(mu), partsOf(nu), partsOf(lam)
    total = 0
    meet = _meet(mu, nu)
    for size in range(sum(meet) + 1):
        for alpha in _subpartitions(meet, size):
            product = symfunc.schur_product(symfunc.skew_schur(mu, alpha),
                                            symfunc.skew_schur(nu, alpha))
            total += symfunc.inner_product(product, lam)
    return total


######
# Products in the Koike-Terada basis
######
def _accumulate(target, terms, scale=1):
    for parts, coefficient in terms:
        value = target.get(parts, 0) + scale * coefficient
        if value:
            target[parts] = value
        else:
            target.pop(parts, None)


@memoized
def _nlProduct(mu, nu):
    terms = {}
    meet = _meet(mu, nu)
    for size in range(sum(meet) + 1):
        for alpha in _subpartitions(meet, size):
            gammas = _skewCoefficients(nu, alpha)
            for beta, muCoefficient in _skewCoefficients(mu, alpha):
                for gamma, nuCoefficient in gammas:
                    _accumulate(terms, _lrProduct(beta, gamma),
                                muCoefficient * nuCoefficient)
    logger.debug("s_[%s] s_[%s]: %d terms", mu, nu, len(terms))
    return tuple(sorted(terms.items()))


def nl_product(mu, nu):
    """
    s_[μ] s_[ν] = Σ_λ N_{μ,ν,λ} s_[λ]. Every pair of witnesses (β, γ) for
    some α ⊆ μ∧ν contributes the LR expansion of s_β s_γ, so the support
    needs no bounding box.

    Returns
    -------
    KTExpansion
    """
    return KTExpansion.fromPartTuples(dict(_nlProduct(partsOf(mu),
                                                      partsOf(nu))))


def kt_product(a, b):
    """The bilinear extension of nl_product to KTExpansions."""
    for operand in (a, b):
        if not isinstance(operand, KTExpansion):
            raise ExpansionTypeException(
                "kt_product expects KTExpansions. Received {operandType}."
                .format(operandType=type(operand)))
    terms = {}
    for mu, left in a.toPartTuples().items():
        for nu, right in b.toPartTuples().items():
            _accumulate(terms, _nlProduct(mu, nu), left * right)
    return KTExpansion.fromPartTuples(terms)


def nl_pieri(mu, p):
    """
    s_[μ] s_[(p)]: for each 0 <= j <= p, remove a horizontal strip of j
    boxes from μ and then add a horizontal strip of p - j boxes, counting
    every way the result is reached.
    """
    terms = {}
    parts = partsOf(mu)
    for removed in range(p + 1):
        for smaller in _stripsRemoved(parts, removed):
            for grown in _stripsAdded(smaller, p - removed):
                terms[grown] = terms.get(grown, 0) + 1
    return KTExpansion.fromPartTuples(terms)


def box_product(mu):
    """s_[μ] s_[(1)]: every way to add or remove one box."""
    parts = partsOf(mu)
    terms = {}
    for neighbour in _boxesRemoved(parts) + _boxesAdded(parts):
        terms[neighbour] = terms.get(neighbour, 0) + 1
    return KTExpansion.fromPartTuples(terms)


def h_profile(mu, nu):
    """
    h_t = Σ_{|λ| = |μΔν| + 2t} N_{μ,ν,λ} for t = 0..|μ∧ν|.
    """
    mu, nu = partsOf(mu), partsOf(nu)
    meetSize = sum(_meet(mu, nu))
    lowest = sum(mu) + sum(nu) - 2 * meetSize
    values = [0] * (meetSize + 1)
    for lam, coefficient in _nlProduct(mu, nu):
        values[(sum(lam) - lowest) // 2] += coefficient
    return HProfile(mu=mu, nu=nu, values=values)


######
# Oscillating tableaux
######
@memoized
def _walks(parts, k):
    """Walks of length k from ∅ to `parts`, one box added or removed per
    step."""
    size = sum(parts)
    if size > k or (k - size) % 2:
        return 0
    if k == 0:
        return 1
    return sum(_walks(neighbour, k - 1)
               for neighbour in _boxesRemoved(parts) + _boxesAdded(parts))


def oscillating_count(lam, k):
    """
    The coefficient of s_[λ] in s_[(1)]^k, the number of oscillating
    tableaux of shape λ and length k.
    """
    return _walks(partsOf(lam), k)


######
# Detection
######
def _oddRows(parts):
    """1-based indices of the odd parts, split into top and bottom halves."""
    odd = [row for row, part in enumerate(parts, start=1) if part % 2]
    half = len(odd) // 2
    return odd[:half], odd[half:]


def _checkEven(parts):
    if sum(parts) % 2:
        raise DetectionException(
            "{lam} has odd size {size}; N(lam, lam, lam) = 0.".format(
                lam=Partition.fromCanonical(parts), size=sum(parts)))


def _detect(parts):
    """(μ, filling) for the even-size partition `parts`."""
    _checkEven(parts)
    top, bottom = _oddRows(parts)
    topRows = set(top)
    mu = Partition(part // 2 + (1 if row in topRows else 0)
                   for row, part in enumerate(parts, start=1))
    extra = dict(zip(bottom, top))
    rows = []
    for row, part in enumerate(parts, start=1):
        prefix = [extra[row]] if row in extra else []
        rows.append(prefix + [row] * (part // 2))
    lam = Partition.fromCanonical(parts)
    try:
        filling = Filling(shape=SkewShape(outer=parts, inner=mu), rows=rows)
    except EntityDataValueException as exception:
        raise DetectionException(
            "Constructed filling of {lam} is not semistandard.".format(
                lam=lam)) from exception
    content = filling.content()
    if (not is_ballot(filling) or not content.isPartition() or
            content.toPartition() != mu):
        raise DetectionException(
            "Constructed filling of {lam} is not an LR tableau of content "
            "{mu}.".format(lam=lam, mu=mu))
    return mu, filling


def detection_witness(lam):
    """
    A μ with c_{μ,μ}^λ > 0 for |λ| even: even parts are halved, and of the
    odd parts the top half is rounded up and the bottom half rounded down.
    Positivity is certified by the LR tableau of detection_filling.

    Raises
    ------
    DetectionException
        |λ| is odd, or the construction does not give an LR tableau.
    """
    mu, _ = _detect(partsOf(lam))
    logger.info("Detection witness for %s: %s", Partition(lam), mu)
    return mu


def detection_filling(lam):
    """
    The LR tableau of shape λ/μ and content μ, μ = detection_witness(λ).
    Row j holds ⌊λ_j/2⌋ copies of j, and the t-th bottom odd row also
    starts with the index of the t-th top odd row.

    Raises
    ------
    DetectionException
        |λ| is odd, or the construction does not give a ballot filling.
    """
    _, filling = _detect(partsOf(lam))
    return filling
