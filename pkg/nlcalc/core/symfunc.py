#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
SymFunc:
    Symmetric functions as finite Schur expansions: products, skews and the
    Hall inner product, the determinant defining the Koike-Terada basis
    element s_[λ], and conversion between the two bases.

    Internally expansions are {part tuple: coefficient} dictionaries; the
    public functions wrap them in SchurExpansion and KTExpansion.
"""

import logging

from nlcalc.core.config import memoized
from nlcalc.core.entities import (Partition, SkewShape, SchurExpansion,
                                  KTExpansion, EntityDataValueException,
                                  ExpansionTypeException)
from nlcalc.core.partition import partsOf, _stripsAdded
from nlcalc.core.tableau import _lrProduct, _skewCoefficients

logger = logging.getLogger(__name__)


class ConversionException(ArithmeticError):
    """
    Raised when the Schur to Koike-Terada conversion does not remove its
    leading term. The remaining expansion is kept on `residue`.
    """

    def __init__(self, message, residue):
        super().__init__(message)
        self.residue = residue


def _accumulate(target, terms, scale=1):
    for parts, coefficient in terms:
        value = target.get(parts, 0) + scale * coefficient
        if value:
            target[parts] = value
        else:
            target.pop(parts, None)


def _asSchurTerms(value):
    """Schur terms of a SchurExpansion, a Partition or a part sequence."""
    if isinstance(value, SchurExpansion):
        return value.toPartTuples()
    if isinstance(value, KTExpansion):
        raise ExpansionTypeException(
            "Expected a SchurExpansion or a partition. Received a "
            "KTExpansion; convert it with kt_expansion_to_schur first.")
    return {partsOf(value): 1}


def _multiply(left, right):
    product = {}
    for mu, a in left.items():
        for nu, b in right.items():
            _accumulate(product, _lrProduct(mu, nu), a * b)
    return product


def schur_product(a, b):
    """
    The bilinear extension of s_μ s_ν = Σ_λ c_{μ,ν}^λ s_λ.

    Parameters
    ----------
    a, b : SchurExpansion, Partition or part sequence
        A bare partition stands for the single term s_λ.

    Returns
    -------
    SchurExpansion
    """
    return SchurExpansion.fromPartTuples(_multiply(_asSchurTerms(a),
                                                   _asSchurTerms(b)))


def skew_schur(shape, inner=None):
    """
    s_{λ/μ} = Σ_ν c_{μ,ν}^λ s_ν. Accepts a SkewShape, or the outer and
    inner partitions separately; the result is zero when the inner
    partition is not contained in the outer one.
    """
    if isinstance(shape, SkewShape):
        outer, inner = shape.getOuter().parts, shape.getInner().parts
    else:
        outer = partsOf(shape)
        inner = partsOf(inner if inner is not None else ())
    return SchurExpansion.fromPartTuples(
        dict(_skewCoefficients(outer, inner)))


def inner_product(a, b):
    """⟨a, b⟩ with the Schur functions orthonormal."""
    left, right = _asSchurTerms(a), _asSchurTerms(b)
    return sum(coefficient * right.get(parts, 0)
               for parts, coefficient in left.items())


def pieri_h(e, t):
    """e · h_t, adding a horizontal strip of t boxes to every term."""
    result = {}
    for parts, coefficient in _asSchurTerms(e).items():
        _accumulate(result, ((grown, 1) for grown in _stripsAdded(parts, t)),
                    coefficient)
    return SchurExpansion.fromPartTuples(result)


@memoized
def _hMonomialToSchur(monomial):
    """h_{t1} h_{t2} ... as (λ, coefficient) items (the Kostka numbers)."""
    if not monomial:
        return (((), 1),)
    terms = {}
    for parts, coefficient in _hMonomialToSchur(monomial[1:]):
        _accumulate(terms, ((grown, 1)
                            for grown in _stripsAdded(parts, monomial[0])),
                    coefficient)
    return tuple(sorted(terms.items()))


def _determinantEntry(starred, column):
    """h indices summed in one entry; negative indices are dropped."""
    if column == 0:
        indices = (starred,)
    else:
        indices = (starred + column, starred - column)
    return tuple(index for index in indices if index >= 0)


@memoized
def _ktToSchur(parts, n):
    starred = [(parts[row] if row < len(parts) else 0) - row
               for row in range(n)]
    # column subset used by the rows so far -> {h monomial: signed count}
    states = {0: {(): 1}}
    for row in range(n):
        following = {}
        for used, monomials in states.items():
            for column in range(n):
                if used & (1 << column):
                    continue
                indices = _determinantEntry(starred[row], column)
                if not indices:
                    continue
                sign = -1 if bin(used >> (column + 1)).count("1") % 2 else 1
                target = following.setdefault(used | (1 << column), {})
                for monomial, coefficient in monomials.items():
                    for index in indices:
                        key = monomial
                        if index > 0:
                            key = tuple(sorted(monomial + (index,),
                                               reverse=True))
                        _accumulate(target, ((key, sign * coefficient),))
        states = following
        logger.debug("s_[%s] row %d: %d column subsets", parts, row,
                     len(states))

    result = {}
    for monomial, coefficient in states.get((1 << n) - 1, {}).items():
        _accumulate(result, _hMonomialToSchur(monomial), coefficient)
    return tuple(sorted(result.items()))


def _ktTerms(parts):
    return _ktToSchur(parts, max(len(parts), 1))


def kt_to_schur(lam, n=None):
    """
    The Schur expansion of the Koike-Terada basis element s_[λ], from the
    n×n determinant whose first column holds h_{λ*_i} and whose column
    j ≥ 1 holds h_{λ*_i + j} + h_{λ*_i - j}, where λ*_i = λ_i - (i - 1).
    h_0 = 1 and h_t = 0 for t < 0.

    Parameters
    ----------
    lam : Partition
    n : int, optional
        Size of the determinant; defaults to max(ℓ(λ), 1).

    Raises
    ------
    EntityDataValueException
        n is smaller than ℓ(λ).
    """
    parts = partsOf(lam)
    if n is None:
        n = max(len(parts), 1)
    if n < max(len(parts), 1):
        raise EntityDataValueException(
            "kt_to_schur needs n >= max(1, length of {lam}). Received "
            "n={n}.".format(lam=Partition.fromCanonical(parts), n=n))
    return SchurExpansion.fromPartTuples(dict(_ktToSchur(parts, n)))


def kt_expansion_to_schur(e):
    """Σ a_λ s_[λ] rewritten in the Schur basis."""
    if not isinstance(e, KTExpansion):
        raise ExpansionTypeException(
            "kt_expansion_to_schur expects a KTExpansion. Received "
            "{eType}.".format(eType=type(e)))
    result = {}
    for parts, coefficient in e.toPartTuples().items():
        _accumulate(result, _ktTerms(parts),
                    coefficient)
    return SchurExpansion.fromPartTuples(result)


def schur_to_kt(e):
    """
    Rewrites a Schur expansion in the Koike-Terada basis. Since
    s_[λ] = s_λ + (terms of smaller size), subtracting a·s_[λ] for the
    largest remaining term a·s_λ always shrinks the residue.

    Raises
    ------
    ConversionException
        The leading term survived a subtraction.
    """
    residue = dict(_asSchurTerms(e))
    result = {}
    steps = 0
    while residue:
        top = max(residue, key=lambda parts: (sum(parts), parts))
        coefficient = residue[top]
        result[top] = result.get(top, 0) + coefficient
        _accumulate(residue, _ktTerms(top), -coefficient)
        steps += 1
        if residue.get(top, 0) != 0:
            raise ConversionException(
                "Leading term {top} persisted after {steps} steps.".format(
                    top=Partition.fromCanonical(top), steps=steps),
                residue=SchurExpansion.fromPartTuples(residue))
    logger.debug("schur_to_kt finished in %d steps.", steps)
    return KTExpansion.fromPartTuples(result)


def kt_product_via_schur(mu, nu):
    """s_[μ] s_[ν] computed through the Schur basis."""
    product = _multiply(dict(_ktTerms(partsOf(mu))),
                        dict(_ktTerms(partsOf(nu))))
    return schur_to_kt(SchurExpansion.fromPartTuples(product))
