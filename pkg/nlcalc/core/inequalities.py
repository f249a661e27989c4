#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Inequalities:
    Necessary conditions for N_{μ,ν,λ} > 0: the Horn inequalities indexed
    by LR-positive triples of subsets, the extended Weyl inequalities, and
    the complete list deciding membership for partitions of length <= 2.
"""

from itertools import combinations, permutations
import logging
from typing import NamedTuple

from nlcalc.core.config import memoized
from nlcalc.core.entities import HornTriple, MembershipDecision
from nlcalc.core.partition import asPartition
from nlcalc.core.tableau import _lr

logger = logging.getLogger(__name__)

_NAMES = ("mu", "nu", "lam")


class InequalityException(ValueError):
    """Raised for a size mismatch or a length above the dimension."""


def tau(indices):
    """τ(I) = (i_d - d, ..., i_2 - 2, i_1 - 1) for I = {i_1 < ... < i_d}."""
    ordered = sorted(indices)
    return tuple(part for part in reversed(
        [index - position for position, index in enumerate(ordered,
                                                            start=1)])
        if part > 0)


@memoized
def _hornTriples(n):
    triples = []
    for d in range(1, n):
        subsets = list(combinations(range(1, n + 1), d))
        taus = {subset: tau(subset) for subset in subsets}
        for I in subsets:
            for J in subsets:
                for K in subsets:
                    if sum(taus[K]) != sum(taus[I]) + sum(taus[J]):
                        continue
                    if _lr(taus[I], taus[J], taus[K]) > 0:
                        triples.append(HornTriple(n, I, J, K, taus[I],
                                                  taus[J], taus[K]))
    logger.debug("Generated %d Horn triples for n=%d.", len(triples), n)
    return tuple(triples)


def horn_triples(n):
    """
    Every (I, J, K) of size-d subsets of [n], d < n, with
    c_{τ(I),τ(J)}^{τ(K)} > 0; by d, then I, J, K lexicographically.
    """
    if n < 1:
        raise InequalityException(
            "Horn triples need n >= 1. Received {n}.".format(n=n))
    return list(_hornTriples(n))


def _dimension(n, *partitions):
    longest = max(partition.length() for partition in partitions)
    if n is None:
        return longest + 1
    if n < longest:
        raise InequalityException(
            "Dimension {n} is smaller than the length {longest} of an "
            "input.".format(n=n, longest=longest))
    return n


def horn_violations(mu, nu, lam, n=None):
    """
    Yields a description of every violated inequality
    Σ_{k∈K} λ_k <= Σ_{i∈I} μ_i + Σ_{j∈J} ν_j. n defaults to the largest
    length plus one.
    """
    mu, nu, lam = asPartition(mu), asPartition(nu), asPartition(lam)
    n = _dimension(n, mu, nu, lam)
    for triple in _hornTriples(n):
        left = sum(lam.part(k) for k in triple.getK())
        right = (sum(mu.part(i) for i in triple.getI()) +
                 sum(nu.part(j) for j in triple.getJ()))
        if left > right:
            yield "{inequality} ({left} > {right})".format(
                inequality=triple.describe(), left=left, right=right)


def horn_holds(mu, nu, lam, n=None):
    return next(horn_violations(mu, nu, lam, n), None) is None


def lr_positive_via_horn(mu, nu, lam):
    """
    c_{μ,ν}^λ > 0 decided by the Horn inequalities.

    Raises
    ------
    InequalityException
        |μ| + |ν| != |λ|.
    """
    mu, nu, lam = asPartition(mu), asPartition(nu), asPartition(lam)
    if mu.size() + nu.size() != lam.size():
        raise InequalityException(
            "Horn's criterion needs |mu| + |nu| = |lam|. Received {mu}, "
            "{nu}, {lam}.".format(mu=mu, nu=nu, lam=lam))
    return horn_holds(mu, nu, lam)


class ExtWeylIndex(NamedTuple):
    """1 <= k <= i < j <= l <= n and 0 <= p <= m."""
    i: int
    j: int
    k: int
    l: int
    p: int
    m: int
    M: int


@memoized
def _extendedWeylIndices(n):
    indices = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(1, i + 1):
                for l in range(j, n + 1):
                    m = min(i - k, l - j)
                    M = max(i - k, l - j)
                    for p in range(m + 1):
                        indices.append(ExtWeylIndex(i, j, k, l, p, m, M))
    return tuple(indices)


def extended_weyl_indices(n):
    return list(_extendedWeylIndices(n))


def extended_weyl_violations(mu, nu, lam, n=None):
    """
    Yields every violated inequality

        x_i - x_j + z_l - z_k <= y_{m-p+1} + y_{M+p+2}

    over all six assignments of (μ, ν, λ) to (x, y, z). Parts beyond a
    length read 0. n defaults to the largest length.
    """
    triple = tuple(asPartition(value) for value in (mu, nu, lam))
    if n is None:
        n = max(max(partition.length() for partition in triple), 1)
    n = _dimension(n, *triple)
    for roles in permutations(range(3)):
        x, y, z = (triple[role] for role in roles)
        xName, yName, zName = (_NAMES[role] for role in roles)
        for index in _extendedWeylIndices(n):
            first = index.m - index.p + 1
            second = index.M + index.p + 2
            left = (x.part(index.i) - x.part(index.j) +
                    z.part(index.l) - z.part(index.k))
            right = y.part(first) + y.part(second)
            if left > right:
                yield ("{x}{i} - {x}{j} + {z}{l} - {z}{k} <= {y}{first} + "
                       "{y}{second} ({left} > {right})".format(
                           x=xName, y=yName, z=zName, i=index.i, j=index.j,
                           k=index.k, l=index.l, first=first, second=second,
                           left=left, right=right))


def extended_weyl_holds(mu, nu, lam, n=None):
    return next(extended_weyl_violations(mu, nu, lam, n), None) is None


######
# Two-row membership
######
def _part(name, index, sign=1):
    return (sign, name, index)


# λ1 <= μ1 + ν1 and λ2 <= μ1 + ν2, λ2 <= μ2 + ν1 with their symmetric
# images, in the listed order.
_HORN_TWO_ROW = tuple(
    ((_part(x, xIndex),), (_part(y, yIndex), _part(z, zIndex)))
    for x, xIndex, y, yIndex, z, zIndex in (
        ("lam", 1, "mu", 1, "nu", 1), ("nu", 1, "lam", 1, "mu", 1),
        ("mu", 1, "lam", 1, "nu", 1),
        ("lam", 2, "mu", 1, "nu", 2), ("nu", 2, "lam", 1, "mu", 2),
        ("mu", 2, "lam", 1, "nu", 2),
        ("lam", 2, "mu", 2, "nu", 1), ("nu", 2, "lam", 2, "mu", 1),
        ("mu", 2, "lam", 2, "nu", 1)))

# x1 - x2 <= y1 + y2 + z1 - z2.
_LINEAR_TWO_ROW = tuple(
    ((_part(x, 1), _part(x, 2, -1)),
     (_part(y, 1), _part(y, 2), _part(z, 1), _part(z, 2, -1)))
    for x, y, z in (("nu", "mu", "lam"), ("mu", "lam", "nu"),
                    ("lam", "nu", "mu"), ("lam", "mu", "nu"),
                    ("mu", "nu", "lam"), ("nu", "lam", "mu")))


def _describe(terms):
    text = ""
    for sign, name, index in terms:
        if not text:
            text = ("-" if sign < 0 else "") + "{name}{index}".format(
                name=name, index=index)
        else:
            text += " {op} {name}{index}".format(op="-" if sign < 0 else "+",
                                                 name=name, index=index)
    return text


def nl2_check(mu, nu, lam):
    """
    Decides N_{μ,ν,λ} > 0 for partitions of length <= 2: parity, the
    triangle inequalities, the nine Horn-type inequalities and the six
    linear inequalities, in that order. The first failure is reported.

    Raises
    ------
    InequalityException
        A partition has more than two parts.
    """
    parts = {name: asPartition(value)
             for name, value in zip(_NAMES, (mu, nu, lam))}
    for name, partition in parts.items():
        if partition.length() > 2:
            raise InequalityException(
                "nl2 needs partitions with at most two parts; {name} = "
                "{partition}.".format(name=name, partition=partition))
    sizes = {name: partition.size() for name, partition in parts.items()}
    if sum(sizes.values()) % 2:
        return MembershipDecision(False, "parity: |mu| + |nu| + |lam| is odd")
    for name in ("lam", "nu", "mu"):
        others = [other for other in _NAMES if other != name]
        if sizes[name] > sizes[others[0]] + sizes[others[1]]:
            return MembershipDecision(
                False, "triangle: |{name}| <= |{first}| + |{second}|".format(
                    name=name, first=others[0], second=others[1]))

    def value(terms):
        return sum(sign * parts[name].part(index)
                   for sign, name, index in terms)

    for left, right in _HORN_TWO_ROW + _LINEAR_TWO_ROW:
        if value(left) > value(right):
            return MembershipDecision(False, "{left} <= {right}".format(
                left=_describe(left), right=_describe(right)))
    return MembershipDecision(True)


def nl2_member(mu, nu, lam):
    return nl2_check(mu, nu, lam).isMember()
