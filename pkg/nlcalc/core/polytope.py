#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Polytope:
    The Newell-Littlewood polytope P_{μ,ν,λ} ⊂ R^{3n²}, whose lattice
    points are in bijection with triples of LR tableaux (T, U, V) and so
    number N_{μ,ν,λ}.

    The variable X_i^j counts the letter i in row j. β belongs to T
    (shape μ/α), α to U (shape ν/γ) and γ to V (shape λ/β). Variables are
    named a[i][j], b[i][j] and c[i][j] for α, β and γ.
"""

from concurrent.futures import ProcessPoolExecutor
import logging

from nlcalc.core.config import getSetting
from nlcalc.core.entities import (Partition, SkewShape, Filling,
                                  LatticePoint)
from nlcalc.core.partition import asPartition, scale

logger = logging.getLogger(__name__)

EQUAL = "=="
AT_MOST = "<="

FAMILIES = ("nonnegativity", "shape", "semistandard", "ballot")

# Each tableau: (content matrix, matrix of the shape's inner partition).
_SYMBOLS = {"alpha": "a", "beta": "b", "gamma": "c"}
_ROLES = (("beta", "alpha"), ("alpha", "gamma"), ("gamma", "beta"))


class PolytopeException(ValueError):
    """Raised for a dimension below a partition length, a dilation factor
    below 1, or lattice points of different dimensions."""


class LinearConstraint:
    """
    Σ coefficient · variable (sense) rhs, with sense "==" or "<=".
    `coefficients` maps a variable index to a nonzero integer.
    """

    def __init__(self, family, label, coefficients, sense, rhs):
        self._family = family
        self._label = label
        self._coefficients = tuple(sorted(
            (index, coefficient) for index, coefficient
            in coefficients.items() if coefficient != 0))
        self._sense = sense
        self._rhs = rhs

    def getFamily(self):
        return self._family

    def getLabel(self):
        return self._label

    def getCoefficients(self):
        return self._coefficients

    def getSense(self):
        return self._sense

    def getRHS(self):
        return self._rhs

    def isSatisfied(self, values):
        total = sum(coefficient * values[index]
                    for index, coefficient in self._coefficients)
        if self._sense == EQUAL:
            return total == self._rhs
        return total <= self._rhs

    def toText(self, variableNames):
        terms = " ".join("{coefficient:+d} {name}".format(
            coefficient=coefficient, name=variableNames[index])
            for index, coefficient in self._coefficients)
        return "{terms} {sense} {rhs}".format(terms=terms, sense=self._sense,
                                               rhs=self._rhs)


class NLPolytope:
    """The constraint system of P_{μ,ν,λ} in dimension n."""

    def __init__(self, n, mu, nu, lam, variableNames, constraints):
        self._n = n
        self._mu = mu
        self._nu = nu
        self._lam = lam
        self._variableNames = tuple(variableNames)
        self._constraints = tuple(constraints)

    def getN(self):
        return self._n

    def getTriple(self):
        return (self._mu, self._nu, self._lam)

    def getVariableNames(self):
        return self._variableNames

    def getNumberOfVariables(self):
        return len(self._variableNames)

    def getConstraints(self, family=None):
        if family is None:
            return self._constraints
        return tuple(constraint for constraint in self._constraints
                     if constraint.getFamily() == family)

    def contains(self, values):
        """True when the integer vector satisfies every constraint."""
        return all(constraint.isSatisfied(values)
                   for constraint in self._constraints)


######
# Construction
######
def _variableIndex(n):
    """(matrix name, i, j) -> index, β first, then γ, then α, row-major."""
    index = {}
    names = []
    for matrix in ("beta", "gamma", "alpha"):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                index[(matrix, i, j)] = len(names)
                names.append("{symbol}[{i}][{j}]".format(
                    symbol=_SYMBOLS[matrix], i=i, j=j))
    return index, names


def build(mu, nu, lam, n=None):
    """
    Materializes constraint families (1) to (4).

    Parameters
    ----------
    mu, nu, lam : Partition
    n : int, optional
        Defaults to the largest length, and to 1 for three empty
        partitions.

    Raises
    ------
    PolytopeException
        n is smaller than a length.
    """
    mu, nu, lam = asPartition(mu), asPartition(nu), asPartition(lam)
    longest = max(mu.length(), nu.length(), lam.length(), 1)
    if n is None:
        n = longest
    if n < longest:
        raise PolytopeException(
            "Dimension {n} is smaller than a length of {mu}, {nu}, "
            "{lam}.".format(n=n, mu=mu, nu=nu, lam=lam))
    index, names = _variableIndex(n)
    rows = range(1, n + 1)
    targets = {"alpha": mu, "gamma": nu, "beta": lam}
    constraints = []

    for name in index:
        constraints.append(LinearConstraint(
            "nonnegativity", "1", {index[name]: -1}, AT_MOST, 0))

    # 2(a)-(c): letters k of the inner matrix plus cells of row k.
    for label, (content, inner) in zip("abc", _ROLES):
        outer = targets[inner]
        for k in rows:
            coefficients = {}
            for j in rows:
                coefficients[index[(inner, k, j)]] = 1
            for i in rows:
                coefficients[index[(content, i, k)]] = 1
            constraints.append(LinearConstraint(
                "shape", "2" + label, coefficients, EQUAL, outer.part(k)))

    # 3(a)-(c): letters <= l of row k+1 sit strictly right of letters < l
    # of row k.
    for label, (content, inner) in zip("abc", _ROLES):
        for k in range(1, n):
            for l in rows:
                coefficients = {}
                for j in rows:
                    coefficients[index[(inner, k + 1, j)]] = 1
                    coefficients[index[(inner, k, j)]] = -1
                for i in range(1, l + 1):
                    coefficients[index[(content, i, k + 1)]] = 1
                for i in range(1, l):
                    coefficients[index[(content, i, k)]] = -1
                constraints.append(LinearConstraint(
                    "semistandard", "3" + label, coefficients, AT_MOST, 0))

    # 4(a)-(c): l+1's in rows <= k never outnumber l's in rows < k.
    for label, matrix in zip("abc", ("alpha", "beta", "gamma")):
        for l in range(1, n):
            for k in rows:
                coefficients = {}
                for i in range(1, k + 1):
                    coefficients[index[(matrix, l + 1, i)]] = 1
                for i in range(1, k):
                    coefficients[index[(matrix, l, i)]] = -1
                constraints.append(LinearConstraint(
                    "ballot", "4" + label, coefficients, AT_MOST, 0))

    logger.info("Built P(%s, %s, %s) with n=%d: %d variables, %d "
                "constraints.", mu, nu, lam, n, len(names), len(constraints))
    return NLPolytope(n, mu, nu, lam, names, constraints)


def dilate(p, k):
    """
    kP_{μ,ν,λ} = P_{kμ,kν,kλ}, built in the same dimension.

    Raises
    ------
    PolytopeException
        k is not a positive integer.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise PolytopeException(
            "Dilation factor must be a positive integer. Received "
            "{k}.".format(k=k))
    mu, nu, lam = p.getTriple()
    return build(scale(k, mu), scale(k, nu), scale(k, lam), p.getN())


def constraint_dump(p):
    """One line per constraint, families in order (1) to (4)."""
    names = p.getVariableNames()
    return [constraint.toText(names)
            for family in FAMILIES
            for constraint in p.getConstraints(family)]


######
# Lattice point search
######
class _SearchPlan:
    """
    Precomputed bookkeeping for the depth-first search. Variables are
    assigned in index order. Equalities keep a residual; the last variable
    of an equality is forced to its residual. An inequality is tested once
    its last negatively weighted variable is assigned (unassigned
    variables read 0, so this is a valid lower bound) and again at its
    last variable.
    """

    def __init__(self, p):
        self.size = p.getNumberOfVariables()
        equalities = p.getConstraints("shape")
        inequalities = (p.getConstraints("semistandard") +
                        p.getConstraints("ballot"))
        self.rhs = tuple(constraint.getRHS() for constraint in equalities)
        self.equalitiesOf = [[] for _ in range(self.size)]
        self.forcedAt = [[] for _ in range(self.size)]
        for position, constraint in enumerate(equalities):
            coefficients = constraint.getCoefficients()
            for variable, coefficient in coefficients:
                self.equalitiesOf[variable].append((position, coefficient))
            self.forcedAt[coefficients[-1][0]].append(position)
        self.inequalities = tuple(
            (constraint.getCoefficients(), constraint.getRHS())
            for constraint in inequalities)
        self.checksAt = [[] for _ in range(self.size)]
        for position, (coefficients, _) in enumerate(self.inequalities):
            last = coefficients[-1][0]
            negatives = [variable for variable, coefficient in coefficients
                         if coefficient < 0]
            self.checksAt[last].append(position)
            if negatives and max(negatives) != last:
                self.checksAt[max(negatives)].append(position)


def _candidates(plan, residual, variable):
    upper = None
    for position, coefficient in plan.equalitiesOf[variable]:
        if coefficient > 0:
            bound = residual[position] // coefficient
            upper = bound if upper is None else min(upper, bound)
    if upper is None or upper < 0:
        return range(0)
    forced = plan.forcedAt[variable]
    if forced:
        position = forced[0]
        coefficient = dict(plan.equalitiesOf[variable])[position]
        if residual[position] % coefficient:
            return range(0)
        value = residual[position] // coefficient
        return range(value, value + 1) if 0 <= value <= upper else range(0)
    return range(upper + 1)


def _search(plan, values, residual, variable, visit):
    if variable == plan.size:
        visit(values)
        return 1
    count = 0
    for value in _candidates(plan, residual, variable):
        values[variable] = value
        for position, coefficient in plan.equalitiesOf[variable]:
            residual[position] -= coefficient * value
        feasible = all(residual[position] == 0
                       for position in plan.forcedAt[variable])
        if feasible:
            for check in plan.checksAt[variable]:
                coefficients, rhs = plan.inequalities[check]
                if sum(coefficient * values[index]
                       for index, coefficient in coefficients) > rhs:
                    feasible = False
                    break
        if feasible:
            count += _search(plan, values, residual, variable + 1, visit)
        for position, coefficient in plan.equalitiesOf[variable]:
            residual[position] += coefficient * value
        values[variable] = 0
    return count


def _ignore(values):
    pass


def _countWithFirstValue(plan, value):
    values = [0] * plan.size
    residual = list(plan.rhs)
    values[0] = value
    for position, coefficient in plan.equalitiesOf[0]:
        residual[position] -= coefficient * value
    if not all(residual[position] == 0 for position in plan.forcedAt[0]):
        return 0
    for check in plan.checksAt[0]:
        coefficients, rhs = plan.inequalities[check]
        if sum(coefficient * values[index]
               for index, coefficient in coefficients) > rhs:
            return 0
    return _search(plan, values, residual, 1, _ignore)


def count_lattice_points(p, threads=None):
    """
    #(P ∩ Z^{3n²}) by depth-first search. With threads > 1 the values of
    the first variable are distributed over a process pool.
    """
    plan = _SearchPlan(p)
    if threads is None:
        threads = getSetting('threads')
    firstValues = list(_candidates(plan, list(plan.rhs), 0))
    if threads <= 1 or len(firstValues) <= 1:
        count = _search(plan, [0] * plan.size, list(plan.rhs), 0, _ignore)
    else:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            count = sum(executor.map(_countWithFirstValue,
                                     [plan] * len(firstValues), firstValues))
    logger.debug("Counted %d lattice points of P%s.", count, p.getTriple())
    return count


def _toLatticePoint(n, values):
    matrices = {}
    for offset, matrix in enumerate(("beta", "gamma", "alpha")):
        start = offset * n * n
        matrices[matrix] = [values[start + row * n:start + (row + 1) * n]
                            for row in range(n)]
    return LatticePoint(n, alpha=matrices["alpha"], beta=matrices["beta"],
                        gamma=matrices["gamma"])


def enumerate_lattice_points(p):
    """All lattice points of p, in the lexicographic order of the
    variables."""
    plan = _SearchPlan(p)
    points = []
    _search(plan, [0] * plan.size, list(plan.rhs), 0,
            lambda values: points.append(_toLatticePoint(p.getN(), values)))
    return points


######
# Lattice points and tableaux
######
def _matrixOf(point, matrix):
    return {"alpha": point.getAlpha(), "beta": point.getBeta(),
            "gamma": point.getGamma()}[matrix]


def lattice_point_to_tableaux(point, p):
    """
    The LR tableaux (T, U, V) of shapes μ/α, ν/γ, λ/β with contents β, α
    and γ. Row j of a tableau holds X_i^j copies of i, increasing.
    """
    n = point.getN()
    outers = dict(zip(("alpha", "gamma", "beta"), p.getTriple()))
    tableaux = []
    for content, inner in _ROLES:
        counts = _matrixOf(point, content)
        innerParts = Partition(sum(row) for row in _matrixOf(point, inner))
        outer = outers[inner]
        rows = []
        for j in range(outer.length()):
            row = []
            for i in range(n):
                row.extend([i + 1] * counts[i][j])
            rows.append(row)
        tableaux.append(Filling(shape=SkewShape(outer=outer,
                                                inner=innerParts),
                                rows=rows))
    return tuple(tableaux)


def tableaux_to_lattice_point(T, U, V, n):
    """Inverse of lattice_point_to_tableaux."""
    matrices = {}
    for filling, (content, _) in zip((T, U, V), _ROLES):
        counts = [[0] * n for _ in range(n)]
        for j, row in enumerate(filling.getRows()):
            for letter in row:
                if letter > n or j >= n:
                    raise PolytopeException(
                        "Tableau {rows} does not fit in dimension "
                        "{n}.".format(rows=filling.getRows(), n=n))
                counts[letter - 1][j] += 1
        matrices[content] = counts
    return LatticePoint(n, alpha=matrices["alpha"], beta=matrices["beta"],
                        gamma=matrices["gamma"])


def add_points(x, y):
    """
    Coordinatewise sum: a point of P_{μ,ν,λ} plus a point of P_{μ',ν',λ'}
    is a point of P_{μ+μ',ν+ν',λ+λ'}.
    """
    if x.getN() != y.getN():
        raise PolytopeException(
            "Cannot add lattice points of dimensions {left} and "
            "{right}.".format(left=x.getN(), right=y.getN()))

    def added(left, right):
        return [[a + b for a, b in zip(rowLeft, rowRight)]
                for rowLeft, rowRight in zip(left, right)]

    return LatticePoint(x.getN(),
                        alpha=added(x.getAlpha(), y.getAlpha()),
                        beta=added(x.getBeta(), y.getBeta()),
                        gamma=added(x.getGamma(), y.getGamma()))
