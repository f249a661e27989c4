#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Entities:
    The value types handled by NLCalc and the factory that creates them.
"""

from abc import ABC, abstractmethod
from collections.abc import Mapping
import functools
import numbers
import re

# Parts and sizes are 64-bit signed quantities.
INT64_MAX = 2 ** 63 - 1

_PARTITION_TEXT = re.compile(r"^(0|[1-9][0-9]*)(,(0|[1-9][0-9]*))*$")


class Entity(ABC):
    """
    This is the base class for all entities, which encapsulate the
    immutable values handled by NLCalc components. Entities are never
    modified after construction and may be shared freely between workers.
    """

    @abstractmethod
    def accept(self, visitor):
        """
        Used by EntityVisitors. When an entity 'accepts' an EntityVisitor,
        it is expected to make a request back to the EntityVisitor
        that encodes the class of the Entity.
        """
        pass


class EntityVisitor(ABC):
    """
    The abstract base class for entity visitors, which can perform operations
    on and collect data from Entities in a uniform, type-safe way.
    This is primarily used by the response layer, which has to send
    visitors to entities to convert them to text or JSON.
    """

    @abstractmethod
    def visitPartition(self, entity):
        pass

    @abstractmethod
    def visitSkewShape(self, entity):
        pass

    @abstractmethod
    def visitFilling(self, entity):
        pass

    @abstractmethod
    def visitContentVector(self, entity):
        pass

    @abstractmethod
    def visitWitness(self, entity):
        pass

    @abstractmethod
    def visitHProfile(self, entity):
        pass

    @abstractmethod
    def visitSchurExpansion(self, entity):
        pass

    @abstractmethod
    def visitKTExpansion(self, entity):
        pass

    @abstractmethod
    def visitLatticePoint(self, entity):
        pass

    @abstractmethod
    def visitHornTriple(self, entity):
        pass

    @abstractmethod
    def visitScanReport(self, entity):
        pass

    @abstractmethod
    def visitNLFunctionSample(self, entity):
        pass

    @abstractmethod
    def visitKleberResult(self, entity):
        pass

    @abstractmethod
    def visitHypothesisResult(self, entity):
        pass

    @abstractmethod
    def visitMembershipDecision(self, entity):
        pass


class EntityFactory:
    """
    An EntityFactory provides an interface for NLCalc components to
    construct Entity objects without having to explicitly name or
    import Entity classes.
    """

    @staticmethod
    def makePartitionEntity(parts=()):
        return Partition(parts)

    @staticmethod
    def makePartitionFromText(text):
        return Partition.fromText(text)

    @staticmethod
    def makeSkewShapeEntity(outer, inner=()):
        return SkewShape(outer=outer, inner=inner)

    @staticmethod
    def makeFillingEntity(shape, rows):
        return Filling(shape=shape, rows=rows)

    @staticmethod
    def makeSchurExpansionEntity(terms=None):
        return SchurExpansion(terms)

    @staticmethod
    def makeKTExpansionEntity(terms=None):
        return KTExpansion(terms)

    @staticmethod
    def makeWitnessEntity(alpha, beta, gamma, multiplicity):
        return Witness(alpha=alpha, beta=beta, gamma=gamma,
                       multiplicity=multiplicity)

    @staticmethod
    def makeScanReportEntity(scanName, parameters):
        return ScanReport(scanName=scanName, parameters=parameters)


class EntityException(Exception):
    """The base class for entity-related exceptions that protect
    against invalid data and misuse."""
    pass


class EntityDataTypeException(EntityException, TypeError):
    """Raised when an Entity constructor receives inputs of an invalid type."""


class EntityDataValueException(EntityException, ValueError):
    """Raised when an Entity constructor receives inputs of
    the correct type but invalid value."""


class EntityOverflowException(EntityException, OverflowError):
    """Raised when a part or a size leaves the 64-bit signed range."""


class ExpansionTypeException(EntityDataTypeException):
    """Raised when Schur and Koike-Terada expansions are mixed."""


def _checkInteger(owner, name, value, minimum=None):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise EntityDataTypeException(
            "{owner} expects <{name}> to be an integer. Received "
            "{valueType}.".format(owner=owner, name=name,
                                  valueType=type(value)))
    if minimum is not None and value < minimum:
        raise EntityDataValueException(
            "{owner} expects <{name}> to be at least {minimum}. Received "
            "{value}.".format(owner=owner, name=name, minimum=minimum,
                              value=value))
    return int(value)


@functools.total_ordering
class Partition(Entity):
    """
    A weakly decreasing sequence of nonnegative integers, kept in canonical
    form (no trailing zeros). Ordering is by size, then lexicographically
    on the parts, which is the presentation order of expansions.
    """

    __slots__ = ('_parts', '_size')

    def __init__(self, parts=()):
        """
        Parameters
        ----------
        parts:
            An iterable of nonnegative integers in weakly decreasing order.
            Trailing zeros are stripped.
        """
        if isinstance(parts, Partition):
            self._parts = parts._parts
            self._size = parts._size
            return
        if isinstance(parts, (str, bytes)):
            raise EntityDataTypeException(
                "Partition expects <parts> to be an iterable of integers; use "
                "Partition.fromText for text input.")
        try:
            values = tuple(parts)
        except TypeError as exception:
            raise EntityDataTypeException(
                "Partition expects <parts> to be an iterable of integers. "
                "Received {partsType}.".format(
                    partsType=type(parts))) from exception

        values = tuple(_checkInteger("Partition", "parts", value, minimum=0)
                       for value in values)
        for previous, current in zip(values, values[1:]):
            if current > previous:
                raise EntityDataValueException(
                    "Partition expects <parts> to be weakly decreasing. "
                    "Received {values}.".format(values=values))
        end = len(values)
        while end > 0 and values[end - 1] == 0:
            end -= 1
        self._parts = values[:end]
        self._size = sum(self._parts)
        if self._parts and self._parts[0] > INT64_MAX:
            raise EntityOverflowException(
                "Partition part {part} does not fit in 64 bits.".format(
                    part=self._parts[0]))
        if self._size > INT64_MAX:
            raise EntityOverflowException(
                "Partition size {size} does not fit in 64 bits.".format(
                    size=self._size))

    @classmethod
    def fromCanonical(cls, parts):
        """Wraps a tuple that is already canonical, skipping validation."""
        partition = cls.__new__(cls)
        partition._parts = parts
        partition._size = sum(parts)
        return partition

    @classmethod
    def fromText(cls, text):
        """
        Parses the text encoding `4,2,1`; the empty partition is `-`.

        Raises
        ------
        EntityDataTypeException
            The input is not a string.
        EntityDataValueException
            The text is malformed or the parts are not weakly decreasing.
        """
        if not isinstance(text, str):
            raise EntityDataTypeException(
                "Partition text must be a string. Received {textType}.".format(
                    textType=type(text)))
        if text == "-":
            return cls(())
        if not _PARTITION_TEXT.match(text):
            raise EntityDataValueException(
                "'{text}' is not a partition; expected comma-separated "
                "nonnegative integers such as 4,2,1 or '-' for the empty "
                "partition.".format(text=text))
        return cls(int(part) for part in text.split(","))

    @property
    def parts(self):
        return self._parts

    def size(self):
        return self._size

    def length(self):
        return len(self._parts)

    def part(self, index):
        """The 1-based part λ_index; zero beyond the length."""
        if index < 1:
            raise EntityDataValueException(
                "Partition parts are indexed from 1. Received {index}.".format(
                    index=index))
        if index > len(self._parts):
            return 0
        return self._parts[index - 1]

    def isEmpty(self):
        return len(self._parts) == 0

    def contains(self, other):
        """True when the diagram of `other` is a subset of this diagram."""
        other = other if isinstance(other, Partition) else Partition(other)
        if len(other._parts) > len(self._parts):
            return False
        return all(small <= big for small, big in zip(other._parts,
                                                       self._parts))

    def toText(self):
        if not self._parts:
            return "-"
        return ",".join(str(part) for part in self._parts)

    def toList(self):
        return list(self._parts)

    def __len__(self):
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __getitem__(self, index):
        return self._parts[index]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __lt__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return (self._size, self._parts) < (other._size, other._parts)

    def __hash__(self):
        return hash(self._parts)

    def __repr__(self):
        return "Partition({parts})".format(parts=self._parts)

    def __str__(self):
        return "[" + ",".join(str(part) for part in self._parts) + "]"

    def __reduce__(self):
        return (Partition.fromCanonical, (self._parts,))

    def accept(self, visitor):
        visitor.visitPartition(self)


class SkewShape(Entity):
    """The cells of `outer` that are not cells of `inner`."""

    def __init__(self, outer, inner=()):
        self._outer = Partition(outer)
        self._inner = Partition(inner)
        if not self._outer.contains(self._inner):
            raise EntityDataValueException(
                "SkewShape expects <inner> {inner} to be contained in <outer> "
                "{outer}.".format(inner=self._inner, outer=self._outer))

    def getOuter(self):
        return self._outer

    def getInner(self):
        return self._inner

    def size(self):
        return self._outer.size() - self._inner.size()

    def rowLengths(self):
        """Skew row lengths for rows 1..ℓ(outer)."""
        return tuple(self._outer.part(row) - self._inner.part(row)
                     for row in range(1, self._outer.length() + 1))

    def __eq__(self, other):
        if not isinstance(other, SkewShape):
            return NotImplemented
        return (self._outer, self._inner) == (other._outer, other._inner)

    def __hash__(self):
        return hash((self._outer, self._inner))

    def __str__(self):
        return "{outer}/{inner}".format(outer=self._outer, inner=self._inner)

    def accept(self, visitor):
        visitor.visitSkewShape(self)


class Filling(Entity):
    """
    A semistandard filling of a skew shape. `rows` lists, for every row of
    the outer shape, the entries of the skew cells from left to right.
    """

    def __init__(self, shape, rows):
        if not isinstance(shape, SkewShape):
            raise EntityDataTypeException(
                "Filling expects <shape> to be a SkewShape. Received "
                "{shapeType}.".format(shapeType=type(shape)))
        rows = tuple(tuple(_checkInteger("Filling", "rows", entry, minimum=1)
                           for entry in row) for row in rows)
        lengths = shape.rowLengths()
        # Trailing empty rows may be omitted by the caller.
        if len(rows) < len(lengths):
            rows = rows + ((),) * (len(lengths) - len(rows))
        if len(rows) != len(lengths) or any(
                len(row) != length for row, length in zip(rows, lengths)):
            raise EntityDataValueException(
                "Filling rows {rows} do not match the skew row lengths "
                "{lengths} of {shape}.".format(rows=rows, lengths=lengths,
                                               shape=shape))
        self._shape = shape
        self._rows = rows
        if not self._isSemistandard():
            raise EntityDataValueException(
                "Filling {rows} of {shape} is not semistandard.".format(
                    rows=rows, shape=shape))

    def _isSemistandard(self):
        inner = self._shape.getInner()
        for rowIndex, row in enumerate(self._rows):
            if any(right < left for left, right in zip(row, row[1:])):
                return False
            if rowIndex == 0:
                continue
            for offset, entry in enumerate(row):
                above = self.entry(rowIndex - 1,
                                   inner.part(rowIndex + 1) + offset)
                if above is not None and above >= entry:
                    return False
        return True

    def getShape(self):
        return self._shape

    def getRows(self):
        return self._rows

    def entry(self, row, column):
        """Entry at 0-based (row, column) of the outer diagram; None for
        cells of the inner shape."""
        start = self._shape.getInner().part(row + 1)
        if column < start:
            return None
        return self._rows[row][column - start]

    def rowword(self):
        """Rows read top to bottom, each from right to left."""
        word = []
        for row in self._rows:
            word.extend(reversed(row))
        return tuple(word)

    def content(self):
        counts = [0] * max(self.rowword(), default=0)
        for entry in self.rowword():
            counts[entry - 1] += 1
        return ContentVector(counts)

    def __eq__(self, other):
        if not isinstance(other, Filling):
            return NotImplemented
        return (self._shape, self._rows) == (other._shape, other._rows)

    def __hash__(self):
        return hash((self._shape, self._rows))

    def __repr__(self):
        return "Filling({shape}, {rows})".format(shape=self._shape,
                                                 rows=self._rows)

    def accept(self, visitor):
        visitor.visitFilling(self)


class ContentVector(Entity):
    """c_i = multiplicity of the entry i."""

    def __init__(self, counts):
        self._counts = tuple(_checkInteger("ContentVector", "counts", count,
                                           minimum=0) for count in counts)

    def getCounts(self):
        return self._counts

    def isPartition(self):
        return all(later <= earlier for earlier, later in
                   zip(self._counts, self._counts[1:]))

    def toPartition(self):
        if not self.isPartition():
            raise EntityDataValueException(
                "Content {counts} is not weakly decreasing.".format(
                    counts=self._counts))
        return Partition(self._counts)

    def __eq__(self, other):
        if not isinstance(other, ContentVector):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self):
        return hash(self._counts)

    def accept(self, visitor):
        visitor.visitContentVector(self)


class Witness(Entity):
    """(α, β, γ) with multiplicity c_{α,β}^μ c_{α,γ}^ν c_{β,γ}^λ."""

    def __init__(self, alpha, beta, gamma, multiplicity):
        self._alpha = Partition(alpha)
        self._beta = Partition(beta)
        self._gamma = Partition(gamma)
        self._multiplicity = _checkInteger("Witness", "multiplicity",
                                           multiplicity, minimum=1)

    def getAlpha(self):
        return self._alpha

    def getBeta(self):
        return self._beta

    def getGamma(self):
        return self._gamma

    def getMultiplicity(self):
        return self._multiplicity

    def __eq__(self, other):
        if not isinstance(other, Witness):
            return NotImplemented
        return ((self._alpha, self._beta, self._gamma, self._multiplicity) ==
                (other._alpha, other._beta, other._gamma, other._multiplicity))

    def __hash__(self):
        return hash((self._alpha, self._beta, self._gamma,
                     self._multiplicity))

    def __repr__(self):
        return "Witness({alpha}, {beta}, {gamma}, {multiplicity})".format(
            alpha=self._alpha, beta=self._beta, gamma=self._gamma,
            multiplicity=self._multiplicity)

    def accept(self, visitor):
        visitor.visitWitness(self)


class HProfile(Entity):
    """Coefficient sums of s_[μ]s_[ν] graded by |λ| = |μΔν| + 2t."""

    def __init__(self, mu, nu, values):
        self._mu = Partition(mu)
        self._nu = Partition(nu)
        self._values = tuple(_checkInteger("HProfile", "values", value,
                                           minimum=0) for value in values)

    def getMu(self):
        return self._mu

    def getNu(self):
        return self._nu

    def getValues(self):
        return self._values

    def accept(self, visitor):
        visitor.visitHProfile(self)


class Expansion(Entity):
    """
    A finitely supported map Partition -> nonzero integer. Subclasses fix
    the basis; arithmetic only combines expansions of the same basis.
    """

    basis = None

    def __init__(self, terms=None):
        """
        Parameters
        ----------
        terms:
            A mapping or an iterable of (partition, coefficient) pairs.
            Keys may be Partitions or part sequences; repeated keys add.
        """
        if terms is None:
            terms = ()
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected = {}
        for key, coefficient in items:
            partition = Partition(key)
            coefficient = _checkInteger(type(self).__name__, "coefficient",
                                        coefficient)
            collected[partition] = collected.get(partition, 0) + coefficient
        self._terms = {partition: coefficient for partition, coefficient
                       in collected.items() if coefficient != 0}

    @classmethod
    def fromPartTuples(cls, terms):
        """Builds an expansion from {canonical part tuple: coefficient}
        without revalidating the keys."""
        expansion = cls.__new__(cls)
        expansion._terms = {Partition.fromCanonical(parts): coefficient
                            for parts, coefficient in terms.items()
                            if coefficient != 0}
        return expansion

    def toPartTuples(self):
        return {partition.parts: coefficient
                for partition, coefficient in self._terms.items()}

    def coefficient(self, partition):
        return self._terms.get(Partition(partition), 0)

    def terms(self):
        """(Partition, coefficient) pairs in presentation order."""
        return sorted(self._terms.items())

    def support(self):
        return sorted(self._terms)

    def isZero(self):
        return len(self._terms) == 0

    def maxCoefficient(self):
        return max(self._terms.values(), default=0)

    def minCoefficient(self):
        return min(self._terms.values(), default=0)

    def degree(self):
        """Largest |λ| in the support; None for the zero expansion."""
        return max((partition.size() for partition in self._terms),
                   default=None)

    def totalCoefficient(self):
        return sum(self._terms.values())

    def _checkSameBasis(self, other):
        if type(other) is not type(self):
            raise ExpansionTypeException(
                "Cannot combine a {left} with a {right}.".format(
                    left=type(self).__name__, right=type(other).__name__))

    def __add__(self, other):
        self._checkSameBasis(other)
        terms = dict(self._terms)
        for partition, coefficient in other._terms.items():
            terms[partition] = terms.get(partition, 0) + coefficient
        return type(self)(terms)

    def __sub__(self, other):
        self._checkSameBasis(other)
        return self + (-other)

    def __neg__(self):
        return type(self)({partition: -coefficient for partition, coefficient
                           in self._terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, bool) or not isinstance(scalar, numbers.Integral):
            return NotImplemented
        return type(self)({partition: scalar * coefficient for partition,
                           coefficient in self._terms.items()})

    __rmul__ = __mul__

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Expansion):
            return NotImplemented
        return type(self) is type(other) and self._terms == other._terms

    __hash__ = None

    def __repr__(self):
        return "{name}({terms})".format(
            name=type(self).__name__,
            terms=", ".join("{partition}: {coefficient}".format(
                partition=partition, coefficient=coefficient)
                for partition, coefficient in self.terms()))


class SchurExpansion(Expansion):
    """An element of Λ in the Schur basis {s_λ}."""

    basis = "schur"

    def accept(self, visitor):
        visitor.visitSchurExpansion(self)


class KTExpansion(Expansion):
    """An element of Λ in the Koike-Terada basis {s_[λ]}."""

    basis = "kt"

    def accept(self, visitor):
        visitor.visitKTExpansion(self)


class LatticePoint(Entity):
    """
    A point of the Newell-Littlewood polytope. Matrices are indexed
    [i-1][j-1] for the variable X_i^j, the number of i's in row j.
    """

    def __init__(self, n, alpha, beta, gamma):
        self._n = _checkInteger("LatticePoint", "n", n, minimum=1)
        self._alpha = self._checkMatrix("alpha", alpha)
        self._beta = self._checkMatrix("beta", beta)
        self._gamma = self._checkMatrix("gamma", gamma)

    def _checkMatrix(self, name, matrix):
        rows = tuple(tuple(_checkInteger("LatticePoint", name, value,
                                         minimum=0) for value in row)
                     for row in matrix)
        if len(rows) != self._n or any(len(row) != self._n for row in rows):
            raise EntityDataValueException(
                "LatticePoint expects <{name}> to be {n}x{n}.".format(
                    name=name, n=self._n))
        return rows

    def getN(self):
        return self._n

    def getAlpha(self):
        return self._alpha

    def getBeta(self):
        return self._beta

    def getGamma(self):
        return self._gamma

    def __eq__(self, other):
        if not isinstance(other, LatticePoint):
            return NotImplemented
        return ((self._n, self._alpha, self._beta, self._gamma) ==
                (other._n, other._alpha, other._beta, other._gamma))

    def __hash__(self):
        return hash((self._n, self._alpha, self._beta, self._gamma))

    def __repr__(self):
        return "LatticePoint(a={alpha}, b={beta}, c={gamma})".format(
            alpha=self._alpha, beta=self._beta, gamma=self._gamma)

    def accept(self, visitor):
        visitor.visitLatticePoint(self)


class HornTriple(Entity):
    """Index sets I, J, K ⊆ [n] of size d with c_{τ(I),τ(J)}^{τ(K)} > 0."""

    def __init__(self, n, I, J, K, tauI, tauJ, tauK):
        self._n = _checkInteger("HornTriple", "n", n, minimum=1)
        self._I = tuple(I)
        self._J = tuple(J)
        self._K = tuple(K)
        if not len(self._I) == len(self._J) == len(self._K):
            raise EntityDataValueException(
                "HornTriple expects |I| = |J| = |K|.")
        self._tauI = Partition(tauI)
        self._tauJ = Partition(tauJ)
        self._tauK = Partition(tauK)

    def getN(self):
        return self._n

    def getD(self):
        return len(self._I)

    def getI(self):
        return self._I

    def getJ(self):
        return self._J

    def getK(self):
        return self._K

    def getTaus(self):
        return (self._tauI, self._tauJ, self._tauK)

    def describe(self):
        """Σ_{k∈K} λ_k <= Σ_{i∈I} μ_i + Σ_{j∈J} ν_j in plain text."""
        def terms(symbol, indices):
            return " + ".join("{symbol}{index}".format(symbol=symbol,
                                                       index=index)
                              for index in indices)
        return "{lam} <= {mu} + {nu}".format(lam=terms("lam", self._K),
                                             mu=terms("mu", self._I),
                                             nu=terms("nu", self._J))

    def __eq__(self, other):
        if not isinstance(other, HornTriple):
            return NotImplemented
        return ((self._n, self._I, self._J, self._K) ==
                (other._n, other._I, other._J, other._K))

    def __hash__(self):
        return hash((self._n, self._I, self._J, self._K))

    def __repr__(self):
        return "HornTriple(I={I}, J={J}, K={K})".format(I=self._I, J=self._J,
                                                        K=self._K)

    def accept(self, visitor):
        visitor.visitHornTriple(self)


class ScanReport(Entity):
    """
    The outcome of a sweep. Counterexamples are appended as they are
    found; the report is empty of counterexamples exactly when the
    scanned property held everywhere.
    """

    def __init__(self, scanName, parameters):
        if not isinstance(scanName, str) or len(scanName) == 0:
            raise EntityDataValueException(
                "ScanReport expects a non-empty <scanName>.")
        self._scanName = scanName
        self._parameters = dict(parameters)
        self._counterexamples = []
        self._checkedCount = 0

    def getScanName(self):
        return self._scanName

    def getParameters(self):
        return dict(self._parameters)

    def getCounterexamples(self):
        return list(self._counterexamples)

    def getCheckedCount(self):
        return self._checkedCount

    def addCounterexample(self, counterexample):
        self._counterexamples.append(dict(counterexample))

    def addChecked(self, count=1):
        self._checkedCount += count

    def propertyHeld(self):
        return len(self._counterexamples) == 0

    def accept(self, visitor):
        visitor.visitScanReport(self)


class NLFunctionSample(Entity):
    """k ↦ N_{kμ,kν,kλ} for k = 1..K."""

    def __init__(self, mu, nu, lam, values):
        self._mu = Partition(mu)
        self._nu = Partition(nu)
        self._lam = Partition(lam)
        self._values = tuple(_checkInteger("NLFunctionSample", "values",
                                           value, minimum=0)
                             for value in values)

    def getTriple(self):
        return (self._mu, self._nu, self._lam)

    def getValues(self):
        return self._values

    def value(self, k):
        return self._values[k - 1]

    def oddView(self):
        """k ↦ N at dilation 2k-1."""
        return self._values[0::2]

    def evenView(self):
        """k ↦ N at dilation 2k."""
        return self._values[1::2]

    def satisfiesSemigroup(self):
        """values[k] > 0 implies values[mk] > 0 for every sampled mk."""
        maxK = len(self._values)
        for k in range(1, maxK + 1):
            if self.value(k) == 0:
                continue
            for multiple in range(2 * k, maxK + 1, k):
                if self.value(multiple) == 0:
                    return False
        return True

    def accept(self, visitor):
        visitor.visitNLFunctionSample(self)


class KleberResult(Entity):
    """Exact rank of the products s_[λ]s_[λ∨] over the pairs of an a×b box."""

    def __init__(self, a, b, rank, pairCount):
        self._a = a
        self._b = b
        self._rank = rank
        self._pairCount = pairCount

    def getBox(self):
        return (self._a, self._b)

    def getRank(self):
        return self._rank

    def getPairCount(self):
        return self._pairCount

    def isIndependent(self):
        return self._rank == self._pairCount

    def __iter__(self):
        return iter((self._rank, self._pairCount))

    def accept(self, visitor):
        visitor.visitKleberResult(self)


class HypothesisResult(Entity):
    """A candidate closed form compared against a computed value."""

    def __init__(self, name, k, expected, observed):
        self._name = name
        self._k = k
        self._expected = expected
        self._observed = observed

    def getName(self):
        return self._name

    def getK(self):
        return self._k

    def getExpected(self):
        return self._expected

    def getObserved(self):
        return self._observed

    def isConfirmed(self):
        return self._expected == self._observed

    def accept(self, visitor):
        visitor.visitHypothesisResult(self)


class MembershipDecision(Entity):
    """A yes/no decision with the first violated condition, if any."""

    def __init__(self, member, violation=None):
        self._member = bool(member)
        self._violation = violation

    def isMember(self):
        return self._member

    def getViolation(self):
        return self._violation

    def __bool__(self):
        return self._member

    def accept(self, visitor):
        visitor.visitMembershipDecision(self)
