#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Response:
    Constructs and interprets response models.
"""

from enum import Enum, auto
from nlcalc.core.entities import Entity, EntityVisitor


class EntityConverter(EntityVisitor):
    """
    Converts entity data to a generic representation that can be used
    by delivery systems (e.g. printing to a terminal, outputting as JSON,
    et cetera). Lists, tuples and dictionaries are converted element by
    element; other plain values are handed to `_convertPlain`.
    """

    def __init__(self):
        # This temporarily holds the output that we pass back to the caller of
        # convert().
        self._result = None

    def _storeResult(self, result):
        self._result = result

    def _getAndClearResult(self):
        output = self._result
        self._result = None
        return output

    def convert(self, value):
        if isinstance(value, Entity):
            value.accept(self)
            return self._getAndClearResult()
        if isinstance(value, (list, tuple)):
            return self._convertSequence([self.convert(item)
                                          for item in value])
        if isinstance(value, dict):
            return self._convertMapping({key: self.convert(item)
                                         for key, item in value.items()})
        return self._convertPlain(value)

    def _convertSequence(self, items):
        return items

    def _convertMapping(self, mapping):
        return mapping

    def _convertPlain(self, value):
        return value


class DictionaryConverter(EntityConverter):
    """Produces JSON-serializable dictionaries, lists and scalars."""

    def _expansion(self, entity):
        return {'basis': entity.basis,
                'terms': [{'partition': partition.toList(),
                           'coeff': coefficient}
                          for partition, coefficient in entity.terms()]}

    def visitPartition(self, entity):
        self._storeResult(entity.toList())

    def visitSkewShape(self, entity):
        self._storeResult({'outer': entity.getOuter().toList(),
                           'inner': entity.getInner().toList()})

    def visitFilling(self, entity):
        shape = entity.getShape()
        self._storeResult({'outer': shape.getOuter().toList(),
                           'inner': shape.getInner().toList(),
                           'rows': [list(row) for row in entity.getRows()]})

    def visitContentVector(self, entity):
        self._storeResult(list(entity.getCounts()))

    def visitWitness(self, entity):
        self._storeResult({'alpha': entity.getAlpha().toList(),
                           'beta': entity.getBeta().toList(),
                           'gamma': entity.getGamma().toList(),
                           'multiplicity': entity.getMultiplicity()})

    def visitHProfile(self, entity):
        self._storeResult({'mu': entity.getMu().toList(),
                           'nu': entity.getNu().toList(),
                           'profile': list(entity.getValues())})

    def visitSchurExpansion(self, entity):
        self._storeResult(self._expansion(entity))

    def visitKTExpansion(self, entity):
        self._storeResult(self._expansion(entity))

    def visitLatticePoint(self, entity):
        self._storeResult({'n': entity.getN(),
                           'alpha': [list(row) for row in entity.getAlpha()],
                           'beta': [list(row) for row in entity.getBeta()],
                           'gamma': [list(row) for row in entity.getGamma()]})

    def visitHornTriple(self, entity):
        self._storeResult({'n': entity.getN(),
                           'I': list(entity.getI()),
                           'J': list(entity.getJ()),
                           'K': list(entity.getK()),
                           'tau': [tau.toList() for tau in entity.getTaus()],
                           'inequality': entity.describe()})

    def visitScanReport(self, entity):
        self._storeResult({'scan': entity.getScanName(),
                           'parameters': entity.getParameters(),
                           'checked': entity.getCheckedCount(),
                           'counterexamples': entity.getCounterexamples()})

    def visitNLFunctionSample(self, entity):
        mu, nu, lam = entity.getTriple()
        self._storeResult({'mu': mu.toList(), 'nu': nu.toList(),
                           'lam': lam.toList(),
                           'values': list(entity.getValues())})

    def visitKleberResult(self, entity):
        a, b = entity.getBox()
        self._storeResult({'a': a, 'b': b, 'rank': entity.getRank(),
                           'pairs': entity.getPairCount()})

    def visitHypothesisResult(self, entity):
        self._storeResult({'name': entity.getName(), 'k': entity.getK(),
                           'expected': entity.getExpected(),
                           'observed': entity.getObserved(),
                           'confirmed': entity.isConfirmed()})

    def visitMembershipDecision(self, entity):
        self._storeResult({'member': entity.isMember(),
                           'violation': entity.getViolation()})


class TextConverter(EntityConverter):
    """
    Produces the human-readable text printed by the command line. Every
    visit stores a single string, possibly spanning several lines.
    """

    def _expansion(self, entity, symbol):
        if entity.isZero():
            return "0"
        text = ""
        for partition, coefficient in entity.terms():
            magnitude = abs(coefficient)
            term = "{scale}{symbol}{partition}".format(
                scale="" if magnitude == 1 else magnitude, symbol=symbol,
                partition=partition)
            if not text:
                text = term if coefficient > 0 else "-" + term
            else:
                text += (" + " if coefficient > 0 else " - ") + term
        return text

    def _convertSequence(self, items):
        return "\n".join(items)

    def _convertMapping(self, mapping):
        lines = []
        for key, text in mapping.items():
            if "\n" in text:
                lines.append("{key}:".format(key=key))
                lines.extend("  " + line for line in text.split("\n"))
            else:
                lines.append("{key}: {text}".format(key=key, text=text))
        return "\n".join(lines)

    def _convertPlain(self, value):
        if isinstance(value, bool):
            return "true" if value else "false"
        if value is None:
            return "-"
        return str(value)

    def visitPartition(self, entity):
        self._storeResult(str(entity))

    def visitSkewShape(self, entity):
        self._storeResult(str(entity))

    def visitFilling(self, entity):
        inner = entity.getShape().getInner()
        lines = []
        for row, entries in enumerate(entity.getRows(), start=1):
            cells = ["."] * inner.part(row) + [str(entry)
                                               for entry in entries]
            lines.append(" ".join(cells))
        self._storeResult("\n".join(lines))

    def visitContentVector(self, entity):
        self._storeResult(" ".join(str(count)
                                   for count in entity.getCounts()))

    def visitWitness(self, entity):
        self._storeResult(
            "alpha={alpha} beta={beta} gamma={gamma} multiplicity={m}".format(
                alpha=entity.getAlpha(), beta=entity.getBeta(),
                gamma=entity.getGamma(), m=entity.getMultiplicity()))

    def visitHProfile(self, entity):
        self._storeResult(" ".join(str(value)
                                   for value in entity.getValues()))

    def visitSchurExpansion(self, entity):
        self._storeResult(self._expansion(entity, "s"))

    def visitKTExpansion(self, entity):
        self._storeResult(self._expansion(entity, "sp"))

    def visitLatticePoint(self, entity):
        self._storeResult("a={alpha} b={beta} c={gamma}".format(
            alpha=[list(row) for row in entity.getAlpha()],
            beta=[list(row) for row in entity.getBeta()],
            gamma=[list(row) for row in entity.getGamma()]))

    def visitHornTriple(self, entity):
        self._storeResult(entity.describe())

    def visitScanReport(self, entity):
        parameters = ", ".join("{key}={value}".format(key=key, value=value)
                               for key, value
                               in entity.getParameters().items())
        counterexamples = entity.getCounterexamples()
        lines = ["scan: {name}".format(name=entity.getScanName()),
                 "parameters: {parameters}".format(parameters=parameters),
                 "checked: {count}".format(count=entity.getCheckedCount()),
                 "counterexamples: {count}".format(
                     count=len(counterexamples))]
        for counterexample in counterexamples:
            lines.append("  " + " ".join(
                "{key}={value}".format(key=key, value=value)
                for key, value in counterexample.items()))
        self._storeResult("\n".join(lines))

    def visitNLFunctionSample(self, entity):
        self._storeResult("\n".join(
            "{k}: {value}".format(k=k, value=value)
            for k, value in enumerate(entity.getValues(), start=1)))

    def visitKleberResult(self, entity):
        a, b = entity.getBox()
        self._storeResult("{a}x{b}: rank {rank} of {pairs} pairs ({verdict})"
                          .format(a=a, b=b, rank=entity.getRank(),
                                  pairs=entity.getPairCount(),
                                  verdict="independent"
                                  if entity.isIndependent()
                                  else "dependent"))

    def visitHypothesisResult(self, entity):
        self._storeResult(
            "{name} k={k}: expected {expected}, observed {observed} "
            "({verdict})".format(name=entity.getName(), k=entity.getK(),
                                 expected=entity.getExpected(),
                                 observed=entity.getObserved(),
                                 verdict="confirmed" if entity.isConfirmed()
                                 else "refuted"))

    def visitMembershipDecision(self, entity):
        if entity.isMember():
            self._storeResult("member")
        else:
            self._storeResult("not a member: {violation}".format(
                violation=entity.getViolation()))


class Status(Enum):
    """
    The status flag enum for ResponseModel objects.
    A response can succeed, answer a decision question negatively, or fail.
    """
    SUCCESS = auto()
    NEGATIVE = auto()
    FAILURE = auto()


class ResponseFactory:
    """
    A factory for churning out response model objects.
    Classes should use this factory to construct responses.
    """

    @staticmethod
    def createSuccessResponse(message=None, attachments=None):
        return ResponseModel(status=Status.SUCCESS,
                             message=message, attachments=attachments)

    @staticmethod
    def createNegativeResponse(message=None, attachments=None):
        return ResponseModel(status=Status.NEGATIVE,
                             message=message, attachments=attachments)

    @staticmethod
    def createFailureResponse(message=None, attachments=None):
        return ResponseModel(status=Status.FAILURE,
                             message=message, attachments=attachments)


class ResponseModel:
    """
    The base class for all response models. Any outputs that NLCalc provides
    must be stored as a response model as opposed to providing entities
    directly. This allows the internal representation of our data to
    vary independently of how that data is presented.
    """

    def __init__(self, status, message=None, attachments=None):
        """
        Parameters
        ----------
        status:
            A Status enum object that describes the outcome of a request.
        message:
            A string describing the outcome of the request.
            By default this is None.
        attachments:
            A list holding the output of a request (if there is any to
            deliver), or the request errors of a failed request.
            By default this is None.
        """
        self._status = status
        self._message = message
        self._attachments = attachments

    def getStatus(self):
        return self._status

    def hasMessage(self):
        return self._message is not None

    def getMessage(self):
        return self._message

    def hasAttachments(self):
        return self._attachments is not None

    def getAttachments(self):
        return self._attachments

    def wasSuccessful(self):
        if self._status == Status.SUCCESS:
            return True
        else:
            return False

    def wasNegative(self):
        return self._status == Status.NEGATIVE
