#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Request:
    Instantiates request models.
"""

import datetime
import numbers

from nlcalc.core.entities import EntityFactory

SCANS = ("saturation", "unimodality", "mf", "hahn", "shape", "meetjoin",
         "associativity", "monotonicity")
PRODUCT_METHODS = ("formula", "schur")


class RequestFactory:
    """
    A factory for churning out request model objects.
    Classes should use this factory to construct requests.
    """

    @staticmethod
    def createComputeRequest(mu, nu, lam):
        return ComputeRequest(mu, nu, lam)

    @staticmethod
    def createWitnessesRequest(mu, nu, lam):
        return WitnessesRequest(mu, nu, lam)

    @staticmethod
    def createProductRequest(mu, nu, via="formula"):
        return ProductRequest(mu, nu, via)

    @staticmethod
    def createProfileRequest(mu, nu):
        return ProfileRequest(mu, nu)

    @staticmethod
    def createLRCoefficientRequest(mu, nu, lam):
        return LRCoefficientRequest(mu, nu, lam)

    @staticmethod
    def createKTExpandRequest(lam, dim=None):
        return KTExpandRequest(lam, dim)

    @staticmethod
    def createPieriRequest(mu, p):
        return PieriRequest(mu, p)

    @staticmethod
    def createOscillateRequest(lam, k):
        return OscillateRequest(lam, k)

    @staticmethod
    def createPolytopeRequest(mu, nu, lam, dim=None, dilate=1,
                              listPoints=False, dump=False):
        return PolytopeRequest(mu, nu, lam, dim, dilate, listPoints, dump)

    @staticmethod
    def createHornRequest(dim, listTriples=False):
        return HornRequest(dim, listTriples)

    @staticmethod
    def createCheckInequalitiesRequest(mu, nu, lam, extended=False,
                                       dim=None):
        return CheckInequalitiesRequest(mu, nu, lam, extended, dim)

    @staticmethod
    def createNL2Request(mu, nu, lam):
        return NL2Request(mu, nu, lam)

    @staticmethod
    def createScanRequest(scanName, maxSize, maxK=None, family=None,
                          samples=0, seed=None, randomMaxSize=None):
        return ScanRequest(scanName, maxSize, maxK, family, samples, seed,
                           randomMaxSize)

    @staticmethod
    def createNLFunctionRequest(mu, nu, lam, maxK, hypotheses=False):
        return NLFunctionRequest(mu, nu, lam, maxK, hypotheses)

    @staticmethod
    def createKleberRequest(a, b):
        return KleberRequest(a, b)

    @staticmethod
    def createDetectRequest(lam):
        return DetectRequest(lam)

    @staticmethod
    def createMultiplicityFreeRequest(mu, nu):
        return MultiplicityFreeRequest(mu, nu)


class RequestModel:
    """
    The base class for all request models. The frontend is responsible
    for phrasing their requests in the form of a request model which
    the interactor understands.
    """

    def __init__(self):
        # Used for logging purposes to track when a particular request was
        # created.
        self._createdTimestamp = datetime.datetime.now()

        self._errors = []

    def getCreatedTimestamp(self):
        return self._createdTimestamp

    def addError(self, parameter, message):
        self._errors.append({'parameter': parameter, 'message': message})

    def hasErrors(self):
        return len(self._errors) > 0

    def getErrors(self):
        return self._errors

    def _makePartition(self, parameter, value):
        """
        Builds a Partition from text or a part sequence. Returns None and
        records an error when `value` is missing or malformed.
        """
        if value is None:
            self.addError(parameter, "a partition is required")
            return None
        try:
            if isinstance(value, str):
                return EntityFactory.makePartitionFromText(value)
            return EntityFactory.makePartitionEntity(value)
        except Exception as exception:
            self.addError(parameter, str(exception))
            return None

    def _checkInteger(self, parameter, value, minimum=0):
        if (isinstance(value, bool) or not isinstance(value, numbers.Integral)
                or value < minimum):
            self.addError(parameter, "expected an integer >= {minimum}, got "
                                     "{value}".format(minimum=minimum,
                                                      value=value))
            return None
        return int(value)

    def _checkChoice(self, parameter, value, choices):
        if value not in choices:
            self.addError(parameter, "expected one of {choices}, got "
                                     "{value}".format(
                                         choices=", ".join(choices),
                                         value=value))
            return None
        return value


class TripleRequest(RequestModel):
    """A request about one triple (μ, ν, λ)."""

    def __init__(self, mu, nu, lam):
        super().__init__()
        self._mu = self._makePartition('-m/--mu', mu)
        self._nu = self._makePartition('-n/--nu', nu)
        self._lam = self._makePartition('-l/--lam', lam)

    def getMu(self):
        return self._mu

    def getNu(self):
        return self._nu

    def getLam(self):
        return self._lam

    def getTriple(self):
        return (self._mu, self._nu, self._lam)


class PairRequest(RequestModel):
    """A request about one pair (μ, ν)."""

    def __init__(self, mu, nu):
        super().__init__()
        self._mu = self._makePartition('-m/--mu', mu)
        self._nu = self._makePartition('-n/--nu', nu)

    def getMu(self):
        return self._mu

    def getNu(self):
        return self._nu


class ComputeRequest(TripleRequest):
    pass


class WitnessesRequest(TripleRequest):
    pass


class LRCoefficientRequest(TripleRequest):
    pass


class NL2Request(TripleRequest):
    pass


class ProductRequest(PairRequest):
    def __init__(self, mu, nu, via="formula"):
        super().__init__(mu, nu)
        self._via = self._checkChoice('--via', via, PRODUCT_METHODS)

    def getMethod(self):
        return self._via


class ProfileRequest(PairRequest):
    pass


class MultiplicityFreeRequest(PairRequest):
    pass


class KTExpandRequest(RequestModel):
    def __init__(self, lam, dim=None):
        super().__init__()
        self._lam = self._makePartition('-l/--lam', lam)
        self._dim = None
        if dim is not None:
            self._dim = self._checkInteger('--dim', dim, minimum=1)

    def getLam(self):
        return self._lam

    def getDimension(self):
        return self._dim


class PieriRequest(RequestModel):
    def __init__(self, mu, p):
        super().__init__()
        self._mu = self._makePartition('-m/--mu', mu)
        self._p = self._checkInteger('-p', p)

    def getMu(self):
        return self._mu

    def getP(self):
        return self._p


class OscillateRequest(RequestModel):
    def __init__(self, lam, k):
        super().__init__()
        self._lam = self._makePartition('-l/--lam', lam)
        self._k = self._checkInteger('-k', k)

    def getLam(self):
        return self._lam

    def getK(self):
        return self._k


class PolytopeRequest(TripleRequest):
    def __init__(self, mu, nu, lam, dim=None, dilate=1, listPoints=False,
                 dump=False):
        super().__init__(mu, nu, lam)
        self._dim = None
        if dim is not None:
            self._dim = self._checkInteger('--dim', dim, minimum=1)
        self._dilate = self._checkInteger('--dilate', dilate, minimum=1)
        self._listPoints = bool(listPoints)
        self._dump = bool(dump)

    def getDimension(self):
        return self._dim

    def getDilation(self):
        return self._dilate

    def wantsPoints(self):
        return self._listPoints

    def wantsDump(self):
        return self._dump


class HornRequest(RequestModel):
    def __init__(self, dim, listTriples=False):
        super().__init__()
        self._dim = self._checkInteger('--dim', dim, minimum=1)
        self._listTriples = bool(listTriples)

    def getDimension(self):
        return self._dim

    def wantsList(self):
        return self._listTriples


class CheckInequalitiesRequest(TripleRequest):
    def __init__(self, mu, nu, lam, extended=False, dim=None):
        super().__init__(mu, nu, lam)
        self._extended = bool(extended)
        self._dim = None
        if dim is not None:
            self._dim = self._checkInteger('--dim', dim, minimum=1)

    def isExtended(self):
        return self._extended

    def getDimension(self):
        return self._dim


class ScanRequest(RequestModel):
    def __init__(self, scanName, maxSize, maxK=None, family=None, samples=0,
                 seed=None, randomMaxSize=None):
        super().__init__()
        self._scanName = self._checkChoice('scan', scanName, SCANS)
        self._maxSize = self._checkInteger('--max-size', maxSize)
        # The saturation dilation bound or the monotonicity t bound.
        self._maxK = None
        if maxK is not None:
            self._maxK = self._checkInteger('--max-k', maxK, minimum=1)
        self._family = family
        if family is not None:
            self._family = self._checkChoice(
                '--family', family, ("row", "column", "diagonal"))
        self._samples = self._checkInteger('--samples', samples)
        self._seed = seed
        if seed is not None:
            self._seed = self._checkInteger('--seed', seed)
        self._randomMaxSize = randomMaxSize
        if randomMaxSize is not None:
            self._randomMaxSize = self._checkInteger('--random-max-size',
                                                     randomMaxSize)

    def getScanName(self):
        return self._scanName

    def getMaxSize(self):
        return self._maxSize

    def getMaxK(self):
        return self._maxK

    def getFamily(self):
        return self._family

    def getSamples(self):
        return self._samples

    def getSeed(self):
        return self._seed

    def getRandomMaxSize(self):
        return self._randomMaxSize


class NLFunctionRequest(RequestModel):
    """Either a sample of k ↦ N(kμ,kν,kλ) or, with `hypotheses`, the
    closed-form comparison at its fixed triple."""

    def __init__(self, mu, nu, lam, maxK, hypotheses=False):
        super().__init__()
        self._hypotheses = bool(hypotheses)
        self._triple = None
        if not self._hypotheses:
            self._triple = (self._makePartition('-m/--mu', mu),
                            self._makePartition('-n/--nu', nu),
                            self._makePartition('-l/--lam', lam))
        self._maxK = self._checkInteger('-K', maxK, minimum=1)

    def wantsHypotheses(self):
        return self._hypotheses

    def getTriple(self):
        return self._triple

    def getMaxK(self):
        return self._maxK


class KleberRequest(RequestModel):
    def __init__(self, a, b):
        super().__init__()
        self._a = self._checkInteger('-a', a, minimum=1)
        self._b = self._checkInteger('-b', b, minimum=1)

    def getBox(self):
        return (self._a, self._b)


class DetectRequest(RequestModel):
    def __init__(self, lam):
        super().__init__()
        self._lam = self._makePartition('-l/--lam', lam)

    def getLam(self):
        return self._lam
