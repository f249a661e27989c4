#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Interactor:
    Allows interaction between the request models and the computational
    core.
"""

import logging
from abc import ABC, abstractmethod

import nlcalc.core.request as requestapi
from nlcalc.core import analysis, inequalities, polytope
from nlcalc.core.newell_littlewood import (DetectionException,
                                           detection_filling, h_profile,
                                           nl_number, nl_pieri, nl_product,
                                           nl_witnesses, oscillating_count)
from nlcalc.core.response import ResponseFactory
from nlcalc.core.symfunc import kt_product_via_schur, kt_to_schur
from nlcalc.core.tableau import lr_coefficient

logger = logging.getLogger(__name__)

DEFAULT_SATURATION_DILATIONS = 3


class InteractorException(RuntimeError):
    """A runtime exception generated by an Interactor."""


class InteractorFactory:
    """
    A factory for churning out interactor objects. Classes should use this
    factory to construct interactors.
    """
    @staticmethod
    def createOrchestrator():
        return Orchestrator()

    @staticmethod
    def createComputeInteractor():
        return ComputeInteractor()

    @staticmethod
    def createWitnessesInteractor():
        return WitnessesInteractor()

    @staticmethod
    def createProductInteractor():
        return ProductInteractor()

    @staticmethod
    def createProfileInteractor():
        return ProfileInteractor()

    @staticmethod
    def createLRCoefficientInteractor():
        return LRCoefficientInteractor()

    @staticmethod
    def createKTExpandInteractor():
        return KTExpandInteractor()

    @staticmethod
    def createPieriInteractor():
        return PieriInteractor()

    @staticmethod
    def createOscillateInteractor():
        return OscillateInteractor()

    @staticmethod
    def createPolytopeInteractor():
        return PolytopeInteractor()

    @staticmethod
    def createHornInteractor():
        return HornInteractor()

    @staticmethod
    def createCheckInequalitiesInteractor():
        return CheckInequalitiesInteractor()

    @staticmethod
    def createNL2Interactor():
        return NL2Interactor()

    @staticmethod
    def createScanInteractor():
        return ScanInteractor()

    @staticmethod
    def createNLFunctionInteractor():
        return NLFunctionInteractor()

    @staticmethod
    def createKleberInteractor():
        return KleberInteractor()

    @staticmethod
    def createDetectInteractor():
        return DetectInteractor()

    @staticmethod
    def createMultiplicityFreeInteractor():
        return MultiplicityFreeInteractor()


class NLInteractor(ABC):
    """
    The base class for the central component(s) of NLCalc, responsible for
    bridging the divide between the delivery components and the
    computational core.
    """

    @abstractmethod
    def canHandleRequest(self, request):
        """
        Checks whether this interactor declares that it is able to perform
        a given request. Interactors are responsible for affirming which
        request types they are programmed to perform.

        Parameters
        ----------
        request:
            A RequestModel object.
        """
        pass

    @abstractmethod
    def execute(self, request):
        """
        Perform the request.

        Parameters
        ----------
        request:
            A RequestModel object.

        Returns
        -------
        response:
            A ResponseModel object.
        """


class Orchestrator(NLInteractor):
    """
    The orchestrator is a composite interactor:
    it can delegate tasks to child interactors.
    """

    def __init__(self):
        # A container for other interactors joined under the Orchestrator.
        self._children = []

    def addChild(self, interactor):
        """
        Parameters
        ----------
        interactor:
            An NLInteractor object.
        """
        self._children.append(interactor)

    def hasChild(self, interactor):
        return interactor in self._children

    def getNumberOfChildren(self):
        return len(self._children)

    def removeChild(self, interactor):
        self._children.remove(interactor)

    def canHandleRequest(self, request):
        for child in self._children:
            if child.canHandleRequest(request):
                return True
        return False

    def execute(self, request):
        for child in self._children:
            if child.canHandleRequest(request):
                return child.execute(request)
        return ResponseFactory.createFailureResponse(
            message="No interactor was found that could satisfy the "
                    "request ({requestType}).".format(
                        requestType=type(request)))


class ComputationInteractor(NLInteractor):
    """
    Runs one computation for a request. Requests with errors are refused
    before anything is computed, and exceptions raised by the computation
    become failure responses with the exception attached.
    """

    def execute(self, request):
        if request.hasErrors():
            return ResponseFactory.createFailureResponse(
                message="The request had errors in it and cannot be "
                        "processed (see attachment).",
                attachments=request.getErrors())
        try:
            return self._perform(request)
        except Exception as exception:
            logger.exception("%s failed on %s.", type(self).__name__,
                             type(request).__name__)
            return ResponseFactory.createFailureResponse(
                message=str(exception), attachments=[exception])

    @abstractmethod
    def _perform(self, request):
        """Computes the answer to a validated request."""


class ComputeInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.ComputeRequest):
            return True
        else:
            return False

    def _perform(self, request):
        return ResponseFactory.createSuccessResponse(
            attachments=[nl_number(*request.getTriple())])


class WitnessesInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.WitnessesRequest):
            return True
        else:
            return False

    def _perform(self, request):
        return ResponseFactory.createSuccessResponse(
            attachments=[nl_witnesses(*request.getTriple())])


class ProductInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.ProductRequest):
            return True
        else:
            return False

    def _perform(self, request):
        if request.getMethod() == "schur":
            product = kt_product_via_schur(request.getMu(), request.getNu())
        else:
            product = nl_product(request.getMu(), request.getNu())
        return ResponseFactory.createSuccessResponse(attachments=[product])


class ProfileInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.ProfileRequest):
            return True
        else:
            return False

    def _perform(self, request):
        return ResponseFactory.createSuccessResponse(
            attachments=[h_profile(request.getMu(), request.getNu())])


class LRCoefficientInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.LRCoefficientRequest):
            return True
        else:
            return False

    def _perform(self, request):
        return ResponseFactory.createSuccessResponse(
            attachments=[lr_coefficient(*request.getTriple())])


class KTExpandInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.KTExpandRequest):
            return True
        else:
            return False

    def _perform(self, request):
        return ResponseFactory.createSuccessResponse(
            attachments=[kt_to_schur(request.getLam(),
                                     request.getDimension())])


class PieriInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.PieriRequest):
            return True
        else:
            return False

    def _perform(self, request):
        return ResponseFactory.createSuccessResponse(
            attachments=[nl_pieri(request.getMu(), request.getP())])


class OscillateInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.OscillateRequest):
            return True
        else:
            return False

    def _perform(self, request):
        return ResponseFactory.createSuccessResponse(
            attachments=[oscillating_count(request.getLam(),
                                           request.getK())])


class PolytopeInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.PolytopeRequest):
            return True
        else:
            return False

    def _perform(self, request):
        p = polytope.build(*request.getTriple(), n=request.getDimension())
        if request.getDilation() > 1:
            p = polytope.dilate(p, request.getDilation())
        count = polytope.count_lattice_points(p)
        if not request.wantsPoints() and not request.wantsDump():
            return ResponseFactory.createSuccessResponse(attachments=[count])

        result = {'count': count}
        if request.wantsPoints():
            result['points'] = polytope.enumerate_lattice_points(p)
        if request.wantsDump():
            result['constraints'] = polytope.constraint_dump(p)
        return ResponseFactory.createSuccessResponse(attachments=[result])


class HornInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.HornRequest):
            return True
        else:
            return False

    def _perform(self, request):
        triples = inequalities.horn_triples(request.getDimension())
        if request.wantsList():
            return ResponseFactory.createSuccessResponse(
                attachments=[triples])
        return ResponseFactory.createSuccessResponse(
            attachments=[len(triples)])


class CheckInequalitiesInteractor(ComputationInteractor):
    """Checks the Horn inequalities and, on request, the extended Weyl
    inequalities. Any violation is a negative answer."""

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.CheckInequalitiesRequest):
            return True
        else:
            return False

    def _perform(self, request):
        triple = request.getTriple()
        n = request.getDimension()
        violations = list(inequalities.horn_violations(*triple, n=n))
        result = {'horn': len(violations) == 0}
        if request.isExtended():
            extended = list(inequalities.extended_weyl_violations(*triple,
                                                                   n=n))
            result['extended_weyl'] = len(extended) == 0
            violations.extend(extended)
        if not violations:
            return ResponseFactory.createSuccessResponse(attachments=[result])
        result['violations'] = violations
        return ResponseFactory.createNegativeResponse(
            message="Violated: {violation}".format(violation=violations[0]),
            attachments=[result])


class NL2Interactor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.NL2Request):
            return True
        else:
            return False

    def _perform(self, request):
        decision = inequalities.nl2_check(*request.getTriple())
        if decision.isMember():
            return ResponseFactory.createSuccessResponse(
                attachments=[decision])
        return ResponseFactory.createNegativeResponse(
            message="Violated: {violation}".format(
                violation=decision.getViolation()),
            attachments=[decision])


class ScanInteractor(ComputationInteractor):
    """Runs one of the exhaustive scans. A scan that finds counterexamples
    is a negative answer; its report is still delivered."""

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.ScanRequest):
            return True
        else:
            return False

    def _runScan(self, request):
        name = request.getScanName()
        maxSize = request.getMaxSize()
        if name == "saturation":
            maxK = request.getMaxK()
            if maxK is None:
                maxK = DEFAULT_SATURATION_DILATIONS
            return analysis.check_saturation(maxSize, maxK,
                                             family=request.getFamily())
        if name == "monotonicity":
            if request.getMaxK() is None:
                return analysis.check_monotonicity(maxSize)
            return analysis.check_monotonicity(maxSize,
                                               max_t=request.getMaxK())
        if name == "associativity":
            return analysis.check_associativity(
                maxSize, samples=request.getSamples(),
                random_max_size=request.getRandomMaxSize(),
                seed=request.getSeed())
        scans = {"unimodality": analysis.check_unimodality,
                 "mf": analysis.check_multiplicity_free,
                 "meetjoin": analysis.check_meetjoin,
                 "shape": analysis.check_shape,
                 "hahn": analysis.check_hahn}
        if name not in scans:
            raise InteractorException(
                "No scan is registered under <{name}>.".format(name=name))
        return scans[name](maxSize)

    def _perform(self, request):
        report = self._runScan(request)
        if report.propertyHeld():
            return ResponseFactory.createSuccessResponse(attachments=[report])
        return ResponseFactory.createNegativeResponse(
            message="Scan {name} found {count} counterexample(s).".format(
                name=report.getScanName(),
                count=len(report.getCounterexamples())),
            attachments=[report])


class NLFunctionInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.NLFunctionRequest):
            return True
        else:
            return False

    def _perform(self, request):
        if request.wantsHypotheses():
            results = analysis.check_floor_hypotheses(request.getMaxK())
            return ResponseFactory.createSuccessResponse(
                attachments=[results])
        sample = analysis.nl_function(*request.getTriple(),
                                      request.getMaxK())
        return ResponseFactory.createSuccessResponse(attachments=[sample])


class KleberInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.KleberRequest):
            return True
        else:
            return False

    def _perform(self, request):
        return ResponseFactory.createSuccessResponse(
            attachments=[analysis.kleber_rank(*request.getBox())])


class DetectInteractor(ComputationInteractor):
    """The witness μ with c_{μ,μ}^λ > 0 and its LR filling. An odd |λ| is
    a negative answer since N(λ, λ, λ) = 0."""

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.DetectRequest):
            return True
        else:
            return False

    def _perform(self, request):
        lam = request.getLam()
        if lam.size() % 2:
            return ResponseFactory.createNegativeResponse(
                message="{lam} has odd size; N(lam, lam, lam) = 0.".format(
                    lam=lam))
        try:
            filling = detection_filling(lam)
        except DetectionException as exception:
            raise InteractorException(
                "Detection failed for {lam}.".format(lam=lam)) from exception
        return ResponseFactory.createSuccessResponse(
            attachments=[{'witness': filling.getShape().getInner(),
                          'filling': filling}])


class MultiplicityFreeInteractor(ComputationInteractor):

    def canHandleRequest(self, request):
        if isinstance(request, requestapi.MultiplicityFreeRequest):
            return True
        else:
            return False

    def _perform(self, request):
        mu, nu = request.getMu(), request.getNu()
        result = {'predicted': analysis.is_nl_multiplicity_free(mu, nu),
                  'max_coeff': nl_product(mu, nu).maxCoefficient()}
        return ResponseFactory.createSuccessResponse(attachments=[result])
