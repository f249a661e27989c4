#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

import pytest

import nlcalc.core.interactor as interactorapi
from nlcalc.core.entities import (EntityFactory, HypothesisResult,
                                  MembershipDecision, Partition)
from nlcalc.core.request import RequestFactory
from nlcalc.core.response import Status


def test_Orchestrator_ConstructibleByFactory():
    orchestrator = interactorapi.InteractorFactory.createOrchestrator()
    assert(isinstance(orchestrator, interactorapi.Orchestrator))


def test_Orchestrator_InitiallyHasNoChildren():
    orchestrator = interactorapi.Orchestrator()
    assert(orchestrator.getNumberOfChildren() == 0)


def test_Orchestrator_CantFulfillRequestsWithoutChildren():
    orchestrator = interactorapi.Orchestrator()
    request = RequestFactory.createComputeRequest("1", "1", "-")
    assert(orchestrator.canHandleRequest(request) is False)


def test_Orchestrator_CanStoreAndRemoveChildren(mocker):
    mocker.patch.multiple(
        interactorapi.ComputationInteractor,
        __abstractmethods__=set())
    genericInteractor = interactorapi.ComputationInteractor()
    orchestrator = interactorapi.Orchestrator()
    orchestrator.addChild(genericInteractor)
    assert(orchestrator.hasChild(genericInteractor))
    assert(orchestrator.getNumberOfChildren() == 1)
    orchestrator.removeChild(genericInteractor)
    assert(orchestrator.hasChild(genericInteractor) is False)
    assert(orchestrator.getNumberOfChildren() == 0)


def test_Orchestrator_DelegatesToTheFirstCapableChild(mocker):
    orchestrator = interactorapi.Orchestrator()
    witnesses = interactorapi.InteractorFactory.createWitnessesInteractor()
    compute = interactorapi.InteractorFactory.createComputeInteractor()
    orchestrator.addChild(witnesses)
    orchestrator.addChild(compute)
    spy = mocker.spy(compute, 'execute')
    request = RequestFactory.createComputeRequest("2,2", "2,2", "2,2")
    assert(orchestrator.canHandleRequest(request) is True)
    response = orchestrator.execute(request)
    spy.assert_called_once_with(request)
    assert(response.getAttachments() == [2])


def test_Orchestrator_GeneratesAFailedResponseOnExecuteIfUnable():
    orchestrator = interactorapi.Orchestrator()
    request = RequestFactory.createComputeRequest("1", "1", "-")
    response = orchestrator.execute(request)
    assert(response.wasSuccessful() is False)
    assert(response.getStatus() == Status.FAILURE)


def test_ComputeInteractor_CanHandleOnlyComputeRequests():
    interactor = interactorapi.InteractorFactory.createComputeInteractor()
    assert(interactor.canHandleRequest(
        RequestFactory.createComputeRequest("1", "1", "-")))
    assert(not interactor.canHandleRequest(
        RequestFactory.createWitnessesRequest("1", "1", "-")))


def test_ComputeInteractor_RequestsWithErrorsResultInFailedResponse():
    interactor = interactorapi.InteractorFactory.createComputeInteractor()
    request = RequestFactory.createComputeRequest("1,2", "1", "-")
    response = interactor.execute(request)
    assert(response.wasSuccessful() is False)
    assert(response.getAttachments() == request.getErrors())


def test_ComputeInteractor_CapturesUnexpectedExceptions(mocker):
    mocker.patch('nlcalc.core.interactor.nl_number',
                 side_effect=ZeroDivisionError)
    interactor = interactorapi.InteractorFactory.createComputeInteractor()
    response = interactor.execute(
        RequestFactory.createComputeRequest("1", "1", "-"))
    assert(response.getStatus() == Status.FAILURE)
    assert(type(response.getAttachments()[0]) == ZeroDivisionError)


def test_ComputeInteractor_Computes():
    interactor = interactorapi.InteractorFactory.createComputeInteractor()
    response = interactor.execute(
        RequestFactory.createComputeRequest("6", "4,2,2", "4,4"))
    assert(response.wasSuccessful() is True)
    assert(response.getAttachments() == [0])


def test_WitnessesInteractor_ListsWitnesses():
    interactor = interactorapi.InteractorFactory.createWitnessesInteractor()
    response = interactor.execute(
        RequestFactory.createWitnessesRequest("1,1", "1,1", "1,1"))
    assert(response.getAttachments()[0] == [
        EntityFactory.makeWitnessEntity((1,), (1,), (1,), 1)])


def test_ProductInteractor_MethodsAgree(mocker):
    interactor = interactorapi.InteractorFactory.createProductInteractor()
    spy = mocker.spy(interactorapi, 'kt_product_via_schur')
    formula = interactor.execute(
        RequestFactory.createProductRequest("2,1", "2"))
    assert(spy.call_count == 0)
    schur = interactor.execute(
        RequestFactory.createProductRequest("2,1", "2", via="schur"))
    assert(spy.call_count == 1)
    assert(formula.getAttachments() == schur.getAttachments())


def test_SmallInteractors_ReturnTheirResults():
    cases = (
        (interactorapi.InteractorFactory.createProfileInteractor(),
         RequestFactory.createProfileRequest("3", "2,1")),
        (interactorapi.InteractorFactory.createLRCoefficientInteractor(),
         RequestFactory.createLRCoefficientRequest("3,1", "4,2,1", "5,4,2")),
        (interactorapi.InteractorFactory.createKTExpandInteractor(),
         RequestFactory.createKTExpandRequest("1,1", dim=3)),
        (interactorapi.InteractorFactory.createPieriInteractor(),
         RequestFactory.createPieriRequest("2,1", 3)),
        (interactorapi.InteractorFactory.createOscillateInteractor(),
         RequestFactory.createOscillateRequest("2,1", 3)))
    results = []
    for interactor, request in cases:
        response = interactor.execute(request)
        assert(response.wasSuccessful() is True)
        results.append(response.getAttachments()[0])
    assert(results[0].getValues() == (2, 5, 4))
    assert(results[1] == 2)
    assert(results[2].toPartTuples() == {(1, 1): 1, (): -1})
    assert(results[3].coefficient((3, 1)) == 2)
    assert(results[4] == 2)


def test_PolytopeInteractor_CountsAndDumps():
    interactor = interactorapi.InteractorFactory.createPolytopeInteractor()
    response = interactor.execute(
        RequestFactory.createPolytopeRequest("1,1", "1,1", "1,1", dilate=2))
    assert(response.getAttachments() == [2])
    response = interactor.execute(
        RequestFactory.createPolytopeRequest("2,2", "2,2", "2,2",
                                             listPoints=True, dump=True))
    result = response.getAttachments()[0]
    assert(result['count'] == 2)
    assert(len(result['points']) == 2)
    assert(len(result['constraints']) == 30)


def test_PolytopeInteractor_SmallDimensionFails():
    interactor = interactorapi.InteractorFactory.createPolytopeInteractor()
    response = interactor.execute(
        RequestFactory.createPolytopeRequest("1,1,1", "1", "2", dim=2))
    assert(response.getStatus() == Status.FAILURE)
    assert("Dimension 2" in response.getMessage())


def test_HornInteractor_CountsOrLists():
    interactor = interactorapi.InteractorFactory.createHornInteractor()
    response = interactor.execute(RequestFactory.createHornRequest(2))
    assert(response.getAttachments() == [3])
    response = interactor.execute(
        RequestFactory.createHornRequest(2, listTriples=True))
    assert(len(response.getAttachments()[0]) == 3)


def test_CheckInequalitiesInteractor_PassingTriple():
    interactor = \
        interactorapi.InteractorFactory.createCheckInequalitiesInteractor()
    response = interactor.execute(
        RequestFactory.createCheckInequalitiesRequest(
            "6", "4,2,2", "4,4", extended=True, dim=3))
    assert(response.wasSuccessful() is True)
    assert(response.getAttachments() == [{'horn': True,
                                          'extended_weyl': True}])


def test_CheckInequalitiesInteractor_ViolationIsNegative():
    interactor = \
        interactorapi.InteractorFactory.createCheckInequalitiesInteractor()
    response = interactor.execute(
        RequestFactory.createCheckInequalitiesRequest("1,1", "1,1", "4"))
    assert(response.wasNegative() is True)
    assert(response.getMessage() ==
           "Violated: lam1 <= mu1 + nu1 (4 > 2)")
    assert(response.getAttachments()[0]['horn'] is False)


def test_NL2Interactor_Decisions():
    interactor = interactorapi.InteractorFactory.createNL2Interactor()
    response = interactor.execute(
        RequestFactory.createNL2Request("1,1", "1,1", "1,1"))
    assert(response.wasSuccessful() is True)
    assert(isinstance(response.getAttachments()[0], MembershipDecision))
    response = interactor.execute(
        RequestFactory.createNL2Request("5", "1", "1,1"))
    assert(response.wasNegative() is True)
    assert(response.getMessage() ==
           "Violated: triangle: |mu| <= |nu| + |lam|")


def test_NL2Interactor_ThreePartsFail():
    interactor = interactorapi.InteractorFactory.createNL2Interactor()
    response = interactor.execute(
        RequestFactory.createNL2Request("1,1,1", "1", "2"))
    assert(response.getStatus() == Status.FAILURE)


def test_ScanInteractor_SaturationUsesTheDefaultDilations(mocker):
    spy = mocker.spy(interactorapi.analysis, 'check_saturation')
    interactor = interactorapi.InteractorFactory.createScanInteractor()
    response = interactor.execute(
        RequestFactory.createScanRequest("saturation", 2))
    assert(response.wasSuccessful() is True)
    spy.assert_called_once_with(
        2, interactorapi.DEFAULT_SATURATION_DILATIONS, family=None)


def test_ScanInteractor_MonotonicityUsesMaxK(mocker):
    spy = mocker.spy(interactorapi.analysis, 'check_monotonicity')
    interactor = interactorapi.InteractorFactory.createScanInteractor()
    interactor.execute(
        RequestFactory.createScanRequest("monotonicity", 1, maxK=1))
    spy.assert_called_once_with(1, max_t=1)


def test_ScanInteractor_AssociativityUsesTheRandomSize(mocker):
    spy = mocker.spy(interactorapi.analysis, 'check_associativity')
    interactor = interactorapi.InteractorFactory.createScanInteractor()
    response = interactor.execute(
        RequestFactory.createScanRequest("associativity", 1, samples=2,
                                         seed=3, randomMaxSize=2))
    assert(response.wasSuccessful() is True)
    spy.assert_called_once_with(1, samples=2, random_max_size=2, seed=3)
    report = response.getAttachments()[0]
    assert(report.getCheckedCount() == 16 + 2)
    assert(report.getParameters()["random_max_size"] == 2)


def test_ScanInteractor_CounterexamplesAreNegative(mocker):
    report = EntityFactory.makeScanReportEntity("hahn", {"max_size": 1})
    report.addChecked(2)
    report.addCounterexample({"lam": [1], "nl": 1})
    mocker.patch('nlcalc.core.analysis.check_hahn', return_value=report)
    interactor = interactorapi.InteractorFactory.createScanInteractor()
    response = interactor.execute(
        RequestFactory.createScanRequest("hahn", 1))
    assert(response.wasNegative() is True)
    assert(response.getMessage() == "Scan hahn found 1 counterexample(s).")
    assert(response.getAttachments() == [report])


@pytest.mark.parametrize("scanName", ["unimodality", "mf", "meetjoin",
                                      "shape", "hahn", "associativity"])
def test_ScanInteractor_RunsEveryScan(scanName):
    interactor = interactorapi.InteractorFactory.createScanInteractor()
    response = interactor.execute(
        RequestFactory.createScanRequest(scanName, 1))
    assert(response.wasSuccessful() is True)
    assert(response.getAttachments()[0].getScanName() == scanName)


def test_NLFunctionInteractor_SampleAndHypotheses():
    interactor = interactorapi.InteractorFactory.createNLFunctionInteractor()
    response = interactor.execute(
        RequestFactory.createNLFunctionRequest("1,1", "1,1", "1,1", 4))
    assert(response.getAttachments()[0].getValues() == (1, 2, 2, 3))
    response = interactor.execute(
        RequestFactory.createNLFunctionRequest(None, None, None, 1,
                                               hypotheses=True))
    results = response.getAttachments()[0]
    assert(len(results) == 2)
    assert(all(isinstance(result, HypothesisResult) for result in results))


def test_KleberInteractor():
    interactor = interactorapi.InteractorFactory.createKleberInteractor()
    response = interactor.execute(RequestFactory.createKleberRequest(1, 2))
    assert(tuple(response.getAttachments()[0]) == (2, 2))


def test_DetectInteractor_EvenAndOdd():
    interactor = interactorapi.InteractorFactory.createDetectInteractor()
    response = interactor.execute(RequestFactory.createDetectRequest("3,1"))
    assert(response.wasSuccessful() is True)
    result = response.getAttachments()[0]
    assert(result['witness'] == Partition((2,)))
    assert(result['filling'].getRows() == ((1,), (1,)))
    response = interactor.execute(RequestFactory.createDetectRequest("2,1"))
    assert(response.wasNegative() is True)
    assert(response.hasAttachments() is False)


def test_MultiplicityFreeInteractor():
    interactor = \
        interactorapi.InteractorFactory.createMultiplicityFreeInteractor()
    response = interactor.execute(
        RequestFactory.createMultiplicityFreeRequest("2", "2,1"))
    assert(response.getAttachments() == [{'predicted': False,
                                          'max_coeff': 2}])
