#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Main:
    Main frontend function for NLCalc
"""

import argparse
import json
import logging
import sys

from nlcalc.core.config import getSetting, overrideSetting, resetOverrides
from nlcalc.core.interactor import InteractorFactory
from nlcalc.core.request import PRODUCT_METHODS, SCANS, RequestFactory
from nlcalc.core.response import DictionaryConverter, Status, TextConverter

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

EXIT_CODES = {Status.SUCCESS: 0, Status.NEGATIVE: 1, Status.FAILURE: 2}

logger = logging.getLogger(__name__)


def _positiveInteger(text):
    try:
        value = int(text)
    except ValueError as exception:
        raise argparse.ArgumentTypeError(
            "invalid integer value: '{text}'".format(
                text=text)) from exception
    if value < 1:
        raise argparse.ArgumentTypeError(
            "expected a positive integer, got {value}".format(value=value))
    return value


def _commonParser():
    """
    Flags accepted both before and after the subcommand. Defaults are
    suppressed so that a flag given at one level is not overwritten by the
    other.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        default=argparse.SUPPRESS,
                        help="Print machine-readable JSON.")
    common.add_argument('--threads', type=_positiveInteger,
                        default=argparse.SUPPRESS,
                        help="Worker processes for scans and lattice point "
                             "counts.")
    common.add_argument('--log-level', choices=LOG_LEVELS,
                        default=argparse.SUPPRESS,
                        help="Logging threshold for diagnostics on stderr.")
    return common


def _addPartitions(parser, names, required=True):
    flags = {'mu': ('-m', '--mu'), 'nu': ('-n', '--nu'),
             'lam': ('-l', '--lam')}
    for name in names:
        parser.add_argument(*flags[name], dest=name, type=str,
                            required=required,
                            help="A partition, e.g. 4,2,1 (- for empty).")


def buildParser():
    """
    The top-level parser.

    Values
    -------
    compute     : Requires -m, -n, -l
    witnesses   : Requires -m, -n, -l
    product     : Requires -m, -n; optional --via formula|schur
    profile     : Requires -m, -n
    lrcoef      : Requires -m, -n, -l
    ktexpand    : Requires -l; optional --dim
    pieri       : Requires -m, -p
    oscillate   : Requires -l, -k
    polytope    : Requires -m, -n, -l; optional --dim, --dilate, --list,
                                                --dump
    horn        : Requires --dim; optional --list
    check-ineq  : Requires -m, -n, -l; optional --extended, --dim
    nl2         : Requires -m, -n, -l
    scan        : Requires SCAN, --max-size; optional --max-k, --family,
                                                     --samples, --seed,
                                                     --random-max-size
    nlfun       : Requires -K and either -m, -n, -l or --hypotheses
    kleber      : Requires -a, -b
    detect      : Requires -l
    mf          : Requires -m, -n

    """
    common = _commonParser()
    # The top level parser.
    parser = argparse.ArgumentParser(
        prog="nl", parents=[common],
        description="Newell-Littlewood numbers and the Koike-Terada basis. "
                    "Type 'nl COMMAND --help' to get information about a "
                    "particular command.")
    # Holds the parsers for all the individual commands.
    subparsers = parser.add_subparsers(title="commands", dest="command")

    parser_compute = subparsers.add_parser(
        'compute', parents=[common],
        description="Compute the Newell-Littlewood number N(mu, nu, lam).")
    _addPartitions(parser_compute, ('mu', 'nu', 'lam'))

    parser_witnesses = subparsers.add_parser(
        'witnesses', parents=[common],
        description="List the witnesses (alpha, beta, gamma) of "
                    "N(mu, nu, lam) with their multiplicities.")
    _addPartitions(parser_witnesses, ('mu', 'nu', 'lam'))

    parser_product = subparsers.add_parser(
        'product', parents=[common],
        description="Expand the product s[mu]s[nu] in the Koike-Terada "
                    "basis.")
    _addPartitions(parser_product, ('mu', 'nu'))
    parser_product.add_argument('--via', choices=PRODUCT_METHODS,
                                default="formula",
                                help="Sum Newell-Littlewood numbers "
                                     "(formula) or convert through the "
                                     "Schur basis (schur).")

    parser_profile = subparsers.add_parser(
        'profile', parents=[common],
        description="Print the h-profile of s[mu]s[nu] by degree.")
    _addPartitions(parser_profile, ('mu', 'nu'))

    parser_lrcoef = subparsers.add_parser(
        'lrcoef', parents=[common],
        description="Compute the Littlewood-Richardson coefficient "
                    "c(mu, nu; lam).")
    _addPartitions(parser_lrcoef, ('mu', 'nu', 'lam'))

    parser_ktexpand = subparsers.add_parser(
        'ktexpand', parents=[common],
        description="Expand s[lam] in the Schur basis.")
    _addPartitions(parser_ktexpand, ('lam',))
    parser_ktexpand.add_argument('--dim', type=int, default=None,
                                 help="Size of the determinant.")

    parser_pieri = subparsers.add_parser(
        'pieri', parents=[common],
        description="Expand s[mu]s[p] by the Pieri rule.")
    _addPartitions(parser_pieri, ('mu',))
    parser_pieri.add_argument('-p', type=int, required=True)

    parser_oscillate = subparsers.add_parser(
        'oscillate', parents=[common],
        description="Count oscillating tableaux of length k from the empty "
                    "shape to lam.")
    _addPartitions(parser_oscillate, ('lam',))
    parser_oscillate.add_argument('-k', type=int, required=True)

    parser_polytope = subparsers.add_parser(
        'polytope', parents=[common],
        description="Count the lattice points of the polytope whose lattice "
                    "points are the witnesses of N(mu, nu, lam).")
    _addPartitions(parser_polytope, ('mu', 'nu', 'lam'))
    parser_polytope.add_argument('--dim', type=int, default=None)
    parser_polytope.add_argument('--dilate', type=int, default=1)
    parser_polytope.add_argument('--list', dest='listPoints',
                                 action='store_true',
                                 help="Also print every lattice point.")
    parser_polytope.add_argument('--dump', action='store_true',
                                 help="Also print every constraint.")

    parser_horn = subparsers.add_parser(
        'horn', parents=[common],
        description="Count or list the Horn triples (I, J, K) in [n].")
    parser_horn.add_argument('--dim', type=int, required=True)
    parser_horn.add_argument('--list', dest='listTriples',
                             action='store_true')

    parser_checkineq = subparsers.add_parser(
        'check-ineq', parents=[common],
        description="Check the Horn inequalities (and with --extended the "
                    "extended Weyl inequalities) for a triple.")
    _addPartitions(parser_checkineq, ('mu', 'nu', 'lam'))
    parser_checkineq.add_argument('--extended', action='store_true')
    parser_checkineq.add_argument('--dim', type=int, default=None)

    parser_nl2 = subparsers.add_parser(
        'nl2', parents=[common],
        description="Decide N(mu, nu, lam) > 0 for partitions with at most "
                    "two parts.")
    _addPartitions(parser_nl2, ('mu', 'nu', 'lam'))

    parser_scan = subparsers.add_parser(
        'scan', parents=[common],
        description="Sweep all small inputs for a conjectured property.")
    parser_scan.add_argument('scan', choices=SCANS)
    parser_scan.add_argument('--max-size', dest='maxSize', type=int,
                             required=True)
    parser_scan.add_argument('--max-k', dest='maxK', type=int, default=None,
                             help="Largest dilation (saturation) or largest "
                                  "t (monotonicity).")
    parser_scan.add_argument('--family', choices=("row", "column",
                                                  "diagonal"),
                             default=None)
    parser_scan.add_argument('--samples', type=int, default=0,
                             help="Random quadruples (associativity).")
    parser_scan.add_argument('--seed', type=int, default=None)
    parser_scan.add_argument('--random-max-size', dest='randomMaxSize',
                             type=int, default=None,
                             help="Largest size of the random quadruples "
                                  "(associativity); defaults to --max-size.")

    parser_nlfun = subparsers.add_parser(
        'nlfun', parents=[common],
        description="Tabulate k -> N(k mu, k nu, k lam) for k = 1..K.")
    _addPartitions(parser_nlfun, ('mu', 'nu', 'lam'), required=False)
    parser_nlfun.add_argument('-K', dest='maxK', type=int, required=True)
    parser_nlfun.add_argument('--hypotheses', action='store_true',
                              help="Compare the closed-form candidates "
                                   "instead.")

    parser_kleber = subparsers.add_parser(
        'kleber', parents=[common],
        description="Rank of the products s[lam]s[lam'] over the "
                    "complementary pairs of an a x b box.")
    parser_kleber.add_argument('-a', type=int, required=True)
    parser_kleber.add_argument('-b', type=int, required=True)

    parser_detect = subparsers.add_parser(
        'detect', parents=[common],
        description="Construct mu with c(mu, mu; lam) > 0 and its LR "
                    "filling.")
    _addPartitions(parser_detect, ('lam',))

    parser_mf = subparsers.add_parser(
        'mf', parents=[common],
        description="Predict whether s[mu]s[nu] is multiplicity-free and "
                    "report its largest coefficient.")
    _addPartitions(parser_mf, ('mu', 'nu'))

    return parser


def createRequest(arguments):
    """
    Creates the request based on input values.

    Parameters
    ----------
    arguments : argparse.Namespace
        Arguments parsed from the command line.

    Raises
    ------
    RuntimeError
        Raises error if insufficient/incorrect arguments were parsed.

    Returns
    -------
    Request
        Request of the appropriate type.

    """
    if arguments.command == "compute":
        return RequestFactory.createComputeRequest(
            arguments.mu, arguments.nu, arguments.lam)
    elif arguments.command == "witnesses":
        return RequestFactory.createWitnessesRequest(
            arguments.mu, arguments.nu, arguments.lam)
    elif arguments.command == "product":
        return RequestFactory.createProductRequest(
            arguments.mu, arguments.nu, via=arguments.via)
    elif arguments.command == "profile":
        return RequestFactory.createProfileRequest(arguments.mu, arguments.nu)
    elif arguments.command == "lrcoef":
        return RequestFactory.createLRCoefficientRequest(
            arguments.mu, arguments.nu, arguments.lam)
    elif arguments.command == "ktexpand":
        return RequestFactory.createKTExpandRequest(arguments.lam,
                                                    dim=arguments.dim)
    elif arguments.command == "pieri":
        return RequestFactory.createPieriRequest(arguments.mu, arguments.p)
    elif arguments.command == "oscillate":
        return RequestFactory.createOscillateRequest(arguments.lam,
                                                     arguments.k)
    elif arguments.command == "polytope":
        return RequestFactory.createPolytopeRequest(
            arguments.mu, arguments.nu, arguments.lam, dim=arguments.dim,
            dilate=arguments.dilate, listPoints=arguments.listPoints,
            dump=arguments.dump)
    elif arguments.command == "horn":
        return RequestFactory.createHornRequest(
            arguments.dim, listTriples=arguments.listTriples)
    elif arguments.command == "check-ineq":
        return RequestFactory.createCheckInequalitiesRequest(
            arguments.mu, arguments.nu, arguments.lam,
            extended=arguments.extended, dim=arguments.dim)
    elif arguments.command == "nl2":
        return RequestFactory.createNL2Request(
            arguments.mu, arguments.nu, arguments.lam)
    elif arguments.command == "scan":
        return RequestFactory.createScanRequest(
            arguments.scan, arguments.maxSize, maxK=arguments.maxK,
            family=arguments.family, samples=arguments.samples,
            seed=arguments.seed, randomMaxSize=arguments.randomMaxSize)
    elif arguments.command == "nlfun":
        return RequestFactory.createNLFunctionRequest(
            arguments.mu, arguments.nu, arguments.lam, arguments.maxK,
            hypotheses=arguments.hypotheses)
    elif arguments.command == "kleber":
        return RequestFactory.createKleberRequest(arguments.a, arguments.b)
    elif arguments.command == "detect":
        return RequestFactory.createDetectRequest(arguments.lam)
    elif arguments.command == "mf":
        return RequestFactory.createMultiplicityFreeRequest(arguments.mu,
                                                            arguments.nu)
    else:
        raise RuntimeError("Missing request type for command.")


def createInteractor():
    """
    Creates the individual interactors for the orchestrator.

    Returns
    -------
    orchestrator : Orchestrator

    """
    orchestrator = InteractorFactory.createOrchestrator()
    orchestrator.addChild(InteractorFactory.createComputeInteractor())
    orchestrator.addChild(InteractorFactory.createWitnessesInteractor())
    orchestrator.addChild(InteractorFactory.createProductInteractor())
    orchestrator.addChild(InteractorFactory.createProfileInteractor())
    orchestrator.addChild(InteractorFactory.createLRCoefficientInteractor())
    orchestrator.addChild(InteractorFactory.createKTExpandInteractor())
    orchestrator.addChild(InteractorFactory.createPieriInteractor())
    orchestrator.addChild(InteractorFactory.createOscillateInteractor())
    orchestrator.addChild(InteractorFactory.createPolytopeInteractor())
    orchestrator.addChild(InteractorFactory.createHornInteractor())
    orchestrator.addChild(
        InteractorFactory.createCheckInequalitiesInteractor())
    orchestrator.addChild(InteractorFactory.createNL2Interactor())
    orchestrator.addChild(InteractorFactory.createScanInteractor())
    orchestrator.addChild(InteractorFactory.createNLFunctionInteractor())
    orchestrator.addChild(InteractorFactory.createKleberInteractor())
    orchestrator.addChild(InteractorFactory.createDetectInteractor())
    orchestrator.addChild(
        InteractorFactory.createMultiplicityFreeInteractor())
    return orchestrator


def configureLogging(level):
    logging.basicConfig(format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger('nlcalc').setLevel(level)


def render(response, asJSON=False):
    """
    The text printed on stdout for a response, or None when there is
    nothing to print. Failed responses print nothing on stdout.
    """
    if response.getStatus() == Status.FAILURE or \
            not response.hasAttachments():
        return None
    result = response.getAttachments()[0]
    if asJSON:
        return json.dumps(DictionaryConverter().convert(result),
                          sort_keys=True)
    text = TextConverter().convert(result)
    return text if text else None


def reportProblems(response):
    """Diagnostics for negative and failed responses, printed on stderr."""
    if response.getStatus() == Status.NEGATIVE:
        if response.hasMessage():
            print("nl: {message}".format(message=response.getMessage()),
                  file=sys.stderr)
        return
    errors = [attachment for attachment in (response.getAttachments() or [])
              if isinstance(attachment, dict) and 'parameter' in attachment]
    if errors:
        for error in errors:
            print("error: argument {parameter}: {message}".format(**error),
                  file=sys.stderr)
    else:
        print("error: {message}".format(message=response.getMessage()),
              file=sys.stderr)


def run(argv=None):
    """
    Parses `argv`, executes the request and prints the result.

    Returns
    -------
    int
        0 on success, 1 on a negative answer (a non-member, a violated
        inequality or a scan with counterexamples), 2 on a usage error or
        a failure.
    """
    parser = buildParser()
    try:
        arguments = parser.parse_args(argv)
    except SystemExit as exception:
        return exception.code
    if arguments.command is None:
        parser.print_usage(sys.stderr)
        print("error: a command is required", file=sys.stderr)
        return EXIT_CODES[Status.FAILURE]

    configureLogging(getattr(arguments, 'log_level', getSetting('logLevel')))
    if hasattr(arguments, 'threads'):
        overrideSetting('threads', arguments.threads)
    try:
        request = createRequest(arguments)
        response = createInteractor().execute(request)
    finally:
        resetOverrides()

    logger.debug("Request %s created at %s finished with %s.",
                 type(request).__name__, request.getCreatedTimestamp(),
                 response.getStatus().name)
    output = render(response, asJSON=getattr(arguments, 'json', False))
    if output is not None:
        print(output)
    if not response.wasSuccessful():
        reportProblems(response)
    return EXIT_CODES[response.getStatus()]


def main():
    """
    Main function - parses the arguments and creates/executes the request

    Returns
    -------
    Exits with the status of the request.

    """
    sys.exit(run())


if __name__ == "__main__":
    main()
