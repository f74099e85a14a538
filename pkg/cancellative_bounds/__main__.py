import argparse
from datetime import datetime
import json
import logging
import math
import multiprocessing
import sys

from cancellative_bounds import curves, families, phi, pipeline, utils

# the number of worker processes used when --threads is not given
_NUMBER_OF_WORKER_PROCESSES = multiprocessing.cpu_count()

# exit statuses
_EXIT_SUCCESS = 0
_EXIT_FAILURE = 1
_EXIT_USAGE = 2

# ------------------------------------------------------------------------------
# Retrieve logger and set desired logging level
_logger = utils.get_logger(__name__, logging.INFO)


# ------------------------------------------------------------------------------
def _open_output(path):
    """
    Text stream for a data file, standard output when no path is given.
    """

    if path is None:
        return sys.stdout
    return open(path, "w")


# ------------------------------------------------------------------------------
def _close_output(stream):
    if stream is not sys.stdout:
        stream.close()


# ------------------------------------------------------------------------------
def _finite_or_none(value):
    return value if math.isfinite(value) else None


# ------------------------------------------------------------------------------
def _read_certificate(path):
    with open(path) as stream:
        return pipeline.read_certificate(stream)


# ------------------------------------------------------------------------------
def _bound(arguments) -> int:

    schedule = pipeline.Schedule.default(
        intervals=arguments.n_intervals,
        delta=arguments.delta,
        lambda_max=arguments.lambda_max,
        rho0=arguments.rho0,
    )
    _logger.info(
        "Computing the rho-sequence over %d intervals up to lambda=%s",
        schedule.N,
        schedule.lambdas[-1],
    )

    try:
        certificate = pipeline.run_schedule(schedule)
    except pipeline.CertificationError as error:
        _logger.error("Certificate could not be built at interval %s: %s",
                      error.interval, error)
        return _EXIT_FAILURE

    stream = _open_output(arguments.out)
    try:
        pipeline.write_certificate(certificate, stream)
    finally:
        _close_output(stream)

    _logger.info("final_rho=%.9f  theorem_bound=%.4f",
                 certificate.final_rho, certificate.theorem_bound)
    return _EXIT_SUCCESS


# ------------------------------------------------------------------------------
def _check(arguments) -> int:

    certificate = _read_certificate(arguments.cert)
    report = pipeline.check_certificate(certificate, arguments.threads)

    for name, satisfied in report.conditions.items():
        _logger.info("Condition %s: %s", name, "satisfied" if satisfied else "not satisfied")

    if not report.passed:
        for message in report.messages:
            _logger.error("%s", message)
        _logger.error("Failed steps: %s", " ".join(str(i) for i in report.failed_steps))
        print("passed=false")
        return _EXIT_FAILURE

    print("passed=true")
    if report.conditions["extends_beyond_lambda_max"]:
        bound = pipeline.final_bound(certificate, verify=False)
        print("theorem_bound={bound:.4f}".format(bound=bound))

    return _EXIT_SUCCESS


# ------------------------------------------------------------------------------
def _phi(arguments) -> int:

    query = phi.PhiQuery(arguments.gamma, arguments.x)
    bound = phi.phi_upper(query)

    record = {
        "gamma": query.gamma,
        "x": query.x,
        "regime": str(bound.regime),
        "value": _finite_or_none(bound.value),
    }
    for field in phi.PhiCertificate._fields:
        value = getattr(bound.certificate, field) if bound.certificate else math.nan
        record[field] = _finite_or_none(value)

    if arguments.oracle is not None:
        estimate = phi.phi_oracle(query, arguments.oracle)
        record["oracle_lower"] = _finite_or_none(estimate.lower)
        record["oracle_upper_hint"] = _finite_or_none(estimate.upper_hint)

    print(json.dumps(record))
    return _EXIT_SUCCESS


# ------------------------------------------------------------------------------
def _curve(arguments) -> int:

    certificate = _read_certificate(arguments.cert)
    if not pipeline.verify_certificate(certificate, arguments.threads):
        _logger.error("Certificate %s does not verify", arguments.cert)
        return _EXIT_FAILURE

    points = curves.emit_curve(certificate, arguments.samples)
    curves.write_curve(points, arguments.out if arguments.out else sys.stdout)
    return _EXIT_SUCCESS


# ------------------------------------------------------------------------------
def _verify(arguments) -> int:

    with open(arguments.file) as stream:
        pair = families.read_family_pair(stream)

    cancellative = families.is_cancellative(pair)
    recovering = families.is_recovering(pair)
    print("n: {n}".format(n=pair.n))
    print("sizes: {a} {b}".format(a=len(pair.A), b=len(pair.B)))
    print("cancellative: {value}".format(value=str(cancellative).lower()))
    print("recovering: {value}".format(value=str(recovering).lower()))

    if cancellative:
        check = families.entropy_inequality_check(pair)
        print("entropy_inequality: lhs={lhs:.12g} rhs={rhs:.12g} holds={holds}".format(
            lhs=check.lhs, rhs=check.rhs, holds=str(check.holds).lower()))
        if not check.holds:
            return _EXIT_FAILURE

    passed = recovering if arguments.recovering else cancellative
    return _EXIT_SUCCESS if passed else _EXIT_FAILURE


# ------------------------------------------------------------------------------
def _search(arguments) -> int:

    if arguments.k is None:
        result = families.exhaustive_max_c(arguments.n, arguments.recovering)
    else:
        result = families.exhaustive_max_ck(arguments.n, arguments.k, arguments.recovering)

    print("value={value}".format(value=result.value))
    if arguments.emit:
        with open(arguments.emit, "w") as stream:
            families.write_family_pair(result.witness, stream)

    return _EXIT_SUCCESS


# ------------------------------------------------------------------------------
def _construct(arguments) -> int:

    if arguments.triple_blocks is not None:
        pair = families.triple_blocks(arguments.triple_blocks)
    else:
        pair = families.powerset_split(*arguments.powerset_split)

    stream = _open_output(arguments.out)
    try:
        families.write_family_pair(pair, stream)
    finally:
        _close_output(stream)

    return _EXIT_SUCCESS


# ------------------------------------------------------------------------------
def _build_parser() -> argparse.ArgumentParser:

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads",
        type=int,
        default=_NUMBER_OF_WORKER_PROCESSES,
        help="Number of worker processes for the certificate checks of check and curve "
             "(accepted but unused by the other subcommands)",
    )
    common.add_argument(
        "--quiet",
        action="store_true",
        help="Suppress progress messages",
    )

    parser = argparse.ArgumentParser(
        prog="cancellative_bounds",
        description="Certified upper bounds for cancellative pairs of set families",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    bound = subparsers.add_parser("bound", parents=[common],
                                  help="Compute the rho-sequence certificate")
    bound.add_argument("--n-intervals", type=int, default=pipeline.DEFAULT_INTERVALS)
    bound.add_argument("--delta", type=float, default=pipeline.DEFAULT_DELTA)
    bound.add_argument("--lambda-max", type=float, default=pipeline.DEFAULT_LAMBDA_MAX)
    bound.add_argument("--rho0", type=float, default=pipeline.DEFAULT_RHO0)
    bound.add_argument("--out", help="Certificate file, standard output if omitted")
    bound.set_defaults(handler=_bound)

    check = subparsers.add_parser("check", parents=[common],
                                  help="Re-check a certificate file")
    check.add_argument("cert", help="Certificate file")
    check.set_defaults(handler=_check)

    query = subparsers.add_parser("phi", parents=[common],
                                  help="Bound phi(gamma, x), one JSON object per line")
    query.add_argument("--gamma", type=float, required=True)
    query.add_argument("--x", type=float, required=True)
    query.add_argument("--oracle", type=int, metavar="RES",
                       help="Also run the brute-force oracle at this resolution")
    query.set_defaults(handler=_phi)

    curve = subparsers.add_parser("curve", parents=[common],
                                  help="Emit the upper and lower curves as CSV")
    curve.add_argument("--cert", required=True, help="Certificate file")
    curve.add_argument("--samples", type=int, default=200)
    curve.add_argument("--out", help="CSV file, standard output if omitted")
    curve.set_defaults(handler=_curve)

    verify = subparsers.add_parser("verify", parents=[common],
                                   help="Check a family-pair file")
    verify.add_argument("file", help="Family-pair file")
    verify.add_argument("--recovering", action="store_true",
                        help="Require the pair to be recovering")
    verify.set_defaults(handler=_verify)

    search = subparsers.add_parser("search", parents=[common],
                                   help="Exhaustive search for c(n) or c_k(n)")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--k", type=int)
    search.add_argument("--recovering", action="store_true",
                        help="Maximise over recovering pairs")
    search.add_argument("--emit", help="Write the witness pair to this file")
    search.set_defaults(handler=_search)

    construct = subparsers.add_parser("construct", parents=[common],
                                      help="Write a known construction")
    construction = construct.add_mutually_exclusive_group(required=True)
    construction.add_argument("--triple-blocks", type=int, metavar="M")
    construction.add_argument("--powerset-split", type=int, nargs=2, metavar=("N", "S1"))
    construct.add_argument("--out", help="Family-pair file, standard output if omitted")
    construct.set_defaults(handler=_construct)

    return parser


# ------------------------------------------------------------------------------
def main(argv=None) -> int:
    """
    Command line entry point.

    :param argv: arguments, sys.argv[1:] if None
    :return: exit status, 0 on success, 1 when a check fails, 2 on invalid input
    """

    arguments = _build_parser().parse_args(argv)
    if arguments.quiet:
        logging.disable(logging.INFO)

    try:
        # log some timing info, used later for elapsed time
        start_datetime = datetime.now()
        _logger.info("Start time:    %s", start_datetime)

        try:
            status = arguments.handler(arguments)
        except (OSError, ValueError) as error:
            _logger.error("Invalid input: %s", error)
            status = _EXIT_USAGE

        # report on the elapsed time
        end_datetime = datetime.now()
        _logger.info("End time:      %s", end_datetime)
        elapsed = end_datetime - start_datetime
        _logger.info("Elapsed time:  %s", elapsed)

        return status

    except Exception:
        _logger.exception("Failed to complete", exc_info=True)
        raise


# ------------------------------------------------------------------------------
if __name__ == "__main__":
    # (please do not remove -- useful for running as a script when debugging)
    #
    # Example command line usage:
    #
    #  $ python -m cancellative_bounds bound --n-intervals 1000 --out cert.txt
    #  $ python -m cancellative_bounds check cert.txt
    #  $ python -m cancellative_bounds curve --cert cert.txt --samples 200 --out fig.csv
    #  $ python -m cancellative_bounds phi --gamma 4.5 --x 2

    sys.exit(main())
