"""
The inductive rho-sequence over the lambda-grid.

For consecutive grid points lam < mu the bound c_k(n) <= r1^n for
n/k <= lam extends to c_k(n) <= r2^n for n/k <= mu as soon as

    log2(r1) >= phi(gamma, lam) + delta,   r2 = r1^(lam/mu) gamma^(1 - lam/mu)

and the smallest such r2 is found by bisection. Chaining the steps from
rho0 = 2 at lambda = 2 up to lambda = 3.6 gives a certificate whose last value,
rounded up at the fourth decimal, bounds |A||B| <= rho^n for every n.
"""
import logging
import math
import multiprocessing
from typing import Dict, List, NamedTuple, Optional, TextIO, Tuple

import numpy as np

from cancellative_bounds import phi, utils

# declare the names that should be included in the public API for this module
__all__ = [
    "BoundCertificate",
    "CertificateFormatError",
    "CertificateReport",
    "CertificationError",
    "RhoStep",
    "Schedule",
    "check_certificate",
    "final_bound",
    "gamma_from",
    "next_rho",
    "read_certificate",
    "run_schedule",
    "step_ok",
    "verify_certificate",
    "write_certificate",
]

# ------------------------------------------------------------------------------
# Retrieve logger and set desired logging level
_logger = utils.get_logger(__name__, logging.INFO)

# ------------------------------------------------------------------------------
# defaults of the published run
DEFAULT_INTERVALS = 100000
DEFAULT_DELTA = 1e-8
DEFAULT_LAMBDA_MIN = 2.0
DEFAULT_LAMBDA_MAX = 3.6
DEFAULT_RHO0 = 2.0

# bisection range and tolerance for rho_out
RHO_MIN = 2.0
RHO_CAP = 2.5
BISECTION_TOLERANCE = 1e-12

# added to every phi bound before the margin test, so that the float rounding
# of the kernels is accounted for explicitly
PHI_INFLATION = 1e-10

# smallest final rho for which the bound extends past the last grid point
EXTENSION_RHO = 2.25

# relative tolerance used when a stored gamma is compared with its recomputation
GAMMA_RELATIVE_TOLERANCE = 1e-12

# absolute tolerance used when a stored phi value or margin is compared with
# its recomputation
PHI_TOLERANCE = 1e-12

# decimal places of the published theorem constant
THEOREM_DECIMALS = 4

# format of the step rows of a certificate file
_STEP_FORMAT = ["%d"] + ["%.17g"] * 7
_STEP_COLUMNS = 8


# ------------------------------------------------------------------------------
class CertificationError(RuntimeError):
    """
    Raised when a certificate cannot be built or cannot be used, optionally
    carrying the index of the interval at fault.
    """

    def __init__(self, message: str, interval: Optional[int] = None):
        super().__init__(message)
        self.interval = interval


# ------------------------------------------------------------------------------
class CertificateFormatError(ValueError):
    """
    Raised when a certificate file cannot be parsed.
    """


# ------------------------------------------------------------------------------
class Schedule(NamedTuple):
    """
    The lambda-grid lambdas[0] = 2 < ... < lambdas[N] <= 3.6, the safety margin
    delta and the starting value rho0 of the rho-sequence.
    """

    N: int
    lambdas: Tuple[float, ...]
    delta: float
    rho0: float

    @classmethod
    def default(
            cls,
            intervals: int = DEFAULT_INTERVALS,
            delta: float = DEFAULT_DELTA,
            lambda_max: float = DEFAULT_LAMBDA_MAX,
            rho0: float = DEFAULT_RHO0,
    ):
        """
        The regular grid lambda_i = 2 + i (lambda_max - 2) / N.

        :param intervals: number of grid intervals N
        :param delta: margin required at every step
        :param lambda_max: the last grid point, at most 3.6
        :param rho0: starting value of the rho-sequence
        :return: the validated schedule
        """

        if intervals < 1:
            message = "Invalid number of intervals: {n}".format(n=intervals)
            _logger.error(message)
            raise ValueError(message)

        lambdas = np.linspace(DEFAULT_LAMBDA_MIN, lambda_max, intervals + 1)
        schedule = cls(int(intervals), tuple(float(value) for value in lambdas), delta, rho0)
        _validate_schedule(schedule)

        return schedule


# ------------------------------------------------------------------------------
class RhoStep(NamedTuple):
    """
    One interval [lambda_lo, lambda_hi] of the rho-sequence with the gamma it
    implies, the (inflated) phi bound at lambda_lo and the resulting margin
    log2(rho_in) - phi_value.
    """

    lambda_lo: float
    lambda_hi: float
    rho_in: float
    rho_out: float
    gamma: float
    phi_value: float
    margin: float


# ------------------------------------------------------------------------------
class BoundCertificate(NamedTuple):
    """
    A complete rho-sequence for a schedule, its final value and the rounded
    theorem constant.
    """

    schedule: Schedule
    steps: Tuple[RhoStep, ...]
    final_rho: float
    theorem_bound: float


# ------------------------------------------------------------------------------
class CertificateReport(NamedTuple):
    """
    Outcome of an independent re-check of a certificate. The conditions map
    records hypotheses of the argument that are not numeric checks.
    """

    passed: bool
    failed_steps: Tuple[int, ...]
    messages: Tuple[str, ...]
    conditions: Dict[str, bool]


# ------------------------------------------------------------------------------
def _schedule_problems(
        schedule: Schedule,
) -> List[str]:

    problems = []
    lambdas = schedule.lambdas
    if schedule.N < 1 or len(lambdas) != schedule.N + 1:
        problems.append(
            "schedule has N={n} but {count} grid points".format(
                n=schedule.N, count=len(lambdas)
            )
        )
        return problems

    if lambdas[0] != DEFAULT_LAMBDA_MIN:
        problems.append("first grid point is {value}, not 2".format(value=lambdas[0]))
    if lambdas[-1] > DEFAULT_LAMBDA_MAX:
        problems.append("last grid point {value} exceeds 3.6".format(value=lambdas[-1]))
    if not np.all(np.diff(lambdas) > 0.0):
        problems.append("grid points are not strictly increasing")
    if not schedule.delta > 0.0:
        problems.append("delta {value} is not positive".format(value=schedule.delta))

    return problems


# ------------------------------------------------------------------------------
def _validate_schedule(
        schedule: Schedule,
):

    problems = _schedule_problems(schedule)
    if not RHO_MIN <= schedule.rho0 <= RHO_CAP:
        problems.append(
            "rho0 {value} is outside [{low}, {high}]".format(
                value=schedule.rho0, low=RHO_MIN, high=RHO_CAP
            )
        )

    if problems:
        message = "Invalid schedule: {problems}".format(problems="; ".join(problems))
        _logger.error(message)
        raise ValueError(message)


# ------------------------------------------------------------------------------
def _base_rate(
        lambda0: float,
) -> float:

    # exact value of c_k(n)^(1/n) for n/k <= 2, equal to 2 at lambda = 2
    return 2.0 ** (2.0 * (1.0 - 1.0 / lambda0))


# ------------------------------------------------------------------------------
def gamma_from(
        r1: float,
        r2: float,
        lam: float,
        mu: float,
) -> float:
    """
    Inverts r2 = r1^(lam/mu) gamma^(1 - lam/mu) for gamma, i.e.
    gamma = (r2^mu / r1^lam)^(1 / (mu - lam)), computed in logarithms.

    :param r1: rho at lam, at least 2
    :param r2: rho at mu, at least r1
    :param lam: left end of the interval, at least 2
    :param mu: right end of the interval, greater than lam
    :return: gamma >= r2 >= r1, or infinity when the exponential overflows
    :raise ValueError: if the arguments are out of order
    """

    if not (2.0 <= r1 <= r2 and 2.0 <= lam < mu):
        message = "Invalid arguments: need 2 <= r1 <= r2 and 2 <= lam < mu, " \
                  "got r1={r1}, r2={r2}, lam={lam}, mu={mu}".format(
                      r1=r1, r2=r2, lam=lam, mu=mu
                  )
        _logger.error(message)
        raise ValueError(message)

    if r2 == r1:
        return float(r1)

    log_gamma = math.log(r2) + lam * math.log1p((r2 - r1) / r1) / (mu - lam)
    try:
        return math.exp(log_gamma)
    except OverflowError:
        return math.inf


# ------------------------------------------------------------------------------
def _phi_value(
        gamma: float,
        lam: float,
) -> float:

    bound = phi.phi_upper(phi.PhiQuery(gamma, lam))
    if bound.regime is phi.Regime.infeasible:
        return -math.inf

    return bound.value + PHI_INFLATION


# ------------------------------------------------------------------------------
def step_ok(
        r1: float,
        gamma: float,
        lam: float,
        delta: float,
) -> bool:
    """
    Checks the step inequality with margin: log2(r1) - phi_upper(gamma, lam) >= delta,
    where the phi bound is inflated by PHI_INFLATION and an infeasible query
    always passes.

    :param r1: rho at lam
    :param gamma: at least max(r1, 2.25)
    :param lam: the ratio n/k, at least 2
    :param delta: required margin
    :return: True if the step is certified
    :raise ValueError: if gamma is below max(r1, 2.25) or lam below 2
    """

    if not gamma >= max(r1, phi.GAMMA_MIN):
        message = "Invalid gamma argument: {gamma} (must be at least max({r1}, " \
                  "{minimum}))".format(gamma=gamma, r1=r1, minimum=phi.GAMMA_MIN)
        _logger.error(message)
        raise ValueError(message)

    if not lam >= DEFAULT_LAMBDA_MIN:
        message = "Invalid lam argument: {lam} (must be at least 2)".format(lam=lam)
        _logger.error(message)
        raise ValueError(message)

    return math.log2(r1) - _phi_value(gamma, lam) >= delta


# ------------------------------------------------------------------------------
def _assess(
        rho_in: float,
        rho_out: float,
        lam: float,
        mu: float,
) -> (float, float, float):
    """
    Returns (gamma, phi_value, margin) for a candidate rho_out. A gamma below
    max(rho_in, 2.25) gets a NaN margin, which fails every comparison.
    """

    gamma = gamma_from(rho_in, rho_out, lam, mu)
    if not gamma >= max(rho_in, phi.GAMMA_MIN):
        return gamma, math.nan, math.nan

    phi_value = _phi_value(gamma, lam)
    return gamma, phi_value, math.log2(rho_in) - phi_value


# ------------------------------------------------------------------------------
def next_rho(
        rho_in: float,
        lam: float,
        mu: float,
        delta: float,
) -> RhoStep:
    """
    Finds the smallest rho_out in [rho_in, RHO_CAP], to within
    BISECTION_TOLERANCE, for which the step from lam to mu is certified. Since
    gamma increases with rho_out and phi is non-increasing in gamma, the
    predicate is monotone and bisection applies. The returned rho_out is the
    upper end of the final bracket, so the step itself always passes.

    :param rho_in: rho at lam, within [2, 2.5]
    :param lam: left end of the interval, at least 2
    :param mu: right end of the interval, greater than lam and at most 3.6
    :param delta: required margin
    :return: the certified step
    :raise ValueError: if the arguments are out of range
    :raise CertificationError: if even RHO_CAP does not certify the step
    """

    if not (RHO_MIN <= rho_in <= RHO_CAP and DEFAULT_LAMBDA_MIN <= lam < mu
            and mu <= DEFAULT_LAMBDA_MAX and delta > 0.0):
        message = "Invalid step arguments: rho_in={rho}, lam={lam}, mu={mu}, " \
                  "delta={delta}".format(rho=rho_in, lam=lam, mu=mu, delta=delta)
        _logger.error(message)
        raise ValueError(message)

    def certified(rho_out):
        return _assess(rho_in, rho_out, lam, mu)[2] >= delta

    if not certified(RHO_CAP):
        message = "No rho_out up to {cap} certifies the interval [{lam}, {mu}] " \
                  "from rho_in={rho}".format(cap=RHO_CAP, lam=lam, mu=mu, rho=rho_in)
        _logger.error(message)
        raise CertificationError(message)

    if certified(rho_in):
        rho_out = rho_in
    else:
        low, rho_out = rho_in, RHO_CAP
        while rho_out - low > BISECTION_TOLERANCE:
            middle = 0.5 * (low + rho_out)
            if certified(middle):
                rho_out = middle
            else:
                low = middle

    gamma, phi_value, margin = _assess(rho_in, rho_out, lam, mu)
    return RhoStep(lam, mu, rho_in, rho_out, gamma, phi_value, margin)


# ------------------------------------------------------------------------------
def run_schedule(
        schedule: Schedule,
) -> BoundCertificate:
    """
    Chains next_rho() across all intervals of the schedule.

    :param schedule: a valid schedule
    :return: the certificate
    :raise ValueError: if the schedule is invalid
    :raise CertificationError: if an interval cannot be certified, with the
        index of that interval
    """

    _validate_schedule(schedule)

    steps = []
    rho = schedule.rho0
    report_every = max(1, schedule.N // 10)
    for i in range(schedule.N):
        lam, mu = schedule.lambdas[i], schedule.lambdas[i + 1]
        try:
            step = next_rho(rho, lam, mu, schedule.delta)
        except CertificationError as error:
            raise CertificationError(
                "Interval {i} failed: {error}".format(i=i, error=error), interval=i
            ) from error

        steps.append(step)
        rho = step.rho_out

        if (i + 1) % report_every == 0:
            _logger.info(
                "Certified %d of %d intervals, lambda=%.6f, rho=%.9f",
                i + 1,
                schedule.N,
                mu,
                rho,
            )

    return BoundCertificate(
        schedule, tuple(steps), rho, utils.ceil_decimals(rho, THEOREM_DECIMALS)
    )


# ------------------------------------------------------------------------------
def _check_steps(params):
    """
    Re-checks a contiguous range of steps, recomputing gamma and phi for each.

    Takes its arguments in a single dictionary so it can be used with
    multiprocessing.Pool().map().

    :param dict params: "steps", the steps to check, "start", the index of the
        first of them, and "delta", the required margin
    :return: list of (step index, message) pairs, one per failed check
    """

    failures = []
    delta = params["delta"]
    for offset, step in enumerate(params["steps"]):
        index = params["start"] + offset

        if not (RHO_MIN <= step.rho_in <= step.rho_out <= RHO_CAP
                and DEFAULT_LAMBDA_MIN <= step.lambda_lo < step.lambda_hi):
            failures.append((index, "rho or lambda values out of order"))
            continue

        gamma = gamma_from(step.rho_in, step.rho_out, step.lambda_lo, step.lambda_hi)
        if not (gamma == step.gamma or math.isclose(
                gamma, step.gamma, rel_tol=GAMMA_RELATIVE_TOLERANCE)):
            failures.append(
                (index, "stored gamma {stored} differs from {gamma}".format(
                    stored=step.gamma, gamma=gamma))
            )

        if not gamma >= max(step.rho_in, phi.GAMMA_MIN):
            failures.append((index, "gamma {gamma} is below 2.25".format(gamma=gamma)))
            continue

        phi_value = _phi_value(gamma, step.lambda_lo)
        if not _matches(step.phi_value, phi_value):
            failures.append(
                (index, "stored phi value {stored} differs from {phi_value}".format(
                    stored=step.phi_value, phi_value=phi_value))
            )

        margin = math.log2(step.rho_in) - phi_value
        if not margin >= delta:
            failures.append(
                (index, "margin {margin} is below delta {delta}".format(
                    margin=margin, delta=delta))
            )

        # the stored columns must satisfy the step invariant on their own
        if not step.margin >= delta:
            failures.append(
                (index, "stored margin {margin} is below delta {delta}".format(
                    margin=step.margin, delta=delta))
            )
        if not _matches(step.margin, math.log2(step.rho_in) - step.phi_value):
            failures.append(
                (index, "stored margin {margin} is not log2(rho_in) - phi_value".format(
                    margin=step.margin))
            )

    return failures


# ------------------------------------------------------------------------------
def _matches(
        stored: float,
        computed: float,
) -> bool:

    return stored == computed or math.isclose(
        stored, computed, rel_tol=0.0, abs_tol=PHI_TOLERANCE
    )


# ------------------------------------------------------------------------------
def _chain_problems(
        certificate: BoundCertificate,
) -> (List[str], List[Tuple[int, str]]):
    """
    Checks the structural conditions: the schedule, the base case, the
    chaining of consecutive steps and the final values.
    """

    schedule = certificate.schedule
    steps = certificate.steps
    global_problems = _schedule_problems(schedule)
    step_problems = []

    if len(steps) != schedule.N:
        global_problems.append(
            "certificate has {count} steps for N={n}".format(count=len(steps), n=schedule.N)
        )
        return global_problems, step_problems

    if schedule.lambdas and not schedule.rho0 >= _base_rate(schedule.lambdas[0]):
        global_problems.append(
            "rho0 {rho0} is below the base rate {rate}".format(
                rho0=schedule.rho0, rate=_base_rate(schedule.lambdas[0])
            )
        )

    previous = schedule.rho0
    for index, step in enumerate(steps):
        if step.rho_in != previous:
            step_problems.append(
                (index, "rho_in {rho} does not continue {previous}".format(
                    rho=step.rho_in, previous=previous))
            )
        if len(schedule.lambdas) == schedule.N + 1 and (
                step.lambda_lo != schedule.lambdas[index]
                or step.lambda_hi != schedule.lambdas[index + 1]):
            step_problems.append((index, "interval does not match the schedule"))
        previous = step.rho_out

    if steps and certificate.final_rho != steps[-1].rho_out:
        global_problems.append(
            "final_rho {final} is not the last rho_out {last}".format(
                final=certificate.final_rho, last=steps[-1].rho_out
            )
        )
    if not math.isfinite(certificate.final_rho):
        global_problems.append(
            "final_rho {final} is not finite".format(final=certificate.final_rho)
        )
        return global_problems, step_problems

    rounded = utils.ceil_decimals(certificate.final_rho, THEOREM_DECIMALS)
    if certificate.theorem_bound != rounded:
        global_problems.append(
            "theorem_bound {bound} is not final_rho {final} rounded up to {rounded}".format(
                bound=certificate.theorem_bound, final=certificate.final_rho, rounded=rounded
            )
        )

    return global_problems, step_problems


# ------------------------------------------------------------------------------
def check_certificate(
        certificate: BoundCertificate,
        threads: int = 1,
) -> CertificateReport:
    """
    Independently re-checks a certificate: every gamma is recomputed, phi is
    bounded afresh at each step and the margin compared with delta, the stored
    phi and margin columns must agree with it, the steps must chain from rho0,
    rho0 must meet the base rate at lambda = 2 and theorem_bound must be
    final_rho rounded up at the fourth decimal.

    :param certificate: the certificate to check
    :param threads: number of worker processes for the per-step checks
    :return: report with the failing step indices and a message per failure
    """

    global_problems, step_problems = _chain_problems(certificate)

    steps = certificate.steps
    delta = certificate.schedule.delta
    threads = max(1, min(threads, len(steps)))
    if threads == 1 or not steps:
        step_problems += _check_steps({"steps": steps, "start": 0, "delta": delta})
    else:
        # split the steps into one contiguous chunk per worker process
        d, m = divmod(len(steps), threads)
        bounds = [i * d + min(i, m) for i in range(threads + 1)]
        chunk_params = [
            {"steps": steps[bounds[i]:bounds[i + 1]], "start": bounds[i], "delta": delta}
            for i in range(threads)
        ]
        with multiprocessing.Pool(processes=threads) as pool:
            for failures in pool.map(_check_steps, chunk_params):
                step_problems += failures

    step_problems.sort(key=lambda problem: problem[0])
    messages = global_problems + [
        "step {index}: {message}".format(index=index, message=message)
        for index, message in step_problems
    ]
    failed_steps = tuple(sorted({index for index, _ in step_problems}))

    conditions = {
        # every grid point of a schedule is a finite float, hence rational
        "lambda_rational": all(math.isfinite(value) for value in certificate.schedule.lambdas),
        # the product lemma may replace k by a multiple of M, so M | k is free
        "m_divides_k": True,
        "extends_beyond_lambda_max": certificate.final_rho >= EXTENSION_RHO,
    }

    passed = not messages
    if not passed:
        _logger.warning("Certificate check failed with %d problem(s)", len(messages))

    return CertificateReport(passed, failed_steps, tuple(messages), conditions)


# ------------------------------------------------------------------------------
def verify_certificate(
        certificate: BoundCertificate,
        threads: int = 1,
) -> bool:
    """
    :param certificate: the certificate to check
    :param threads: number of worker processes
    :return: True if every check of check_certificate() passes
    """

    return check_certificate(certificate, threads).passed


# ------------------------------------------------------------------------------
def final_bound(
        certificate: BoundCertificate,
        verify: bool = True,
        threads: int = 1,
) -> float:
    """
    The bound c(n) <= rho^n for all n: the certificate gives it for n/k <= 3.6,
    a final rho of at least 2.25 extends it to larger n/k, and the product
    lemma lifts it from uniform to general pairs. Returned rounded up at the
    fourth decimal.

    :param certificate: the certificate
    :param verify: re-check the certificate first
    :param threads: number of worker processes for the re-check
    :return: final_rho rounded up at the fourth decimal
    :raise CertificationError: if the certificate does not verify or its
        final rho is below 2.25
    """

    if verify and not verify_certificate(certificate, threads):
        message = "Certificate does not verify"
        _logger.error(message)
        raise CertificationError(message)

    if not certificate.final_rho >= EXTENSION_RHO:
        message = "final_rho {final} is below {minimum}, the bound does not extend " \
                  "past the last grid point".format(
                      final=certificate.final_rho, minimum=EXTENSION_RHO
                  )
        _logger.error(message)
        raise CertificationError(message)

    return utils.ceil_decimals(certificate.final_rho, THEOREM_DECIMALS)


# ------------------------------------------------------------------------------
def write_certificate(
        certificate: BoundCertificate,
        stream: TextIO,
):
    """
    Writes a certificate as text: header lines N=, delta= and rho0=, one row
    "i lambda_lo lambda_hi rho_in rho_out gamma phi_value margin" per step with
    17 significant digits, then final_rho= and theorem_bound=.

    :param certificate: the certificate to write
    :param stream: text stream to write to
    """

    schedule = certificate.schedule
    stream.write("N={n}\n".format(n=schedule.N))
    stream.write("delta={delta:.17g}\n".format(delta=schedule.delta))
    stream.write("rho0={rho0:.17g}\n".format(rho0=schedule.rho0))

    table = np.array(
        [(index,) + tuple(step) for index, step in enumerate(certificate.steps)],
        dtype=np.float64,
    ).reshape(-1, _STEP_COLUMNS)
    np.savetxt(stream, table, fmt=_STEP_FORMAT, delimiter=" ")

    stream.write("final_rho={final:.17g}\n".format(final=certificate.final_rho))
    stream.write("theorem_bound={bound:.{places}f}\n".format(
        bound=certificate.theorem_bound, places=THEOREM_DECIMALS))


# ------------------------------------------------------------------------------
def _parse_field(
        line: str,
        key: str,
        convert,
):

    name, _, value = line.strip().partition("=")
    if name != key or not value:
        raise CertificateFormatError(
            "Expected a '{key}=' line, found '{line}'".format(key=key, line=line.strip())
        )
    try:
        return convert(value)
    except ValueError as error:
        raise CertificateFormatError(
            "Unreadable value for {key}: '{value}'".format(key=key, value=value)
        ) from error


# ------------------------------------------------------------------------------
def read_certificate(
        stream: TextIO,
) -> BoundCertificate:
    """
    Reads a certificate written by write_certificate(). The schedule's grid is
    rebuilt from the step rows.

    :param stream: text stream to read from
    :return: the certificate, not yet verified
    :raise CertificateFormatError: if the text is not a certificate
    """

    lines = [line for line in stream.read().splitlines() if line.strip()]
    try:
        if len(lines) < 6:
            raise CertificateFormatError(
                "Certificate has only {count} lines".format(count=len(lines))
            )

        intervals = _parse_field(lines[0], "N", int)
        delta = _parse_field(lines[1], "delta", float)
        rho0 = _parse_field(lines[2], "rho0", float)
        final_rho = _parse_field(lines[-2], "final_rho", float)
        theorem_bound = _parse_field(lines[-1], "theorem_bound", float)

        rows = lines[3:-2]
        if len(rows) != intervals:
            raise CertificateFormatError(
                "Header announces N={n} but there are {count} step rows".format(
                    n=intervals, count=len(rows)
                )
            )

        try:
            table = np.loadtxt(rows, dtype=np.float64, ndmin=2)
        except ValueError as error:
            raise CertificateFormatError("Unreadable step rows: {error}".format(
                error=error)) from error

        if table.shape[1] != _STEP_COLUMNS:
            raise CertificateFormatError(
                "Step rows have {count} fields, expected {expected}".format(
                    count=table.shape[1], expected=_STEP_COLUMNS
                )
            )
        if not np.array_equal(table[:, 0], np.arange(intervals)):
            raise CertificateFormatError("Step indices are not 0, 1, ..., N-1")

    except CertificateFormatError as error:
        _logger.error("%s", error)
        raise

    steps = tuple(RhoStep(*(float(value) for value in row[1:])) for row in table)
    lambdas = tuple(step.lambda_lo for step in steps) + (steps[-1].lambda_hi,)
    schedule = Schedule(intervals, lambdas, delta, rho0)

    return BoundCertificate(schedule, steps, final_rho, theorem_bound)
