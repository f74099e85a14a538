"""
Bounds on c_k(n)^(1/n) as functions of x = n/k, for plotting: the certified
upper curve read off a certificate, the rate of the uniform construction as
the lower curve, and the exact value 2^(2(1 - 1/x)) for x <= 2.

The lower curve drops the o(1) term of the construction's rate, so it is the
asymptotic rate. Curves stop at x = 3.6, beyond which the upper bound stays
at its final value.
"""
from fractions import Fraction
import logging
from typing import List, NamedTuple, Union

import numpy as np
import pandas as pd
import scipy.special

from cancellative_bounds import entropy, pipeline, utils

# declare the names that should be included in the public API for this module
__all__ = [
    "CurvePoint",
    "emit_curve",
    "exact_rate_small_x",
    "lower_rate",
    "read_curve",
    "symmetric_bound",
    "symmetric_rate",
    "upper_curve",
    "write_curve",
]

# ------------------------------------------------------------------------------
# Retrieve logger and set desired logging level
_logger = utils.get_logger(__name__, logging.WARN)

# ------------------------------------------------------------------------------
# abscissa range of an emitted curve
CURVE_X_MIN = 1.0
CURVE_X_MAX = pipeline.DEFAULT_LAMBDA_MAX

# largest n for the exact symmetric bound
SYMMETRIC_MAX_N = 64

# slack allowed when checking lower <= upper
ORDER_TOLERANCE = 1e-9

# CSV layout
_COLUMNS = ["x", "upper", "lower"]
_FLOAT_FORMAT = "%.12g"


# ------------------------------------------------------------------------------
class CurvePoint(NamedTuple):
    """
    Upper and lower bounds on c_k(n)^(1/n) at x = n/k.
    """

    x: float
    upper: float
    lower: float


# ------------------------------------------------------------------------------
def lower_rate(
        x,
):
    """
    Rate 2^(2(h(1/x) - 1/x)) of the uniform construction for x > 2, with the
    o(1) term dropped. Equal to 2.25 at x = 3, where it is largest.

    :param x: ratio n/k, scalar or array, every value greater than 2
    :return: the rate(s)
    :raise ValueError: if a value is at most 2
    """

    values = np.asarray(x, dtype=np.float64)
    if not np.all((values > 2.0) & np.isfinite(values)):
        message = "Invalid x argument: {x} (must be finite and greater than 2)".format(x=x)
        _logger.error(message)
        raise ValueError(message)

    inverse = 1.0 / values
    exponent = 2.0 * (entropy._binary_entropy_ufunc(inverse) - inverse)
    return utils.as_scalar_or_array(np.exp2(exponent))


# ------------------------------------------------------------------------------
def exact_rate_small_x(
        x,
):
    """
    The exact value 2^(2(1 - 1/x)) of c_k(n)^(1/n) for 1 <= x <= 2.

    :param x: ratio n/k, scalar or array, every value within [1, 2]
    :return: the rate(s)
    :raise ValueError: if a value is outside [1, 2]
    """

    values = np.asarray(x, dtype=np.float64)
    if not np.all((values >= 1.0) & (values <= 2.0)):
        message = "Invalid x argument: {x} (must lie in [1, 2])".format(x=x)
        _logger.error(message)
        raise ValueError(message)

    return utils.as_scalar_or_array(np.exp2(2.0 * (1.0 - 1.0 / values)))


# ------------------------------------------------------------------------------
def _upper_values(
        certificate: pipeline.BoundCertificate,
        xs: np.ndarray,
) -> np.ndarray:
    """
    Vectorised upper_curve(): rho_out of the interval lambda_lo < x <= lambda_hi,
    rho0 at the first grid point and final_rho past the last one.
    """

    lambdas = np.asarray(certificate.schedule.lambdas, dtype=np.float64)
    if not np.all((xs >= lambdas[0]) & (xs <= CURVE_X_MAX)):
        message = "Invalid x argument: values must lie in [{low}, {high}]".format(
            low=lambdas[0], high=CURVE_X_MAX
        )
        _logger.error(message)
        raise ValueError(message)

    beyond = xs > lambdas[-1]
    if np.any(beyond) and not certificate.final_rho >= pipeline.EXTENSION_RHO:
        message = "The certificate ends at lambda={end} and its final rho {final} " \
                  "does not extend further".format(end=lambdas[-1], final=certificate.final_rho)
        _logger.error(message)
        raise ValueError(message)

    rho_out = np.array([step.rho_out for step in certificate.steps], dtype=np.float64)
    intervals = np.searchsorted(lambdas[1:], xs, side="left")
    values = rho_out[np.minimum(intervals, len(rho_out) - 1)]
    values[xs == lambdas[0]] = certificate.schedule.rho0
    values[beyond] = certificate.final_rho

    return values


# ------------------------------------------------------------------------------
def upper_curve(
        certificate: pipeline.BoundCertificate,
        x: float,
) -> float:
    """
    The certified bound c_k(n)^(1/n) <= rho_out of the interval
    lambda_lo < x <= lambda_hi of the certificate. Piecewise constant and
    non-decreasing in x, equal to rho0 at x = 2.

    :param certificate: a verified certificate
    :param x: ratio n/k within [2, 3.6]
    :return: the upper bound
    :raise ValueError: if x is out of range
    """

    return float(_upper_values(certificate, np.array([x], dtype=np.float64))[0])


# ------------------------------------------------------------------------------
def symmetric_bound(
        k: int,
        n: int,
) -> Fraction:
    """
    The exact bound G_k(n) <= 2^k C(n, k) / C(2k, k) on the size of a
    k-uniform family A for which (A, A) is cancellative.

    :param k: uniform set size, at least 1
    :param n: ground set size, 2k <= n <= 64
    :return: the bound as an exact fraction
    :raise ValueError: if the arguments are out of range
    """

    if not (k >= 1 and 2 * k <= n <= SYMMETRIC_MAX_N):
        message = "Invalid arguments: need k >= 1 and 2k <= n <= {cap}, got k={k}, " \
                  "n={n}".format(cap=SYMMETRIC_MAX_N, k=k, n=n)
        _logger.error(message)
        raise ValueError(message)

    numerator = 2 ** k * scipy.special.comb(n, k, exact=True)
    return Fraction(numerator, scipy.special.comb(2 * k, k, exact=True))


# ------------------------------------------------------------------------------
def symmetric_rate(
        k: int,
        n: int,
) -> float:
    """
    symmetric_bound(k, n)^(2/n), which tends to lower_rate(n/k) as k grows with
    n/k fixed.
    """

    return float(symmetric_bound(k, n)) ** (2.0 / n)


# ------------------------------------------------------------------------------
def emit_curve(
        certificate: pipeline.BoundCertificate,
        samples: int,
) -> List[CurvePoint]:
    """
    Samples both curves on a uniform grid over [1, 3.6]. For x <= 2 both equal
    the exact value; beyond, the upper curve comes from the certificate and the
    lower one from the construction's rate.

    :param certificate: a verified certificate
    :param samples: number of grid points, at least 2
    :return: the points, in increasing x
    :raise ValueError: if samples < 2, or if a lower value exceeds the upper
        one, which means the certificate is unsound
    """

    if samples < 2:
        message = "Invalid number of samples: {samples}".format(samples=samples)
        _logger.error(message)
        raise ValueError(message)

    xs = np.linspace(CURVE_X_MIN, CURVE_X_MAX, samples)
    small = xs <= 2.0

    lower = np.empty_like(xs)
    upper = np.empty_like(xs)
    lower[small] = exact_rate_small_x(xs[small])
    upper[small] = lower[small]
    if np.any(~small):
        lower[~small] = lower_rate(xs[~small])
        upper[~small] = _upper_values(certificate, xs[~small])

    violations = np.flatnonzero(lower > upper + ORDER_TOLERANCE)
    if violations.size:
        message = "Lower curve exceeds the upper curve at x={x}".format(
            x=xs[violations].tolist()
        )
        _logger.error(message)
        raise ValueError(message)

    return [CurvePoint(*values) for values in zip(xs.tolist(), upper.tolist(), lower.tolist())]


# ------------------------------------------------------------------------------
def write_curve(
        points: List[CurvePoint],
        path_or_buffer: Union[str, object],
):
    """
    Writes curve points as CSV with the header x,upper,lower and 12 significant
    digits.

    :param points: the points to write
    :param path_or_buffer: file path or text stream
    """

    frame = pd.DataFrame(points, columns=_COLUMNS)
    frame.to_csv(path_or_buffer, index=False, float_format=_FLOAT_FORMAT)


# ------------------------------------------------------------------------------
def read_curve(
        path_or_buffer: Union[str, object],
) -> List[CurvePoint]:
    """
    :param path_or_buffer: file path or text stream of a curve CSV
    :return: the points
    :raise ValueError: if the columns are not x, upper, lower
    """

    frame = pd.read_csv(path_or_buffer)
    if list(frame.columns) != _COLUMNS:
        message = "Unexpected curve columns: {columns}".format(columns=list(frame.columns))
        _logger.error(message)
        raise ValueError(message)

    return [CurvePoint(*row) for row in frame.itertuples(index=False, name=None)]
