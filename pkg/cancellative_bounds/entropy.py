"""
Scalar numeric kernels for the entropy bound on cancellative pairs.

Logarithm bases: the binary entropy h and the pair objective
f(p, q) = p h(q) + q h(p) use base 2, while the auxiliary function
g(x) = ln(1 - x) / x and the denominator of the multiplier kappa use the
natural logarithm. This is the only reading under which the derivative of
the Lagrangian along the hyperbola pq = 1/gamma has the sign of
kappa(p, q) - kappa, which the Case-3 bound relies upon.

The kernels are compiled numba ufuncs so they accept scalars or numpy arrays.
"""
import logging
import math
from typing import NamedTuple

import numba
import numpy as np

from cancellative_bounds import utils

# declare the names that should be included in the public API for this module
__all__ = [
    "ProbPair",
    "binary_entropy",
    "kappa_for",
    "lagrangian",
    "log_ratio",
    "pair_objective",
]

# ------------------------------------------------------------------------------
# Retrieve logger and set desired logging level
_logger = utils.get_logger(__name__, logging.WARN)

# natural logarithm of 2, the kappa denominator
LN2 = math.log(2.0)


# ------------------------------------------------------------------------------
class ProbPair(NamedTuple):
    """
    A point (p, q) of the unit square, the per-coordinate frequencies of
    the sets of the two families which avoid a given ground element.
    """

    p: float
    q: float


# ------------------------------------------------------------------------------
@numba.jit(nopython=True)
def _entropy(p):

    # convention 0 log 0 = 0 at both endpoints
    if p <= 0.0 or p >= 1.0:
        return 0.0

    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


# ------------------------------------------------------------------------------
@numba.vectorize([numba.f8(numba.f8)])
def _binary_entropy_ufunc(p):
    return _entropy(p)


# ------------------------------------------------------------------------------
@numba.vectorize([numba.f8(numba.f8, numba.f8)])
def _pair_objective_ufunc(p, q):
    return p * _entropy(q) + q * _entropy(p)


# ------------------------------------------------------------------------------
@numba.vectorize([numba.f8(numba.f8)])
def _log_ratio_ufunc(x):
    return math.log1p(-x) / x


# ------------------------------------------------------------------------------
def _kappa(
        p0,
        q0,
):
    """
    Unvalidated multiplier kernel, vectorised over numpy arrays.
    """
    return (p0 * q0 / LN2) * (_log_ratio_ufunc(p0) - _log_ratio_ufunc(q0)) / (q0 - p0)


# ------------------------------------------------------------------------------
def binary_entropy(
        p,
):
    """
    Binary entropy h(p) = -p log2(p) - (1 - p) log2(1 - p), with 0 log2 0 = 0.

    :param p: probability, or array of probabilities, within [0, 1]
    :return: entropy value(s) in [0, 1], symmetric under p -> 1 - p
    :raise ValueError: if any value is outside [0, 1]
    """

    p = utils.validate_unit_interval(p, "p")
    return utils.as_scalar_or_array(_binary_entropy_ufunc(p))


# ------------------------------------------------------------------------------
def pair_objective(
        pq: ProbPair,
):
    """
    Computes f(p, q) = p h(q) + q h(p), the per-coordinate term of the
    entropy inequality. Symmetric in its two arguments.

    :param pq: the (p, q) pair, fields may be scalars or same-shaped arrays
    :return: value(s) of f, non-negative and at most 2 max(p, q)
    :raise ValueError: if either coordinate is outside [0, 1]
    """

    p = utils.validate_unit_interval(pq[0], "p")
    q = utils.validate_unit_interval(pq[1], "q")
    return utils.as_scalar_or_array(_pair_objective_ufunc(p, q))


# ------------------------------------------------------------------------------
def log_ratio(
        x,
):
    """
    The auxiliary function g(x) = ln(1 - x) / x (natural logarithm), strictly
    decreasing on (0, 1) with limit -1 as x -> 0+. Undefined at the endpoints.

    :param x: value(s) within the open interval (0, 1)
    :return: g(x), negative
    :raise ValueError: if any value is outside (0, 1)
    """

    x = utils.validate_unit_interval(x, "x", open_interval=True)
    return utils.as_scalar_or_array(_log_ratio_ufunc(x))


# ------------------------------------------------------------------------------
def kappa_for(
        p0: float,
        q0: float,
) -> float:
    """
    The Lagrange multiplier which makes (p0, q0) the maximiser of the
    Lagrangian along the hyperbola through it:

        kappa = (p0 q0 / ln 2) (g(p0) - g(q0)) / (q0 - p0)

    Positive for p0 != q0 since g is strictly decreasing, and symmetric in
    its arguments.

    :param p0: first coordinate, within (0, 1)
    :param q0: second coordinate, within (0, 1)
    :return: kappa > 0
    :raise ValueError: if a coordinate is outside (0, 1), or if p0 == q0
        (the formula degenerates to 0/0)
    """

    p0 = float(utils.validate_unit_interval(p0, "p0", open_interval=True))
    q0 = float(utils.validate_unit_interval(q0, "q0", open_interval=True))

    if p0 == q0:
        message = "Degenerate multiplier request: p0 and q0 are both {value}".format(
            value=p0
        )
        _logger.error(message)
        raise ValueError(message)

    return float(_kappa(p0, q0))


# ------------------------------------------------------------------------------
def lagrangian(
        pq: ProbPair,
        kappa: float,
):
    """
    The Lagrangian L_kappa(p, q) = f(p, q) + kappa (p + q).

    :param pq: the (p, q) pair
    :param kappa: non-negative multiplier
    :return: value(s) of the Lagrangian
    :raise ValueError: if kappa is negative or a coordinate is outside [0, 1]
    """

    if not kappa >= 0.0:
        message = "Invalid kappa argument: {kappa} (must be non-negative)".format(
            kappa=kappa
        )
        _logger.error(message)
        raise ValueError(message)

    objective = pair_objective(pq)
    total = objective + kappa * (np.asarray(pq[0]) + np.asarray(pq[1]))
    return utils.as_scalar_or_array(total)
