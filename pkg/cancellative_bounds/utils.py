from decimal import Decimal, ROUND_CEILING
import logging

import numpy as np


# ------------------------------------------------------------------------------
# set up a basic, global _logger
def get_logger(name, level):
    logging.basicConfig(
        format="%(asctime)s %(levelname)s %(message)s",
        datefmt="%Y-%m-%d  %H:%M:%S",
    )
    logger = logging.getLogger(name)
    logger.setLevel(level)
    return logger


# ------------------------------------------------------------------------------
def validate_unit_interval(
        values,
        name: str,
        open_interval: bool = False,
) -> np.ndarray:
    """
    Confirms that every element of a scalar or array argument lies within
    the unit interval, closed by default or open if requested.

    :param values: scalar or array-like of floats
    :param name: argument name used in the error message
    :param open_interval: if True then the endpoints 0 and 1 are rejected
    :return: the values as a float64 numpy array (0-D for scalar input)
    :raise ValueError: if any value is outside the interval or is NaN
    """

    array = np.asarray(values, dtype=np.float64)

    if open_interval:
        valid = (array > 0.0) & (array < 1.0)
        bounds = "(0, 1)"
    else:
        valid = (array >= 0.0) & (array <= 1.0)
        bounds = "[0, 1]"

    # NaN compares False on both sides so it lands here too
    if not np.all(valid):
        message = "Invalid {name} argument: values must lie in {bounds}, " \
                  "got {values}".format(name=name, bounds=bounds, values=values)
        _logger.error(message)
        raise ValueError(message)

    return array


# ------------------------------------------------------------------------------
def as_scalar_or_array(
        result: np.ndarray,
):
    """
    Unwraps the 0-D array results of ufunc calls so that scalar input gives
    a scalar (numpy float64) and array input gives an array.
    """
    if np.ndim(result) == 0:
        return np.float64(result)
    return result


# ------------------------------------------------------------------------------
def ceil_decimals(
        value: float,
        places: int,
) -> float:
    """
    Rounds a positive value up at the given decimal place, working on the
    shortest decimal representation of the float so that exactly
    representable values such as 2.25 are left unchanged.

    :param value: the value to round up
    :param places: number of decimal places to keep
    :return: the smallest number with the given number of decimals that is
        at least the shortest decimal representation of the value
    """

    quantum = Decimal(1).scaleb(-places)
    return float(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_CEILING))


_logger = get_logger(__name__, logging.DEBUG)
