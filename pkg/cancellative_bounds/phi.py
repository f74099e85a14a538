"""
Upper bounds for the optimisation problem phi(gamma, x):

    maximise     (1/n) sum_i f(p_i, q_i)
    subject to   p_i q_i <= 1/gamma                       for every i
                 sum_i p_i = sum_i q_i >= n (1 - 1/x)
                 0 <= p_i, q_i <= 1,   n free

The bound is chosen by a three-case dispatch:

    1. closed form: when p0 + q0 = 2 (1 - 1/x), p0 q0 = 1/gamma has two
       distinct roots inside [0, 1], phi = f(p0, q0) exactly
    2. infeasible: when no (p, q) with pq <= 1/gamma reaches
       p + q >= 2 (1 - 1/x), phi = -infinity
    3. Lagrangian fallback: the best of a deterministic grid of certified
       Lagrangian bounds psi - 2 kappa (1 - 1/x)

All three cases assume gamma >= 2.25, which the query type enforces.

An independent brute-force oracle, phi_oracle(), provides lower bounds for
testing the dispatch.
"""
from enum import Enum
import logging
import math
from typing import NamedTuple, Optional

import numpy as np
import scipy.optimize

from cancellative_bounds import entropy, utils

# declare the names that should be included in the public API for this module
__all__ = [
    "InfeasibleQueryError",
    "OracleEstimate",
    "PhiBound",
    "PhiCertificate",
    "PhiQuery",
    "Regime",
    "closed_form_candidate",
    "is_feasible",
    "lagrangian_phi_bound",
    "phi_oracle",
    "phi_upper",
    "sigma",
]

# ------------------------------------------------------------------------------
# Retrieve logger and set desired logging level
_logger = utils.get_logger(__name__, logging.WARN)

# ------------------------------------------------------------------------------
# smallest gamma and x for which the bounds below are valid
GAMMA_MIN = 2.25
X_MIN = 2.0

# number of p0 values scanned by the Lagrangian fallback
LAGRANGIAN_GRID_POINTS = 512

# slack used when comparing against the boundary of the feasible region,
# always resolved in the direction that keeps the upper bound sound
FEASIBILITY_TOLERANCE = 1e-12

# relative size below which the closed-form discriminant counts as a double root
DISCRIMINANT_TOLERANCE = 1e-12

# crude global Lipschitz constant for f on the unit square (diagnostic only)
_LIPSCHITZ_CONSTANT = 8.0

# smallest oracle grid resolution accepted
_ORACLE_RESOLUTION_MIN = 100


# ------------------------------------------------------------------------------
class InfeasibleQueryError(ValueError):
    """
    Raised when an operation needs a non-empty constraint region but the
    query has phi = -infinity.
    """


# ------------------------------------------------------------------------------
class Regime(Enum):
    """
    Enumeration type for the case of the dispatch which produced a bound.
    """

    closed_form = "ClosedForm"
    infeasible = "Infeasible"
    lagrangian_fallback = "LagrangianFallback"

    def __str__(self):
        return self.value

    @staticmethod
    def from_string(s):
        for regime in Regime:
            if s in (regime.value, regime.name):
                return regime
        raise ValueError("Unsupported regime: '{0}'".format(s))


# ------------------------------------------------------------------------------
class PhiQuery(NamedTuple):
    """
    Arguments of phi: the product cap parameter gamma and the ratio x = n/k.
    """

    gamma: float
    x: float


# ------------------------------------------------------------------------------
class PhiCertificate(NamedTuple):
    """
    The point (p0, q0) on the hyperbola pq = 1/gamma, the multiplier kappa and
    the Lagrangian maximum psi = L_kappa(p0, q0) supporting a bound.
    """

    p0: float
    q0: float
    kappa: float
    psi: float


# ------------------------------------------------------------------------------
class PhiBound(NamedTuple):
    """
    An upper bound on phi(gamma, x), finite or -infinity, with the regime that
    produced it and its certificate (absent for the infeasible regime).
    """

    value: float
    regime: Regime
    certificate: Optional[PhiCertificate]


# ------------------------------------------------------------------------------
class OracleEstimate(NamedTuple):
    """
    Brute-force estimate of phi: a lower bound achieved by feasible points,
    and that value plus a grid-error allowance.
    """

    lower: float
    upper_hint: float


# ------------------------------------------------------------------------------
def _validate_query(
        query: PhiQuery,
):

    gamma, x = query
    if not gamma >= GAMMA_MIN:
        message = "Invalid gamma argument: {gamma} (must be at least {minimum})".format(
            gamma=gamma, minimum=GAMMA_MIN
        )
        _logger.error(message)
        raise ValueError(message)

    if not (x >= X_MIN and math.isfinite(x)):
        message = "Invalid x argument: {x} (must be finite and at least {minimum})".format(
            x=x, minimum=X_MIN
        )
        _logger.error(message)
        raise ValueError(message)


# ------------------------------------------------------------------------------
def _closed_form_roots(
        gamma: float,
        x: float,
) -> Optional[entropy.ProbPair]:

    # roots of t^2 - total t + product = 0
    total = 2.0 * (1.0 - 1.0 / x)
    product = 1.0 / gamma
    discriminant = total * total - 4.0 * product

    # a double root p0 = q0 is outside the hypothesis of the closed form
    if discriminant <= DISCRIMINANT_TOLERANCE * total * total:
        return None

    root = math.sqrt(discriminant)
    q0 = (total + root) / 2.0
    if q0 > 1.0 + FEASIBILITY_TOLERANCE:
        return None

    # the smaller root is computed from the product to avoid cancellation
    p0 = 2.0 * product / (total + root)

    return entropy.ProbPair(p0, min(q0, 1.0))


# ------------------------------------------------------------------------------
def _feasible(
        gamma: float,
        x: float,
) -> bool:

    # the largest p + q with pq <= 1/gamma inside the unit square is 1 + 1/gamma,
    # attained at (1, 1/gamma)
    return 1.0 + 1.0 / gamma >= 2.0 * (1.0 - 1.0 / x) - FEASIBILITY_TOLERANCE


# ------------------------------------------------------------------------------
def closed_form_candidate(
        query: PhiQuery,
) -> Optional[entropy.ProbPair]:
    """
    Solves p0 + q0 = 2 (1 - 1/x), p0 q0 = 1/gamma.

    :param query: the (gamma, x) query
    :return: the root pair with p0 < q0 when the roots are distinct and both
        lie in [0, 1], otherwise None
    """

    _validate_query(query)
    return _closed_form_roots(query.gamma, query.x)


# ------------------------------------------------------------------------------
def is_feasible(
        query: PhiQuery,
) -> bool:
    """
    Whether the constraint region of phi is non-empty, i.e. whether
    max{p + q : pq <= 1/gamma, 0 <= p, q <= 1} = 1 + 1/gamma reaches
    2 (1 - 1/x).

    :param query: the (gamma, x) query
    :return: False exactly when phi(gamma, x) = -infinity
    """

    _validate_query(query)
    return _feasible(query.gamma, query.x)


# ------------------------------------------------------------------------------
def lagrangian_phi_bound(
        query: PhiQuery,
        p0: float,
) -> PhiBound:
    """
    Certified Lagrangian bound phi(gamma, x) <= psi - 2 kappa (1 - 1/x), where
    q0 = 1/(gamma p0), kappa = kappa_for(p0, q0) and psi = L_kappa(p0, q0) is
    the maximum of the Lagrangian over the constraint region.

    :param query: the (gamma, x) query
    :param p0: a point of (1/gamma, 1/sqrt(gamma)), so that p0 < q0 < 1;
        at p0 = 1/gamma itself q0 = 1 and kappa is infinite
    :return: the bound, regime LagrangianFallback
    :raise ValueError: if p0 is outside the admissible range
    """

    _validate_query(query)
    gamma, x = query

    lower = 1.0 / gamma
    upper = 1.0 / math.sqrt(gamma)
    if not lower < p0 < upper:
        message = "Invalid p0 argument: {p0} (must lie in ({lower}, {upper}))".format(
            p0=p0, lower=lower, upper=upper
        )
        _logger.error(message)
        raise ValueError(message)

    q0 = 1.0 / (gamma * p0)
    kappa = entropy.kappa_for(p0, q0)
    psi = float(entropy.lagrangian(entropy.ProbPair(p0, q0), kappa))
    value = psi - 2.0 * kappa * (1.0 - 1.0 / x)

    return PhiBound(value, Regime.lagrangian_fallback, PhiCertificate(p0, q0, kappa, psi))


# ------------------------------------------------------------------------------
def _lagrangian_grid_bound(
        gamma: float,
        x: float,
) -> PhiBound:
    """
    Minimises the Lagrangian bound over the midpoints of a regular grid of
    LAGRANGIAN_GRID_POINTS cells spanning (1/gamma, 1/sqrt(gamma)). Ties go to
    the smallest p0.
    """

    if not math.isfinite(gamma):
        message = "Lagrangian fallback requires a finite gamma"
        _logger.error(message)
        raise ValueError(message)

    lower = 1.0 / gamma
    upper = 1.0 / math.sqrt(gamma)
    cells = (np.arange(LAGRANGIAN_GRID_POINTS) + 0.5) / LAGRANGIAN_GRID_POINTS
    p0s = lower + (upper - lower) * cells
    q0s = 1.0 / (gamma * p0s)

    # rounding can push the first q0 onto 1 when gamma p0 is within an ulp of 1
    usable = (q0s < 1.0) & (q0s > p0s)
    p0s = p0s[usable]
    q0s = q0s[usable]

    kappas = entropy._kappa(p0s, q0s)
    psis = entropy._pair_objective_ufunc(p0s, q0s) + kappas * (p0s + q0s)
    values = psis - 2.0 * kappas * (1.0 - 1.0 / x)

    best = int(np.argmin(values))
    certificate = PhiCertificate(
        float(p0s[best]), float(q0s[best]), float(kappas[best]), float(psis[best])
    )
    return PhiBound(float(values[best]), Regime.lagrangian_fallback, certificate)


# ------------------------------------------------------------------------------
def _closed_form_certificate(
        p0: float,
        q0: float,
        value: float,
) -> PhiCertificate:

    # kappa is only defined inside the open unit square, at a boundary root
    # (gamma infinite, or q0 = 1) the multiplier is recorded as NaN
    if 0.0 < p0 < q0 < 1.0:
        kappa = float(entropy._kappa(p0, q0))
        psi = value + kappa * (p0 + q0)
    else:
        kappa = math.nan
        psi = math.nan

    return PhiCertificate(p0, q0, kappa, psi)


# ------------------------------------------------------------------------------
def phi_upper(
        query: PhiQuery,
) -> PhiBound:
    """
    Upper bound on phi(gamma, x) via the three-case dispatch: the closed form
    (exact), the infeasible case (-infinity), else the Lagrangian fallback.
    The returned value is never below phi(gamma, x), and is non-increasing
    in gamma for fixed x.

    :param query: the (gamma, x) query
    :return: the bound with its regime and certificate
    """

    _validate_query(query)
    gamma, x = query

    candidate = _closed_form_roots(gamma, x)
    if candidate is not None:
        p0, q0 = candidate
        value = float(entropy._pair_objective_ufunc(p0, q0))
        return PhiBound(value, Regime.closed_form, _closed_form_certificate(p0, q0, value))

    if not _feasible(gamma, x):
        return PhiBound(-math.inf, Regime.infeasible, None)

    return _lagrangian_grid_bound(gamma, x)


# ------------------------------------------------------------------------------
def sigma(
        p: float,
        gamma: float,
) -> float:
    """
    sigma(p) = (g(p) - g(q)) / (q - p) with q = 1/(gamma p), strictly
    decreasing on [1/gamma, 1/sqrt(gamma)). Positive, since g is decreasing
    and p < q. Related to the multiplier by kappa_for(p, q) = (pq / ln 2) sigma(p).

    :param p: point of [1/gamma, 1/sqrt(gamma)); at p = 1/gamma, q = 1 and
        sigma is +infinity
    :param gamma: at least 2.25
    :return: sigma(p)
    :raise ValueError: if gamma or p is outside its domain
    """

    if not (gamma >= GAMMA_MIN and math.isfinite(gamma)):
        message = "Invalid gamma argument: {gamma}".format(gamma=gamma)
        _logger.error(message)
        raise ValueError(message)

    lower = 1.0 / gamma
    upper = 1.0 / math.sqrt(gamma)
    if not lower <= p < upper:
        message = "Invalid p argument: {p} (must lie in [{lower}, {upper}))".format(
            p=p, lower=lower, upper=upper
        )
        _logger.error(message)
        raise ValueError(message)

    q = 1.0 / (gamma * p)
    if p == lower or q >= 1.0:
        return math.inf

    return float((entropy._log_ratio_ufunc(p) - entropy._log_ratio_ufunc(q)) / (q - p))


# ------------------------------------------------------------------------------
def _upper_hull(
        us: np.ndarray,
        fs: np.ndarray,
) -> (np.ndarray, np.ndarray):
    """
    Vertices of the upper concave envelope of the points (us, fs), sorted by
    increasing u (monotone chain).
    """

    # sort by u, then by f so that the best point of a repeated u comes last
    order = np.lexsort((fs, us))
    hull = []
    for index in order:
        u, f = us[index], fs[index]
        while hull and hull[-1][0] == u:
            hull.pop()
        while len(hull) >= 2:
            (u1, f1), (u2, f2) = hull[-2], hull[-1]
            if (u2 - u1) * (f - f1) - (f2 - f1) * (u - u1) >= 0.0:
                hull.pop()
            else:
                break
        hull.append((u, f))

    hull = np.array(hull)
    return hull[:, 0], hull[:, 1]


# ------------------------------------------------------------------------------
def _diagonal_maximum(
        u: float,
        cap: float,
) -> Optional[float]:
    """
    Maximum of f(u + t, u - t) over the feasible t >= 0: points of the
    anti-diagonal with mean u inside the unit square and below the product cap.
    """

    t_low = math.sqrt(max(0.0, u * u - cap))
    t_high = min(u, 1.0 - u)
    if t_low > t_high:
        return None

    def negative_objective(t):
        return -float(entropy._pair_objective_ufunc(u + t, max(u - t, 0.0)))

    candidates = [t_low, t_high]
    if t_high - t_low > 1e-15:
        result = scipy.optimize.minimize_scalar(
            negative_objective,
            bounds=(t_low, t_high),
            method="bounded",
            options={"xatol": 1e-12},
        )
        candidates.append(float(result.x))

    best = None
    for t in candidates:
        p, q = u + t, max(u - t, 0.0)
        if p <= 1.0 and p * q <= cap * (1.0 + FEASIBILITY_TOLERANCE):
            value = -negative_objective(t)
            if best is None or value > best:
                best = value

    return best


# ------------------------------------------------------------------------------
def phi_oracle(
        query: PhiQuery,
        resolution: int,
) -> OracleEstimate:
    """
    Brute-force estimate of phi(gamma, x), independent of the three-case
    dispatch.

    Since f and the constraints are symmetric in p and q, any admissible
    mixture of points can be averaged with its mirror image, after which the
    constraint mean-p = mean-q holds automatically. What remains is a single
    constraint on the mean of u = (p + q)/2, so the supremum is the concave
    envelope of F(u) = max{f(p, q) : (p + q)/2 = u, pq <= 1/gamma} evaluated
    at max(1 - 1/x, argmax of the envelope); its vertices are mixtures of at
    most two diagonal values.

    F is sampled on the anti-diagonals of a resolution x resolution grid
    (plus the extreme points (1, 1/gamma) and (1/gamma, 1)), and refined by a
    bounded scalar maximisation along the diagonal at u = 1 - 1/x and at the
    envelope vertices adjacent to it. Every point used is feasible.

    :param query: a feasible (gamma, x) query
    :param resolution: number of grid ticks per axis, at least 100
    :return: the estimate, lower a valid lower bound on phi up to rounding
    :raise InfeasibleQueryError: if the query is infeasible
    :raise ValueError: if the resolution is too small
    """

    _validate_query(query)
    gamma, x = query

    if resolution < _ORACLE_RESOLUTION_MIN:
        message = "Invalid resolution argument: {res} (must be at least {minimum})".format(
            res=resolution, minimum=_ORACLE_RESOLUTION_MIN
        )
        _logger.error(message)
        raise ValueError(message)

    if not _feasible(gamma, x):
        message = "Infeasible query: gamma={gamma}, x={x}".format(gamma=gamma, x=x)
        _logger.error(message)
        raise InfeasibleQueryError(message)

    cap = 1.0 / gamma
    target = 1.0 - 1.0 / x

    # objective over the grid, -inf where the product cap is violated
    ticks = np.linspace(0.0, 1.0, resolution)
    ps, qs = np.meshgrid(ticks, ticks, indexing="ij")
    values = entropy._pair_objective_ufunc(ps, qs)
    values[ps * qs > cap * (1.0 + FEASIBILITY_TOLERANCE)] = -np.inf

    # best grid value on each anti-diagonal i + j = const
    per_diagonal = np.full(2 * resolution - 1, -np.inf)
    for row in range(resolution):
        window = per_diagonal[row:row + resolution]
        np.maximum(window, values[row], out=window)

    us = np.arange(2 * resolution - 1) / (2.0 * (resolution - 1))
    keep = np.isfinite(per_diagonal)
    us = np.append(us[keep], (1.0 + cap) / 2.0)
    fs = np.append(per_diagonal[keep], float(entropy._binary_entropy_ufunc(cap)))

    hull_us, hull_fs = _upper_hull(us, fs)

    # refine at the target and at the envelope vertices around it and the apex
    refine_at = {target, float(hull_us[int(np.argmax(hull_fs))])}
    below = hull_us[hull_us < target]
    above = hull_us[hull_us > target]
    if below.size:
        refine_at.add(float(below[-1]))
    if above.size:
        refine_at.add(float(above[0]))

    for u in sorted(refine_at):
        refined = _diagonal_maximum(u, cap)
        if refined is not None:
            us = np.append(us, u)
            fs = np.append(fs, refined)

    hull_us, hull_fs = _upper_hull(us, fs)

    apex = float(hull_us[int(np.argmax(hull_fs))])
    location = max(target, apex)
    if location > hull_us[-1]:
        # only possible within the feasibility tolerance of the boundary
        lower = -math.inf
    else:
        lower = float(np.interp(location, hull_us, hull_fs))

    grid_error = _LIPSCHITZ_CONSTANT * math.sqrt(2.0) / (resolution - 1)
    return OracleEstimate(lower, lower + grid_error)
