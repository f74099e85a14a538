import numpy as np
import pytest

from cancellative_bounds import families, phi, pipeline, utils

# constants
# numbers of lambda-intervals of the small certificates built for the tests
_INTERVALS_SMALL = 250
_INTERVALS_MEDIUM = 1000
_INTERVALS_REFINEMENT = (250, 500, 1000, 2000)

# seed of the random number generator used for property tests
_RANDOM_SEED = 20230417


# ------------------------------------------------------------------------------
def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run the slow full-size certificate tests",
    )


# ------------------------------------------------------------------------------
def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size run, needs --runslow")


# ------------------------------------------------------------------------------
def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return

    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


# ------------------------------------------------------------------------------
@pytest.fixture(scope="module")
def certificate_small():
    return pipeline.run_schedule(pipeline.Schedule.default(_INTERVALS_SMALL))


# ------------------------------------------------------------------------------
@pytest.fixture(scope="module")
def certificate_medium():
    return pipeline.run_schedule(pipeline.Schedule.default(_INTERVALS_MEDIUM))


# ------------------------------------------------------------------------------
@pytest.fixture(scope="module")
def certificates_refinement():
    return {
        intervals: pipeline.run_schedule(pipeline.Schedule.default(intervals))
        for intervals in _INTERVALS_REFINEMENT
    }


# ------------------------------------------------------------------------------
def _single_step_certificate(rho_out):

    # one interval [2, 2.1] from rho0 = 2, the phi bound is closed form at x = 2
    schedule = pipeline.Schedule(1, (2.0, 2.1), pipeline.DEFAULT_DELTA, 2.0)
    gamma = pipeline.gamma_from(2.0, rho_out, 2.0, 2.1)
    phi_value = phi.phi_upper(phi.PhiQuery(gamma, 2.0)).value + pipeline.PHI_INFLATION
    step = pipeline.RhoStep(2.0, 2.1, 2.0, rho_out, gamma, phi_value, 1.0 - phi_value)

    return pipeline.BoundCertificate(
        schedule, (step,), rho_out, utils.ceil_decimals(rho_out, 4)
    )


# ------------------------------------------------------------------------------
@pytest.fixture(scope="module")
def certificate_boundary():
    return _single_step_certificate(2.25)


# ------------------------------------------------------------------------------
@pytest.fixture(scope="module")
def certificate_short():
    return _single_step_certificate(2.2)


# ------------------------------------------------------------------------------
@pytest.fixture(scope="module")
def triple_pair():
    return families.triple_blocks(1)


# ------------------------------------------------------------------------------
@pytest.fixture(scope="module")
def powerset_pair():
    return families.powerset_split(2, 1)


# ------------------------------------------------------------------------------
@pytest.fixture(scope="function")
def rng():
    return np.random.default_rng(_RANDOM_SEED)
