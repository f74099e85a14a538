from fractions import Fraction
import io
import logging

import numpy as np
import pytest

from cancellative_bounds import curves

# ------------------------------------------------------------------------------
# disable logging messages
logging.disable(logging.CRITICAL)


# ------------------------------------------------------------------------------
def test_lower_rate():

    assert curves.lower_rate(3.0) == pytest.approx(2.25, abs=1e-12)
    assert curves.lower_rate(2.0 + 1e-9) == pytest.approx(2.0, abs=1e-6)

    # largest at x = 3
    xs = np.linspace(2.01, 3.6, 500)
    values = curves.lower_rate(xs)
    assert values.shape == xs.shape
    assert np.all(values <= 2.25 + 1e-12)
    assert np.all(np.diff(values[xs < 3.0]) > 0.0)
    assert np.all(np.diff(values[xs > 3.0]) < 0.0)

    pytest.raises(ValueError, curves.lower_rate, 2.0)
    pytest.raises(ValueError, curves.lower_rate, np.array([2.5, 1.5]))
    pytest.raises(ValueError, curves.lower_rate, np.inf)


# ------------------------------------------------------------------------------
def test_exact_rate_small_x():

    assert curves.exact_rate_small_x(1.0) == 1.0
    assert curves.exact_rate_small_x(2.0) == 2.0
    assert curves.exact_rate_small_x(1.5) == pytest.approx(2.0 ** (2.0 / 3.0))

    values = curves.exact_rate_small_x(np.linspace(1.0, 2.0, 101))
    assert np.all(np.diff(values) > 0.0)

    # continuous with the lower curve at x = 2
    assert curves.lower_rate(2.0 + 1e-12) == pytest.approx(curves.exact_rate_small_x(2.0))

    pytest.raises(ValueError, curves.exact_rate_small_x, 0.5)
    pytest.raises(ValueError, curves.exact_rate_small_x, 2.5)


# ------------------------------------------------------------------------------
@pytest.mark.usefixtures("certificate_small")
def test_upper_curve(certificate_small):

    certificate = certificate_small
    lambdas = certificate.schedule.lambdas
    steps = certificate.steps

    assert curves.upper_curve(certificate, 2.0) == certificate.schedule.rho0
    assert curves.upper_curve(certificate, lambdas[1]) == steps[0].rho_out
    assert curves.upper_curve(certificate, 3.6) == certificate.final_rho

    # rho_out of the interval lambda_lo < x <= lambda_hi
    for i in (0, 17, 100, 249):
        middle = 0.5 * (lambdas[i] + lambdas[i + 1])
        assert curves.upper_curve(certificate, middle) == steps[i].rho_out
        assert curves.upper_curve(certificate, lambdas[i + 1]) == steps[i].rho_out

    values = [curves.upper_curve(certificate, x) for x in np.linspace(2.0, 3.6, 333)]
    assert all(later >= earlier for earlier, later in zip(values, values[1:]))

    pytest.raises(ValueError, curves.upper_curve, certificate, 1.9)
    pytest.raises(ValueError, curves.upper_curve, certificate, 3.7)


# ------------------------------------------------------------------------------
@pytest.mark.usefixtures("certificate_boundary", "certificate_short")
def test_upper_curve_extension(certificate_boundary, certificate_short):

    # past the last grid point only a final rho of at least 2.25 carries over
    assert curves.upper_curve(certificate_boundary, 3.0) == 2.25
    assert curves.upper_curve(certificate_boundary, 2.05) == 2.25

    assert curves.upper_curve(certificate_short, 2.05) == 2.2
    pytest.raises(ValueError, curves.upper_curve, certificate_short, 3.0)


# ------------------------------------------------------------------------------
def test_symmetric_bound():

    assert curves.symmetric_bound(1, 2) == 2
    assert curves.symmetric_bound(2, 4) == 4
    assert curves.symmetric_bound(3, 9) == Fraction(168, 5)
    assert isinstance(curves.symmetric_bound(3, 9), Fraction)
    assert curves.symmetric_bound(1, 3) == 3
    assert curves.symmetric_bound(2, 6) == 10
    for k in range(1, 17):
        assert curves.symmetric_bound(k, 2 * k) == 2 ** k

    pytest.raises(ValueError, curves.symmetric_bound, 0, 4)
    pytest.raises(ValueError, curves.symmetric_bound, 3, 5)
    pytest.raises(ValueError, curves.symmetric_bound, 30, 65)


# ------------------------------------------------------------------------------
def test_symmetric_rate():

    # approaches the construction rate 2.25 from below at n/k = 3
    rates = [curves.symmetric_rate(k, 3 * k) for k in (5, 10, 15, 20)]
    assert all(later > earlier for earlier, later in zip(rates, rates[1:]))
    assert all(rate < 2.25 for rate in rates)
    assert rates[-1] == pytest.approx(2.239, abs=5e-3)


# ------------------------------------------------------------------------------
@pytest.mark.usefixtures("certificate_small")
def test_emit_curve(certificate_small):

    points = curves.emit_curve(certificate_small, 200)
    assert len(points) == 200
    assert points[0].x == 1.0
    assert points[-1].x == pytest.approx(3.6)

    xs = np.array([point.x for point in points])
    upper = np.array([point.upper for point in points])
    lower = np.array([point.lower for point in points])

    assert np.all(np.diff(xs) > 0.0)
    assert np.all(lower <= upper + curves.ORDER_TOLERANCE)
    assert np.all(np.diff(upper) >= 0.0)
    np.testing.assert_allclose(upper[xs <= 2.0], lower[xs <= 2.0])
    assert upper[-1] == certificate_small.final_rho

    # both curves meet at x = 2, a grid point for 27 samples
    junction = curves.emit_curve(certificate_small, 27)[10]
    assert junction.x == pytest.approx(2.0, abs=1e-12)
    assert junction.upper == pytest.approx(2.0, abs=1e-9)
    assert junction.lower == pytest.approx(2.0, abs=1e-9)

    pytest.raises(ValueError, curves.emit_curve, certificate_small, 1)


# ------------------------------------------------------------------------------
@pytest.mark.usefixtures("certificate_boundary", "certificate_short")
def test_emit_curve_extension(certificate_boundary, certificate_short):

    points = curves.emit_curve(certificate_boundary, 53)
    assert all(point.upper == 2.25 for point in points if point.x > 2.0)
    assert all(point.lower <= point.upper + curves.ORDER_TOLERANCE for point in points)

    pytest.raises(ValueError, curves.emit_curve, certificate_short, 53)


# ------------------------------------------------------------------------------
@pytest.mark.usefixtures("certificate_small")
def test_curve_file(certificate_small, tmp_path):

    points = curves.emit_curve(certificate_small, 40)
    path = str(tmp_path / "curve.csv")
    curves.write_curve(points, path)

    with open(path) as stream:
        assert stream.readline().strip() == "x,upper,lower"

    parsed = curves.read_curve(path)
    assert len(parsed) == len(points)
    np.testing.assert_allclose(np.array(parsed), np.array(points), rtol=1e-11)

    # streams work as well
    buffer = io.StringIO()
    curves.write_curve(points[:3], buffer)
    buffer.seek(0)
    assert len(curves.read_curve(buffer)) == 3

    pytest.raises(ValueError, curves.read_curve, io.StringIO("a,b\n1,2\n"))
