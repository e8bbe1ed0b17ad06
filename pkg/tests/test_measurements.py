import math

import numpy as np
import pytest

from infoorder import BadDimension, Measurement, bottom, make_distribution, mu_minus, mu_plus, top

import oracles


def test_mu_plus_values():
    assert mu_plus(top(4, 3)) == 0.0
    assert mu_plus(bottom(3)) == pytest.approx(2 / 3)
    assert mu_plus((0.5, 0.3, 0.2)) == 0.5


def test_mu_minus_values():
    assert mu_minus(top(3, 2)) == 0.0
    assert mu_minus((0.5, 0.3, 0.2)) == pytest.approx(3.2)
    assert mu_minus((0.5, 0.5, 0)) == pytest.approx(1.5)


def test_mu_minus_needs_two_coordinates():
    with pytest.raises(BadDimension):
        mu_minus((1.0,))


@pytest.mark.parametrize("m", list(Measurement))
def test_zero_exactly_on_pointed(m):
    for p in oracles.grid(3, 6):
        x = make_distribution([float(v) for v in p])
        pointed = max(p) == 1
        assert (m(x) == 0) == pointed, p


@pytest.mark.parametrize("m", list(Measurement))
def test_batch_matches_scalar(m):
    pts = np.array([[float(v) for v in p] for p in oracles.grid(4, 5)])
    got = m.batch(pts)
    for row, v in zip(pts, got):
        assert v == pytest.approx(m(row), abs=1e-15)


def test_exact_oracle_agrees():
    for p in oracles.grid(4, 6):
        x = [float(v) for v in p]
        assert mu_plus(x) == pytest.approx(float(oracles.mu_plus(p)), abs=1e-15)
        assert mu_minus(x) == pytest.approx(float(oracles.mu_minus(p)), abs=1e-15)


def test_entropy_value():
    assert Measurement.ENTROPY(bottom(4)) == pytest.approx(math.log(4))


def test_entropy_not_monotone_for_lowner_plus_in_general():
    # equality in two coordinates lets x sit below y while carrying less entropy
    from infoorder import LownerPlus
    from infoorder.suite import SampleConfig, check_measurement, sample

    x = make_distribution([4 / 9, 1 / 9, 4 / 9])
    y = make_distribution([3 / 8, 1 / 8, 4 / 8])
    assert LownerPlus().leq(x, y)
    assert Measurement.ENTROPY(x) < Measurement.ENTROPY(y)
    rep = check_measurement(LownerPlus(), Measurement.ENTROPY, sample(SampleConfig.grid(3, 72)))
    assert rep["monotone"].violation_count > 0
