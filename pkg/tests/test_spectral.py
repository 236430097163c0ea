import numpy as np
import pytest

from wavechange.errors import TooShort
from wavechange.spectral import periodogram
from wavechange.synthetic import generate_synthetic


def test_three_sinusoid_peaks():
    p = periodogram(generate_synthetic("sinusoids", 1024))
    for got, want in zip(p.peaks(3), [0.004775, 0.04775, 0.4775]):
        assert abs(got - want) <= 1 / 1024


def test_peaks_invariant_to_scaling():
    x = generate_synthetic("sinusoids", 1024).values
    np.testing.assert_array_equal(periodogram(x).peaks(3), periodogram(40 * x).peaks(3))


def test_constant_power_at_zero():
    p = periodogram(np.full(32, 3.0))
    assert p.power[0] == pytest.approx(32 * 9.0)
    assert np.max(p.power[1:]) < 1e-20


@pytest.mark.parametrize("n", [64, 65, 100])
def test_parseval(n):
    x = np.random.default_rng(n).standard_normal(n)
    p = periodogram(x)
    assert p.mean_square() == pytest.approx(np.mean(x**2), rel=1e-10)
    assert p.frequencies[-1] <= 0.5 and np.all(p.power >= 0)
    assert len(p.frequencies) == n // 2 + 1


def test_too_short():
    with pytest.raises(TooShort):
        periodogram([1.0, 2.0, 3.0])
