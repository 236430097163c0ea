"""Plain periodogram on the one-sided frequency grid k/N."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TooShort
from .preprocess import as_series


@dataclass
class Periodogram:
    frequencies: np.ndarray
    power: np.ndarray
    n: int

    def __post_init__(self):
        if self.frequencies.shape != self.power.shape:
            raise ValueError("frequencies and power differ in length")

    @property
    def weights(self) -> np.ndarray:
        """Fold factors: bins other than 0 and Nyquist stand for two DFT bins."""
        w = np.full(self.power.size, 2.0)
        w[0] = 1.0
        if self.n % 2 == 0:
            w[-1] = 1.0
        return w

    def mean_square(self) -> float:
        """Equals ``mean(x**2)`` by Parseval."""
        return float(np.dot(self.weights, self.power) / self.n)

    def peaks(self, count: int = 3) -> np.ndarray:
        """Frequencies of the ``count`` largest local maxima (zero bin excluded)."""
        p = self.power
        interior = np.flatnonzero((p[1:-1] >= p[:-2]) & (p[1:-1] >= p[2:])) + 1
        if self.power.size > 1 and p[-1] > p[-2]:
            interior = np.append(interior, p.size - 1)
        best = interior[np.argsort(p[interior])[::-1][:count]]
        return np.sort(self.frequencies[best])


def periodogram(x) -> Periodogram:
    """``|X_k|**2 / N`` at ``nu_k = k/N`` for k = 0..N//2."""
    values = as_series(x).values
    n = values.size
    if n < 4:
        raise TooShort("periodogram needs at least 4 samples")
    spec = np.fft.rfft(values)
    power = (spec.real**2 + spec.imag**2) / n
    return Periodogram(np.arange(power.size) / n, power, n)
