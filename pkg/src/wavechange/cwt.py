"""Discretised continuous wavelet transform and admissibility checks."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .errors import DegenerateWavelet, InvalidParams, InvalidScales, TooShort
from .preprocess import as_series


class WaveletKind(str, Enum):
    HAAR = "haar_analytic"
    MORLET = "morlet_real"
    MEXICAN_HAT = "mexican_hat"


@dataclass(frozen=True, eq=False)
class SampledWavelet:
    """Mother wavelet sampled at ``t0 + i*dt``."""

    samples: np.ndarray
    dt: float
    family: str
    t0: float = 0.0

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(len(self.samples))

    @property
    def t_end(self) -> float:
        return self.t0 + self.dt * len(self.samples)


def sampled_wavelet(family="mexican_hat", dt: float = 1.0 / 256, omega0: float = 6.0) -> SampledWavelet:
    """Unit-energy mother wavelets on a uniform grid.

    ``haar_analytic`` lives on [0, 1); the Gaussian-windowed families are cut
    where the envelope drops below ~1e-8.
    """
    kind = WaveletKind(family)
    if dt <= 0:
        raise InvalidParams("dt must be positive")
    if kind is WaveletKind.HAAR:
        t = dt * np.arange(int(round(1.0 / dt)))
        psi = np.where(t < 0.5, 1.0, -1.0)
        return SampledWavelet(psi, dt, kind.value, 0.0)
    half = 6.0
    n = int(round(2 * half / dt))
    t = -half + dt * np.arange(n)
    if kind is WaveletKind.MEXICAN_HAT:
        psi = 2.0 / (np.sqrt(3.0) * np.pi**0.25) * (1 - t**2) * np.exp(-(t**2) / 2)
    else:
        # real Morlet with the admissibility correction term
        kappa = np.exp(-(omega0**2) / 2)
        norm = np.sqrt(np.pi) * (0.5 + 1.5 * np.exp(-(omega0**2)) - 2 * np.exp(-0.75 * omega0**2))
        psi = (np.cos(omega0 * t) - kappa) * np.exp(-(t**2) / 2) / np.sqrt(norm)
    return SampledWavelet(psi, dt, kind.value, -half)


@dataclass
class AdmissibilityReport:
    zero_integral_residual: float
    energy_residual: float
    c_psi: float
    tolerance: float = 1e-6

    @property
    def zero_integral_ok(self) -> bool:
        return self.zero_integral_residual < self.tolerance

    @property
    def energy_ok(self) -> bool:
        return self.energy_residual < self.tolerance

    @property
    def c_psi_ok(self) -> bool:
        return bool(np.isfinite(self.c_psi) and self.c_psi > 0)

    @property
    def admissible(self) -> bool:
        return self.zero_integral_ok and self.energy_ok and self.c_psi_ok


def check_admissibility(w: SampledWavelet, tolerance: float = 1e-6) -> AdmissibilityReport:
    """Riemann-sum checks of zero mean and unit energy, plus a quadrature
    estimate of ``C_psi = int_0^inf |Psi(nu)|^2 / nu dnu`` from the
    zero-padded DFT of the samples."""
    psi = np.asarray(w.samples, dtype=float)
    if w.dt <= 0:
        raise InvalidParams("dt must be positive")
    if psi.size < 16:
        raise TooShort("need at least 16 wavelet samples")
    energy = float(np.sum(psi**2) * w.dt)
    if energy < 1e-12:
        raise DegenerateWavelet("wavelet has (numerically) zero energy")
    integral = float(np.sum(psi) * w.dt)

    n_fft = 1 << int(np.ceil(np.log2(16 * psi.size)))
    spectrum = np.abs(np.fft.rfft(psi, n_fft) * w.dt) ** 2
    nu = np.fft.rfftfreq(n_fft, d=w.dt)
    dnu = nu[1]
    c_psi = float(np.sum(spectrum[1:] / nu[1:]) * dnu)
    if spectrum[0] > tolerance**2:
        # |Psi(0)|^2 / nu is not integrable at the origin
        c_psi = float("inf")
    return AdmissibilityReport(abs(integral), abs(energy - 1.0), c_psi, tolerance)


# -- transform --------------------------------------------------------------


@dataclass
class Scalogram:
    coefficients: np.ndarray
    scales: np.ndarray
    times: np.ndarray
    wavelet: str

    def __post_init__(self):
        if self.coefficients.shape != (self.scales.size, self.times.size):
            raise ValueError("scalogram shape does not match scales x times")

    def cone_mask(self, w: SampledWavelet) -> np.ndarray:
        """True where the dilated wavelet lies entirely inside the signal."""
        n = self.times.size
        mask = np.zeros(self.coefficients.shape, dtype=bool)
        for i, s in enumerate(self.scales):
            lo, hi = _kernel_span(w, s)
            mask[i, max(0, -lo): max(0, n - hi)] = True
        return mask


def dyadic_scales(n: int, voices: int = 4, smallest: float = 1.0, largest: Optional[float] = None) -> np.ndarray:
    """Scales 2**(k/voices) from ``smallest`` up to ``largest`` (default n/4)."""
    if largest is None:
        largest = max(smallest, n / 4)
    octaves = np.log2(largest / smallest)
    k = np.arange(int(np.floor(octaves * voices + 1e-9)) + 1)
    return smallest * 2.0 ** (k / voices)


def _kernel_span(w: SampledWavelet, s: float) -> tuple[int, int]:
    # integer offsets m whose cell [m, m+1) meets the dilated support
    return int(np.floor(w.t0 * s)), int(np.ceil(w.t_end * s))


def _kernel(w: SampledWavelet, s: float) -> tuple[int, np.ndarray]:
    """Cell-averaged dilated wavelet: k[m] = s^-1/2 int_m^{m+1} psi(t/s) dt.

    Built from the running integral of the samples with the residual mean
    removed, so every kernel sums to exactly zero.
    """
    psi = np.asarray(w.samples, dtype=float)
    grid = w.t0 + w.dt * np.arange(psi.size + 1)
    run = np.concatenate([[0.0], np.cumsum(psi) * w.dt])
    run -= run[-1] * (grid - grid[0]) / (grid[-1] - grid[0])
    lo, hi = _kernel_span(w, s)
    edges = np.arange(lo, hi + 1, dtype=float) / s
    prim = np.interp(edges, grid, run, left=0.0, right=0.0)
    return lo, np.sqrt(s) * np.diff(prim)


def cwt_transform(x, scales=None, w: Optional[SampledWavelet] = None, mode: str = "zero") -> Scalogram:
    """``W[i, tau] = sum_m k_i[m] x[tau + m]`` for every integer shift tau.

    ``mode="zero"`` pads with zeros; ``mode="periodic"`` wraps around.
    """
    values = as_series(x).values
    n = values.size
    if n < 4:
        raise TooShort("CWT needs at least 4 samples")
    if w is None:
        w = sampled_wavelet()
    if scales is None:
        # a dilated support narrower than two samples averages to zero
        scales = dyadic_scales(n, smallest=max(1.0, 2.0 / (w.t_end - w.t0)))
    else:
        scales = np.asarray(scales, dtype=float).reshape(-1)
    if scales.size == 0 or np.any(~np.isfinite(scales)) or np.any(scales <= 0):
        raise InvalidScales("scales must be positive")
    if np.any(np.diff(scales) <= 0):
        raise InvalidScales("scales must be strictly ascending")
    if mode not in ("zero", "periodic"):
        raise InvalidParams(f"unknown boundary mode {mode!r}")

    out = np.zeros((scales.size, n))
    for i, s in enumerate(scales):
        lo, k = _kernel(w, s)
        row = out[i]
        for j, coef in enumerate(k):
            if coef == 0.0:
                continue
            m = lo + j
            if mode == "periodic":
                row += coef * np.roll(values, -m)
            elif m >= 0:
                if m < n:
                    row[: n - m] += coef * values[m:]
            elif -m < n:
                row[-m:] += coef * values[: n + m]
    return Scalogram(out, scales, np.arange(n), w.family)
