"""Pyramid DWT / inverse DWT with periodic boundaries, and the MRA built on it.

Index convention follows the filter-bank recursion

    u_j(n) = sum_l g_l u_{j-1}(2n + l),    w_j(n) = sum_l h_l u_{j-1}(2n + l)

with indices taken modulo the length of ``u_{j-1}``.  Starting from
``u_0 = x`` each level costs O(L N_j), so a J-level transform is O(L N).
Because of the forward indexing, the coefficients touched by wrap-around
sit at the *end* of each level.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import FilterMismatch, LengthNotDivisible
from .filters import FilterPair, get_filter
from .preprocess import as_series

DEFAULT_DEPTH = 4


@dataclass
class DwtCoefficients:
    """Wavelet coefficients ``w[0]`` (level 1) .. ``w[J-1]`` (level J) and the
    level-J scale coefficients ``u``."""

    w: list
    u: np.ndarray
    J: int
    n: int
    filter_id: str
    aligned: bool = False
    shifts: dict = field(default_factory=dict)

    def level(self, j: int) -> np.ndarray:
        if not 1 <= j <= self.J:
            raise IndexError(f"level {j} outside 1..{self.J}")
        return self.w[j - 1]

    def concatenated(self) -> np.ndarray:
        """``[u_J | w_J | ... | w_1]``, the usual single-trace plot layout."""
        return np.concatenate([self.u] + [self.w[j] for j in range(self.J - 1, -1, -1)])

    def level_energies(self) -> dict:
        out = {f"w{j + 1}": float(np.dot(v, v)) for j, v in enumerate(self.w)}
        out[f"u{self.J}"] = float(np.dot(self.u, self.u))
        return out

    def energy(self) -> float:
        return float(sum(self.level_energies().values()))

    def check(self):
        for j, v in enumerate(self.w, start=1):
            if len(v) != self.n >> j:
                raise ValueError(f"level {j} has {len(v)} coefficients, expected {self.n >> j}")
        if len(self.u) != self.n >> self.J:
            raise ValueError("scale coefficients have the wrong length")


@dataclass
class MraDecomposition:
    details: list
    smooth: np.ndarray
    filter_id: str

    @property
    def J(self) -> int:
        return len(self.details)

    def reconstruct(self) -> np.ndarray:
        return self.smooth + np.sum(self.details, axis=0)


def _check_length(n: int, J: int):
    if J < 1:
        raise ValueError("depth J must be >= 1")
    if n == 0 or n % (1 << J):
        raise LengthNotDivisible(f"length {n} is not divisible by 2**{J}")


def analysis_step(u: np.ndarray, f: FilterPair) -> tuple[np.ndarray, np.ndarray]:
    """One pyramid level: returns (scale, wavelet) coefficients, each half length."""
    n = u.size
    base = 2 * np.arange(n // 2)
    lo = np.zeros(n // 2)
    hi = np.zeros(n // 2)
    for tap, (gl, hl) in enumerate(zip(f.g, f.h)):
        seg = u[(base + tap) % n]
        lo += gl * seg
        hi += hl * seg
    return lo, hi


def synthesis_step(lo: np.ndarray, hi: np.ndarray, f: FilterPair) -> np.ndarray:
    """Transpose of :func:`analysis_step` (its inverse, by orthonormality)."""
    n = 2 * lo.size
    base = 2 * np.arange(lo.size)
    out = np.zeros(n)
    for tap, (gl, hl) in enumerate(zip(f.g, f.h)):
        # (base + tap) % n has no repeats for a fixed tap, so += is safe
        out[(base + tap) % n] += gl * lo + hl * hi
    return out


def dwt(x, f, J: int = DEFAULT_DEPTH) -> DwtCoefficients:
    f = get_filter(f)
    u = as_series(x).values.copy()
    n = u.size
    _check_length(n, J)
    w = []
    for _ in range(J):
        u, wj = analysis_step(u, f)
        w.append(wj)
    return DwtCoefficients(w=w, u=u, J=J, n=n, filter_id=f.name)


def idwt(c: DwtCoefficients, f) -> np.ndarray:
    f = get_filter(f)
    if c.filter_id != f.name:
        raise FilterMismatch(f"coefficients came from {c.filter_id}, not {f.name}")
    c = unalign_coefficients(c, f)
    c.check()
    u = np.asarray(c.u, dtype=float)
    for j in range(c.J, 0, -1):
        u = synthesis_step(u, np.asarray(c.w[j - 1], dtype=float), f)
    return u


def mra(x, f, J: int = DEFAULT_DEPTH) -> MraDecomposition:
    """Details D_1..D_J and smooth S_J, each the synthesis of one coefficient
    band alone; they sum to the input."""
    f = get_filter(f)
    c = dwt(x, f, J)
    zeros_w = [np.zeros_like(v) for v in c.w]
    details = []
    for j in range(c.J):
        w = list(zeros_w)
        w[j] = c.w[j]
        details.append(idwt(replace(c, w=w, u=np.zeros_like(c.u)), f))
    smooth = idwt(replace(c, w=zeros_w), f)
    return MraDecomposition(details=details, smooth=smooth, filter_id=f.name)


# -- phase alignment --------------------------------------------------------


def _upsample(h: np.ndarray, factor: int) -> np.ndarray:
    out = np.zeros((len(h) - 1) * factor + 1)
    out[::factor] = h
    return out


def equivalent_filters(f, j: int) -> tuple[np.ndarray, np.ndarray]:
    """Level-j equivalent (scaling, wavelet) filters acting on the input,
    each of length (2**j - 1)(L - 1) + 1."""
    f = get_filter(f)
    g_eq = np.array([1.0])
    for level in range(1, j):
        g_eq = np.convolve(g_eq, _upsample(f.g, 1 << (level - 1)))
    h_eq = np.convolve(g_eq, _upsample(f.h, 1 << (j - 1)))
    g_eq = np.convolve(g_eq, _upsample(f.g, 1 << (j - 1)))
    return g_eq, h_eq


def group_delay(f, j: int, kind: str = "wavelet") -> float:
    """Energy centroid of the level-j equivalent filter, in input samples.

    Coefficient n of level j is centred near input sample ``2**j * n + delay``.
    """
    g_eq, h_eq = equivalent_filters(f, j)
    filt = h_eq if kind == "wavelet" else g_eq
    e = filt**2
    return float(np.dot(np.arange(filt.size), e) / e.sum())


def alignment_shift(f, j: int, kind: str = "wavelet") -> int:
    return int(np.floor(group_delay(f, j, kind) / (1 << j) + 0.5))


def align_coefficients(c: DwtCoefficients, f) -> DwtCoefficients:
    """Circularly shift every band so that coefficient m sits near input time
    ``2**j * m``.  Applying it to already aligned coefficients is a no-op."""
    if c.aligned:
        return c
    f = get_filter(f)
    if c.filter_id != f.name:
        raise FilterMismatch(f"coefficients came from {c.filter_id}, not {f.name}")
    shifts = {f"w{j}": alignment_shift(f, j) for j in range(1, c.J + 1)}
    shifts[f"u{c.J}"] = alignment_shift(f, c.J, "scaling")
    w = [np.roll(v, shifts[f"w{j + 1}"]) for j, v in enumerate(c.w)]
    u = np.roll(c.u, shifts[f"u{c.J}"])
    return replace(c, w=w, u=u, aligned=True, shifts=shifts)


def unalign_coefficients(c: DwtCoefficients, f) -> DwtCoefficients:
    if not c.aligned:
        return c
    w = [np.roll(v, -c.shifts[f"w{j + 1}"]) for j, v in enumerate(c.w)]
    u = np.roll(c.u, -c.shifts[f"u{c.J}"])
    return replace(c, w=w, u=u, aligned=False, shifts={})
