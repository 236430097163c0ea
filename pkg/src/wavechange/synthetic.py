"""Deterministic test signals."""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import InvalidParams
from .preprocess import TimeSeries


class SignalKind(str, Enum):
    SINUSOIDS = "sinusoids"
    VARSHIFT = "varshift"
    DISCONTINUITY = "discontinuity"


def _finite(name, values):
    arr = np.asarray(values, dtype=float).reshape(-1)
    if not np.all(np.isfinite(arr)):
        raise InvalidParams(f"{name} must be finite")
    return arr


def generate_synthetic(
    kind,
    n: int = 1024,
    seed: int = 0,
    *,
    frequencies=(3.0, 0.3, 0.03),
    amplitudes=(1.0, 1.0, 1.0),
    sigma=(1.0, 3.0),
    change=None,
    location=None,
    decay: float = 20.0,
    jump: float = 1.0,
    noise: float = 0.0,
) -> TimeSeries:
    """Build a test signal on t = 0..n-1.

    ``sinusoids``
        sum of ``a * sin(w t)`` over ``amplitudes`` and angular ``frequencies``.
    ``varshift``
        Gaussian noise with std ``sigma[0]`` before index ``change`` (default
        n/2) and ``sigma[1]`` from it on; n must be a power of two.
    ``discontinuity``
        zero before ``location`` (default n/2), then
        ``jump * exp(-(t - location)/decay)``, plus optional Gaussian ``noise``.
    """
    try:
        kind = SignalKind(kind)
    except ValueError:
        raise InvalidParams(f"unknown signal kind {kind!r}") from None
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 4:
        raise InvalidParams("n must be an integer >= 4")
    rng = np.random.default_rng(seed)
    t = np.arange(n, dtype=float)

    if kind is SignalKind.SINUSOIDS:
        w = _finite("frequencies", frequencies)
        a = _finite("amplitudes", amplitudes)
        if w.size != a.size:
            raise InvalidParams("frequencies and amplitudes differ in length")
        return TimeSeries(np.sin(np.outer(t, w)) @ a)

    if kind is SignalKind.VARSHIFT:
        if n & (n - 1):
            raise InvalidParams(f"n={n} is not a power of two")
        s = _finite("sigma", sigma)
        if s.size != 2 or np.any(s <= 0):
            raise InvalidParams("sigma must be two positive numbers")
        k = n // 2 if change is None else change
        if not 1 <= k <= n - 1:
            raise InvalidParams(f"change index {k} outside 1..{n - 1}")
        z = rng.standard_normal(n)
        return TimeSeries(np.where(t < k, s[0], s[1]) * z)

    loc = n // 2 if location is None else location
    if not 0 <= loc < n:
        raise InvalidParams(f"location {loc} outside 0..{n - 1}")
    _finite("jump", [jump, decay, noise])
    if decay <= 0 or noise < 0:
        raise InvalidParams("decay must be positive and noise non-negative")
    x = np.where(t >= loc, jump * np.exp(-(t - loc) / decay), 0.0)
    if noise:
        x = x + noise * rng.standard_normal(n)
    return TimeSeries(x)
