"""Design of compactly supported orthonormal scaling filters.

These routines generate the coefficient tables embedded in
:mod:`wavechange._coefficients`.  They run in extended precision (mpmath) and
are slow compared with a table lookup, so the catalog never calls them at
import time; ``scripts/generate_coefficients.py`` does, and the test-suite
checks the embedded tables against fresh output.

Conventions: filters are causal, ``g[0] .. g[L-1]``, normalised so that
``sum(g) == sqrt(2)``.
"""

from __future__ import annotations

import itertools

import mpmath as mp
import numpy as np
from scipy.linalg import lstsq, null_space
from scipy.optimize import least_squares

DEFAULT_DPS = 60


def _halfband_y_roots(n_moments: int):
    # Daubechies polynomial P(y) = sum_k C(N-1+k, k) y^k with y = sin^2(w/2).
    coeffs = [mp.binomial(n_moments - 1 + k, k) for k in range(n_moments)]
    return mp.polyroots(coeffs[::-1], maxsteps=500, extraprec=4 * mp.mp.prec)


def _z_pair(y):
    # y = (2 - z - 1/z) / 4  ->  z^2 - (2 - 4y) z + 1 = 0
    b = 2 - 4 * y
    d = mp.sqrt(b * b - 4)
    z1, z2 = (b + d) / 2, (b - d) / 2
    return (z1, z2) if abs(z1) < 1 else (z2, z1)


def _root_groups(n_moments: int):
    """Inside-unit-circle roots of the spectral factor, grouped so that each
    group is closed under complex conjugation."""
    tiny = mp.mpf(10) ** (-mp.mp.dps // 2)
    inside = [_z_pair(y)[0] for y in _halfband_y_roots(n_moments)]
    groups, used = [], set()
    for i, z in enumerate(inside):
        if i in used:
            continue
        used.add(i)
        if abs(mp.im(z)) < tiny:
            groups.append([mp.re(z)])
            continue
        for k, w in enumerate(inside):
            if k not in used and abs(w - mp.conj(z)) < tiny:
                used.add(k)
                break
        groups.append([z, mp.conj(z)])
    return groups


def _expand(n_moments: int, roots):
    poly = [mp.mpc(1)]
    factors = [[1, 1]] * n_moments + [[1, -z] for z in roots]
    for a, b in factors:
        nxt = [mp.mpc(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += a * c
            nxt[i + 1] += b * c
        poly = nxt
    g = [mp.re(c) for c in poly]
    s = mp.fsum(g)
    return [c * mp.sqrt(2) / s for c in g]


def daubechies_scaling(n_moments: int, dps: int = DEFAULT_DPS) -> list:
    """Minimum-phase Daubechies scaling filter with ``n_moments`` vanishing
    moments (length ``2 * n_moments``)."""
    if n_moments < 1:
        raise ValueError("n_moments must be >= 1")
    with mp.workdps(dps):
        if n_moments == 1:
            return [1 / mp.sqrt(2), 1 / mp.sqrt(2)]
        roots = [z for grp in _root_groups(n_moments) for z in grp]
        return _expand(n_moments, roots)


def _nonlinear_phase(roots) -> float:
    """Max deviation of the phase of the spectral factor from its best
    linear fit over (0, pi)."""
    w = np.linspace(0.0, np.pi, 4097)
    e = np.exp(-1j * w)
    q = np.ones_like(e)
    for z in roots:
        q = q * (1.0 - complex(z) * e)
    q = q / q[0]
    theta = np.unwrap(np.angle(q))
    slope = np.dot(w, theta) / np.dot(w, w)
    return float(np.max(np.abs(theta - slope * w)))


def least_asymmetric_scaling(length: int, dps: int = DEFAULT_DPS) -> list:
    """Least-asymmetric scaling filter LA(length).

    Every conjugation-closed assignment of spectral-factor roots to the
    inside/outside of the unit circle is tried; the one whose phase is
    closest to linear wins.  A filter and its time reverse tie exactly, and
    the tie goes to the orientation whose largest coefficient comes first.
    """
    if length < 4 or length % 2:
        raise ValueError("length must be an even integer >= 4")
    n_moments = length // 2
    with mp.workdps(dps):
        groups = _root_groups(n_moments)
        candidates = []
        for choice in itertools.product((False, True), repeat=len(groups)):
            roots = []
            for flip, grp in zip(choice, groups):
                roots.extend(1 / z if flip else z for z in grp)
            dev = _nonlinear_phase(roots)
            g = _expand(n_moments, roots)
            peak = int(np.argmax(np.abs([float(c) for c in g])))
            candidates.append((dev, peak, g))
        best = min(c[0] for c in candidates)
        ties = [c for c in candidates if c[0] <= best + 1e-9]
        return min(ties, key=lambda c: c[1])[2]


# -- coiflets ---------------------------------------------------------------


def _coiflet_linear_system(order: int):
    """Moment conditions as rows A g = b (float64, row-normalised)."""
    length = 6 * order
    n = (np.arange(length) - 2 * order).astype(float)
    rows, rhs = [np.ones(length)], [np.sqrt(2.0)]
    for m in range(1, 2 * order):
        rows.append(n**m)
        rhs.append(0.0)
    sign = (-1.0) ** np.arange(length)
    for m in range(2 * order):
        rows.append(sign * n**m)
        rhs.append(0.0)
    a, b = np.array(rows), np.array(rhs)
    scale = np.linalg.norm(a, axis=1)
    return a / scale[:, None], b / scale


def coiflet_residuals(g, order: int) -> list:
    """Residuals of the equations defining a coiflet of the given order.

    With ``n = i - 2*order`` the index relative to the filter centre:
    ``sum g = sqrt(2)``; ``sum n^m g_n = 0`` for m = 1..2K-1 (scaling moments);
    ``sum (-1)^n n^m g_n = 0`` for m = 0..2K-1 (wavelet moments);
    ``sum g_n g_{n+2k} = delta_k`` for k = 0..3K-1 (orthonormality).
    Moment rows are divided by ``max|n|^m`` to keep them comparable.
    Works on floats or mpmath numbers.
    """
    length = 6 * order
    if len(g) != length:
        raise ValueError(f"coiflet of order {order} has length {length}")
    exact = isinstance(g[0], mp.mpf)
    n = [mp.mpf(i - 2 * order) if exact else float(i - 2 * order) for i in range(length)]
    span = max(abs(v) for v in n)
    sqrt2 = mp.sqrt(2) if exact else np.sqrt(2.0)
    res = [sum(g) - sqrt2]
    for m in range(1, 2 * order):
        res.append(sum(c * v**m for c, v in zip(g, n)) / span**m)
    for m in range(2 * order):
        res.append(sum((-1) ** i * c * v**m for i, (c, v) in enumerate(zip(g, n))) / span**m)
    for k in range(3 * order):
        res.append(sum(g[i] * g[i + 2 * k] for i in range(length - 2 * k)) - (1 if k == 0 else 0))
    return res


def coiflet_search(order: int, n_starts: int = 400, seed: int = 0, spread: float = 1.0) -> np.ndarray:
    """Float64 multistart search for the standard coiflet.

    The moment conditions are linear, so they are solved exactly and the
    orthonormality equations are solved over the remaining null space from
    random starting points.  Of all converged solutions the one with the
    largest centre tap ``g[2*order]`` is returned.
    """
    a, b = _coiflet_linear_system(order)
    length = 6 * order
    g_part = lstsq(a, b)[0]
    basis = null_space(a)

    def expand(z):
        return g_part + basis @ z

    def fun(z):
        g = expand(z)
        return np.array([np.dot(g[: length - 2 * k], g[2 * k:]) - (k == 0) for k in range(3 * order)])

    def jac(z):
        g = expand(z)
        rows = np.zeros((3 * order, length))
        for k in range(3 * order):
            rows[k, : length - 2 * k] += g[2 * k:]
            rows[k, 2 * k:] += g[: length - 2 * k]
        return rows @ basis

    rng = np.random.default_rng(seed)
    best = None
    for _ in range(n_starts):
        z0 = rng.normal(0.0, spread, basis.shape[1])
        sol = least_squares(fun, z0, jac=jac, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15)
        if np.max(np.abs(sol.fun)) > 1e-10:
            continue
        g = expand(sol.x)
        if best is None or g[2 * order] > best[2 * order] + 1e-9:
            best = g
    if best is None:
        raise RuntimeError(f"no coiflet of order {order} found in {n_starts} starts")
    return best


def coiflet_refine(g0, order: int, dps: int = DEFAULT_DPS, max_iter: int = 50) -> list:
    """Polish an approximate coiflet to ``dps`` digits by Gauss-Newton."""
    length = 6 * order
    with mp.workdps(dps + 20):
        g = [mp.mpf(float(c)) if not isinstance(c, mp.mpf) else c for c in g0]
        n = [i - 2 * order for i in range(length)]
        span = max(abs(v) for v in n)
        lin = [[mp.mpf(1)] * length]
        for m in range(1, 2 * order):
            lin.append([mp.mpf(v) ** m / span**m for v in n])
        for m in range(2 * order):
            lin.append([(-1) ** i * mp.mpf(v) ** m / span**m for i, v in enumerate(n)])
        tol = mp.mpf(10) ** (-dps - 5)
        for _ in range(max_iter):
            r = mp.matrix(coiflet_residuals(g, order))
            if max(abs(x) for x in r) < tol:
                break
            rows = [list(row) for row in lin]
            for k in range(3 * order):
                row = [mp.mpf(0)] * length
                for i in range(length - 2 * k):
                    row[i] += g[i + 2 * k]
                    row[i + 2 * k] += g[i]
                rows.append(row)
            jm = mp.matrix(rows)
            step = mp.lu_solve(jm.T * jm, -(jm.T * r))
            g = [c + step[i] for i, c in enumerate(g)]
        else:
            raise RuntimeError("coiflet refinement did not converge")
    return g
