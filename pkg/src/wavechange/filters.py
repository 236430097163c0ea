"""Orthonormal wavelet filter pairs: catalog, QMF construction and checks."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._coefficients import SCALING_FILTERS
from .errors import UnsupportedFilter


class Family(str, Enum):
    HAAR = "haar"
    DAUBECHIES = "daubechies"
    LEAST_ASYMMETRIC = "least_asymmetric"
    COIFLET = "coiflet"


_PREFIX = {
    Family.HAAR: "haar",
    Family.DAUBECHIES: "db",
    Family.LEAST_ASYMMETRIC: "la",
    Family.COIFLET: "coif",
}


@dataclass(frozen=True, eq=False)
class FilterPair:
    """Scaling filter ``g`` and wavelet filter ``h`` of one orthonormal wavelet.

    ``order`` is the catalog order: vanishing moments for Daubechies,
    filter length for least-asymmetric, K for coiflets (length 6K).
    """

    g: np.ndarray
    h: np.ndarray
    family: Family
    order: int
    vanishing_moments: int

    def __post_init__(self):
        for name in ("g", "h"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def length(self) -> int:
        return len(self.g)

    @property
    def name(self) -> str:
        if self.family is Family.HAAR:
            return "haar"
        return f"{_PREFIX[self.family]}{self.order}"

    def __eq__(self, other):
        if not isinstance(other, FilterPair):
            return NotImplemented
        return (
            self.family == other.family
            and self.order == other.order
            and np.array_equal(self.g, other.g)
            and np.array_equal(self.h, other.h)
        )

    def __hash__(self):
        return hash((self.family, self.order, self.g.tobytes()))

    def __repr__(self):
        return f"FilterPair({self.name}, L={self.length})"


def qmf_from_scaling(g) -> np.ndarray:
    """Quadrature mirror: ``h[n] = (-1)**n * g[L-1-n]``."""
    g = np.asarray(g, dtype=float)
    if g.ndim != 1 or g.size == 0:
        raise ValueError("scaling filter must be a non-empty 1-d sequence")
    signs = np.where(np.arange(g.size) % 2 == 0, 1.0, -1.0)
    return signs * g[::-1]


def supported_filters() -> list[tuple[Family, int]]:
    """Every (family, order) combination the catalog can build."""
    out = [(Family.HAAR, 1)]
    for fam, order in SCALING_FILTERS:
        out.append((Family(fam), order))
    return out


def _normalise_family(family) -> Family:
    if isinstance(family, Family):
        return family
    aliases = {"db": "daubechies", "la": "least_asymmetric", "sym": "least_asymmetric", "coif": "coiflet"}
    key = str(family).lower()
    try:
        return Family(aliases.get(key, key))
    except ValueError:
        raise UnsupportedFilter(f"unknown wavelet family {family!r}") from None


@lru_cache(maxsize=None)
def _build(family: Family, order: int) -> FilterPair:
    if family is Family.HAAR:
        if order != 1:
            raise UnsupportedFilter("haar only exists with order 1")
        g = np.full(2, 1.0 / np.sqrt(2.0))
        moments = 1
    elif family is Family.DAUBECHIES and order == 1:
        return _build(Family.HAAR, 1)
    else:
        try:
            g = np.array(SCALING_FILTERS[(family.value, order)], dtype=float)
        except KeyError:
            raise UnsupportedFilter(f"{family.value} of order {order} is not in the catalog") from None
        moments = {
            Family.DAUBECHIES: order,
            Family.LEAST_ASYMMETRIC: order // 2,
            Family.COIFLET: 2 * order,
        }[family]
    return FilterPair(g=g, h=qmf_from_scaling(g), family=family, order=order, vanishing_moments=moments)


def filter_catalog(family, order: int = 1) -> FilterPair:
    """Look up a filter pair, e.g. ``filter_catalog("daubechies", 4)`` or
    ``filter_catalog("least_asymmetric", 8)``."""
    fam = _normalise_family(family)
    if isinstance(order, bool) or not isinstance(order, (int, np.integer)):
        raise UnsupportedFilter(f"order must be an integer, got {order!r}")
    return _build(fam, int(order))


def get_filter(name) -> FilterPair:
    """Resolve a short name ("haar", "db4", "la8", "coif3") or a FilterPair."""
    if isinstance(name, FilterPair):
        return name
    m = re.fullmatch(r"\s*(haar|db|la|sym|coif)(\d*)\s*", str(name).lower())
    if not m:
        raise UnsupportedFilter(f"cannot parse wavelet name {name!r}")
    fam, digits = m.groups()
    if fam == "haar":
        if digits not in ("", "1"):
            raise UnsupportedFilter(f"cannot parse wavelet name {name!r}")
        return filter_catalog(Family.HAAR, 1)
    if not digits:
        raise UnsupportedFilter(f"wavelet name {name!r} needs an order")
    return filter_catalog(fam, int(digits))


# -- validation -------------------------------------------------------------


@dataclass
class Check:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.residual) and self.residual <= self.tolerance)


@dataclass
class ValidationReport:
    filter_name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max(c.residual for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "filter": self.filter_name,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "residual": c.residual, "tolerance": c.tolerance, "passed": c.passed}
                for c in self.checks
            ],
        }


def _even_shift_products(a: np.ndarray, b: np.ndarray) -> dict[int, float]:
    """sum_n a[n] b[n + 2m] for every m where the product is non-trivial."""
    n = len(a)
    out = {}
    for m in range(-(n // 2), n // 2 + 1):
        s = 2 * m
        if s >= 0:
            out[m] = float(np.dot(a[: n - s], b[s:])) if s < n else 0.0
        else:
            out[m] = float(np.dot(a[-s:], b[: n + s])) if -s < n else 0.0
    return out


def validate_filter(f: FilterPair) -> ValidationReport:
    """Measure each filter-pair invariant; failures are reported, not raised."""
    g = np.asarray(f.g, dtype=float)
    h = np.asarray(f.h, dtype=float)
    report = ValidationReport(getattr(f, "name", "custom"))
    add = report.checks.append

    same_len = len(g) == len(h) and len(g) % 2 == 0 and len(g) > 0
    add(Check("even_length", 0.0 if same_len else np.inf, 0.0))
    if not same_len:
        return report

    add(Check("sum_g_sqrt2", abs(g.sum() - np.sqrt(2.0)), 1e-12))
    add(Check("unit_energy_g", abs(np.dot(g, g) - 1.0), 1e-12))
    add(Check("unit_energy_h", abs(np.dot(h, h) - 1.0), 1e-12))
    ortho = _even_shift_products(g, g)
    add(Check("even_shift_orthonormality", max(abs(v - (m == 0)) for m, v in ortho.items()), 1e-10))
    cross = _even_shift_products(g, h)
    add(Check("cross_orthogonality", max(abs(v) for v in cross.values()), 1e-10))
    qmf = qmf_from_scaling(g)
    add(Check("qmf_relation", float(np.max(np.abs(h - qmf))), 0.0))
    moments = getattr(f, "vanishing_moments", 1)
    add(Check(f"vanishing_moments_0..{moments - 1}", _moment_residual(h, moments), 1e-8))
    return report


def _moment_residual(h: np.ndarray, moments: int) -> float:
    # Moments about the filter midpoint, summed exactly: raw n**9 terms for a
    # length-20 filter would swamp float64 rounding.  Vanishing of moments
    # 0..N-1 does not depend on the origin.
    centre = Fraction(len(h) - 1, 2)
    taps = [Fraction(float(x)) for x in h]
    worst = 0.0
    for m in range(moments):
        total = sum(t * (n - centre) ** m for n, t in enumerate(taps))
        worst = max(worst, abs(float(total)))
    return worst


def frequency_response(filt, n_points: int = 1024) -> tuple[np.ndarray, np.ndarray]:
    """``|F(nu)|`` with ``F(nu) = sum_n f_n exp(-2j pi nu n)`` on a uniform
    grid of ``n_points`` frequencies spanning [0, 1/2].

    Returns ``(nu, magnitude)``.
    """
    if n_points < 2:
        raise ValueError("n_points must be >= 2")
    f = np.asarray(filt, dtype=float)
    nu = np.linspace(0.0, 0.5, n_points)
    phase = np.exp(-2j * np.pi * np.outer(nu, np.arange(f.size)))
    return nu, np.abs(phase @ f)
