"""Monthly time series, linear-trend fitting, differencing and truncation."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.special import betainc

from .errors import InvalidParams, TargetTooLarge, TooShort

P_VALUE_FLOOR = 1e-300

_MONTH = re.compile(r"^(\d{4})-(\d{2})$")


def parse_month(label: str) -> tuple[int, int]:
    m = _MONTH.match(label)
    if not m or not 1 <= int(m.group(2)) <= 12:
        raise ValueError(f"not a YYYY-MM month: {label!r}")
    return int(m.group(1)), int(m.group(2))


def shift_month(label: str, k: int) -> str:
    year, month = parse_month(label)
    idx = year * 12 + (month - 1) + k
    return f"{idx // 12:04d}-{idx % 12 + 1:02d}"


@dataclass
class TimeSeries:
    """Ordered real samples, optionally anchored to a starting calendar month.

    Samples are monthly and consecutive, so the labels are implied by
    ``start_label`` alone.
    """

    values: np.ndarray
    start_label: Optional[str] = None

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float).reshape(-1)
        if self.values.size == 0:
            raise TooShort("a time series needs at least one sample")
        if self.start_label is not None:
            parse_month(self.start_label)

    def __len__(self):
        return self.values.size

    @property
    def labels(self) -> Optional[list[str]]:
        if self.start_label is None:
            return None
        return [shift_month(self.start_label, k) for k in range(len(self))]

    def label_at(self, index: int) -> Optional[str]:
        if self.start_label is None:
            return None
        return shift_month(self.start_label, int(index))

    def with_values(self, values, offset: int = 0) -> "TimeSeries":
        """New series whose first sample sits ``offset`` months after ours."""
        start = None if self.start_label is None else shift_month(self.start_label, offset)
        return TimeSeries(values, start)


def as_series(x) -> TimeSeries:
    if isinstance(x, TimeSeries):
        return x
    return TimeSeries(np.asarray(x, dtype=float))


@dataclass
class TrendFit:
    beta0: float
    beta1: float
    stderr0: float
    stderr1: float
    p0: float
    p1: float
    sigma: float
    dof: int
    residuals: np.ndarray = field(repr=False)

    @property
    def fitted(self) -> np.ndarray:
        t = np.arange(1, self.residuals.size + 1, dtype=float)
        return self.beta0 + self.beta1 * t

    def to_dict(self) -> dict:
        return {
            "beta0": self.beta0,
            "beta1": self.beta1,
            "stderr0": self.stderr0,
            "stderr1": self.stderr1,
            "p0": self.p0,
            "p1": self.p1,
            "sigma": self.sigma,
            "dof": self.dof,
        }


def _two_sided_p(tstat: float, dof: int) -> float:
    # P(|T| > t) for Student t with `dof` degrees of freedom = I_{dof/(dof+t^2)}(dof/2, 1/2)
    if np.isinf(tstat):
        return P_VALUE_FLOOR
    p = float(betainc(dof / 2.0, 0.5, dof / (dof + tstat * tstat)))
    return max(p, P_VALUE_FLOOR)


def fit_linear_trend(x) -> TrendFit:
    """Ordinary least squares of the samples on t = 1..N.

    p-values are two-sided, from the t distribution with N - 2 degrees of
    freedom, floored at 1e-300.
    """
    y = as_series(x).values
    n = y.size
    if n < 3:
        raise TooShort("trend fitting needs at least 3 samples")
    t = np.arange(1, n + 1, dtype=float)
    tbar, ybar = t.mean(), y.mean()
    sxx = float(np.sum((t - tbar) ** 2))
    beta1 = float(np.sum((t - tbar) * (y - ybar)) / sxx)
    beta0 = float(ybar - beta1 * tbar)
    resid = y - (beta0 + beta1 * t)
    dof = n - 2
    sigma = float(np.sqrt(np.sum(resid**2) / dof))
    se1 = sigma / np.sqrt(sxx)
    se0 = sigma * np.sqrt(1.0 / n + tbar**2 / sxx)
    with np.errstate(divide="ignore", invalid="ignore"):
        t0 = np.inf if se0 == 0 else beta0 / se0
        t1 = np.inf if se1 == 0 else beta1 / se1
    return TrendFit(
        beta0=beta0,
        beta1=beta1,
        stderr0=float(se0),
        stderr1=float(se1),
        p0=_two_sided_p(abs(t0), dof),
        p1=_two_sided_p(abs(t1), dof),
        sigma=sigma,
        dof=dof,
        residuals=resid,
    )


def first_difference(x, demean: bool = False) -> TimeSeries:
    """r(t) = x(t) - x(t-1); labelled by the later month of each pair."""
    s = as_series(x)
    if len(s) < 2:
        raise TooShort("differencing needs at least 2 samples")
    r = np.diff(s.values)
    if demean:
        r = r - r.mean()
    return s.with_values(r, offset=1)


def truncate_to_dyadic(x, target: int) -> TimeSeries:
    """Keep the newest ``target`` samples (a power of two), dropping the oldest."""
    s = as_series(x)
    if target < 1 or target & (target - 1):
        raise InvalidParams(f"target length {target} is not a power of two")
    if target > len(s):
        raise TargetTooLarge(f"cannot keep {target} samples of a {len(s)}-sample series")
    drop = len(s) - target
    return s.with_values(s.values[drop:], offset=drop)


def largest_dyadic(n: int) -> int:
    if n < 1:
        raise TooShort("empty series")
    return 1 << (n.bit_length() - 1)
