"""End-to-end analysis: ingest, trend fit, preprocessing, change-point tests."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import __version__
from .changepoint import ChangePointReport, MonteCarloConfig, detect_changepoints
from .dwt import dwt
from .errors import InsufficientData, InvalidParams
from .filters import get_filter
from .io import file_digest, read_monthly_csv
from .preprocess import TimeSeries, first_difference, fit_linear_trend, largest_dyadic, truncate_to_dyadic

SCHEMA_VERSION = "1.0"


@dataclass(frozen=True)
class AnalysisConfig:
    input: str
    wavelet: str = "la8"
    depth: int = 4
    alpha: float = 0.05
    mode: str = "diff"
    demean: bool = True
    mc_seed: int = 20200901
    mc_replicates: int = 100_000
    workers: int = 1
    correction: str = "none"
    output: Optional[str] = None

    def __post_init__(self):
        if not 0.0 < self.alpha < 0.5:
            raise InvalidParams("alpha must lie in (0, 0.5)")
        if self.depth < 1:
            raise InvalidParams("depth must be >= 1")
        if self.mc_replicates < 10_000:
            raise InvalidParams("mc_replicates must be >= 10,000")
        if self.mode not in ("diff", "detrend"):
            raise InvalidParams(f"unknown preprocessing mode {self.mode!r}")
        if self.correction not in ("none", "bonferroni"):
            raise InvalidParams(f"unknown correction {self.correction!r}")
        get_filter(self.wavelet)

    def monte_carlo(self, cache_dir: Optional[str] = None) -> MonteCarloConfig:
        return MonteCarloConfig(self.mc_replicates, self.mc_seed, self.workers, cache_dir)

    def echo(self) -> dict:
        # the output path does not influence the analysis
        d = asdict(self)
        d.pop("output")
        return d


@dataclass
class AnalysisReport:
    schema_version: str
    tool_version: str
    input: dict
    config: dict
    trend: dict
    preprocessing: dict
    changepoints: list = field(default_factory=list)
    skipped_levels: list = field(default_factory=list)
    energy_fractions: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["changepoints"] = [c.to_dict() if isinstance(c, ChangePointReport) else dict(c) for c in self.changepoints]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisReport":
        d = dict(d)
        d["changepoints"] = [ChangePointReport.from_dict(c) for c in d.get("changepoints", [])]
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))


def prepare_series(raw: TimeSeries, mode: str = "diff", demean: bool = True) -> tuple[TimeSeries, dict]:
    """Difference (or detrend), keep the newest power-of-two samples, demean."""
    if mode == "diff":
        y = first_difference(raw)
    elif mode == "detrend":
        y = raw.with_values(fit_linear_trend(raw).residuals)
    else:
        raise InvalidParams(f"unknown preprocessing mode {mode!r}")
    target = largest_dyadic(len(y))
    z = truncate_to_dyadic(y, target)
    mean = float(z.values.mean())
    if demean:
        z = z.with_values(z.values - mean)
    info = {
        "mode": mode,
        "demean": demean,
        "removed_mean": mean if demean else 0.0,
        "dropped_oldest": len(y) - target,
        "analysed_length": target,
        "first_month": z.start_label,
        "last_month": z.label_at(len(z) - 1),
    }
    return z, info


def run_analyze(cfg: AnalysisConfig, cache_dir: Optional[str] = None) -> AnalysisReport:
    raw = read_monthly_csv(cfg.input)
    trend = fit_linear_trend(raw)
    series, prep = prepare_series(raw, cfg.mode, cfg.demean)
    if len(series) < (1 << cfg.depth):
        raise InsufficientData(f"{len(series)} samples cannot support a depth-{cfg.depth} transform")
    f = get_filter(cfg.wavelet)
    reports = detect_changepoints(
        series, f, cfg.depth, cfg.alpha, cfg.monte_carlo(cache_dir), correction=cfg.correction
    )
    tested = {r.level for r in reports}
    coeffs = dwt(series, f, cfg.depth)
    energies = coeffs.level_energies()
    total = sum(energies.values())
    fractions = {k: (v / total if total > 0 else 0.0) for k, v in sorted(energies.items())}
    return AnalysisReport(
        schema_version=SCHEMA_VERSION,
        tool_version=__version__,
        input={
            "path": str(cfg.input),
            "sha256": file_digest(cfg.input),
            "n_samples": len(raw),
            "first_month": raw.start_label,
            "last_month": raw.label_at(len(raw) - 1),
        },
        config=cfg.echo(),
        trend=trend.to_dict(),
        preprocessing=prep,
        changepoints=reports,
        skipped_levels=[j for j in range(1, cfg.depth + 1) if j not in tested],
        energy_fractions=fractions,
    )
