"""Wavelet filters, transforms and variance change-point testing."""

__version__ = "0.1.0"

from .changepoint import (  # noqa: E402
    ChangePointReport,
    MonteCarloConfig,
    critical_value,
    cusum_statistic,
    detect_changepoints,
    nonboundary_range,
)
from .cwt import check_admissibility, cwt_transform, sampled_wavelet  # noqa: E402
from .dwt import align_coefficients, dwt, idwt, mra  # noqa: E402
from .errors import *  # noqa: E402,F401,F403
from .filters import FilterPair, filter_catalog, get_filter, validate_filter  # noqa: E402
from .preprocess import TimeSeries, first_difference, fit_linear_trend, truncate_to_dyadic  # noqa: E402
from .spectral import periodogram  # noqa: E402
from .synthetic import generate_synthetic  # noqa: E402
