"""circwin: continuous window functions from the von Mises circular distribution.

Window families (rectangular, generalized cosine, cosine-tip, Kaiser,
von Mises) on a continuous support, their spectra by independent routes
(numerical transform, exact series, closed-form candidates), spectral
figures of merit, and a verification engine that measures the routes
against each other.
"""

from .circular import (
    FULL_CYCLE,
    HALF_CYCLE,
    ScaledCircularParams,
    VonMisesParams,
    scaled_pdf,
    vm_cdf_numeric,
    vm_cdf_paper_series,
    vm_circular_variance,
    vm_pdf,
    vm_pdf_periodic,
    wrap_angle,
)
from .metrics import (
    MetricSearchError,
    UndefinedMetricError,
    WindowMetrics,
    coherent_gain,
    compute_metrics,
    enbw,
    first_null,
    mainlobe_width,
    peak_sidelobe,
)
from .special import (
    ConvergenceError,
    SeriesTruncation,
    bessel_i,
    bessel_i_scaled,
    log_gamma,
    rect,
    sa,
)
from .spectra import (
    ROUTES,
    SpectrumPoint,
    cardinal_reconstruct,
    causal_spectrum,
    cosine_tip_spectrum,
    ctft_quadrature,
    general_cosine_spectrum,
    kaiser_spectrum,
    rect_spectrum,
    spectrum_points,
    spectrum_value,
    vonmises_spectrum_closed,
    vonmises_spectrum_series,
)
from .verify import SUBJECTS, VerificationReport, WorstPoint, run_verification
from .windows import (
    CAUSAL,
    CENTERED,
    FAMILIES,
    SampledWindow,
    WindowSpec,
    evaluate,
    profile,
    sample,
)

__version__ = "0.1.0"

__all__ = [
    "CAUSAL",
    "CENTERED",
    "ConvergenceError",
    "FAMILIES",
    "FULL_CYCLE",
    "HALF_CYCLE",
    "MetricSearchError",
    "ROUTES",
    "SUBJECTS",
    "SampledWindow",
    "ScaledCircularParams",
    "SeriesTruncation",
    "SpectrumPoint",
    "UndefinedMetricError",
    "VerificationReport",
    "VonMisesParams",
    "WindowMetrics",
    "WindowSpec",
    "WorstPoint",
    "bessel_i",
    "bessel_i_scaled",
    "cardinal_reconstruct",
    "causal_spectrum",
    "coherent_gain",
    "compute_metrics",
    "cosine_tip_spectrum",
    "ctft_quadrature",
    "enbw",
    "evaluate",
    "first_null",
    "general_cosine_spectrum",
    "kaiser_spectrum",
    "log_gamma",
    "mainlobe_width",
    "peak_sidelobe",
    "profile",
    "rect",
    "rect_spectrum",
    "run_verification",
    "sa",
    "sample",
    "scaled_pdf",
    "spectrum_points",
    "spectrum_value",
    "vm_cdf_numeric",
    "vm_cdf_paper_series",
    "vm_circular_variance",
    "vm_pdf",
    "vm_pdf_periodic",
    "vonmises_spectrum_closed",
    "vonmises_spectrum_series",
    "wrap_angle",
]
