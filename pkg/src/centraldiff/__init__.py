"""Closed-form central difference weights of arbitrary width.

The package builds exact weights for first and second derivatives on
2n+1 equidistant points, applies them to sampled signals (pointwise or
on a periodic grid, directly or through the FFT) and measures their
accuracy from the spectrum of the embedded kernel.
"""

__version__ = "0.1.0"

from .weights import (
    MAX_HALF_WIDTH,
    WeightSet,
    first_derivative_weights,
    limit_first_weight,
    pi_product,
    second_derivative_weights,
    top_odd_weights,
)
from .vandermonde import (
    first_minor_determinant,
    interpolant_derivative_oracle,
    solve_weight_system,
    system_determinant,
)
from .differentiator import (
    DifferentiatorKernel,
    differentiate_periodic,
    embed_kernel,
    first_derivative_at_center,
    odd_derivative_at_center,
    second_derivative_at_center,
    sin_demo_estimate,
)
from .spectral import (
    DeviationSeries,
    accuracy_bandwidth,
    dft,
    ideal_response,
    kernel_spectrum,
    spectral_differentiate,
    spectrum_deviation,
)
