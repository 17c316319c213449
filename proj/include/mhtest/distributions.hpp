#pragma once

namespace mhtest {

/// Standard normal CDF, via erfc.
double normal_cdf(double z) noexcept;

/// 1 - Phi(z), computed without cancellation for large z.
double normal_upper_tail(double z) noexcept;

/// Inverse standard normal CDF.
///
/// P. J. Acklam's rational approximation (lower/central/upper regions,
/// relative error below 1.15e-9), followed by one Halley refinement step
/// against erfc. Returns -inf / +inf at 0 / 1 and NaN outside [0, 1].
double normal_quantile(double p) noexcept;

/// Upper tail of the chi-square law with `df` degrees of freedom.
double chi_square_upper_tail(double x, double df);

}  // namespace mhtest
