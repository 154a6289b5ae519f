#pragma once

#include <span>

namespace infogeo {

/// Pairwise (cascade) summation with a fixed split order, so the result
/// does not depend on how the caller produced the values.
double pairwise_sum(std::span<const double> values);

/// Composite Simpson rule over uniformly spaced samples f_0..f_n with
/// spacing h. Even n uses plain Simpson; odd n >= 3 closes the last three
/// panels with Simpson's 3/8 rule; n = 1 falls back to the trapezoid rule.
/// Zero samples or a single sample integrate to 0.
double composite_simpson(std::span<const double> values, double h);

}  // namespace infogeo
