#ifndef NANOFET_FITTING_HPP
#define NANOFET_FITTING_HPP

#include <string>
#include <utility>
#include <vector>

namespace nanofet {

/// y = slope * x + intercept. rms_residual = sqrt(mean squared residual),
/// population convention (divide by the point count).
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

/// Closed-form ordinary least squares. Points are sorted internally before
/// accumulation, so the result is bit-identical under input permutation.
/// Throws DegenerateFit when fewer than two points or all x equal.
LineFit ols_line(std::vector<std::pair<double, double>> points);

/// Finite-length gap observations (repeat_units, gap_eV).
struct GapSeries {
    std::vector<std::pair<int, double>> observations;
    std::string label;
};

/// Extrapolation under g(N) = g_inf + A/N.
struct FitResult {
    double g_infinity_ev = 0.0;
    double amplitude_ev = 0.0;
    double rms_residual_ev = 0.0;
};

/// OLS of gap against 1/N. Validates the series (positive unique repeat
/// counts, positive gaps, >= 2 observations).
FitResult extrapolate_gap(const GapSeries& series);

} // namespace nanofet

#endif
