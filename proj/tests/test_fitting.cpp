#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "nanofet/errors.hpp"
#include "nanofet/fitting.hpp"

using namespace nanofet;

namespace {

// independent closed-form OLS used as the oracle: raw power sums instead of
// the library's centered accumulation
LineFit ols_oracle(const std::vector<std::pair<double, double>>& pts) {
    const double n = static_cast<double>(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (const auto& [x, y] : pts) {
        const double r = y - fit.slope * x - fit.intercept;
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

const GapSeries kChannelSeries{
    {{1, 7.961}, {2, 7.393}, {5, 6.825}, {10, 6.571}, {20, 6.462}}, "channel"};

} // namespace

TEST_CASE("channel series extrapolates to the published estimate") {
    const FitResult fit = extrapolate_gap(kChannelSeries);

    // frozen oracle values (closed-form OLS on x = 1/N)
    CHECK(fit.g_infinity_ev == doctest::Approx(6.459117).epsilon(1e-6));
    CHECK(fit.amplitude_ev == doctest::Approx(1.576440).epsilon(1e-5));
    CHECK(fit.rms_residual_ev == doctest::Approx(0.0862521).epsilon(1e-4));

    std::vector<std::pair<double, double>> pts;
    for (const auto& [n, g] : kChannelSeries.observations) pts.emplace_back(1.0 / n, g);
    const LineFit oracle = ols_oracle(pts);
    CHECK(fit.g_infinity_ev == doctest::Approx(oracle.intercept).epsilon(1e-12));
    CHECK(fit.amplitude_ev == doctest::Approx(oracle.slope).epsilon(1e-12));
    CHECK(fit.rms_residual_ev == doctest::Approx(oracle.rms_residual).epsilon(1e-12));

    // consistent with the published 6.4 eV estimate
    CHECK(std::abs(fit.g_infinity_ev - 6.4) < 0.1);
    CHECK(fit.rms_residual_ev < 0.1);
}

TEST_CASE("constant series fits a flat line") {
    const FitResult fit = extrapolate_gap({{{1, 5.0}, {2, 5.0}, {4, 5.0}}, "flat"});
    CHECK(fit.g_infinity_ev == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(fit.amplitude_ev == doctest::Approx(0.0));
    CHECK(fit.rms_residual_ev == doctest::Approx(0.0));
}

TEST_CASE("two observations solve exactly") {
    const FitResult fit = extrapolate_gap({{{1, 8.0}, {2, 7.0}}, "pair"});
    CHECK(fit.g_infinity_ev == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(fit.amplitude_ev == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.rms_residual_ev == doctest::Approx(0.0));
}

TEST_CASE("exact 1/N data recovers both parameters") {
    GapSeries series;
    series.label = "synthetic";
    for (int n : {1, 2, 3, 5, 8, 13, 21})
        series.observations.emplace_back(n, 3.3 + 2.5 / n);
    const FitResult fit = extrapolate_gap(series);
    CHECK(std::abs(fit.g_infinity_ev - 3.3) < 1e-9);
    CHECK(std::abs(fit.amplitude_ev - 2.5) < 1e-9);
    CHECK(fit.rms_residual_ev < 1e-9);
}

TEST_CASE("reordering observations leaves the result bit-identical") {
    GapSeries shuffled = kChannelSeries;
    std::mt19937 rng(7);
    const FitResult base = extrapolate_gap(kChannelSeries);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(shuffled.observations.begin(), shuffled.observations.end(), rng);
        const FitResult fit = extrapolate_gap(shuffled);
        CHECK(fit.g_infinity_ev == base.g_infinity_ev);
        CHECK(fit.amplitude_ev == base.amplitude_ev);
        CHECK(fit.rms_residual_ev == base.rms_residual_ev);
    }
}

TEST_CASE("degenerate and invalid series are rejected") {
    CHECK_THROWS_AS(extrapolate_gap({{{3, 5.0}, {3, 6.0}}, "same-n"}), DegenerateFit);
    CHECK_THROWS_AS(extrapolate_gap({{{1, 5.0}}, "short"}), DegenerateFit);
    CHECK_THROWS_AS(extrapolate_gap({{{1, 5.0}, {-2, 6.0}}, "neg"}), InvalidArgument);
    CHECK_THROWS_AS(extrapolate_gap({{{1, 5.0}, {2, -6.0}}, "neg-gap"}), InvalidArgument);
    CHECK_THROWS_AS(extrapolate_gap({{{1, 5.0}, {1, 6.0}, {2, 7.0}}, "dup"}), InvalidArgument);
}

TEST_CASE("random lines: ols_line matches the oracle") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    std::uniform_real_distribution<double> noise(-0.05, 0.05);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = coef(rng), b = coef(rng);
        std::vector<std::pair<double, double>> pts;
        for (int i = 0; i < 12; ++i) {
            const double x = i * 0.37 + coef(rng) * 0.01;
            pts.emplace_back(x, a * x + b + noise(rng));
        }
        const LineFit fit = ols_line(pts);
        const LineFit oracle = ols_oracle(pts);
        CHECK(fit.slope == doctest::Approx(oracle.slope).epsilon(1e-9));
        CHECK(fit.intercept == doctest::Approx(oracle.intercept).epsilon(1e-9));
    }
}
