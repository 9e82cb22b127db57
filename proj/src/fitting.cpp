#include "nanofet/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nanofet/errors.hpp"

namespace nanofet {

LineFit ols_line(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2)
        throw DegenerateFit("need at least two points, got " + std::to_string(points.size()));
    std::sort(points.begin(), points.end());
    if (points.front().first == points.back().first)
        throw DegenerateFit("all abscissae equal; the line is undetermined");

    const double n = static_cast<double>(points.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }

    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (const auto& [x, y] : points) {
        const double r = y - (fit.slope * x + fit.intercept);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

FitResult extrapolate_gap(const GapSeries& series) {
    if (series.observations.size() < 2)
        throw DegenerateFit("gap series needs at least two observations");

    bool all_equal = true;
    for (const auto& [n, gap] : series.observations) {
        if (n <= 0) throw InvalidArgument("repeat_units must be positive, got " + std::to_string(n));
        if (!(gap > 0.0)) throw InvalidArgument("gaps must be positive");
        if (n != series.observations.front().first) all_equal = false;
    }
    if (all_equal) throw DegenerateFit("all repeat counts equal; no length trend to fit");

    std::set<int> units;
    std::vector<std::pair<double, double>> points;
    points.reserve(series.observations.size());
    for (const auto& [n, gap] : series.observations) {
        if (!units.insert(n).second)
            throw InvalidArgument("duplicate repeat_units " + std::to_string(n));
        points.emplace_back(1.0 / n, gap);
    }

    const LineFit line = ols_line(std::move(points));
    return FitResult{line.intercept, line.slope, line.rms_residual};
}

} // namespace nanofet
