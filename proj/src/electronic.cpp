#include "nanofet/electronic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "nanofet/errors.hpp"

namespace nanofet {

const char* to_string(Metallicity m) {
    return m == Metallicity::Metallic ? "Metallic" : "Semiconducting";
}

Metallicity classify_metallicity(const ChiralIndices& c) {
    return (c.n - c.m) % 3 == 0 ? Metallicity::Metallic : Metallicity::Semiconducting;
}

double gap_estimate_ev(double diameter_nm) {
    if (!(diameter_nm > 0.0)) throw InvalidArgument("diameter must be positive");
    return 0.8 / diameter_nm;
}

ChiralGap gap_for_chirality(const ChiralIndices& c) {
    ChiralGap out;
    out.metallicity = classify_metallicity(c);
    out.diameter_nm = cnt_diameter_nm(c);
    out.small_diameter_caveat = out.diameter_nm < 0.5;
    out.gap_ev = out.metallicity == Metallicity::Metallic ? 0.0 : gap_estimate_ev(out.diameter_nm);
    return out;
}

namespace {

void validate_params(const TightBindingParams& p) {
    if (!(p.hopping_ev > 0.0)) throw InvalidArgument("hopping parameter must be positive");
    if (!(p.a_cc_nm > 0.0)) throw InvalidArgument("a_cc must be positive");
    if (p.k_samples < 64) throw InvalidArgument("k_samples must be >= 64");
}

// |1 + e^{i phi1} + e^{i phi2}|
double band_magnitude(double phi1, double phi2) {
    const double re = 1.0 + std::cos(phi1) + std::cos(phi2);
    const double im = std::sin(phi1) + std::sin(phi2);
    return std::sqrt(re * re + im * im);
}

// Golden-section minimization of a unimodal bracket; returns the best value.
template <typename F>
double golden_min(F&& f, double lo, double hi, int iterations) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < iterations; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return std::min(f1, f2);
}

} // namespace

// The tube constrains graphene phases (phi1, phi2) = (k.a1, k.a2) by
//   n phi1 + m phi2 = 2 pi mu          (circumferential quantization)
//   t1 phi1 + t2 phi2 = psi            (axial position in the 1D zone)
// with mu = 0..N-1 and psi in [-pi, pi). Solving the 2x2 system per line
// makes the sweep a 1D scan; phases move linearly in psi so the grid pass
// uses incremental complex rotation, and the minimum is polished with
// golden-section search on the exact evaluator.
double zone_folded_gap_ev(const ChiralIndices& c, const TightBindingParams& p) {
    validate_params(p);
    const double n = c.n, m = c.m;
    const int lines = hexagons_per_cell(c);
    const double t1 = static_cast<double>(2 * c.m + c.n) / chiral_dr(c);
    const double t2 = -static_cast<double>(2 * c.n + c.m) / chiral_dr(c);
    const double det = n * t2 - m * t1;  // = -N, never zero

    const int K = p.k_samples;
    const double psi0 = -std::numbers::pi;
    const double dpsi = 2.0 * std::numbers::pi / K;

    std::vector<double> line_min(static_cast<std::size_t>(lines));

#pragma omp parallel for schedule(static)
    for (int mu = 0; mu < lines; ++mu) {
        const double alpha = 2.0 * std::numbers::pi * mu;
        const auto phi1_of = [&](double psi) { return (alpha * t2 - m * psi) / det; };
        const auto phi2_of = [&](double psi) { return (n * psi - alpha * t1) / det; };
        const auto magnitude_at = [&](double psi) { return band_magnitude(phi1_of(psi), phi2_of(psi)); };

        // grid pass with incremental rotation
        std::complex<double> z1 = std::polar(1.0, phi1_of(psi0));
        std::complex<double> z2 = std::polar(1.0, phi2_of(psi0));
        const std::complex<double> step1 = std::polar(1.0, -m / det * dpsi);
        const std::complex<double> step2 = std::polar(1.0, n / det * dpsi);
        int best_k = 0;
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < K; ++k) {
            const std::complex<double> f = 1.0 + z1 + z2;
            const double mag2 = std::norm(f);
            if (mag2 < best) {
                best = mag2;
                best_k = k;
            }
            z1 *= step1;
            z2 *= step2;
        }

        const double lo = psi0 + (best_k - 1) * dpsi;
        const double hi = psi0 + (best_k + 1) * dpsi;
        const double refined = golden_min(magnitude_at, lo, hi, 72);
        line_min[static_cast<std::size_t>(mu)] = std::min(refined, magnitude_at(psi0 + best_k * dpsi));
    }

    double overall = std::numeric_limits<double>::infinity();
    for (double v : line_min) overall = std::min(overall, v);
    return 2.0 * p.hopping_ev * overall;
}

namespace reference {

double zone_folded_gap_ev(const ChiralIndices& c, const TightBindingParams& p) {
    validate_params(p);
    const double a = p.a_cc_nm * std::sqrt(3.0);
    const double pi = std::numbers::pi;

    // real-space lattice vectors and reciprocal basis (a_i . b_j = 2 pi delta_ij)
    const double a1[2] = {a * std::sqrt(3.0) / 2.0, a / 2.0};
    const double a2[2] = {a * std::sqrt(3.0) / 2.0, -a / 2.0};
    const double b1[2] = {2.0 * pi / a / std::sqrt(3.0), 2.0 * pi / a};
    const double b2[2] = {2.0 * pi / a / std::sqrt(3.0), -2.0 * pi / a};

    const int dr = chiral_dr(c);
    const int lines = hexagons_per_cell(c);
    const double t1 = static_cast<double>(2 * c.m + c.n) / dr;
    const double t2 = -static_cast<double>(2 * c.n + c.m) / dr;

    // K1: circumferential step between lines; K2: axial direction
    const double invN = 1.0 / lines;
    const double K1[2] = {(-t2 * b1[0] + t1 * b2[0]) * invN, (-t2 * b1[1] + t1 * b2[1]) * invN};
    const double K2[2] = {(c.m * b1[0] - c.n * b2[0]) * invN, (c.m * b1[1] - c.n * b2[1]) * invN};
    const double K2len = std::hypot(K2[0], K2[1]);
    const double k2hat[2] = {K2[0] / K2len, K2[1] / K2len};

    const double cell_len = cnt_cell_length_nm(c);
    const double kmax = pi / cell_len;

    const auto dispersion = [&](double kx, double ky) {
        // |f(k)|^2 = 3 + 2 cos(k.a1) + 2 cos(k.a2) + 2 cos(k.(a1-a2))
        const double ka1 = kx * a1[0] + ky * a1[1];
        const double ka2 = kx * a2[0] + ky * a2[1];
        const double under = 3.0 + 2.0 * std::cos(ka1) + 2.0 * std::cos(ka2) + 2.0 * std::cos(ka1 - ka2);
        return std::sqrt(std::max(under, 0.0));
    };

    double best = std::numeric_limits<double>::infinity();
    for (int mu = 0; mu < lines; ++mu) {
        for (int s = 0; s <= p.k_samples; ++s) {
            const double kt = -kmax + 2.0 * kmax * s / p.k_samples;
            const double kx = mu * K1[0] + kt * k2hat[0];
            const double ky = mu * K1[1] + kt * k2hat[1];
            best = std::min(best, dispersion(kx, ky));
        }
    }
    return 2.0 * p.hopping_ev * best;
}

} // namespace reference

} // namespace nanofet
