#include "lg/double_slit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lg/quadrature.hpp"

namespace lg::double_slit {

std::complex<double> SlitStateDouble::alpha_plus() const {
    return std::polar(std::cos(phi), theta);
}

std::complex<double> SlitStateDouble::alpha_minus() const {
    return {std::sin(phi), 0.0};
}

ScreenPhaseDouble ScreenPhaseDouble::from_geometry(const ScreenGeometry& g, double theta) {
    if (!(g.flight_time > 0.0) || !(g.hbar > 0.0) || !(g.mass > 0.0)) {
        throw DomainError("screen geometry needs positive mass, flight time and hbar");
    }
    return {2.0 * g.mass * g.x * g.half_separation / (g.hbar * g.flight_time) - theta};
}

DoubleSlitDensities densities(const SlitStateDouble& state, ScreenPhaseDouble sp) {
    const double c2 = std::cos(2.0 * state.phi);
    const double interference = std::sin(2.0 * state.phi) * std::cos(sp.Y);
    DoubleSlitDensities d;
    d.q_plus = 0.5 * (1.0 + c2 + interference);
    d.q_minus = 0.5 * (1.0 - c2 + interference);
    d.p2 = 1.0 + interference;
    d.p12_plus = 0.5 * (1.0 + c2);
    d.p12_minus = 0.5 * (1.0 - c2);
    return d;
}

RegionClassification classify(const SlitStateDouble& state, ScreenPhaseDouble sp, double tol) {
    const auto d = densities(state, sp);
    RegionClassification r;
    r.destructive = std::sin(2.0 * state.phi) * std::cos(sp.Y) < -tol;
    if (d.q_plus <= d.q_minus) {
        r.min_quasi = d.q_plus;
        r.which_min = "+";
    } else {
        r.min_quasi = d.q_minus;
        r.which_min = "-";
    }
    r.lg_violated = r.min_quasi < -tol;
    return r;
}

QuasiProbTable screen_table(const SlitStateDouble& state, std::span<const double> screen_phases) {
    const std::size_t n = screen_phases.size();
    std::vector<double> q(2 * n);
    std::vector<double> p2(n);
    std::vector<OutcomeLabel> bins(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto d = densities(state, {screen_phases[j]});
        q[j] = d.q_plus;
        q[n + j] = d.q_minus;
        p2[j] = d.p2;
        bins[j] = static_cast<OutcomeLabel>(j);
    }
    return QuasiProbTable({+1, -1}, std::move(bins), std::move(q), NormUnits::per_nt2,
                          std::move(p2));
}

TwoTimeTable sequential_table(const SlitStateDouble& state, std::span<const double> screen_phases) {
    const std::size_t n = screen_phases.size();
    std::vector<double> p12(2 * n);
    std::vector<OutcomeLabel> bins(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto d = densities(state, {screen_phases[j]});
        p12[j] = d.p12_plus;
        p12[n + j] = d.p12_minus;
        bins[j] = static_cast<OutcomeLabel>(j);
    }
    return TwoTimeTable({+1, -1}, std::move(bins), std::move(p12), NormUnits::per_nt2);
}

QuasiProbTable postselected_table(const SlitStateDouble& state) {
    // ∫ cos Y over the light half-period is +2 and over the dark one -2, each
    // of length π, so the normalized interference weight is ±2/π.
    const double c2 = std::cos(2.0 * state.phi);
    const double s2 = std::sin(2.0 * state.phi) * (2.0 / std::numbers::pi);
    std::vector<double> q;
    q.reserve(4);
    for (int s1 : kSigns) {
        for (int sc : kSigns) {
            q.push_back(0.25 * (1.0 + c2 * s1 + s2 * sc));
        }
    }
    return QuasiProbTable({+1, -1}, {+1, -1}, std::move(q), NormUnits::absolute);
}

double postselected_minimum() {
    const double k = 2.0 / std::numbers::pi;
    return 0.25 * (1.0 - std::sqrt(1.0 + k * k));
}

OracleReport verify_against_oracle(const SlitStateDouble& state,
                                   std::span<const double> screen_phases,
                                   const OracleConfig& cfg) {
    if (!(cfg.slit_width > 0.0) || !(cfg.half_separation > 0.0) || !(cfg.flight_time > 0.0)) {
        throw DomainError("oracle needs positive slit width, separation and flight time");
    }
    const double w = cfg.slit_width;
    const double L = cfg.half_separation;
    const double k = cfg.mass / (2.0 * cfg.hbar * cfg.flight_time);
    const quad::Options opts{cfg.abs_tol * w, cfg.rel_tol, 10000};

    // ψ_s(x, τ) ∝ ∫ exp(i m (x - y)² / 2ħτ) exp(-(y - sL)² / 4w²) dy, with
    // the common propagator prefactor dropped.
    auto evolved = [&](double x, int s) {
        auto integrand = [&](double u) {
            const double y = s * L + u;
            const double dx = x - y;
            return std::polar(std::exp(-u * u / (4.0 * w * w)), k * dx * dx);
        };
        return quad::integrate(integrand, -12.0 * w, 12.0 * w, opts).value;
    };

    OracleReport report;
    report.numeric_shape.reserve(screen_phases.size());
    report.closed_shape.reserve(screen_phases.size());
    const auto ap = state.alpha_plus();
    const auto am = state.alpha_minus();
    for (double Y : screen_phases) {
        const double x = (Y + state.theta) * cfg.hbar * cfg.flight_time / (2.0 * cfg.mass * L);
        const auto psi_p = evolved(x, +1);
        const auto psi_m = evolved(x, -1);
        const double mean_single = 0.5 * (std::norm(psi_p) + std::norm(psi_m));
        const double numeric = std::norm(ap * psi_p + am * psi_m) / mean_single;
        const double closed = densities(state, {Y}).p2;
        report.numeric_shape.push_back(numeric);
        report.closed_shape.push_back(closed);
        report.max_abs_error = std::max(report.max_abs_error, std::abs(numeric - closed));
    }
    return report;
}

}  // namespace lg::double_slit
