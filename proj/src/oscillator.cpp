#include "lg/oscillator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lg/parallel.hpp"
#include "lg/quadrature.hpp"
#include "lg/special_functions.hpp"

namespace lg::sho {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kArgumentTol = 1e-12;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

double checked_sin(const OscillatorParams& p) {
    const double s = std::sin(p.omega_t());
    if (std::abs(s) < kMinSinOmegaT) {
        throw SingularPropagatorError("propagator is singular at sin(omega t) = 0 (omega t = " +
                                      std::to_string(p.omega_t()) + ")");
    }
    return s;
}

// c = 2ωt_s cot ωt, or 2t_s/t for the free particle; a = (1 - ic) / 4σ².
double spreading_ratio(const OscillatorParams& p) {
    if (p.is_free()) {
        return 2.0 * p.spreading_time() / p.t;
    }
    const double s = checked_sin(p);
    return 2.0 * p.omega * p.spreading_time() * std::cos(p.omega_t()) / s;
}

}  // namespace

bool OscillatorParams::is_coherent() const {
    return std::abs(2.0 * omega * spreading_time() - 1.0) < 1e-12;
}

void OscillatorParams::validate() const {
    if (!positive_finite(mass) || !positive_finite(hbar)) {
        throw DomainError("mass and hbar must be positive");
    }
    if (!positive_finite(sigma)) {
        throw DomainError("sigma must be positive");
    }
    if (!positive_finite(t)) {
        throw DomainError("evolution time t must be positive");
    }
    if (!std::isfinite(omega) || omega < 0.0) {
        throw DomainError("omega must be non-negative");
    }
    if (!std::isfinite(p0)) {
        throw DomainError("p0 must be finite");
    }
}

OscillatorParams OscillatorParams::coherent(double pprime, double omega_t, double omega, double mass,
                                            double hbar) {
    if (!positive_finite(omega)) {
        throw DomainError("a coherent state needs omega > 0");
    }
    OscillatorParams p;
    p.mass = mass;
    p.hbar = hbar;
    p.omega = omega;
    p.sigma = std::sqrt(hbar / (2.0 * mass * omega));
    p.p0 = pprime * hbar / p.sigma;
    p.t = omega_t / omega;
    return p;
}

OscillatorParams OscillatorParams::free_particle(double pprime, double tau, double sigma, double mass,
                                                 double hbar) {
    OscillatorParams p;
    p.mass = mass;
    p.hbar = hbar;
    p.omega = 0.0;
    p.sigma = sigma;
    p.p0 = pprime * hbar / sigma;
    p.t = 2.0 * p.spreading_time() * tau;
    return p;
}

double GaussianIntegralCoeffs::owen_h() const { return std::numbers::sqrt2 * sqrtA_z0; }

ClosedFormArguments closed_form_arguments(const OscillatorParams& p) {
    p.validate();
    const double c = spreading_ratio(p);
    ClosedFormArguments out;
    out.sqrtA_z0 = std::numbers::sqrt2 * p.pprime() / std::sqrt(1.0 + c * c);
    out.inv_sqrtA = kI / std::numbers::sqrt2 * std::sqrt(Complex{1.0, c});
    return out;
}

GaussianIntegralCoeffs coeffs(const OscillatorParams& p) {
    p.validate();
    GaussianIntegralCoeffs k;
    const double gaussian = 1.0 / (4.0 * p.sigma * p.sigma);
    if (p.is_free()) {
        k.a = p.mass / (2.0 * kI * p.hbar * p.t) + gaussian;
    } else {
        const double s = checked_sin(p);
        k.a = p.mass * p.omega * std::cos(p.omega_t()) / (2.0 * kI * p.hbar * s) + gaussian;
    }
    k.b0 = p.p0 / p.hbar;
    k.A = k.a * (1.0 / k.a + 1.0 / std::conj(k.a));
    const Complex sqrt_a = std::sqrt(k.a);
    k.z0 = k.b0 / (2.0 * sqrt_a);
    const Complex sqrtA = std::sqrt(k.A);
    const Complex product = sqrtA * k.z0;
    k.sqrtA_z0 = product.real();
    k.sqrtA_z0_imag = product.imag();
    k.inv_sqrtA = kI / sqrtA;

    const auto closed = closed_form_arguments(p);
    const double scale = std::max(1.0, std::abs(product));
    if (std::abs(k.sqrtA_z0_imag) > kArgumentTol * scale ||
        std::abs(k.sqrtA_z0 - closed.sqrtA_z0) > kArgumentTol * scale ||
        std::abs(k.inv_sqrtA - closed.inv_sqrtA) > kArgumentTol * std::max(1.0, std::abs(k.inv_sqrtA))) {
        throw std::logic_error("Gaussian integral coefficients disagree with their closed forms");
    }
    return k;
}

TwoTimeMoments moments(const OscillatorParams& p) {
    const auto k = coeffs(p);
    TwoTimeMoments m;
    m.mean1 = 0.0;
    m.mean2 = special::erf(Complex{k.sqrtA_z0, 0.0}).real();
    m.correlator = -4.0 * special::owen_t(k.owen_h(), k.inv_sqrtA).real();
    if (!p.is_free() && std::sin(p.omega_t()) < 0.0) {
        // Half a period of evolution is parity: Q2 -> -Q2.
        m.mean2 = -m.mean2;
        m.correlator = -m.correlator;
    }
    return m;
}

QuasiProbTable quasi_table(const OscillatorParams& p) { return quasi_from_moments(moments(p)); }

double quasi_oracle(const OscillatorParams& p, int s1, int s2, const OracleQuadrature& quad_opts) {
    p.validate();
    (void)Dichotomic{s1};
    (void)Dichotomic{s2};
    if (!(quad_opts.truncation_sigmas >= kMinTruncationSigmas)) {
        throw DomainError("oracle truncation must cover at least 8 spreads of the wavepacket");
    }

    const double m = p.mass;
    const double hb = p.hbar;
    const double sg = p.sigma;
    double norm_propagator = 0.0;
    double centre = 0.0;
    double width = 0.0;
    double k_diag = 0.0;
    double k_cross = 0.0;
    if (p.is_free()) {
        // exp(i m (x - y)² / 2ħt)
        k_diag = m / (2.0 * hb * p.t);
        k_cross = 2.0 * k_diag;
        norm_propagator = m / (2.0 * std::numbers::pi * hb * p.t);
        centre = p.p0 * p.t / m;
        const double r = hb * p.t / (2.0 * m * sg * sg);
        width = sg * std::sqrt(1.0 + r * r);
    } else {
        // exp(i mω [(x² + y²) cos ωt - 2xy] / 2ħ sin ωt)
        const double s = checked_sin(p);
        const double c = std::cos(p.omega_t());
        const double k = m * p.omega / (2.0 * hb * s);
        k_diag = k * c;
        k_cross = 2.0 * k;
        norm_propagator = m * p.omega / (2.0 * std::numbers::pi * hb * std::abs(s));
        centre = p.p0 * s / (m * p.omega);
        const double spread = hb * s / (2.0 * m * p.omega * sg);
        width = std::sqrt(sg * sg * c * c + spread * spread);
    }
    const double norm_state2 = 1.0 / std::sqrt(2.0 * std::numbers::pi * sg * sg);

    const quad::Options inner_opts{quad_opts.abs_tol * 1e-2, quad_opts.rel_tol * 1e-1, quad_opts.max_subdivisions};
    const quad::Options outer_opts{quad_opts.abs_tol, quad_opts.rel_tol, quad_opts.max_subdivisions};
    const double y_cut = quad_opts.truncation_sigmas * sg;
    const double b0 = p.p0 / hb;

    // ∫ over one half line of y of K(x, y) ψ0(y), without normalisation.
    auto half = [&](double x, int sign) {
        auto integrand = [&](double y) {
            const double phase = k_diag * (x * x + y * y) - k_cross * x * y + b0 * y;
            return std::exp(Complex{-y * y / (4.0 * sg * sg), phase});
        };
        return sign > 0 ? quad::integrate(integrand, 0.0, y_cut, inner_opts).value
                        : quad::integrate(integrand, -y_cut, 0.0, inner_opts).value;
    };

    auto outer = [&](double x) {
        const Complex plus = half(x, +1);
        const Complex minus = half(x, -1);
        const Complex full = plus + minus;
        return (std::conj(full) * (s1 > 0 ? plus : minus)).real();
    };

    const double reach = quad_opts.truncation_sigmas * width;
    const double integral =
        s2 > 0 ? quad::integrate(outer, 0.0, std::max(0.0, centre) + reach, outer_opts).value
               : quad::integrate(outer, std::min(0.0, centre) - reach, 0.0, outer_opts).value;
    return norm_propagator * norm_state2 * integral;
}

double ScanSample::min_entry() const { return std::min({q_pp, q_pm, q_mp, q_mm}); }

OscillatorParams at_point(const OscillatorParams& tmpl, double pprime, double control) {
    OscillatorParams p = tmpl;
    p.p0 = pprime * p.hbar / p.sigma;
    p.t = p.is_free() ? 2.0 * p.spreading_time() * control : control / p.omega;
    return p;
}

std::vector<ScanSample> scan_samples(const OscillatorParams& tmpl, const GridAxis& control,
                                     const GridAxis& pprime) {
    const std::size_t n_ctrl = control.size();
    std::vector<ScanSample> samples(pprime.size() * n_ctrl);
    parallel_for(samples.size(), [&](std::size_t idx) {
        const double pp = pprime.at(idx / n_ctrl);
        const double ctrl = control.at(idx % n_ctrl);
        const auto m = moments(at_point(tmpl, pp, ctrl));
        const auto q = quasi_from_moments(m);
        samples[idx] = {pp,      ctrl,    q(1, 1), q(1, -1), q(-1, 1), q(-1, -1),
                        m.mean2, m.correlator};
    });
    return samples;
}

ViolationReport violation_scan(const OscillatorParams& tmpl, const GridAxis& control,
                               const GridAxis& pprime) {
    ViolationReport report;
    report.curve = scan_samples(tmpl, control, pprime);
    bool first = true;
    for (const auto& s : report.curve) {
        const std::array<std::pair<double, std::pair<int, int>>, 4> entries{{
            {s.q_pp, {1, 1}}, {s.q_pm, {1, -1}}, {s.q_mp, {-1, 1}}, {s.q_mm, {-1, -1}}}};
        for (const auto& [value, label] : entries) {
            if (first || value < report.min_value) {
                first = false;
                report.min_value = value;
                report.argmin_pprime = s.pprime;
                report.argmin_control = s.control;
                report.argmin_entry = label;
            }
        }
    }
    return report;
}

}  // namespace lg::sho
