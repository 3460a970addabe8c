#pragma once

#include <complex>
#include <vector>

#include "lg/core.hpp"
#include "lg/grid.hpp"

namespace lg::sho {

using Complex = std::complex<double>;

/// Gaussian initial state ψ(x) ∝ exp(-x²/4σ² + i p0 x/ħ) evolved for time t
/// under H = p²/2m + mω²x²/2. omega == 0 selects the free particle.
struct OscillatorParams {
    double mass = 1.0;
    double omega = 0.0;
    double sigma = 1.0;
    double p0 = 0.0;
    double t = 1.0;
    double hbar = 1.0;

    /// t_s = mσ²/ħ
    double spreading_time() const { return mass * sigma * sigma / hbar; }
    bool is_free() const { return omega == 0.0; }
    bool is_coherent() const;
    /// Dimensionless momentum p' = p0 σ / ħ.
    double pprime() const { return p0 * sigma / hbar; }
    double omega_t() const { return omega * t; }
    /// τ = t / 2t_s
    double tau() const { return t / (2.0 * spreading_time()); }

    /// Throws DomainError unless m, ħ, σ, t > 0 and ω >= 0 (all finite).
    void validate() const;

    /// Coherent state (σ² = ħ/2mω) at phase ωt with momentum p'.
    static OscillatorParams coherent(double pprime, double omega_t, double omega = 0.5,
                                     double mass = 1.0, double hbar = 1.0);
    /// Free particle at reduced time τ with momentum p'.
    static OscillatorParams free_particle(double pprime, double tau, double sigma = 1.0,
                                          double mass = 1.0, double hbar = 1.0);
};

/// The propagator degenerates to a delta function at ωt = nπ.
class SingularPropagatorError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Smallest |sin ωt| accepted before the propagator counts as singular.
inline constexpr double kMinSinOmegaT = 1e-12;

/// Quantities of the Gaussian integral, all evaluated at x = 0.
struct GaussianIntegralCoeffs {
    Complex a;             ///< mω cos ωt / (2iħ sin ωt) + 1/4σ²  (m/(2iħt) + 1/4σ² when free)
    double b0 = 0.0;       ///< p0 / ħ
    Complex A;             ///< a (1/a + 1/a*)
    Complex z0;            ///< b0 / (2√a)
    double sqrtA_z0 = 0.0; ///< √A z0, real
    double sqrtA_z0_imag = 0.0;  ///< residual imaginary part of √A z0 before it was dropped
    Complex inv_sqrtA;     ///< i / √A

    /// First Owen T argument √(2A) z0.
    double owen_h() const;
};

/// Direct evaluation from the definitions of a, b, A and z. Both closed-form
/// arguments are cross-checked against closed_form_arguments to 1e-12 and a
/// std::logic_error is raised on disagreement.
GaussianIntegralCoeffs coeffs(const OscillatorParams& p);

/// √A z0 = √2 p0σ/ħ (1 + c²)^{-1/2} and i/√A = (i/√2)(1 + ic)^{1/2} with
/// c = 2ωt_s cot ωt (c = 2t_s / t when free).
struct ClosedFormArguments {
    double sqrtA_z0 = 0.0;
    Complex inv_sqrtA;
};
ClosedFormArguments closed_form_arguments(const OscillatorParams& p);

/// <Q1> = 0, <Q2> = erf(√A z0), C12 = -4 Re T(√(2A) z0, i/√A). These hold for
/// sin ωt > 0; when sin ωt < 0 the extra half period acts as parity and both
/// <Q2> and C12 change sign.
TwoTimeMoments moments(const OscillatorParams& p);

/// Absolute-unit 2×2 table q(s1, s2) for Q = sign(x) at times 0 and t.
QuasiProbTable quasi_table(const OscillatorParams& p);

struct OracleQuadrature {
    double abs_tol = 1e-11;
    double rel_tol = 1e-10;
    /// Half-width of every truncated domain in units of the relevant spread.
    double truncation_sigmas = 10.0;
    int max_subdivisions = 10000;
};

inline constexpr double kMinTruncationSigmas = 8.0;

/// q(s1, s2) = Re ∫_{s2 x > 0} ψ*(x,t) <x|e^{-iHt} P_{s1}|ψ> dx by nested
/// quadrature over the propagator. Independent of the closed form.
double quasi_oracle(const OscillatorParams& p, int s1, int s2, const OracleQuadrature& quad_opts = {});

inline double quasi_minus_plus_oracle(const OscillatorParams& p, const OracleQuadrature& quad_opts = {}) {
    return quasi_oracle(p, -1, +1, quad_opts);
}

struct ScanSample {
    double pprime = 0.0;
    double control = 0.0;  ///< ωt, or τ for the free particle
    double q_pp = 0.0;
    double q_pm = 0.0;
    double q_mp = 0.0;
    double q_mm = 0.0;
    double mean2 = 0.0;
    double c12 = 0.0;

    double min_entry() const;
};

/// Evaluates the closed form at every (p', control) point. Samples are
/// ordered row-major with p' outermost.
std::vector<ScanSample> scan_samples(const OscillatorParams& tmpl, const GridAxis& control,
                                     const GridAxis& pprime);

/// Parameters for one grid point: p0 from p', t from ωt (or from τ when free).
OscillatorParams at_point(const OscillatorParams& tmpl, double pprime, double control);

struct ViolationReport {
    std::vector<ScanSample> curve;
    double min_value = 0.0;
    double argmin_pprime = 0.0;
    double argmin_control = 0.0;
    std::pair<int, int> argmin_entry{1, 1};
};

/// Grid scan of the smallest table entry. Ties resolve to the first point
/// in scan order and the first entry in (+,+), (+,-), (-,+), (-,-) order.
ViolationReport violation_scan(const OscillatorParams& tmpl, const GridAxis& control,
                               const GridAxis& pprime);

}  // namespace lg::sho
