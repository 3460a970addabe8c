#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "lg/core.hpp"
#include "lg/region.hpp"

/// Double-slit interferometer with δ-localized slits at x = ±L.
///
/// All screen densities are reported per |N_t|^2, the common single-slit
/// intensity, which is never evaluated. Only the post-selected table is in
/// absolute units.
namespace lg::double_slit {

/// Post-slit amplitudes α+ = cos φ e^{iθ}, α- = sin φ (global phase dropped).
struct SlitStateDouble {
    double phi = 0.0;
    double theta = 0.0;  ///< relative phase θ+ - θ-

    std::complex<double> alpha_plus() const;
    std::complex<double> alpha_minus() const;
};

/// Physical inputs that reduce to the screen phase.
struct ScreenGeometry {
    double mass = 1.0;
    double x = 0.0;            ///< screen coordinate
    double half_separation = 1.0;  ///< L
    double flight_time = 1.0;  ///< τ
    double hbar = 1.0;
};

/// Reduced screen phase Y = 2 m x L / (ħ τ) - θ.
struct ScreenPhaseDouble {
    double Y = 0.0;

    static ScreenPhaseDouble from_geometry(const ScreenGeometry& g, double theta);
};

struct DoubleSlitDensities {
    double q_plus = 0.0;
    double q_minus = 0.0;
    double p2 = 0.0;
    double p12_plus = 0.0;
    double p12_minus = 0.0;

    /// Re D(s1, x | -s1, x) per |N_t|^2; the same for both s1.
    double interference() const { return q_plus - p12_plus; }
};

DoubleSlitDensities densities(const SlitStateDouble& state, ScreenPhaseDouble sp);

/// destructive ⇔ sin 2φ cos Y < -tol, lg_violated ⇔ min(q±) < -tol. Points
/// within tol of either boundary count as neither.
RegionClassification classify(const SlitStateDouble& state, ScreenPhaseDouble sp,
                              double tol = kScanTol);

/// Density table q(s1, Y_j) over a set of screen phases, per |N_t|^2, with
/// the pattern p2 as the stored marginal.
QuasiProbTable screen_table(const SlitStateDouble& state, std::span<const double> screen_phases);

/// Sequential probabilities p12(s1, Y_j) per |N_t|^2.
TwoTimeTable sequential_table(const SlitStateDouble& state, std::span<const double> screen_phases);

/// q(s1, s2) = ¼(1 + cos 2φ s1 + (2/π) sin 2φ s2) after post-selecting onto the
/// light (s2 = +1, |Y| < π/2) and dark (s2 = -1) halves of a fringe period.
QuasiProbTable postselected_table(const SlitStateDouble& state);

/// Exact minimum over φ of the post-selected table, ¼(1 - √(1 + 4/π²)).
double postselected_minimum();

/// Finite-width slit model for the quadrature cross-check.
struct OracleConfig {
    double slit_width = 1e-3;  ///< Gaussian width w of each slit
    double half_separation = 1.0;
    double flight_time = 1.0;
    double mass = 1.0;
    double hbar = 1.0;
    double abs_tol = 1e-13;
    double rel_tol = 1e-11;
};

struct OracleReport {
    /// Max |numeric - closed form| of the fringe shape p2 / p̄12 over the grid,
    /// where p̄12 is the mean single-slit intensity at each screen point.
    double max_abs_error = 0.0;
    std::vector<double> numeric_shape;
    std::vector<double> closed_shape;
};

/// Propagates Gaussian slits of width w with the free propagator by direct
/// quadrature and compares the fringe shape with 1 + sin 2φ cos Y.
/// Throws quad::ConvergenceError if the quadrature fails, which is distinct
/// from a large (mismatch) error.
OracleReport verify_against_oracle(const SlitStateDouble& state,
                                   std::span<const double> screen_phases,
                                   const OracleConfig& cfg = {});

}  // namespace lg::double_slit
