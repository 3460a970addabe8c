#pragma once

#include <complex>

#include "lg/core.hpp"
#include "lg/region.hpp"

/// Triple-slit interferometer with δ-localized slits at x = -L, 0, +L.
/// First-time outcomes are labelled +1, -1 and 0; densities are per |N_t|^2.
namespace lg::triple_slit {

/// α+ = e^{iχ+} sin θ cos φ, α- = e^{iχ-} sin θ sin φ, α0 = cos θ.
struct SlitStateTriple {
    double theta = 0.0;
    double phi = 0.0;
    double chi_plus = 0.0;
    double chi_minus = 0.0;

    /// Amplitude for slit label n ∈ {+1, -1, 0}.
    std::complex<double> alpha(OutcomeLabel n) const;
};

struct ScreenGeometry {
    double mass = 1.0;
    double x = 0.0;
    double half_separation = 1.0;
    double flight_time = 1.0;
    double hbar = 1.0;
};

/// Reduced phases X± = m (L² ∓ 2 L x) / (2 ħ τ) + χ±, and X = X- - X+.
struct ScreenPhaseTriple {
    double X_plus = 0.0;
    double X_minus = 0.0;

    double X() const noexcept { return X_minus - X_plus; }

    static ScreenPhaseTriple from_geometry(const ScreenGeometry& g, double chi_plus,
                                           double chi_minus);
};

/// The three pairwise interference terms Re D(n1, x | n1', x) / |N_t|^2.
struct TripleInterference {
    double i_0p = 0.0;  ///< I(0,+) = sin θ cos θ cos φ cos X+
    double i_m0 = 0.0;  ///< I(-,0) = sin θ cos θ sin φ cos X-
    double i_mp = 0.0;  ///< I(-,+) = sin² θ cos φ sin φ cos X

    double sum() const noexcept { return i_0p + i_m0 + i_mp; }
};

struct TripleDensities {
    double q_plus = 0.0;
    double q_minus = 0.0;
    double q_zero = 0.0;
    double p2 = 0.0;
    double p12_plus = 0.0;
    double p12_minus = 0.0;
    double p12_zero = 0.0;
};

TripleInterference interference_terms(const SlitStateTriple& state, const ScreenPhaseTriple& sp);

TripleDensities quasi_densities(const SlitStateTriple& state, const ScreenPhaseTriple& sp);

/// q(n1, x) over n1 ∈ (+, -, 0) at a single screen point, with p2 stored.
QuasiProbTable quasi_table(const SlitStateTriple& state, const ScreenPhaseTriple& sp);

/// Sequential probabilities p12^Q(s1, x) for the dichotomization
/// Q = 2 E_{n1} - 1 (s1 = +1 means "slit n1", s1 = -1 "either other slit").
TwoTimeTable dichotomized_sequential(const SlitStateTriple& state, const ScreenPhaseTriple& sp,
                                     OutcomeLabel n1);

/// Σ_{n1} p12(n1, x) = p2(x), i.e. |I(-,0) + I(0,+) + I(-,+)| <= tol.
bool nsit_overall(const SlitStateTriple& state, const ScreenPhaseTriple& sp,
                  double tol = kExactTol);

/// NSIT for each dichotomization Q(n1); flag names follow the quasi-
/// probability whose LG inequality the dichotomization tests.
struct DichotomizationNsit {
    bool q_plus_nsit = false;   ///< I(0,+) + I(-,+) = 0
    bool q_minus_nsit = false;  ///< I(-,0) + I(-,+) = 0
    bool q_zero_nsit = false;   ///< I(-,0) + I(0,+) = 0
};

DichotomizationNsit nsit_dichotomizations(const SlitStateTriple& state,
                                          const ScreenPhaseTriple& sp, double tol = kExactTol);

class SingularManifoldError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Solves the overall NSIT condition for θ:
///   tan θ = -(cos φ cos X+ + sin φ cos X-) / (sin φ cos φ cos X),
/// principal branch θ ∈ (-π/2, π/2). Throws SingularManifoldError when the
/// denominator vanishes (|sin φ cos φ cos X| < 1e-12).
double nsit_theta_solution(double phi, const ScreenPhaseTriple& sp);

/// Quasi-probability for outcome + when the correlator is built from a
/// von Neumann (three-outcome) measurement:
///   q_vN(+, x) = sin²θ cos²φ + I(0,+) + I(-,+) - I(-,0).
double quasi_vn_plus(const SlitStateTriple& state, const ScreenPhaseTriple& sp);

/// lg_violated: some q(n1) < -tol; destructive: 2 ΣI < -tol; nsit_overall:
/// |ΣI| <= tol; nsit_q: NSIT for Q = 2E+ - 1; vn_violated: q_vN(+) < -tol.
RegionClassification classify_triple(const SlitStateTriple& state, const ScreenPhaseTriple& sp,
                                     double tol = kScanTol);

}  // namespace lg::triple_slit
