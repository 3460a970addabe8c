#include "lg/triple_slit.hpp"

#include <array>
#include <cmath>

namespace lg::triple_slit {

namespace {
constexpr double kSingularDenominator = 1e-12;
}

std::complex<double> SlitStateTriple::alpha(OutcomeLabel n) const {
    switch (n) {
        case +1:
            return std::polar(std::sin(theta) * std::cos(phi), chi_plus);
        case -1:
            return std::polar(std::sin(theta) * std::sin(phi), chi_minus);
        case 0:
            return {std::cos(theta), 0.0};
        default:
            throw std::out_of_range("triple-slit label must be +1, -1 or 0");
    }
}

ScreenPhaseTriple ScreenPhaseTriple::from_geometry(const ScreenGeometry& g, double chi_plus,
                                                   double chi_minus) {
    if (!(g.flight_time > 0.0) || !(g.hbar > 0.0) || !(g.mass > 0.0)) {
        throw DomainError("screen geometry needs positive mass, flight time and hbar");
    }
    const double k = g.mass / (2.0 * g.hbar * g.flight_time);
    const double L = g.half_separation;
    return {k * (L * L - 2.0 * L * g.x) + chi_plus, k * (L * L + 2.0 * L * g.x) + chi_minus};
}

TripleInterference interference_terms(const SlitStateTriple& state, const ScreenPhaseTriple& sp) {
    const double st = std::sin(state.theta);
    const double ct = std::cos(state.theta);
    const double sp_ = std::sin(state.phi);
    const double cp = std::cos(state.phi);
    return {st * ct * cp * std::cos(sp.X_plus), st * ct * sp_ * std::cos(sp.X_minus),
            st * st * cp * sp_ * std::cos(sp.X())};
}

TripleDensities quasi_densities(const SlitStateTriple& state, const ScreenPhaseTriple& sp) {
    const auto I = interference_terms(state, sp);
    const double st = std::sin(state.theta);
    const double ct = std::cos(state.theta);
    const double sp_ = std::sin(state.phi);
    const double cp = std::cos(state.phi);
    TripleDensities d;
    d.p12_plus = st * st * cp * cp;
    d.p12_minus = st * st * sp_ * sp_;
    d.p12_zero = ct * ct;
    d.q_plus = d.p12_plus + I.i_0p + I.i_mp;
    d.q_minus = d.p12_minus + I.i_m0 + I.i_mp;
    d.q_zero = d.p12_zero + I.i_0p + I.i_m0;
    d.p2 = 1.0 + 2.0 * I.sum();
    return d;
}

QuasiProbTable quasi_table(const SlitStateTriple& state, const ScreenPhaseTriple& sp) {
    const auto d = quasi_densities(state, sp);
    return QuasiProbTable({+1, -1, 0}, {0}, {d.q_plus, d.q_minus, d.q_zero}, NormUnits::per_nt2,
                          std::vector<double>{d.p2});
}

TwoTimeTable dichotomized_sequential(const SlitStateTriple& state, const ScreenPhaseTriple& sp,
                                     OutcomeLabel n1) {
    const auto d = quasi_densities(state, sp);
    const auto I = interference_terms(state, sp);
    // The "not n1" branch is a coherent superposition of the other two slits,
    // so it keeps their mutual interference term.
    double selected = 0.0;
    double others = 0.0;
    switch (n1) {
        case +1:
            selected = d.p12_plus;
            others = d.p12_minus + d.p12_zero + 2.0 * I.i_m0;
            break;
        case -1:
            selected = d.p12_minus;
            others = d.p12_plus + d.p12_zero + 2.0 * I.i_0p;
            break;
        case 0:
            selected = d.p12_zero;
            others = d.p12_plus + d.p12_minus + 2.0 * I.i_mp;
            break;
        default:
            throw std::out_of_range("triple-slit label must be +1, -1 or 0");
    }
    return TwoTimeTable({+1, -1}, {0}, {selected, others}, NormUnits::per_nt2);
}

bool nsit_overall(const SlitStateTriple& state, const ScreenPhaseTriple& sp, double tol) {
    return std::abs(interference_terms(state, sp).sum()) <= tol;
}

DichotomizationNsit nsit_dichotomizations(const SlitStateTriple& state,
                                          const ScreenPhaseTriple& sp, double tol) {
    const auto I = interference_terms(state, sp);
    return {std::abs(I.i_0p + I.i_mp) <= tol, std::abs(I.i_m0 + I.i_mp) <= tol,
            std::abs(I.i_m0 + I.i_0p) <= tol};
}

double nsit_theta_solution(double phi, const ScreenPhaseTriple& sp) {
    const double numerator = std::cos(phi) * std::cos(sp.X_plus) + std::sin(phi) * std::cos(sp.X_minus);
    const double denominator = std::sin(phi) * std::cos(phi) * std::cos(sp.X());
    if (std::abs(denominator) < kSingularDenominator) {
        throw SingularManifoldError("NSIT manifold is singular: sin φ cos φ cos X = 0");
    }
    return std::atan(-numerator / denominator);
}

double quasi_vn_plus(const SlitStateTriple& state, const ScreenPhaseTriple& sp) {
    const auto I = interference_terms(state, sp);
    const double st = std::sin(state.theta);
    const double cp = std::cos(state.phi);
    return st * st * cp * cp + I.i_0p + I.i_mp - I.i_m0;
}

RegionClassification classify_triple(const SlitStateTriple& state, const ScreenPhaseTriple& sp,
                                     double tol) {
    const auto d = quasi_densities(state, sp);
    const auto I = interference_terms(state, sp);
    RegionClassification r;
    const std::array<std::pair<double, const char*>, 3> qs{
        {{d.q_plus, "+"}, {d.q_minus, "-"}, {d.q_zero, "0"}}};
    r.min_quasi = qs[0].first;
    r.which_min = qs[0].second;
    for (const auto& [q, label] : qs) {
        if (q < r.min_quasi) {
            r.min_quasi = q;
            r.which_min = label;
        }
    }
    r.lg_violated = r.min_quasi < -tol;
    r.destructive = 2.0 * I.sum() < -tol;
    r.nsit_overall = std::abs(I.sum()) <= tol;
    r.nsit_q = std::abs(I.i_0p + I.i_mp) <= tol;
    r.vn_violated = quasi_vn_plus(state, sp) < -tol;
    return r;
}

}  // namespace lg::triple_slit
