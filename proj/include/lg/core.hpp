#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lg {

/// Default absolute tolerance for equality-style checks on O(1) closed forms.
inline constexpr double kExactTol = 1e-12;

/// Scans flag a quasi-probability as negative only below -kScanTol.
inline constexpr double kScanTol = 1e-9;

/// The Lüders bound on a two-time quasi-probability.
inline constexpr double kLudersBound = -0.125;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Outcome label of a measurement. Dichotomic outcomes use +1 / -1; the
/// centre slit uses 0; screen bins use their index.
using OutcomeLabel = int;

/// A value of a dichotomic variable Q, either +1 or -1.
class Dichotomic {
public:
    explicit Dichotomic(int value) : value_(value) {
        if (value != 1 && value != -1) {
            throw DomainError("dichotomic value must be +1 or -1");
        }
    }

    static Dichotomic plus() { return Dichotomic(1); }
    static Dichotomic minus() { return Dichotomic(-1); }

    int value() const noexcept { return value_; }
    Dichotomic flipped() const noexcept { return Dichotomic(-value_); }

    friend bool operator==(Dichotomic, Dichotomic) = default;

private:
    int value_;
};

/// Both signs in canonical (+, -) order.
inline constexpr std::array<int, 2> kSigns{+1, -1};

enum class NormUnits {
    absolute,
    per_nt2,  ///< density in units of the slit prefactor |N_t|^2
};

std::string to_string(NormUnits units);

/// A real matrix indexed by (first-time outcome, second-time outcome), with
/// labels for both axes. Used for sequential probabilities p12 and as the
/// storage of a quasi-probability table.
class TwoTimeTable {
public:
    TwoTimeTable(std::vector<OutcomeLabel> outcomes1, std::vector<OutcomeLabel> outcomes2,
                 std::vector<double> values, NormUnits units);

    std::size_t rows() const noexcept { return outcomes1_.size(); }
    std::size_t cols() const noexcept { return outcomes2_.size(); }
    const std::vector<OutcomeLabel>& outcomes1() const noexcept { return outcomes1_; }
    const std::vector<OutcomeLabel>& outcomes2() const noexcept { return outcomes2_; }
    NormUnits units() const noexcept { return units_; }

    double at(std::size_t i, std::size_t j) const { return values_.at(i * cols() + j); }
    /// Lookup by label; throws std::out_of_range for an unknown label.
    double operator()(OutcomeLabel first, OutcomeLabel second) const;

    std::span<const double> values() const noexcept { return values_; }
    double sum() const;
    /// Σ over the first-time outcome, one entry per second-time outcome.
    std::vector<double> sum_over_first() const;

    std::size_t index1(OutcomeLabel label) const;
    std::size_t index2(OutcomeLabel label) const;

private:
    std::vector<OutcomeLabel> outcomes1_;
    std::vector<OutcomeLabel> outcomes2_;
    std::vector<double> values_;
    NormUnits units_;
};

/// Two-time quasi-probability q(outcome1, outcome2) with optional stored
/// second-time marginal p2.
///
/// Invariants checked on construction:
///  - when p2 is present, Σ_{outcome1} q = p2 (to 1e-10, relative);
///  - absolute-unit tables sum to 1 (to 1e-10).
class QuasiProbTable : public TwoTimeTable {
public:
    QuasiProbTable(std::vector<OutcomeLabel> outcomes1, std::vector<OutcomeLabel> outcomes2,
                   std::vector<double> values, NormUnits units,
                   std::optional<std::vector<double>> p2 = std::nullopt);

    const std::optional<std::vector<double>>& p2() const noexcept { return p2_; }

    /// 2×2 table over (+, -) × (+, -) in absolute units.
    static QuasiProbTable dichotomic(double pp, double pm, double mp, double mm);

    bool is_dichotomic() const noexcept;

private:
    std::optional<std::vector<double>> p2_;
};

struct TwoTimeMoments {
    double mean1 = 0.0;
    double mean2 = 0.0;
    double correlator = 0.0;
};

/// q(s1,s2) = ¼(1 + <Q1> s1 + <Q2> s2 + C12 s1 s2). Throws DomainError if a
/// moment lies outside [-1, 1].
QuasiProbTable quasi_from_moments(const TwoTimeMoments& m);

/// Inverse of quasi_from_moments for a 2×2 dichotomic table that sums to 1.
TwoTimeMoments moments_from_quasi(const TwoTimeTable& t, double tol = kExactTol);

struct Lg2Result {
    bool satisfied = true;
    double min_entry = 0.0;
    std::pair<OutcomeLabel, OutcomeLabel> argmin{};
};

/// Two-time LG inequalities q >= 0. Ties for the minimum resolve to the
/// first entry in declared (row-major) label order.
Lg2Result lg2_check(const TwoTimeTable& t, double tol = kExactTol);

struct Lg3Result {
    bool satisfied = true;
    double worst = 0.0;
};

/// The four three-time LG inequalities 1 + s1s2 C12 + s2s3 C23 + s1s3 C13 >= 0
/// over the sign flips of each Q_i.
Lg3Result lg3_check(double c12, double c23, double c13, double tol = kExactTol);

/// No-signalling in time: max |Σ_{s1} p12(s1, ·) - p2(·)| <= tol.
bool nsit_check(std::span<const double> p12_summed, std::span<const double> p2,
                double tol = kExactTol);

/// Indirectly determined quasi-probability
///   q(s1, n2) = p12(s1, n2) + ½ (p2(n2) - Σ_{s1'} p12(s1', n2)),
/// built only from sequential probabilities and the unmeasured pattern.
/// The first-time outcome set must be dichotomic.
QuasiProbTable indirect_quasi(const TwoTimeTable& p12, std::span<const double> p2);

/// q = p12 + Re D (quasi-probability decomposition), to tol.
bool quasi_decomposition_check(double q, double p12, double re_d, double tol = kExactTol);

}  // namespace lg
