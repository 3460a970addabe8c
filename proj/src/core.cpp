#include "lg/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lg {

namespace {

constexpr double kInvariantTol = 1e-10;

void require_moment(double v, const char* name) {
    if (!std::isfinite(v) || v < -1.0 - kExactTol || v > 1.0 + kExactTol) {
        throw DomainError(std::string(name) + " must lie in [-1, 1]");
    }
}

std::size_t find_label(const std::vector<OutcomeLabel>& labels, OutcomeLabel label) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw std::out_of_range("unknown outcome label " + std::to_string(label));
    }
    return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

std::string to_string(NormUnits units) {
    return units == NormUnits::absolute ? "abs" : "per_Nt2";
}

TwoTimeTable::TwoTimeTable(std::vector<OutcomeLabel> outcomes1,
                           std::vector<OutcomeLabel> outcomes2, std::vector<double> values,
                           NormUnits units)
    : outcomes1_(std::move(outcomes1)),
      outcomes2_(std::move(outcomes2)),
      values_(std::move(values)),
      units_(units) {
    if (outcomes1_.empty() || outcomes2_.empty()) {
        throw std::invalid_argument("table needs at least one outcome per time");
    }
    if (values_.size() != outcomes1_.size() * outcomes2_.size()) {
        throw std::invalid_argument("table values do not match the outcome shape");
    }
}

double TwoTimeTable::operator()(OutcomeLabel first, OutcomeLabel second) const {
    return at(index1(first), index2(second));
}

std::size_t TwoTimeTable::index1(OutcomeLabel label) const {
    return find_label(outcomes1_, label);
}

std::size_t TwoTimeTable::index2(OutcomeLabel label) const {
    return find_label(outcomes2_, label);
}

double TwoTimeTable::sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

std::vector<double> TwoTimeTable::sum_over_first() const {
    std::vector<double> out(cols(), 0.0);
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            out[j] += at(i, j);
        }
    }
    return out;
}

QuasiProbTable::QuasiProbTable(std::vector<OutcomeLabel> outcomes1,
                               std::vector<OutcomeLabel> outcomes2, std::vector<double> values,
                               NormUnits units, std::optional<std::vector<double>> p2)
    : TwoTimeTable(std::move(outcomes1), std::move(outcomes2), std::move(values), units),
      p2_(std::move(p2)) {
    if (p2_) {
        if (p2_->size() != cols()) {
            throw std::invalid_argument("p2 length does not match the second-time outcomes");
        }
        const auto marginal = sum_over_first();
        for (std::size_t j = 0; j < cols(); ++j) {
            const double scale = std::max(1.0, std::abs((*p2_)[j]));
            if (std::abs(marginal[j] - (*p2_)[j]) > kInvariantTol * scale) {
                throw std::invalid_argument("quasi-probability marginal does not reproduce p2");
            }
        }
    }
    if (units == NormUnits::absolute && std::abs(sum() - 1.0) > kInvariantTol) {
        throw std::invalid_argument("absolute-unit quasi-probability table must sum to 1");
    }
}

QuasiProbTable QuasiProbTable::dichotomic(double pp, double pm, double mp, double mm) {
    return QuasiProbTable({+1, -1}, {+1, -1}, {pp, pm, mp, mm}, NormUnits::absolute);
}

bool QuasiProbTable::is_dichotomic() const noexcept {
    auto is_pm = [](const std::vector<OutcomeLabel>& l) {
        return l.size() == 2 && ((l[0] == 1 && l[1] == -1) || (l[0] == -1 && l[1] == 1));
    };
    return is_pm(outcomes1()) && is_pm(outcomes2());
}

QuasiProbTable quasi_from_moments(const TwoTimeMoments& m) {
    require_moment(m.mean1, "mean1");
    require_moment(m.mean2, "mean2");
    require_moment(m.correlator, "correlator");
    std::vector<double> q;
    q.reserve(4);
    for (int s1 : kSigns) {
        for (int s2 : kSigns) {
            q.push_back(0.25 * (1.0 + m.mean1 * s1 + m.mean2 * s2 + m.correlator * s1 * s2));
        }
    }
    return QuasiProbTable({+1, -1}, {+1, -1}, std::move(q), NormUnits::absolute);
}

TwoTimeMoments moments_from_quasi(const TwoTimeTable& t, double tol) {
    auto is_pm = [](const std::vector<OutcomeLabel>& l) {
        return l.size() == 2 && std::is_permutation(l.begin(), l.end(), kSigns.begin());
    };
    if (!is_pm(t.outcomes1()) || !is_pm(t.outcomes2())) {
        throw std::invalid_argument("moments need a 2x2 table over dichotomic outcomes");
    }
    if (std::abs(t.sum() - 1.0) > tol) {
        throw std::invalid_argument("moments need a table normalized to 1");
    }
    TwoTimeMoments m;
    for (int s1 : kSigns) {
        for (int s2 : kSigns) {
            const double q = t(s1, s2);
            m.mean1 += s1 * q;
            m.mean2 += s2 * q;
            m.correlator += s1 * s2 * q;
        }
    }
    return m;
}

Lg2Result lg2_check(const TwoTimeTable& t, double tol) {
    Lg2Result r;
    r.min_entry = t.at(0, 0);
    r.argmin = {t.outcomes1()[0], t.outcomes2()[0]};
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.cols(); ++j) {
            if (t.at(i, j) < r.min_entry) {
                r.min_entry = t.at(i, j);
                r.argmin = {t.outcomes1()[i], t.outcomes2()[j]};
            }
        }
    }
    r.satisfied = r.min_entry >= -tol;
    return r;
}

Lg3Result lg3_check(double c12, double c23, double c13, double tol) {
    require_moment(c12, "C12");
    require_moment(c23, "C23");
    require_moment(c13, "C13");
    // Sign flips of Q1, Q2, Q3 (and none); flipping all three is redundant.
    const std::array<std::array<int, 3>, 4> flips{{{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}};
    Lg3Result r;
    r.worst = std::numeric_limits<double>::infinity();
    for (const auto& s : flips) {
        const double lhs = 1.0 + s[0] * s[1] * c12 + s[1] * s[2] * c23 + s[0] * s[2] * c13;
        r.worst = std::min(r.worst, lhs);
    }
    r.satisfied = r.worst >= -tol;
    return r;
}

bool nsit_check(std::span<const double> p12_summed, std::span<const double> p2, double tol) {
    if (p12_summed.size() != p2.size()) {
        throw std::invalid_argument("nsit_check: vectors differ in length");
    }
    for (std::size_t j = 0; j < p2.size(); ++j) {
        if (std::abs(p12_summed[j] - p2[j]) > tol) {
            return false;
        }
    }
    return true;
}

QuasiProbTable indirect_quasi(const TwoTimeTable& p12, std::span<const double> p2) {
    if (p12.rows() != 2 ||
        !std::is_permutation(p12.outcomes1().begin(), p12.outcomes1().end(), kSigns.begin())) {
        throw std::invalid_argument("indirect_quasi: first-time outcomes must be dichotomic");
    }
    if (p2.size() != p12.cols()) {
        throw std::invalid_argument("indirect_quasi: p2 length does not match p12 columns");
    }
    const auto summed = p12.sum_over_first();
    std::vector<double> q(p12.rows() * p12.cols());
    for (std::size_t i = 0; i < p12.rows(); ++i) {
        for (std::size_t j = 0; j < p12.cols(); ++j) {
            q[i * p12.cols() + j] = p12.at(i, j) + 0.5 * (p2[j] - summed[j]);
        }
    }
    std::vector<double> p2_row(p2.begin(), p2.end());
    return QuasiProbTable(p12.outcomes1(), p12.outcomes2(), std::move(q), p12.units(),
                          std::move(p2_row));
}

bool quasi_decomposition_check(double q, double p12, double re_d, double tol) {
    return std::abs(q - (p12 + re_d)) <= tol;
}

}  // namespace lg
