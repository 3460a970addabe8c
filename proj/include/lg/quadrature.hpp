#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace lg::quad {

/// Raised when the subdivision budget is exhausted before the requested
/// tolerance is met. Carries the best estimate reached so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double estimate_abs, double error)
        : std::runtime_error(what), estimate_abs_(estimate_abs), error_(error) {}

    double estimate_magnitude() const noexcept { return estimate_abs_; }
    double error_estimate() const noexcept { return error_; }

private:
    double estimate_abs_;
    double error_;
};

struct Options {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 10000;
};

template <class T>
struct Result {
    T value{};
    double error = 0.0;
    int subdivisions = 0;
};

namespace detail {

// 15-point Kronrod nodes on [-1, 1]; odd indices (1, 3, 5) plus the centre
// are the embedded 7-point Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class T>
double magnitude(const T& v) {
    return std::abs(v);
}

template <class T>
struct Panel {
    double a;
    double b;
    T value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F, class T>
Panel<T> gauss_kronrod_15(F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T fc = f(centre);
    T kronrod = fc * kKronrodWeights[7];
    T gauss = fc * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const T f1 = f(centre - dx);
        const T f2 = f(centre + dx);
        kronrod += (f1 + f2) * kKronrodWeights[j];
        if (j % 2 == 1) {
            gauss += (f1 + f2) * kGaussWeights[j / 2];
        }
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, magnitude(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// error is below max(abs_tol, rel_tol * |I|). Works for any value type with
/// +, * double and std::abs (double, std::complex<double>).
template <class F>
auto integrate(F&& f, double a, double b, const Options& opts = {})
    -> Result<std::decay_t<std::invoke_result_t<F&, double>>> {
    using T = std::decay_t<std::invoke_result_t<F&, double>>;
    if (a == b) {
        return {T{}, 0.0, 0};
    }
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("quadrature limits must be finite");
    }
    if (b < a) {
        auto r = integrate(f, b, a, opts);
        r.value = -r.value;
        return r;
    }

    std::priority_queue<detail::Panel<T>> panels;
    auto first = detail::gauss_kronrod_15<decltype(f), T>(f, a, b);
    T total = first.value;
    double total_error = first.error;
    panels.push(first);

    int subdivisions = 0;
    while (total_error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
        if (subdivisions >= opts.max_subdivisions) {
            throw ConvergenceError("adaptive quadrature did not converge within " +
                                       std::to_string(opts.max_subdivisions) + " subdivisions",
                                   std::abs(total), total_error);
        }
        const auto worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Panel can no longer be split in double precision.
            throw ConvergenceError("adaptive quadrature reached machine resolution",
                                   std::abs(total), total_error);
        }
        auto left = detail::gauss_kronrod_15<decltype(f), T>(f, worst.a, mid);
        auto right = detail::gauss_kronrod_15<decltype(f), T>(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++subdivisions;
    }

    // Re-sum to shed the drift accumulated by the incremental updates.
    T resummed{};
    double err = 0.0;
    while (!panels.empty()) {
        resummed += panels.top().value;
        err += panels.top().error;
        panels.pop();
    }
    return {resummed, err, subdivisions};
}

}  // namespace lg::quad
