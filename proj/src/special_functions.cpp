#include "lg/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <numbers>

namespace lg::special {

namespace {
constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;
constexpr Complex kI{0.0, 1.0};

// Below this radius the Maclaurin series of erf loses at most ~2 digits to
// cancellation (terms are bounded by |z| e^{|z|^2}).
constexpr double kSeriesRadius = 2.0;

// w(z) for Re z >= 0, Im z >= 0, following the Gautschi / Poppe-Wijers
// scheme: Laplace continued fraction far from the origin, Gautschi's
// truncated Taylor-continued-fraction hybrid in the intermediate ellipse and
// the erf power series near the origin.
Complex faddeeva_first_quadrant(double x, double y) {
    const double xs = x / 6.3;
    const double ys = y / 4.4;
    const double rho2 = xs * xs + ys * ys;
    const Complex z{x, y};

    if (rho2 < 0.085264) {
        return std::exp(-z * z) * (1.0 + detail::erf_maclaurin(kI * z));
    }

    double h = 0.0;
    int kapn = 0;
    int nu = 0;
    if (rho2 >= 1.0) {
        nu = static_cast<int>(3.0 + 1442.0 / (26.0 * std::sqrt(rho2) + 77.0));
    } else {
        const double q = (1.0 - ys) * std::sqrt(1.0 - rho2);
        h = 1.88 * q;
        kapn = static_cast<int>(std::lround(7.0 + 34.0 * q));
        nu = static_cast<int>(std::lround(16.0 + 26.0 * q));
    }

    const double h2 = 2.0 * h;
    double lambda = h > 0.0 ? std::pow(h2, kapn) : 0.0;
    Complex r{0.0, 0.0};
    Complex s{0.0, 0.0};
    const Complex shift = h - kI * z;
    for (int n = nu; n >= 0; --n) {
        r = 0.5 / (shift + static_cast<double>(n + 1) * r);
        if (h > 0.0 && n <= kapn) {
            s = r * (lambda + s);
            lambda /= h2;
        }
    }
    Complex w = kTwoOverSqrtPi * (h > 0.0 ? s : r);
    if (y == 0.0) {
        w.real(std::exp(-x * x));
    }
    return w;
}

void require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError(std::string(what) + ": non-finite argument");
    }
}

void require_erf_range(Complex z, const char* what) {
    require_finite(z, what);
    if (std::abs(z) >= kMaxErfArgument) {
        throw DomainError(std::string(what) + ": |z| >= 30 is outside the supported range");
    }
}

Complex checked(Complex v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw DomainError(std::string(what) + ": result overflows double precision");
    }
    return v;
}

double distance_to_segment(Complex p, Complex from, Complex to) {
    const Complex d = to - from;
    const double len2 = std::norm(d);
    if (len2 == 0.0) {
        return std::abs(p - from);
    }
    double s = (std::conj(d) * (p - from)).real() / len2;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(p - (from + s * d));
}

}  // namespace

namespace detail {

Complex erf_maclaurin(Complex z) {
    // erf z = 2/√π Σ (-1)^n z^{2n+1} / (n! (2n+1))
    const Complex z2 = z * z;
    Complex power = z;  // (-1)^n z^{2n+1} / n!
    Complex sum = z;
    for (int n = 1; n < 200; ++n) {
        power *= -z2 / static_cast<double>(n);
        const Complex term = power / static_cast<double>(2 * n + 1);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return kTwoOverSqrtPi * sum;
}

}  // namespace detail

Complex faddeeva(Complex z) {
    require_finite(z, "faddeeva");
    const double x = z.real();
    const double y = z.imag();
    if (y < 0.0) {
        // w(z) = 2 exp(-z²) - w(-z)
        return checked(2.0 * std::exp(-z * z) - faddeeva(-z), "faddeeva");
    }
    if (x < 0.0) {
        return std::conj(faddeeva_first_quadrant(-x, y));
    }
    return faddeeva_first_quadrant(x, y);
}

Complex erf(Complex z) {
    require_erf_range(z, "erf");
    if (std::abs(z) < kSeriesRadius) {
        return detail::erf_maclaurin(z);
    }
    if (z.real() < 0.0) {
        return -erf(-z);
    }
    // i z lies in the closed upper half plane.
    return checked(1.0 - std::exp(-z * z) * faddeeva(kI * z), "erf");
}

Complex erfc(Complex z) {
    require_erf_range(z, "erfc");
    if (std::abs(z) < kSeriesRadius) {
        return 1.0 - detail::erf_maclaurin(z);
    }
    if (z.real() < 0.0) {
        return checked(2.0 - erfc(-z), "erfc");
    }
    return checked(std::exp(-z * z) * faddeeva(kI * z), "erfc");
}

Complex erfi(Complex z) {
    require_erf_range(z, "erfi");
    return -kI * erf(kI * z);
}

Complex owen_t_along_path(double h, std::span<const Complex> vertices, const quad::Options& opts) {
    if (!std::isfinite(h)) {
        throw DomainError("owen_t: h must be finite");
    }
    if (vertices.empty() || vertices.front() != Complex{0.0, 0.0}) {
        throw std::invalid_argument("owen_t: path must start at 0");
    }
    for (const auto& v : vertices) {
        require_finite(v, "owen_t");
    }

    const double half_h2 = 0.5 * h * h;
    Complex total{0.0, 0.0};
    for (std::size_t k = 1; k < vertices.size(); ++k) {
        const Complex from = vertices[k - 1];
        const Complex to = vertices[k];
        if (from == to) {
            continue;
        }
        for (const Complex pole : {kI, -kI}) {
            if (distance_to_segment(pole, from, to) < kPoleClearance) {
                throw PathNearPoleError("owen_t: integration path passes within 1e-6 of a pole at ±i");
            }
        }
        const Complex d = to - from;
        auto integrand = [&](double s) {
            const Complex x = from + s * d;
            const Complex one_plus_x2 = 1.0 + x * x;
            return d * std::exp(-half_h2 * one_plus_x2) / one_plus_x2;
        };
        total += quad::integrate(integrand, 0.0, 1.0, opts).value;
    }
    return total / (2.0 * std::numbers::pi);
}

Complex owen_t(double h, Complex a, const quad::Options& opts) {
    const std::array<Complex, 2> path{Complex{0.0, 0.0}, a};
    return owen_t_along_path(h, path, opts);
}

Complex gaussian_halfline_integral(Complex a, Complex b) {
    require_finite(a, "gaussian_halfline_integral");
    require_finite(b, "gaussian_halfline_integral");
    if (!(a.real() > 0.0)) {
        throw DomainError("gaussian_halfline_integral: Re(a) <= 0, the integral diverges");
    }
    const Complex sqrt_a = std::sqrt(a);
    const Complex u = b / (2.0 * sqrt_a);
    const Complex value = 0.5 / (std::numbers::inv_sqrtpi * sqrt_a) * std::exp(-b * b / (4.0 * a)) *
                          (1.0 - kI * erfi(u));
    return checked(value, "gaussian_halfline_integral");
}

}  // namespace lg::special
