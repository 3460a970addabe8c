#pragma once

#include <complex>
#include <span>
#include <stdexcept>

#include "lg/quadrature.hpp"

namespace lg::special {

using Complex = std::complex<double>;

/// Argument outside the range where a finite double result exists, or an
/// integral that does not converge (e.g. Re(a) <= 0 for a Gaussian).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The Owen T contour passes too close to one of the integrand poles at ±i.
class PathNearPoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Largest |z| accepted by the error-function family.
inline constexpr double kMaxErfArgument = 30.0;

/// Minimum distance between an Owen T contour and the poles at ±i.
inline constexpr double kPoleClearance = 1e-6;

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
Complex faddeeva(Complex z);

/// Complex error function. Throws DomainError for |z| >= kMaxErfArgument or
/// when the result overflows.
Complex erf(Complex z);
Complex erfc(Complex z);
/// Imaginary error function, erfi(z) = -i erf(iz).
Complex erfi(Complex z);

struct OwenTArgs {
    double h = 0.0;
    Complex a{};
};

/// Owen's T function T(h, a) = (1/2π) ∫_0^a exp(-h²(1+x²)/2) / (1+x²) dx,
/// with the integral taken along the straight segment from 0 to a. For real
/// a this is the classical function; for complex a it is the analytic
/// continuation that does not wind around the poles at ±i.
Complex owen_t(double h, Complex a, const quad::Options& opts = {});
inline Complex owen_t(const OwenTArgs& args) {
    return owen_t(args.h, args.a);
}

/// Same integrand integrated along a polyline path. The first vertex must be
/// 0. Used to check path independence of the continuation.
Complex owen_t_along_path(double h, std::span<const Complex> vertices,
                          const quad::Options& opts = {});

/// ∫_{-∞}^0 exp(-a y² + i b y) dy = ½ √(π/a) e^{-b²/4a} (1 - i erfi(b / 2√a)),
/// using the principal square root (Re √a > 0). Requires Re(a) > 0.
Complex gaussian_halfline_integral(Complex a, Complex b);

namespace detail {
/// Maclaurin series of erf; accurate for |z| < 2. Exposed for cross-checks.
Complex erf_maclaurin(Complex z);
}  // namespace detail

}  // namespace lg::special
