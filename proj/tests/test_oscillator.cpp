#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "lg/oscillator.hpp"

namespace {

using namespace lg::sho;
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr Complex kI{0.0, 1.0};

TEST(Params, CoherentAndFreeConstructors) {
    const auto c = OscillatorParams::coherent(-1.0, 1.2, 0.8, 2.0, 0.5);
    EXPECT_TRUE(c.is_coherent());
    EXPECT_NEAR(c.pprime(), -1.0, 1e-15);
    EXPECT_NEAR(c.omega_t(), 1.2, 1e-15);
    const auto f = OscillatorParams::free_particle(0.5, 2.0, 1.5);
    EXPECT_TRUE(f.is_free());
    EXPECT_FALSE(f.is_coherent());
    EXPECT_NEAR(f.tau(), 2.0, 1e-15);
    EXPECT_NEAR(f.pprime(), 0.5, 1e-15);
}

TEST(Coeffs, CoherentQuarterPeriod) {
    const auto p = OscillatorParams::coherent(-1.0, kPi / 2.0);
    const auto k = coeffs(p);
    EXPECT_NEAR(k.sqrtA_z0, kSqrt2 * p.p0 * p.sigma / p.hbar, 1e-12);
    EXPECT_NEAR(std::abs(k.inv_sqrtA - kI / kSqrt2), 0.0, 1e-12);
    EXPECT_NEAR(k.b0, p.p0, 0.0);
}

TEST(Coeffs, FreeLimitForm) {
    for (double tau : {0.1, 1.0, 4.0}) {
        const auto p = OscillatorParams::free_particle(-1.3, tau, 0.7);
        const double expected = kSqrt2 * p.pprime() / std::sqrt(1.0 + 1.0 / (tau * tau));
        EXPECT_NEAR(coeffs(p).sqrtA_z0, expected, 1e-12);
    }
}

TEST(Coeffs, SmallFrequencyApproachesFreeParticle) {
    OscillatorParams slow;
    slow.omega = 1e-8;
    slow.sigma = 0.9;
    slow.p0 = 1.4;
    slow.t = 2.5;
    OscillatorParams free = slow;
    free.omega = 0.0;
    const auto a = coeffs(slow);
    const auto b = coeffs(free);
    EXPECT_NEAR(a.sqrtA_z0, b.sqrtA_z0, 1e-6);
    EXPECT_LT(std::abs(a.inv_sqrtA - b.inv_sqrtA), 1e-6);
    const auto qa = quasi_table(slow);
    const auto qb = quasi_table(free);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(qa.values()[i], qb.values()[i], 1e-6);
    }
}

TEST(Coeffs, RawAndClosedFormsAgree) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    std::uniform_real_distribution<double> pp(-3.0, 3.0);
    std::uniform_real_distribution<double> wt(0.01, 2.0 * kPi - 0.01);
    for (int i = 0; i < 2000; ++i) {
        OscillatorParams p;
        p.mass = u(rng);
        p.omega = u(rng);
        p.sigma = u(rng);
        p.hbar = u(rng);
        p.p0 = pp(rng);
        p.t = wt(rng) / p.omega;
        if (std::abs(std::sin(p.omega_t())) < 1e-3) {
            continue;
        }
        const auto k = coeffs(p);
        const auto closed = closed_form_arguments(p);
        ASSERT_GT(k.a.real(), 0.0);
        ASSERT_LT(std::abs(k.sqrtA_z0_imag), 1e-12 * std::max(1.0, std::abs(k.sqrtA_z0)));
        ASSERT_NEAR(k.sqrtA_z0, closed.sqrtA_z0, 1e-12 * std::max(1.0, std::abs(k.sqrtA_z0)));
        ASSERT_LT(std::abs(k.inv_sqrtA - closed.inv_sqrtA), 1e-12 * std::max(1.0, std::abs(k.inv_sqrtA)));
        ASSERT_NEAR(k.owen_h(), kSqrt2 * k.sqrtA_z0, 0.0);
    }
}

TEST(Coeffs, Errors) {
    OscillatorParams p = OscillatorParams::coherent(0.5, kPi);
    EXPECT_THROW(coeffs(p), SingularPropagatorError);
    p = OscillatorParams::coherent(0.5, 1.0);
    p.sigma = 0.0;
    EXPECT_THROW(coeffs(p), lg::DomainError);
    p = OscillatorParams::coherent(0.5, 1.0);
    p.t = -1.0;
    EXPECT_THROW(coeffs(p), lg::DomainError);
    p = OscillatorParams::free_particle(0.5, 1.0);
    p.t = 0.0;
    EXPECT_THROW(coeffs(p), lg::DomainError);
}

TEST(QuasiTable, ZeroMomentumIsSymmetric) {
    for (double wt : {0.3, 1.0, 2.2}) {
        const auto p = OscillatorParams::coherent(0.0, wt);
        const auto m = moments(p);
        EXPECT_EQ(m.mean2, 0.0);
        const auto q = quasi_table(p);
        EXPECT_NEAR(q(1, -1), q(-1, 1), 1e-15);
        EXPECT_NEAR(q(1, 1), q(-1, -1), 1e-15);
        const Complex a = coeffs(p).inv_sqrtA;
        const double t0 = (std::atan(a) / (2.0 * kPi)).real();
        EXPECT_NEAR(q(1, 1), 0.25 * (1.0 - 4.0 * t0), 1e-12);
    }
}

TEST(QuasiTable, ScanMinimumNearReportedValue) {
    double best = 1.0;
    for (int i = 0; i < 1000; ++i) {
        const double wt = 0.01 + (3.13 - 0.01) * i / 999.0;
        best = std::min(best, quasi_table(OscillatorParams::coherent(-1.0, wt))(-1, 1));
    }
    EXPECT_NEAR(best, -0.011, 0.002);
}

TEST(QuasiTable, ShortTimesApproachOrthogonalProjectors) {
    double previous = 1.0;
    // The approach is slow (about √t) because the state has support at x = 0.
    for (double wt : {1e-1, 1e-2, 1e-4, 1e-6, 1e-8, 1e-10}) {
        const double q = std::abs(quasi_table(OscillatorParams::coherent(-1.0, wt))(-1, 1));
        EXPECT_LT(q, previous);
        previous = q;
    }
    EXPECT_LT(previous, 1e-5);
}

TEST(QuasiTable, InvariantsOnRandomParameters) {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> pp(-3.0, 3.0);
    std::uniform_real_distribution<double> wt(0.01, kPi - 0.01);
    std::uniform_real_distribution<double> sg(0.3, 3.0);
    for (int i = 0; i < 3000; ++i) {
        OscillatorParams p;
        p.omega = 1.0;
        p.sigma = sg(rng);
        p.p0 = pp(rng) / p.sigma;
        p.t = wt(rng);
        const auto q = quasi_table(p);
        const auto m = moments(p);
        ASSERT_NEAR(q.sum(), 1.0, 1e-10);
        for (int s2 : {1, -1}) {
            ASSERT_NEAR(q(1, s2) + q(-1, s2), 0.5 * (1.0 + s2 * m.mean2), 1e-14);
        }
        for (int s1 : {1, -1}) {
            ASSERT_NEAR(q(s1, 1) + q(s1, -1), 0.5, 1e-14);
        }
        for (double v : q.values()) {
            ASSERT_GE(v, lg::kLudersBound);
        }
        ASSERT_LE(std::abs(m.correlator), 1.0);
    }
}

TEST(QuasiTable, HalfPeriodMirror) {
    // q(s1, s2; π - ωt) = q(-s1, s2; ωt)
    for (double wt : {0.4, 0.678, 1.3}) {
        const auto a = quasi_table(OscillatorParams::coherent(-1.0, wt));
        const auto b = quasi_table(OscillatorParams::coherent(-1.0, kPi - wt));
        for (int s1 : {1, -1}) {
            for (int s2 : {1, -1}) {
                EXPECT_NEAR(b(s1, s2), a(-s1, s2), 1e-12);
            }
        }
    }
}

TEST(Oracle, QuarterPeriodGolden) {
    const auto p = OscillatorParams::coherent(-1.0, kPi / 2.0);
    EXPECT_NEAR(quasi_minus_plus_oracle(p), quasi_table(p)(-1, 1), 1e-6);
    EXPECT_NEAR(quasi_minus_plus_oracle(p), 0.0113750659740896, 1e-9);
}

TEST(Oracle, ZeroMomentum) {
    for (double wt : {0.5, 1.7, 2.9}) {
        const auto p = OscillatorParams::coherent(0.0, wt);
        EXPECT_NEAR(quasi_minus_plus_oracle(p), quasi_table(p)(-1, 1), 1e-6) << wt;
    }
}

TEST(Oracle, FreeParticle) {
    const auto f = OscillatorParams::free_particle(-1.0, 1.0);
    const auto s = OscillatorParams::coherent(-1.0, std::atan(1.0));
    EXPECT_NEAR(quasi_minus_plus_oracle(f), quasi_table(f)(-1, 1), 1e-6);
    EXPECT_NEAR(quasi_minus_plus_oracle(f), quasi_table(s)(-1, 1), 1e-6);
}

TEST(Oracle, AllEntriesIncludingSecondHalfPeriod) {
    for (double wt : {0.9, 2.462, 3.5, 5.0}) {
        const auto p = OscillatorParams::coherent(-1.0, wt);
        const auto q = quasi_table(p);
        for (int s1 : {1, -1}) {
            for (int s2 : {1, -1}) {
                EXPECT_NEAR(quasi_oracle(p, s1, s2), q(s1, s2), 1e-6) << wt << ' ' << s1 << s2;
            }
        }
    }
}

TEST(Oracle, GridAgreement) {
    for (int i = 0; i < 10; ++i) {
        const double pprime = -2.0 + 4.0 * i / 9.0;
        for (int j = 0; j < 10; ++j) {
            const double wt = 0.1 + 2.9 * j / 9.0;
            const auto p = OscillatorParams::coherent(pprime, wt);
            ASSERT_NEAR(quasi_minus_plus_oracle(p), quasi_table(p)(-1, 1), 1e-6) << pprime << ' ' << wt;
        }
    }
}

TEST(Oracle, NonCoherentWidth) {
    OscillatorParams p;
    p.omega = 1.3;
    p.sigma = 0.6;
    p.mass = 1.7;
    p.p0 = 0.8;
    p.t = 0.9;
    EXPECT_NEAR(quasi_minus_plus_oracle(p), quasi_table(p)(-1, 1), 1e-6);
}

TEST(Oracle, TruncationTooShortRejected) {
    OracleQuadrature quad_opts;
    quad_opts.truncation_sigmas = 6.0;
    EXPECT_THROW(quasi_minus_plus_oracle(OscillatorParams::coherent(-1.0, 1.0), quad_opts), lg::DomainError);
    EXPECT_THROW(quasi_oracle(OscillatorParams::coherent(-1.0, 1.0), 0, 1), lg::DomainError);
}

TEST(FreeParticle, MatchesCoherentOscillatorUnderTanSubstitution) {
    for (int i = 0; i < 10; ++i) {
        const double pprime = -2.0 + 4.0 * i / 9.0;
        for (int j = 0; j < 10; ++j) {
            const double tau = 0.05 + 5.0 * j / 9.0;
            const auto f = quasi_table(OscillatorParams::free_particle(pprime, tau));
            const auto s = quasi_table(OscillatorParams::coherent(pprime, std::atan(tau)));
            for (std::size_t k = 0; k < 4; ++k) {
                ASSERT_NEAR(f.values()[k], s.values()[k], 1e-10);
            }
        }
    }
}

TEST(ViolationScan, ReportsMinimumAndLocation) {
    const auto tmpl = OscillatorParams::coherent(-1.0, 1.0);
    const auto r = violation_scan(tmpl, {0.01, kPi / 2.0, 500}, lg::GridAxis::fixed(-1.0));
    EXPECT_EQ(r.curve.size(), 500u);
    EXPECT_NEAR(r.min_value, -0.011, 0.002);
    EXPECT_EQ(r.argmin_entry, std::make_pair(-1, 1));
    EXPECT_GT(r.argmin_control, 0.5);
    EXPECT_LT(r.argmin_control, 0.9);
    for (const auto& s : r.curve) {
        EXPECT_GE(s.min_entry(), lg::kLudersBound);
        EXPECT_LE(std::abs(s.c12), 1.0);
    }
}

TEST(ViolationScan, ZeroMomentumSymmetry) {
    const auto r = violation_scan(OscillatorParams::coherent(0.0, 1.0), {0.05, 3.0, 200},
                                  lg::GridAxis::fixed(0.0));
    double min_mp = 1.0;
    double min_pm = 1.0;
    for (const auto& s : r.curve) {
        min_mp = std::min(min_mp, s.q_mp);
        min_pm = std::min(min_pm, s.q_pm);
    }
    EXPECT_NEAR(min_mp, min_pm, 1e-15);
}

TEST(ViolationScan, FreeParticleUsesTau) {
    const auto r = violation_scan(OscillatorParams::free_particle(-1.0, 1.0), {0.1, 10.0, 100},
                                  {-2.0, 2.0, 5});
    EXPECT_EQ(r.curve.size(), 500u);
    EXPECT_EQ(r.curve.front().pprime, -2.0);
    EXPECT_EQ(r.curve[1].control, 0.1 + 9.9 / 99.0);
    EXPECT_LT(r.min_value, 0.0);
}

}  // namespace
