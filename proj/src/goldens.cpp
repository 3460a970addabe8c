#include "lg/goldens.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

#include "lg/double_slit.hpp"
#include "lg/oscillator.hpp"
#include "lg/triple_slit.hpp"

namespace lg::goldens {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;

double table_min(const TwoTimeTable& t) {
    const auto v = t.values();
    return *std::min_element(v.begin(), v.end());
}

double postselected_grid_minimum(std::size_t points) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points; ++i) {
        const double phi = kPi * static_cast<double>(i) / static_cast<double>(points - 1);
        best = std::min(best, table_min(double_slit::postselected_table({phi, 0.0})));
    }
    return best;
}

double triple_slit_zero_minimum() {
    const triple_slit::ScreenPhaseTriple sp{0.0, 0.0};
    auto q_zero = [&](double theta) {
        return triple_slit::quasi_densities({theta, 5.0 * kPi / 4.0, 0.0, 0.0}, sp).q_zero;
    };
    const auto r = boost::math::tools::brent_find_minima(q_zero, 0.0, kPi,
                                                         std::numeric_limits<double>::digits);
    return r.second;
}

struct OscillatorScan {
    double min_minus_plus = 0.0;
    double min_any = 0.0;
};

OscillatorScan oscillator_scan() {
    const auto tmpl = sho::OscillatorParams::coherent(-1.0, 1.0);
    const auto samples =
        sho::scan_samples(tmpl, GridAxis{0.01, 3.13, 1000}, GridAxis::fixed(-1.0));
    OscillatorScan s{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    for (const auto& x : samples) {
        s.min_minus_plus = std::min(s.min_minus_plus, x.q_mp);
        s.min_any = std::min(s.min_any, x.min_entry());
    }
    return s;
}

}  // namespace

bool GoldenReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::vector<std::string> golden_names() {
    return {"double_slit_q_plus",    "postselected_minimum", "postselected_grid",
            "triple_slit_q_zero_min", "vn_q_plus",           "sho_q_minus_plus_min",
            "luders_bound"};
}

GoldenReport verify_goldens(const std::map<std::string, double>& perturb) {
    const auto names = golden_names();
    for (const auto& [name, delta] : perturb) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw std::invalid_argument("unknown golden '" + name + "'");
        }
    }

    const double ds_plus =
        double_slit::densities({5.0 * kPi / 8.0, 0.0}, double_slit::ScreenPhaseDouble{0.0}).q_plus;
    const double post_exact = double_slit::postselected_minimum();
    const double post_grid = postselected_grid_minimum(100000);
    const double ts_zero = triple_slit_zero_minimum();
    const double vn = triple_slit::quasi_vn_plus({kPi / 4.0, kPi / 2.0, 0.0, 0.0}, {0.0, 0.0});
    const auto osc = oscillator_scan();
    const double luders = std::min({osc.min_any, post_exact, post_grid});

    GoldenReport report;
    report.results = {
        {"double_slit_q_plus", "double slit q(+,x) per |N_t|^2 at phi=5pi/8, theta=0, Y=0", ds_plus,
         (1.0 - kSqrt2) / 2.0, 1e-12},
        {"postselected_minimum", "post-selected double slit, minimum over phi (about -0.05)",
         post_exact, -0.05, 0.005},
        {"postselected_grid", "post-selected minimum, 1e5-point grid vs closed form", post_grid,
         post_exact, 1e-8},
        {"triple_slit_q_zero_min", "triple slit min over theta of q(0,x) at phi=5pi/4, X+-=0",
         ts_zero, (1.0 - kSqrt3) / 2.0, 1e-10},
        {"vn_q_plus", "von Neumann q(+,x) per |N_t|^2 at phi=pi/2, theta=pi/4, X-=0", vn, -0.5,
         1e-12},
        {"sho_q_minus_plus_min", "oscillator min q(-,+) at p'=-1 over omega t in [0.01, 3.13]",
         osc.min_minus_plus, -0.011, 0.002},
        {"luders_bound", "smallest absolute-unit quasi-probability across the golden scans",
         luders, -0.125, 0.0, true},
    };
    for (auto& r : report.results) {
        if (auto it = perturb.find(r.name); it != perturb.end()) {
            r.observed += it->second;
        }
        r.passed = r.lower_bound ? r.observed >= r.expected
                                 : std::abs(r.observed - r.expected) <= r.tolerance;
    }
    return report;
}

void print_report(const GoldenReport& report, std::ostream& out) {
    char line[512];
    std::size_t failures = 0;
    for (const auto& r : report.results) {
        if (r.lower_bound) {
            std::snprintf(line, sizeof line, "%s %-24s observed=%.12g  bound>=%.12g  (%s)\n",
                          r.passed ? "PASS" : "FAIL", r.name.c_str(), r.observed, r.expected,
                          r.description.c_str());
        } else {
            std::snprintf(line, sizeof line,
                          "%s %-24s observed=%.12g  expected=%.12g  |diff|=%.3g  tol=%.3g  (%s)\n",
                          r.passed ? "PASS" : "FAIL", r.name.c_str(), r.observed, r.expected,
                          std::abs(r.observed - r.expected), r.tolerance, r.description.c_str());
        }
        out << line;
        failures += r.passed ? 0 : 1;
    }
    if (failures == 0) {
        out << "all " << report.results.size() << " goldens passed\n";
    } else {
        out << failures << " of " << report.results.size() << " goldens failed:";
        for (const auto& r : report.results) {
            if (!r.passed) {
                out << ' ' << r.name;
            }
        }
        out << '\n';
    }
}

}  // namespace lg::goldens
