#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace lg::goldens {

struct GoldenResult {
    std::string name;
    std::string description;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    /// Passes when observed >= expected rather than |observed - expected| <= tolerance.
    bool lower_bound = false;
    bool passed = false;
};

struct GoldenReport {
    std::vector<GoldenResult> results;

    bool all_passed() const;
};

/// Names accepted by the perturbation hook, in report order.
std::vector<std::string> golden_names();

/// Evaluates every golden number. `perturb` adds a delta to the observed
/// value of the named golden before comparison (for testing the harness);
/// an unknown name throws std::invalid_argument.
GoldenReport verify_goldens(const std::map<std::string, double>& perturb = {});

/// One line per golden, then a summary line. Byte-identical across runs.
void print_report(const GoldenReport& report, std::ostream& out);

}  // namespace lg::goldens
