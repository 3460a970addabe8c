#pragma once

#include <optional>
#include <string>

namespace lg {

/// Per-point classification flags for parameter scans. Flags that do not
/// apply to a system are left empty.
struct RegionClassification {
    bool lg_violated = false;
    bool destructive = false;
    std::optional<bool> nsit_overall;
    std::optional<bool> nsit_q;
    std::optional<bool> vn_violated;
    /// Most negative quasi-probability at the point and its first-time label
    /// ("+", "-" or "0").
    double min_quasi = 0.0;
    std::string which_min;
};

}  // namespace lg
