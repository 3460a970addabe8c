#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lg {

/// End-inclusive uniform axis. steps == 1 denotes a fixed value (min == max).
struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    static GridAxis fixed(double v) { return {v, v, 1}; }

    /// Parses "min:max:steps" or a single number. Throws std::invalid_argument
    /// on malformed input or steps < 2 for a swept axis.
    static GridAxis parse(std::string_view text);

    std::size_t size() const noexcept { return static_cast<std::size_t>(steps); }
    double at(std::size_t i) const noexcept;
    std::vector<double> values() const;
};

}  // namespace lg
