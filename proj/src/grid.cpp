#include "lg/grid.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace lg {

namespace {

double parse_double(std::string_view s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        throw std::invalid_argument("not a finite number: '" + std::string(s) + "'");
    }
    return v;
}

int parse_int(std::string_view s) {
    int v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

GridAxis GridAxis::parse(std::string_view text) {
    const auto first = text.find(':');
    if (first == std::string_view::npos) {
        return fixed(parse_double(text));
    }
    const auto second = text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
        throw std::invalid_argument("range must be min:max:steps, got '" + std::string(text) + "'");
    }
    GridAxis axis{parse_double(text.substr(0, first)),
                  parse_double(text.substr(first + 1, second - first - 1)),
                  parse_int(text.substr(second + 1))};
    if (axis.steps < 2) {
        throw std::invalid_argument("a swept range needs at least 2 steps");
    }
    if (!(axis.max > axis.min)) {
        throw std::invalid_argument("range max must exceed min");
    }
    return axis;
}

double GridAxis::at(std::size_t i) const noexcept {
    if (steps <= 1) {
        return min;
    }
    if (i + 1 == size()) {
        return max;
    }
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::vector<double> GridAxis::values() const {
    std::vector<double> v(size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = at(i);
    }
    return v;
}

}  // namespace lg
