#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lg/core.hpp"
#include "lg/grid.hpp"

namespace lg::scan {

enum class System { double_slit, triple_slit, sho, free };
enum class Format { csv, json };

std::string to_string(System s);
std::string to_string(Format f);
System parse_system(const std::string& name);
Format parse_format(const std::string& name);

/// Invalid scan configuration (CLI exit code 2).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Output could not be written (CLI exit code 3).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Minimum |sin ωt| on an oscillator scan grid.
inline constexpr double kMinScanSin = 1e-6;

struct DoubleSlitOptions {
    GridAxis phi{0.0, 3.141592653589793, 201};
    GridAxis Y{-3.141592653589793, 3.141592653589793, 201};
    /// When set, the second axis is the screen coordinate x and Y is derived
    /// from the geometry below.
    std::optional<GridAxis> x;
    double theta = 0.0;
    double mass = 1.0;
    double half_separation = 1.0;
    double flight_time = 1.0;
    double hbar = 1.0;
};

struct TripleSlitOptions {
    GridAxis phi{0.0, 3.141592653589793, 51};
    GridAxis theta{0.0, 3.141592653589793, 51};
    GridAxis xplus = GridAxis::fixed(0.0);
    GridAxis xminus = GridAxis::fixed(0.0);
    /// θ is solved from the overall NSIT condition instead of scanned.
    /// Points where the solution is singular produce NaN rows.
    bool nsit_manifold = false;

    /// Defaults of the manifold scan: X+ = 0.001, φ ∈ (0, π), X- ∈ (-π, π), 500 × 500.
    static TripleSlitOptions manifold_defaults();
};

struct OscillatorOptions {
    GridAxis pprime = GridAxis::fixed(-1.0);
    /// ωt for the oscillator, τ = t / 2t_s for the free particle.
    GridAxis control{0.01, 3.13, 1000};
    double omega = 0.5;
    /// Defaults to the coherent-state width for the oscillator and to 1 when free.
    std::optional<double> sigma;
    double mass = 1.0;
    double hbar = 1.0;

    static OscillatorOptions free_defaults();
};

struct ScanConfig {
    System system = System::double_slit;
    Format format = Format::csv;
    std::optional<std::string> output_path;
    double tol = kScanTol;
    DoubleSlitOptions double_slit;
    TripleSlitOptions triple_slit;
    OscillatorOptions oscillator;
};

enum class ColumnKind { real, flag };

/// A scan result: fixed column names, one row per grid point in row-major
/// order over the declared axes. Flags are stored as 0/1; NaN marks an
/// undefined value.
struct Dataset {
    System system = System::double_slit;
    NormUnits units = NormUnits::absolute;
    std::vector<std::string> columns;
    std::vector<ColumnKind> kinds;
    std::vector<std::vector<double>> rows;
};

/// Column names (excluding the trailing `norm` column) for a system.
std::vector<std::string> columns_for(System s);

/// Throws UsageError for invalid ranges (including oscillator grids that
/// touch sin ωt = 0).
void validate(const ScanConfig& cfg);

Dataset run_scan(const ScanConfig& cfg);

/// Shortest round-trip decimal; "nan" for NaN.
std::string format_real(double v);

void write_csv(const Dataset& d, std::ostream& out);
void write_json(const Dataset& d, std::ostream& out);
void write(const Dataset& d, Format f, std::ostream& out);

/// Writes to cfg.output_path, or to `fallback` when no path is set. Throws
/// IoError if the file cannot be written.
void emit(const Dataset& d, const ScanConfig& cfg, std::ostream& fallback);

}  // namespace lg::scan
