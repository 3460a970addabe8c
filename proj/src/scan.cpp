#include "lg/scan.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>

#include <json.hpp>

#include "lg/double_slit.hpp"
#include "lg/oscillator.hpp"
#include "lg/parallel.hpp"
#include "lg/triple_slit.hpp"

namespace lg::scan {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

double flag(bool b) { return b ? 1.0 : 0.0; }

void check_axis(const GridAxis& axis, const std::string& name) {
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max)) {
        throw UsageError(name + ": range bounds must be finite");
    }
    if (axis.steps == 1) {
        if (axis.min != axis.max) {
            throw UsageError(name + ": a fixed value needs min == max");
        }
        return;
    }
    if (axis.steps < 2) {
        throw UsageError(name + ": a swept range needs at least 2 steps");
    }
    if (!(axis.max > axis.min)) {
        throw UsageError(name + ": range max must exceed min");
    }
}

void check_positive(double v, const std::string& name) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw UsageError(name + " must be positive");
    }
}

std::size_t product(std::initializer_list<std::size_t> sizes) {
    std::size_t n = 1;
    for (auto s : sizes) {
        n *= s;
    }
    return n;
}

std::vector<ColumnKind> kinds_for(System s) {
    using K = ColumnKind;
    switch (s) {
        case System::double_slit:
            return {K::real, K::real, K::real, K::real, K::real, K::flag, K::flag};
        case System::triple_slit:
            return {K::real, K::real, K::real, K::real, K::real, K::real,
                    K::real, K::real, K::flag, K::flag, K::real};
        case System::sho:
        case System::free:
            return std::vector<K>(8, K::real);
    }
    return {};
}

Dataset make_dataset(System s, NormUnits units, std::size_t n) {
    Dataset d;
    d.system = s;
    d.units = units;
    d.columns = columns_for(s);
    d.kinds = kinds_for(s);
    d.rows.resize(n);
    return d;
}

Dataset scan_double(const ScanConfig& cfg) {
    const auto& o = cfg.double_slit;
    const GridAxis& second = o.x ? *o.x : o.Y;
    const std::size_t n2 = second.size();
    auto d = make_dataset(System::double_slit, NormUnits::per_nt2, o.phi.size() * n2);
    parallel_for(d.rows.size(), [&](std::size_t idx) {
        const double phi = o.phi.at(idx / n2);
        const double v = second.at(idx % n2);
        const double theta = o.x ? o.theta : 0.0;
        double_slit::ScreenPhaseDouble sp{v};
        if (o.x) {
            sp = double_slit::ScreenPhaseDouble::from_geometry(
                {o.mass, v, o.half_separation, o.flight_time, o.hbar}, theta);
        }
        const double_slit::SlitStateDouble state{phi, theta};
        const auto q = double_slit::densities(state, sp);
        const auto c = double_slit::classify(state, sp, cfg.tol);
        d.rows[idx] = {phi, sp.Y, q.q_plus, q.q_minus, q.p2, flag(c.destructive), flag(c.lg_violated)};
    });
    return d;
}

std::vector<double> triple_row(double phi, double theta, double xp, double xm, double tol) {
    const triple_slit::SlitStateTriple state{theta, phi, 0.0, 0.0};
    const triple_slit::ScreenPhaseTriple sp{xp, xm};
    const auto q = triple_slit::quasi_densities(state, sp);
    const auto c = triple_slit::classify_triple(state, sp, tol);
    return {phi,     theta,   xp,
            xm,      q.q_plus, q.q_minus,
            q.q_zero, q.p2,   flag(c.nsit_overall.value_or(false)),
            flag(c.lg_violated), triple_slit::quasi_vn_plus(state, sp)};
}

Dataset scan_triple(const ScanConfig& cfg) {
    const auto& o = cfg.triple_slit;
    auto d = make_dataset(System::triple_slit, NormUnits::per_nt2, 0);
    if (o.nsit_manifold) {
        const std::size_t nxp = o.xplus.size();
        const std::size_t nxm = o.xminus.size();
        d.rows.resize(product({o.phi.size(), nxp, nxm}));
        parallel_for(d.rows.size(), [&](std::size_t idx) {
            const double phi = o.phi.at(idx / (nxp * nxm));
            const double xp = o.xplus.at((idx / nxm) % nxp);
            const double xm = o.xminus.at(idx % nxm);
            try {
                const double theta = triple_slit::nsit_theta_solution(phi, {xp, xm});
                d.rows[idx] = triple_row(phi, theta, xp, xm, cfg.tol);
            } catch (const triple_slit::SingularManifoldError&) {
                std::vector<double> row(d.columns.size(), kNaN);
                row[0] = phi;
                row[2] = xp;
                row[3] = xm;
                d.rows[idx] = std::move(row);
            }
        });
        return d;
    }
    const std::size_t nth = o.theta.size();
    const std::size_t nxp = o.xplus.size();
    const std::size_t nxm = o.xminus.size();
    d.rows.resize(product({o.phi.size(), nth, nxp, nxm}));
    parallel_for(d.rows.size(), [&](std::size_t idx) {
        const double xm = o.xminus.at(idx % nxm);
        const double xp = o.xplus.at((idx / nxm) % nxp);
        const double theta = o.theta.at((idx / (nxm * nxp)) % nth);
        const double phi = o.phi.at(idx / (nxm * nxp * nth));
        d.rows[idx] = triple_row(phi, theta, xp, xm, cfg.tol);
    });
    return d;
}

sho::OscillatorParams oscillator_template(const ScanConfig& cfg) {
    const auto& o = cfg.oscillator;
    sho::OscillatorParams p;
    p.mass = o.mass;
    p.hbar = o.hbar;
    if (cfg.system == System::free) {
        p.omega = 0.0;
        p.sigma = o.sigma.value_or(1.0);
    } else {
        p.omega = o.omega;
        p.sigma = o.sigma.value_or(std::sqrt(o.hbar / (2.0 * o.mass * o.omega)));
    }
    return p;
}

Dataset scan_oscillator(const ScanConfig& cfg) {
    const auto& o = cfg.oscillator;
    const auto samples = sho::scan_samples(oscillator_template(cfg), o.control, o.pprime);
    auto d = make_dataset(cfg.system, NormUnits::absolute, 0);
    d.rows.reserve(samples.size());
    for (const auto& s : samples) {
        d.rows.push_back({s.pprime, s.control, s.q_pp, s.q_pm, s.q_mp, s.q_mm, s.mean2, s.c12});
    }
    return d;
}

}  // namespace

std::string to_string(System s) {
    switch (s) {
        case System::double_slit: return "double-slit";
        case System::triple_slit: return "triple-slit";
        case System::sho: return "sho";
        case System::free: return "free";
    }
    return "unknown";
}

std::string to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

System parse_system(const std::string& name) {
    for (System s : {System::double_slit, System::triple_slit, System::sho, System::free}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw UsageError("unknown system '" + name + "'");
}

Format parse_format(const std::string& name) {
    if (name == "csv") {
        return Format::csv;
    }
    if (name == "json") {
        return Format::json;
    }
    throw UsageError("unknown format '" + name + "' (expected csv or json)");
}

TripleSlitOptions TripleSlitOptions::manifold_defaults() {
    TripleSlitOptions o;
    o.nsit_manifold = true;
    o.phi = {1e-3, kPi - 1e-3, 500};
    o.xplus = GridAxis::fixed(0.001);
    o.xminus = {-kPi + 1e-3, kPi - 1e-3, 500};
    return o;
}

OscillatorOptions OscillatorOptions::free_defaults() {
    OscillatorOptions o;
    o.control = {0.01, 10.0, 1000};
    return o;
}

std::vector<std::string> columns_for(System s) {
    switch (s) {
        case System::double_slit:
            return {"phi", "Y", "q_plus", "q_minus", "p2", "destructive", "lg_violated"};
        case System::triple_slit:
            return {"phi",     "theta", "xplus", "xminus",       "q_plus",     "q_minus",
                    "q_zero", "p2",    "nsit_overall", "lg_violated", "vn_plus"};
        case System::sho:
            return {"pprime", "omegat", "q_pp", "q_pm", "q_mp", "q_mm", "mean2", "c12"};
        case System::free:
            return {"pprime", "tau", "q_pp", "q_pm", "q_mp", "q_mm", "mean2", "c12"};
    }
    return {};
}

void validate(const ScanConfig& cfg) {
    if (!(cfg.tol >= 0.0) || !std::isfinite(cfg.tol)) {
        throw UsageError("tolerance must be a non-negative number");
    }
    switch (cfg.system) {
        case System::double_slit: {
            const auto& o = cfg.double_slit;
            check_axis(o.phi, "phi");
            if (o.x) {
                check_axis(*o.x, "x");
                check_positive(o.mass, "mass");
                check_positive(o.half_separation, "half separation");
                check_positive(o.flight_time, "flight time");
                check_positive(o.hbar, "hbar");
            } else {
                check_axis(o.Y, "Y");
            }
            break;
        }
        case System::triple_slit: {
            const auto& o = cfg.triple_slit;
            check_axis(o.phi, "phi");
            if (!o.nsit_manifold) {
                check_axis(o.theta, "theta");
            }
            check_axis(o.xplus, "xplus");
            check_axis(o.xminus, "xminus");
            break;
        }
        case System::sho:
        case System::free: {
            const auto& o = cfg.oscillator;
            const bool free = cfg.system == System::free;
            const std::string control = free ? "tau" : "omegat";
            check_axis(o.pprime, "pprime");
            check_axis(o.control, control);
            check_positive(o.mass, "mass");
            check_positive(o.hbar, "hbar");
            if (o.sigma) {
                check_positive(*o.sigma, "sigma");
            }
            if (!free) {
                check_positive(o.omega, "omega");
            }
            for (double v : o.control.values()) {
                if (!(v > 0.0)) {
                    throw UsageError(control + " must be positive on the whole grid");
                }
                if (!free && std::abs(std::sin(v)) <= kMinScanSin) {
                    throw UsageError("omegat grid touches a singular time (|sin omega t| <= 1e-6)");
                }
            }
            break;
        }
    }
}

Dataset run_scan(const ScanConfig& cfg) {
    validate(cfg);
    switch (cfg.system) {
        case System::double_slit: return scan_double(cfg);
        case System::triple_slit: return scan_triple(cfg);
        case System::sho:
        case System::free: return scan_oscillator(cfg);
    }
    throw UsageError("unknown system");
}

std::string format_real(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ec == std::errc{} ? end : buf);
}

void write_csv(const Dataset& d, std::ostream& out) {
    for (const auto& c : d.columns) {
        out << c << ',';
    }
    out << "norm\n";
    const std::string norm = to_string(d.units);
    for (const auto& row : d.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (d.kinds[j] == ColumnKind::flag && !std::isnan(row[j])) {
                out << (row[j] != 0.0 ? '1' : '0');
            } else {
                out << format_real(row[j]);
            }
            out << ',';
        }
        out << norm << '\n';
    }
}

void write_json(const Dataset& d, std::ostream& out) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : d.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (std::isnan(row[j])) {
                r.push_back(nullptr);
            } else if (d.kinds[j] == ColumnKind::flag) {
                r.push_back(row[j] != 0.0 ? 1 : 0);
            } else {
                r.push_back(row[j]);
            }
        }
        rows.push_back(std::move(r));
    }
    const nlohmann::json doc{{"system", to_string(d.system)},
                             {"norm", to_string(d.units)},
                             {"columns", d.columns},
                             {"rows", std::move(rows)}};
    out << doc.dump() << '\n';
}

void write(const Dataset& d, Format f, std::ostream& out) {
    if (f == Format::csv) {
        write_csv(d, out);
    } else {
        write_json(d, out);
    }
}

void emit(const Dataset& d, const ScanConfig& cfg, std::ostream& fallback) {
    if (!cfg.output_path) {
        write(d, cfg.format, fallback);
        fallback.flush();
        return;
    }
    std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + *cfg.output_path + "' for writing");
    }
    write(d, cfg.format, file);
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + *cfg.output_path + "'");
    }
}

}  // namespace lg::scan
