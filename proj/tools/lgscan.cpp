// lgscan: parameter sweeps and golden-number checks for the LG library.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lg/goldens.hpp"
#include "lg/scan.hpp"

namespace {

using lg::GridAxis;
using namespace lg::scan;

struct RangeFlags {
    std::map<std::string, std::string> text;

    void add(CLI::App* app, const std::string& name, const std::string& help) {
        app->add_option("--" + name, text[name], help + " (min:max:steps or a value)");
    }

    std::optional<GridAxis> get(const std::string& name) const {
        const auto it = text.find(name);
        if (it == text.end() || it->second.empty()) {
            return std::nullopt;
        }
        try {
            return GridAxis::parse(it->second);
        } catch (const std::invalid_argument& e) {
            throw UsageError("--" + name + ": " + e.what());
        }
    }
};

void apply(std::optional<GridAxis> v, GridAxis& target) {
    if (v) {
        target = *v;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-time Leggett-Garg quasi-probability scans"};
    app.require_subcommand(1);

    ScanConfig cfg;
    std::string out_path;
    std::string format = "csv";
    double tol = lg::kScanTol;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "output file (default: stdout)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--tol", tol, "tolerance for sign flags");
    };

    RangeFlags ranges;

    auto* ds = app.add_subcommand("double-slit", "scan the double slit over (phi, Y)");
    common(ds);
    ranges.add(ds, "phi", "slit amplitude angle");
    ranges.add(ds, "Y", "reduced screen phase");
    auto* ds_x = ds->add_option("--x", ranges.text["x"],
                                "screen coordinate; Y is derived from the geometry");
    ds->get_option("--Y")->excludes(ds_x);
    ds->add_option("--theta", cfg.double_slit.theta, "relative slit phase (with --x)");
    ds->add_option("--mass", cfg.double_slit.mass, "particle mass (with --x)");
    ds->add_option("--L", cfg.double_slit.half_separation, "slit half separation (with --x)");
    ds->add_option("--tau", cfg.double_slit.flight_time, "flight time to the screen (with --x)");
    ds->add_option("--hbar", cfg.double_slit.hbar, "action constant (with --x)");

    auto* ts = app.add_subcommand("triple-slit", "scan the triple slit over (phi, theta, X+, X-)");
    common(ts);
    bool manifold = false;
    ts->add_option("--phi", ranges.text["tphi"], "slit amplitude angle (min:max:steps or a value)");
    ts->add_option("--theta", ranges.text["ttheta"], "centre-slit angle (min:max:steps or a value)");
    ts->add_option("--xplus", ranges.text["xplus"], "reduced phase X+ (min:max:steps or a value)");
    ts->add_option("--xminus", ranges.text["xminus"], "reduced phase X- (min:max:steps or a value)");
    auto* nsit_flag = ts->add_flag("--nsit-manifold", manifold, "solve theta from the overall NSIT condition");
    ts->get_option("--theta")->excludes(nsit_flag);

    std::optional<double> sigma;
    auto oscillator = [&](CLI::App* sub, const std::string& control, const std::string& help) {
        common(sub);
        sub->add_option("--pprime", ranges.text[sub->get_name() + "pprime"],
                        "dimensionless momentum p0 sigma / hbar (min:max:steps or a value)");
        sub->add_option("--" + control, ranges.text[sub->get_name() + control],
                        help + " (min:max:steps or a value)");
        sub->add_option("--sigma", sigma, "initial width");
        sub->add_option("--mass", cfg.oscillator.mass, "particle mass");
        sub->add_option("--hbar", cfg.oscillator.hbar, "action constant");
    };
    auto* sho = app.add_subcommand("sho", "scan the harmonic oscillator over (p', omega t)");
    oscillator(sho, "omegat", "phase omega t");
    sho->add_option("--omega", cfg.oscillator.omega, "oscillator frequency (sigma defaults to the coherent width)");
    auto* fr = app.add_subcommand("free", "scan the free particle over (p', tau)");
    oscillator(fr, "tau", "reduced time t / 2 t_s");

    auto* verify = app.add_subcommand("verify", "check the golden numbers");
    std::vector<std::string> perturb_items;
    verify->add_option("--perturb", perturb_items, "name=delta added to an observed golden (testing)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (verify->parsed()) {
        std::map<std::string, double> perturb;
        for (const auto& item : perturb_items) {
            const auto eq = item.find('=');
            try {
                if (eq == std::string::npos) {
                    throw std::invalid_argument("expected name=delta");
                }
                std::size_t used = 0;
                const std::string delta = item.substr(eq + 1);
                perturb[item.substr(0, eq)] = std::stod(delta, &used);
                if (used != delta.size()) {
                    throw std::invalid_argument("trailing characters");
                }
            } catch (const std::exception& e) {
                std::cerr << "error: --perturb '" << item << "': " << e.what() << '\n';
                return kExitUsage;
            }
        }
        try {
            const auto report = lg::goldens::verify_goldens(perturb);
            lg::goldens::print_report(report, std::cout);
            return report.all_passed() ? kExitOk : kExitVerifyFailed;
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }

    try {
        cfg.format = parse_format(format);
        cfg.tol = tol;
        if (!out_path.empty()) {
            cfg.output_path = out_path;
        }
        if (ds->parsed()) {
            cfg.system = System::double_slit;
            apply(ranges.get("phi"), cfg.double_slit.phi);
            apply(ranges.get("Y"), cfg.double_slit.Y);
            cfg.double_slit.x = ranges.get("x");
        } else if (ts->parsed()) {
            cfg.system = System::triple_slit;
            if (manifold) {
                cfg.triple_slit = TripleSlitOptions::manifold_defaults();
            }
            apply(ranges.get("tphi"), cfg.triple_slit.phi);
            apply(ranges.get("ttheta"), cfg.triple_slit.theta);
            apply(ranges.get("xplus"), cfg.triple_slit.xplus);
            apply(ranges.get("xminus"), cfg.triple_slit.xminus);
        } else {
            const bool free = fr->parsed();
            cfg.system = free ? System::free : System::sho;
            if (free) {
                const double omega = cfg.oscillator.omega;
                const double mass = cfg.oscillator.mass;
                const double hbar = cfg.oscillator.hbar;
                cfg.oscillator = OscillatorOptions::free_defaults();
                cfg.oscillator.omega = omega;
                cfg.oscillator.mass = mass;
                cfg.oscillator.hbar = hbar;
            }
            const std::string name = free ? "free" : "sho";
            apply(ranges.get(name + "pprime"), cfg.oscillator.pprime);
            apply(ranges.get(name + (free ? "tau" : "omegat")), cfg.oscillator.control);
            cfg.oscillator.sigma = sigma;
        }
        const auto data = run_scan(cfg);
        emit(data, cfg, std::cout);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
