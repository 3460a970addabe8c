#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lg/goldens.hpp"
#include "lg/grid.hpp"
#include "lg/parallel.hpp"
#include "lg/scan.hpp"

namespace {

using namespace lg::scan;
using lg::GridAxis;
constexpr double kPi = std::numbers::pi;

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::string csv(const ScanConfig& cfg) {
    std::ostringstream out;
    write_csv(run_scan(cfg), out);
    return out.str();
}

TEST(GridAxis, Parse) {
    const auto a = GridAxis::parse("0:3.5:8");
    EXPECT_EQ(a.min, 0.0);
    EXPECT_EQ(a.max, 3.5);
    EXPECT_EQ(a.steps, 8);
    EXPECT_EQ(a.values().front(), 0.0);
    EXPECT_EQ(a.values().back(), 3.5);
    EXPECT_EQ(a.values().size(), 8u);
    EXPECT_EQ(a.at(1), 0.5);
    const auto f = GridAxis::parse("-1");
    EXPECT_EQ(f.steps, 1);
    EXPECT_EQ(f.values(), std::vector<double>{-1.0});
    for (const char* bad : {"", "1:2", "1:2:1", "1:2:0", "2:1:5", "a:1:3", "0:1:3:4", "0:1:x", "nan"}) {
        EXPECT_THROW(GridAxis::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Parallel, VisitsEveryIndexOnce) {
    std::vector<int> hits(1000, 0);
    lg::parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; }, 8);
    for (int h : hits) {
        EXPECT_EQ(h, 1);
    }
    EXPECT_THROW(lg::parallel_for(10, [](std::size_t i) { if (i == 7) throw std::runtime_error("x"); }, 4),
                 std::runtime_error);
}

TEST(Format, ShortestRoundTrip) {
    EXPECT_EQ(format_real(0.1), "0.1");
    EXPECT_EQ(format_real(-1.0), "-1");
    EXPECT_EQ(format_real(1e-20), "1e-20");
    EXPECT_EQ(format_real(NAN), "nan");
    const double v = (1.0 - std::numbers::sqrt2) / 2.0;
    const std::string s = format_real(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    EXPECT_EQ(back, v);
}

TEST(Scan, DoubleSlitCsvSchema) {
    ScanConfig cfg;
    cfg.double_slit.phi = {0.0, kPi, 4};
    cfg.double_slit.Y = {-kPi, kPi, 5};
    const auto lines = lines_of(csv(cfg));
    ASSERT_EQ(lines.size(), 1u + 20u);
    EXPECT_EQ(lines[0], "phi,Y,q_plus,q_minus,p2,destructive,lg_violated,norm");
    // Row-major: Y varies fastest.
    EXPECT_EQ(lines[1].substr(0, lines[1].find(',', 2)), "0,-3.141592653589793");
    EXPECT_EQ(lines[2].substr(0, 2), "0,");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        EXPECT_TRUE(lines[i].ends_with(",per_Nt2"));
    }
}

TEST(Scan, DoubleSlitFlagsMatchClassification) {
    ScanConfig cfg;
    cfg.double_slit.phi = GridAxis::fixed(5.0 * kPi / 8.0);
    cfg.double_slit.Y = GridAxis::fixed(0.0);
    const auto d = run_scan(cfg);
    ASSERT_EQ(d.rows.size(), 1u);
    EXPECT_NEAR(d.rows[0][2], (1.0 - std::numbers::sqrt2) / 2.0, 1e-12);
    EXPECT_EQ(d.rows[0][5], 1.0);
    EXPECT_EQ(d.rows[0][6], 1.0);
    const auto lines = lines_of(csv(cfg));
    EXPECT_TRUE(lines[1].ends_with(",1,1,per_Nt2"));
}

TEST(Scan, DoubleSlitGeometryDerivesY) {
    ScanConfig cfg;
    cfg.double_slit.phi = GridAxis::fixed(0.3);
    cfg.double_slit.x = GridAxis{-1.0, 1.0, 3};
    cfg.double_slit.theta = 0.2;
    cfg.double_slit.mass = 2.0;
    cfg.double_slit.flight_time = 4.0;
    const auto d = run_scan(cfg);
    ASSERT_EQ(d.rows.size(), 3u);
    EXPECT_NEAR(d.rows[0][1], 2.0 * 2.0 * -1.0 * 1.0 / 4.0 - 0.2, 1e-12);
    EXPECT_NEAR(d.rows[2][1], 2.0 * 2.0 * 1.0 * 1.0 / 4.0 - 0.2, 1e-12);
}

TEST(Scan, TripleSlitSchemaAndOrder) {
    ScanConfig cfg;
    cfg.system = System::triple_slit;
    cfg.triple_slit.phi = {0.1, 1.0, 2};
    cfg.triple_slit.theta = {0.2, 0.4, 3};
    cfg.triple_slit.xplus = GridAxis::fixed(0.0);
    cfg.triple_slit.xminus = {0.0, 1.0, 2};
    const auto d = run_scan(cfg);
    EXPECT_EQ(d.rows.size(), 12u);
    EXPECT_EQ(d.rows[0][0], 0.1);
    EXPECT_EQ(d.rows[1][3], 1.0);
    EXPECT_EQ(d.rows[2][1], 0.30000000000000004);
    EXPECT_EQ(d.rows[6][0], 1.0);
    const auto lines = lines_of(csv(cfg));
    EXPECT_EQ(lines[0],
              "phi,theta,xplus,xminus,q_plus,q_minus,q_zero,p2,nsit_overall,lg_violated,vn_plus,norm");
}

TEST(Scan, NsitManifoldHasViolationsAndNanRows) {
    ScanConfig cfg;
    cfg.system = System::triple_slit;
    cfg.triple_slit = TripleSlitOptions::manifold_defaults();
    cfg.triple_slit.phi = {0.0, kPi, 101};
    cfg.triple_slit.xminus = {-kPi, kPi, 101};
    const auto d = run_scan(cfg);
    ASSERT_EQ(d.rows.size(), 101u * 101u);
    std::size_t nan_rows = 0;
    std::size_t violated = 0;
    for (const auto& r : d.rows) {
        if (std::isnan(r[1])) {
            ++nan_rows;
            EXPECT_FALSE(std::isnan(r[0]));
            continue;
        }
        EXPECT_EQ(r[8], 1.0);
        violated += r[9] == 1.0;
    }
    EXPECT_GT(nan_rows, 0u);  // φ = 0 and φ = π are singular
    EXPECT_GT(violated, 0u);
    std::ostringstream out;
    write_json(d, out);
    const auto j = nlohmann::json::parse(out.str());
    EXPECT_TRUE(j["rows"][0][1].is_null());
}

TEST(Scan, OscillatorSchema) {
    ScanConfig cfg;
    cfg.system = System::sho;
    cfg.oscillator.control = {0.01, 3.13, 50};
    const auto lines = lines_of(csv(cfg));
    ASSERT_EQ(lines.size(), 51u);
    EXPECT_EQ(lines[0], "pprime,omegat,q_pp,q_pm,q_mp,q_mm,mean2,c12,norm");
    EXPECT_TRUE(lines[1].starts_with("-1,0.01,"));
    EXPECT_TRUE(lines[1].ends_with(",abs"));

    cfg.system = System::free;
    cfg.oscillator = OscillatorOptions::free_defaults();
    cfg.oscillator.control = {0.5, 1.0, 2};
    EXPECT_EQ(lines_of(csv(cfg))[0], "pprime,tau,q_pp,q_pm,q_mp,q_mm,mean2,c12,norm");
}

TEST(Scan, JsonDocument) {
    ScanConfig cfg;
    cfg.double_slit.phi = {0.0, 1.0, 2};
    cfg.double_slit.Y = {0.0, 1.0, 3};
    std::ostringstream out;
    write_json(run_scan(cfg), out);
    const auto j = nlohmann::json::parse(out.str());
    EXPECT_EQ(j["system"], "double-slit");
    EXPECT_EQ(j["norm"], "per_Nt2");
    EXPECT_EQ(j["columns"].size(), 7u);
    EXPECT_EQ(j["rows"].size(), 6u);
    EXPECT_TRUE(j["rows"][0][5].is_number_integer());
}

TEST(Scan, RowCountIsProductOfSteps) {
    ScanConfig cfg;
    cfg.system = System::triple_slit;
    cfg.triple_slit.phi = {0.0, 1.0, 3};
    cfg.triple_slit.theta = {0.0, 1.0, 4};
    cfg.triple_slit.xplus = {0.0, 1.0, 5};
    cfg.triple_slit.xminus = {0.0, 1.0, 2};
    EXPECT_EQ(run_scan(cfg).rows.size(), 3u * 4u * 5u * 2u);
}

TEST(Scan, DeterministicAcrossThreadCounts) {
    ScanConfig cfg;
    cfg.system = System::sho;
    cfg.oscillator.pprime = {-2.0, 2.0, 7};
    cfg.oscillator.control = {0.05, 3.0, 90};
    setenv("LG_SCAN_THREADS", "1", 1);
    const std::string serial = csv(cfg);
    setenv("LG_SCAN_THREADS", "7", 1);
    const std::string parallel = csv(cfg);
    unsetenv("LG_SCAN_THREADS");
    EXPECT_EQ(serial, parallel);
    EXPECT_EQ(csv(cfg), serial);
}

TEST(Scan, ValidationErrors) {
    ScanConfig cfg;
    cfg.system = System::sho;
    cfg.oscillator.control = {0.5, kPi, 10};
    EXPECT_THROW(run_scan(cfg), UsageError);
    cfg.oscillator.control = {-0.5, 1.0, 10};
    EXPECT_THROW(run_scan(cfg), UsageError);
    cfg.oscillator.control = {0.5, 1.0, 10};
    cfg.oscillator.omega = 0.0;
    EXPECT_THROW(run_scan(cfg), UsageError);

    ScanConfig ds;
    ds.double_slit.phi = {1.0, 0.0, 4};
    EXPECT_THROW(run_scan(ds), UsageError);
    ds.double_slit.phi = {0.0, 1.0, 0};
    EXPECT_THROW(run_scan(ds), UsageError);
    ds.double_slit.phi = {0.0, 1.0, 1};
    EXPECT_THROW(run_scan(ds), UsageError);

    EXPECT_THROW(parse_format("xml"), UsageError);
    EXPECT_THROW(parse_system("quad-slit"), UsageError);
    EXPECT_EQ(parse_system("free"), System::free);
}

TEST(Scan, EmitToUnwritablePathIsIoError) {
    ScanConfig cfg;
    cfg.double_slit.phi = GridAxis::fixed(0.1);
    cfg.double_slit.Y = GridAxis::fixed(0.1);
    cfg.output_path = "/nonexistent-dir/out.csv";
    std::ostringstream fallback;
    EXPECT_THROW(emit(run_scan(cfg), cfg, fallback), IoError);
}

TEST(Goldens, AllPassAndAreDeterministic) {
    const auto r = lg::goldens::verify_goldens();
    EXPECT_TRUE(r.all_passed());
    EXPECT_EQ(r.results.size(), lg::goldens::golden_names().size());
    std::ostringstream a;
    std::ostringstream b;
    lg::goldens::print_report(r, a);
    lg::goldens::print_report(lg::goldens::verify_goldens(), b);
    EXPECT_EQ(a.str(), b.str());
}

TEST(Goldens, PerturbationFailsNamedGolden) {
    const auto r = lg::goldens::verify_goldens({{"triple_slit_q_zero_min", 1e-6}});
    EXPECT_FALSE(r.all_passed());
    for (const auto& g : r.results) {
        EXPECT_EQ(g.passed, g.name != "triple_slit_q_zero_min") << g.name;
    }
    std::ostringstream out;
    lg::goldens::print_report(r, out);
    EXPECT_NE(out.str().find("FAIL triple_slit_q_zero_min"), std::string::npos);
    EXPECT_NE(out.str().find("1 of 7 goldens failed: triple_slit_q_zero_min"), std::string::npos);

    EXPECT_FALSE(lg::goldens::verify_goldens({{"luders_bound", -1.0}}).all_passed());
    EXPECT_THROW(lg::goldens::verify_goldens({{"no_such_golden", 1.0}}), std::invalid_argument);
}

}  // namespace
