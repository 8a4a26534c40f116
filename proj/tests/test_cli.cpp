#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <cavityqed/cavityqed.hpp>

#include "cli/app.hpp"
#include "cli/record.hpp"

using namespace cavityqed;
using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

std::filesystem::path tmp_dir() {
    const char* env = std::getenv("CAVITYQED_TEST_TMP");
    auto p = std::filesystem::path(env ? env : std::filesystem::temp_directory_path().string()) / "cli_tmp";
    std::filesystem::create_directories(p);
    return p;
}

std::string write_tmp(const std::string& name, const std::string& text) {
    const auto p = tmp_dir() / name;
    std::ofstream(p) << text;
    return p.string();
}

double col(const json& j, const std::string& name, std::size_t row) {
    const auto& cols = j["columns"];
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i] == name) return j["rows"][row][i].get<double>();
    ADD_FAILURE() << "no column " << name;
    return 0.0;
}

// Config that puts the single-particle mass pole at lambda0 = e^10.
std::string strong_config() {
    const double re = kCodata2018.e_charge * kCodata2018.e_charge /
                      (4.0 * kPi * kCodata2018.eps0 * kCodata2018.m_e * kCodata2018.c_light * kCodata2018.c_light);
    char buf[256];
    std::snprintf(buf, sizeof buf, "n_electrons = 1\narea = 1e-16\nlz = %.17g\n", re / 0.1);
    return buf;
}

} // namespace

TEST(Sweep, ParseAndValues) {
    const auto s = cli::SweepSpec::parse("w=-1:1:5");
    EXPECT_EQ(s.var, "w");
    EXPECT_EQ(s.values(), (std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0}));
    const auto l = cli::SweepSpec::parse("lambda0=1:100:3:log");
    EXPECT_TRUE(l.log);
    EXPECT_NEAR(l.values()[1], 10.0, 1e-13);
    EXPECT_EQ(l.values()[2], 100.0);
    EXPECT_EQ(cli::SweepSpec::parse(l.to_string()).values(), l.values());
    for (const char* bad : {"w=1:1:5", "w=0:1:1", "w=0:1:2.5", "w=-1:1:5:log", "w=0:1", "=0:1:3", "w=a:1:3", "w=0:1:3:cubic"})
        EXPECT_THROW(cli::SweepSpec::parse(bad), ConfigError) << bad;
}

TEST(Record, HashAndFormatting) {
    EXPECT_EQ(cli::fnv1a(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(cli::fnv1a("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(cli::format_number(0.1, 17), "0.10000000000000001");
    EXPECT_EQ(cli::format_number(0.1, 5), "0.1");
    EXPECT_EQ(cli::round_digits(1.23456789, 3), 1.23);
}

TEST(Phase, ThreeContiguousBands) {
    const auto j = run_json({"phase", "--sweep", "gamma=0:1.2:13"});
    std::vector<std::string> labels;
    for (const auto& r : j["rows"]) labels.push_back(r[2].get<std::string>());
    ASSERT_EQ(labels.size(), 13u);
    int changes = 0;
    for (std::size_t i = 1; i < labels.size(); ++i) changes += labels[i] != labels[i - 1];
    EXPECT_EQ(changes, 2);
    EXPECT_EQ(labels.front(), "stable");
    EXPECT_EQ(labels[10], "critical");
    EXPECT_EQ(labels.back(), "unstable");
}

TEST(Phase, SingleGammaAndGuards) {
    const auto j = run_json({"phase", "--gamma", "0.5"});
    ASSERT_EQ(j["rows"].size(), 1u);
    EXPECT_EQ(j["rows"][0][2], "stable");
    EXPECT_EQ(run({"phase", "--gamma", "-0.1"}).code, cli::kConfig);
    EXPECT_EQ(run({"phase", "--sweep", "gamma=-1:1:3"}).code, cli::kConfig);
    EXPECT_EQ(run({"phase", "--sweep", "w=0:1:3"}).code, cli::kConfig);
}

TEST(Config, DiagnosticsCarryLineAndField) {
    const auto p = write_tmp("bad.cfg", "# cavity\nn_electrons = 1e8\narea = -1\n");
    const auto r = run({"phase", "--config", p});
    EXPECT_EQ(r.code, cli::kConfig);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("area"), std::string::npos) << r.err;

    const auto q = write_tmp("unknown.cfg", "lz = 1e-6\ncolour = blue\n");
    const auto r2 = run({"phase", "--config", q});
    EXPECT_EQ(r2.code, cli::kConfig);
    EXPECT_NE(r2.err.find("line 2"), std::string::npos) << r2.err;
    EXPECT_NE(r2.err.find("colour"), std::string::npos) << r2.err;

    EXPECT_EQ(run({"phase", "--config", (tmp_dir() / "missing.cfg").string()}).code, cli::kConfig);
    EXPECT_EQ(run({"phase", "--digits", "0"}).code, cli::kConfig);
    EXPECT_EQ(run({"phase", "--format", "xml"}).code, cli::kConfig);
    EXPECT_EQ(run({"nonsense"}).code, cli::kConfig);
    EXPECT_EQ(run({}).code, cli::kConfig);
}

TEST(Config, FlagsOverrideFile) {
    const auto p = write_tmp("eta.cfg", "eta = 0.3\nlz = 2e-6\n");
    const auto a = run_json({"response", "aa", "--config", p, "--sweep", "w=-1:1:3"});
    EXPECT_EQ(a["input"]["eta"], 0.3);
    EXPECT_EQ(a["input"]["lz"], 2e-6);
    const auto b = run_json({"response", "aa", "--config", p, "--eta", "0.1", "--sweep", "w=-1:1:3"});
    EXPECT_EQ(b["input"]["eta"], 0.1);
}

TEST(Response, AaParityAndSigmaDrude) {
    const auto aa = run_json({"response", "aa", "--sweep", "w=-4:4:801"});
    EXPECT_LT(aa["summary"]["parity_re_even_residual"].get<double>(), 1e-12);
    EXPECT_LT(aa["summary"]["parity_im_odd_residual"].get<double>(), 1e-12);
    EXPECT_EQ(aa["rows"].size(), 801u);

    const auto sg = run_json({"response", "sigma", "--ratio", "0.5"});
    EXPECT_NEAR(sg["summary"]["gamma"].get<double>(), 0.2, 1e-15);
    EXPECT_NEAR(sg["summary"]["sigma_dc_over_sigma0"].get<double>(), 0.8, 1e-12);
}

TEST(Response, MixedKindsAgreeAndGuards) {
    const auto ja = run_json({"response", "ja", "--sweep", "w=-2:2:41"});
    const auto aj = run_json({"response", "aj", "--sweep", "w=-2:2:41"});
    EXPECT_EQ(ja["rows"], aj["rows"]);
    EXPECT_EQ(run({"response", "aa", "--eta", "0"}).code, cli::kConfig);
    EXPECT_EQ(run({"response", "aa", "--eta", "-1"}).code, cli::kConfig);
    EXPECT_EQ(run({"response", "xx"}).code, cli::kConfig);
    EXPECT_EQ(run({"response", "aa", "--sweep", "lambda0=1:2:3"}).code, cli::kConfig);
    const auto p = write_tmp("ratio.cfg", "units = ratio\nratio = 0.5\n");
    EXPECT_EQ(run({"response", "aa", "--config", p}).code, cli::kConfig);
}

TEST(Eft, MassSweepMonotoneFromBareMass) {
    const auto j = run_json({"eft", "mass"});
    const auto n = j["rows"].size();
    ASSERT_GT(n, 10u);
    EXPECT_EQ(col(j, "mass_ratio", 0), 1.0);
    for (std::size_t i = 1; i < n; ++i) EXPECT_GE(col(j, "mass_ratio", i), col(j, "mass_ratio", i - 1));
    EXPECT_FALSE(j["summary"]["truncated"].get<bool>());
}

TEST(Eft, MassSweepTruncatesAtPole) {
    const auto p = write_tmp("strong.cfg", strong_config());
    const auto j = run_json({"eft", "mass", "--config", p, "--sweep", "lambda0=1:1e6:61:log"});
    EXPECT_TRUE(j["summary"]["truncated"].get<bool>());
    EXPECT_TRUE(j["summary"].contains("notice"));
    const auto n = j["rows"].size();
    ASSERT_GT(n, 2u);
    EXPECT_LT(n, 61u);
    EXPECT_LT(col(j, "lambda0", n - 1), std::exp(10.0));
    EXPECT_GE(j["summary"]["truncated_at_lambda0"].get<double>(), std::exp(10.0));
    for (std::size_t i = 1; i < n; ++i) EXPECT_GT(col(j, "mass_ratio", i), col(j, "mass_ratio", i - 1));
}

TEST(Eft, CasimirZeroAtUnitCutoff) {
    const auto j = run_json({"eft", "casimir"});
    EXPECT_EQ(col(j, "lambda0", 0), 1.0);
    EXPECT_EQ(col(j, "pressure", 0), 0.0);
    EXPECT_EQ(col(j, "energy_density", 0), 0.0);
    for (std::size_t i = 1; i < j["rows"].size(); ++i) EXPECT_GT(col(j, "pressure", i), 0.0);
}

TEST(Eft, ChiBoxProfile) {
    const auto j = run_json({"eft", "chi", "--lambda0", "4", "--sweep", "w=-3:3:600"});
    const double h = j["summary"]["box_height"].get<double>();
    for (std::size_t i = 0; i < j["rows"].size(); ++i) {
        const double x = col(j, "w_over_omega_tilde_kz", i);
        const double im = col(j, "im", i);
        if (x > 1.0 && x < 2.0)
            EXPECT_EQ(im, -h);
        else if (x < -1.0 && x > -2.0)
            EXPECT_EQ(im, h);
        else
            EXPECT_EQ(im, 0.0);
    }
    EXPECT_EQ(run({"eft", "chi", "--eta", "-1"}).code, cli::kConfig);
    EXPECT_EQ(run({"eft", "chi", "--lambda0", "4", "--sweep", "w=0:2:3"}).code, cli::kDomain);
}

TEST(Eft, OtherSubcommands) {
    const auto c = run_json({"eft", "coupling"});
    const auto n = c["rows"].size();
    EXPECT_EQ(col(c, "coupling", 0), 0.0);
    EXPECT_NEAR(col(c, "coupling", n - 1), 1.0, 1e-12);
    const auto mu = run_json({"eft", "mu", "--sweep", "lambda0=1:10:4"});
    EXPECT_EQ(col(mu, "mu_over_free", 0), 1.0);
    const auto jl = run_json({"eft", "jellium"});
    EXPECT_NEAR(jl["summary"]["rs_min"].get<double>(), 3.0 * kPi / (4.0 * std::sqrt(2.0)), 1e-6);
    EXPECT_EQ(run({"eft", "nope"}).code, cli::kConfig);
    EXPECT_EQ(run({"eft", "mass", "--lambda0", "0.5"}).code, cli::kConfig);
    EXPECT_EQ(run({"eft", "mass", "--sweep", "lambda0=0.5:2:3"}).code, cli::kDomain);
    const auto p = write_tmp("ratio2.cfg", "units = ratio\nratio = 0.5\n");
    EXPECT_EQ(run({"eft", "coupling", "--config", p}).code, cli::kConfig);
}

TEST(Manymode, DiagSingleModeIsDressedFrequency) {
    const auto j = run_json({"manymode", "diag"});
    ASSERT_EQ(j["rows"].size(), 1u);
    const double wt = j["summary"]["omega_tilde"].get<double>();
    EXPECT_NEAR(col(j, "Omega", 0) / wt, 1.0, 1e-15);
    const auto r = run_json({"manymode", "diag", "--modes", "1", "--ratio", "0.75", "--config",
                             write_tmp("ratio3.cfg", "units = ratio\n")});
    EXPECT_NEAR(col(r, "Omega", 0), 1.25, 1e-15);
}

TEST(Manymode, LowestScanMatchesLibrary) {
    const auto j = run_json({"manymode", "lowest-scan", "--modes", "100"});
    const std::vector<double> ratios{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    ASSERT_EQ(j["rows"].size(), ratios.size());
    EXPECT_EQ(col(j, "rel_diff_percent", 0), 0.0);
    for (std::size_t i = 0; i + 1 < ratios.size(); ++i) EXPECT_LT(col(j, "rel_diff_percent", i), 10.0);
    EXPECT_NEAR(col(j, "rel_diff_percent", 9), 10.310954889011859, 1e-9);
    EXPECT_NEAR(col(j, "rel_diff_cutoff_percent", 9), 9.347172181934342, 1e-9);
}

TEST(Manymode, CouplingRunMonotone) {
    const auto j = run_json({"manymode", "coupling-run", "--modes", "60", "--ratio", "0.5"});
    ASSERT_EQ(j["rows"].size(), 60u);
    EXPECT_TRUE(j["summary"]["monotone"].get<bool>());
    for (std::size_t i = 1; i < 60; ++i) EXPECT_GT(col(j, "g_ex", i), col(j, "g_ex", i - 1));
    EXPECT_NEAR(col(j, "g_ex", 0), 0.2, 1e-15);
}

TEST(Manymode, ConvergenceFailureExitCode) {
    const auto cfg = write_tmp("ratio4.cfg", "units = ratio\nratio = 2\n");
    const auto r = run({"manymode", "diag", "--config", cfg, "--modes", "40", "--max-sweeps", "1"});
    EXPECT_EQ(r.code, cli::kConvergence);
    EXPECT_NE(r.err.find("1 sweeps"), std::string::npos) << r.err;
    EXPECT_EQ(run({"manymode", "diag", "--modes", "0"}).code, cli::kConfig);
    EXPECT_EQ(run({"manymode", "diag", "--backend", "lapack"}).code, cli::kConfig);
    EXPECT_EQ(run({"manymode", "diag", "--sweep", "ratio=0:1:3"}).code, cli::kConfig);
}

TEST(Output, DeterministicCsvWithProvenance) {
    const auto a = run({"response", "jj", "--sweep", "w=-2:2:21"});
    const auto b = run({"response", "jj", "--sweep", "w=-2:2:21"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("# command: response jj\n", 0), 0u);
    EXPECT_NE(a.out.find("# config_hash: "), std::string::npos);
    EXPECT_NE(a.out.find("\nw_over_omega_tilde,w,re,im\n"), std::string::npos);

    std::istringstream lines(a.out);
    std::string line;
    int data = 0;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#' && line[0] != 'w') {
            ++data;
            EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3) << line;
        }
    EXPECT_EQ(data, 21);
}

TEST(Output, DigitsAndOutFile) {
    const auto r = run({"phase", "--sweep", "gamma=0:0.3:4", "--digits", "3"});
    EXPECT_NE(r.out.find("\n0.1,0,stable\n"), std::string::npos) << r.out;
    const auto path = (tmp_dir() / "out.csv").string();
    ASSERT_EQ(run({"phase", "--gamma", "0.25", "--out", path}).code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_NE(ss.str().find("0.25,0,stable"), std::string::npos);
}

TEST(Output, JsonRoundTripIsByteIdentical) {
    const std::vector<std::vector<std::string>> cmds{
        {"response", "sigma", "--ratio", "0.5", "--sweep", "w=-1:1:11", "--eta", "0.02"},
        {"eft", "jellium", "--lambda0", "3"},
        {"manymode", "coupling-run", "--modes", "20", "--ratio", "0.7"},
        {"phase", "--sweep", "gamma=0:2:5"},
    };
    for (const auto& c : cmds) {
        auto first = c;
        first.insert(first.end(), {"--format", "json"});
        const auto a = run(first);
        ASSERT_EQ(a.code, 0) << a.err;
        const auto path = write_tmp("round.json", a.out);
        std::vector<std::string> again(c.begin(), c.begin() + (c[0] == "phase" ? 1 : 2));
        again.insert(again.end(), {"--config", path, "--format", "json"});
        const auto b = run(again);
        ASSERT_EQ(b.code, 0) << b.err;
        EXPECT_EQ(a.out, b.out) << c[0];
    }
}
