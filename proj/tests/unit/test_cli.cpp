#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <selzeta/cli.hpp>

#include "helpers.hpp"

using namespace selzeta;

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

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::path(SELZETA_TEST_DATA) / "cli_scratch";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::map<std::string, std::string> report(const std::string& csv) {
    std::map<std::string, std::string> kv;
    std::istringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    EXPECT_EQ(line, "key,value");
    while (std::getline(ss, line)) {
        const auto c = line.find(',');
        kv[line.substr(0, c)] = line.substr(c + 1);
    }
    return kv;
}

}  // namespace

TEST(Cli, DeltaForReferenceSurface) {
    const auto r = run({"delta", "--b", "4.71238898", "--n", "14"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(std::stod(r.out), 0.1469, 2e-4);
}

TEST(Cli, SpectrumCounts) {
    const auto r = run({"spectrum", "--b", "4", "--m", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream ss(r.out);
    std::string line;
    std::getline(ss, line);
    EXPECT_EQ(line, "m,length,count");
    std::vector<std::string> counts;
    while (std::getline(ss, line)) counts.push_back(line.substr(line.rfind(',') + 1));
    EXPECT_EQ(counts, (std::vector<std::string>{"6", "36", "18", "6"}));
}

TEST(Cli, EmptyPartialSum) {
    const auto r = run({"eval", "--b", "4", "--n", "0", "--s", "0.3+2i"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1+0i\n");
}

TEST(Cli, EvalAgreesWithLibrary) {
    const auto r = run({"eval", "--b", "5", "--n", "10", "--s", "0.05+31.5i"});
    ASSERT_EQ(r.code, 0) << r.err;
    const cplx z = evaluate_Zn(cplx{0.05, 31.5}, 10, make_coefficient_table(make_surface(5.0), 10));
    EXPECT_EQ(r.out, format_complex(z) + "\n");
}

TEST(Cli, UsageErrors) {
    auto r = run({"frobnicate"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
    r = run({});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(run({"delta"}).code, 2);
    EXPECT_EQ(run({"delta", "--b", "-1"}).code, 2);
    EXPECT_EQ(run({"delta", "--b", "4", "--n", "7"}).code, 2);
    EXPECT_EQ(run({"delta", "--b", "4", "--n", "18"}).code, 2);
    EXPECT_EQ(run({"eval", "--b", "4", "--s", "nonsense"}).code, 2);
    EXPECT_EQ(run({"zeros", "--b", "4"}).code, 2);
    EXPECT_EQ(run({"zeros", "--b", "4", "--rect", "0", "0.1", "5"}).code, 2);
    EXPECT_EQ(run({"surface", "--b", "4", "--format", "svg"}).code, 2);
    EXPECT_EQ(run({"rescale", "--b", "4", "--input", "/nonexistent/zeros.csv"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, NumericalFailureCode) {
    const auto r = run({"delta", "--b", "4", "--n", "0"});
    EXPECT_EQ(r.code, 3);
}

TEST(Cli, BoundExitCodes) {
    auto r = run({"bound", "--b", "10", "--n", "14", "--T", "100"});
    EXPECT_EQ(r.code, 4);
    r = run({"bound", "--b", "20", "--n", "14", "--T", "100"});
    EXPECT_EQ(r.code, 4);
    EXPECT_EQ(report(r.out)["inequality_holds"], "false");
    r = run({"bound", "--b", "30", "--n", "14", "--T", "100"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(report(r.out)["inequality_holds"], "true");
}

TEST(Cli, ConfigFileAndOverrides) {
    const auto cfg = scratch("config.json");
    std::ofstream(cfg) << R"({"b": 4.71238898, "n": 14, "format": "json"})";
    auto r = run({"delta", "--config", cfg.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(nlohmann::json::parse(r.out)["delta"].get<double>(), 0.146949, 2e-4);
    r = run({"delta", "--config", cfg.string(), "--b", "4", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(std::stod(r.out), 0.172887, 2e-4);

    const auto bad = scratch("bad.json");
    std::ofstream(bad) << R"({"b": 4, "colour": "red"})";
    EXPECT_EQ(run({"delta", "--config", bad.string()}).code, 2);
    std::ofstream(bad) << R"({"b": "four"})";
    EXPECT_EQ(run({"delta", "--config", bad.string()}).code, 2);
    std::ofstream(bad) << "{not json";
    EXPECT_EQ(run({"delta", "--config", bad.string()}).code, 2);
}

TEST(Cli, SurfaceJson) {
    const auto r = run({"surface", "--b", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["b"].get<double>(), 4.0);
    EXPECT_NEAR(j["theta"].get<double>(), make_surface(4.0).theta, 0.0);
}

TEST(Cli, ZerosRoundTripThroughFiles) {
    const auto zfile = scratch("zeros.csv");
    auto r = run({"zeros", "--b", "4", "--rect", "-0.02", "0.19", "0", "80", "--audit", "-o", zfile.string()});
    ASSERT_EQ(r.code, 0) << r.err;

    // same zeros in process
    const auto table = make_coefficient_table(make_surface(4.0), 14);
    SearchOptions o;
    o.audit = true;
    const ZeroSet zs = find_zeros_rect(table, 14, Rect{-0.02, 0.19, 0.0, 80.0}, o);
    std::ostringstream direct;
    write_zeros_csv(direct, zs);
    EXPECT_EQ(slurp(zfile), direct.str());

    r = run({"rescale", "--b", "4", "--input", zfile.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ostringstream pts;
    write_points_csv(pts, rescale_zeros(zs, 4.0));
    EXPECT_EQ(r.out, pts.str());

    r = run({"compare", "--b", "4", "--input", zfile.string(), "--height", "1.4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto cc = compare_with_curves(rescale_zeros(zs, 4.0), 1.4);
    EXPECT_EQ(report(r.out)["hausdorff"], format_double(cc.hausdorff.distance));

    r = run({"plot", "--b", "4", "--input", zfile.string(), "--rescaled", "--curves", "--height", "1.4", "--format", "svg"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("<circle"), std::string::npos);
    EXPECT_NE(r.out.find("<path"), std::string::npos);
}

TEST(Cli, OutputIndependentOfThreads) {
    const auto a = run({"zeros", "--b", "5", "--rect", "-0.02", "0.16", "10", "20", "--threads", "1"});
    const auto c = run({"zeros", "--b", "5", "--rect", "-0.02", "0.16", "10", "20", "--threads", "3"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(a.out, run({"zeros", "--b", "5", "--rect", "-0.02", "0.16", "10", "20", "--threads", "1"}).out);
}

TEST(Cli, CurvesAndPolynomials) {
    auto r = run({"curves", "--t0", "0", "--t1", "1", "--dt", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "t,sigma1,sigma2,sigma3,sigma4");
    r = run({"polynomials", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    const auto ps = extract_polynomials();
    ASSERT_EQ(j["P"].size(), ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k) EXPECT_EQ(j["P"][k], polynomial_json(ps[k]));
    ASSERT_EQ(j["d"].size(), 7u);
    for (int k = 1; k <= 7; ++k) EXPECT_EQ(j["d"][static_cast<std::size_t>(k - 1)], polynomial_json(trace_poly_dk(k)));
    EXPECT_EQ(run({"polynomials"}).code, 2);
}

TEST(Cli, LFunctionAndLattice) {
    auto r = run({"lfunction", "--b", "4", "--n", "10", "--generator", "2", "--s", "0.1+3i"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto tw = make_twisted_table(make_surface(4.0), Character::from_generator(2), 10);
    EXPECT_EQ(r.out, format_complex(evaluate_L(cplx{0.1, 3.0}, 10, tw)) + "\n");

    r = run({"lfunction", "--b", "4.5", "--rect", "-0.02", "0.2", "0.5", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "character,re,im,residual,iterations,multiplicity");

    r = run({"lattice", "--b", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_LT(std::stod(report(r.out)["hausdorff"]), 0.01);
}

TEST(Cli, TranslateReport) {
    const double b = 3.0;
    const double tau = std::numbers::pi * std::exp(b);
    const std::string top = format_double(2.0 * tau + 1.0);
    const auto r = run({"translate", "--b", "3", "--rect", "0.15", "0.25", "0", top, "--tau", format_double(tau), "--eps", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto kv = report(r.out);
    EXPECT_EQ(kv.at("tau"), format_double(tau));
    EXPECT_TRUE(kv.count("max_distance"));
}
