#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tdpp/cli.hpp"
#include "tdpp/report.hpp"
#include "tdpp/svg.hpp"
#include "tdpp/verify.hpp"

namespace tdpp {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tdpp_test_" + name);
}

TEST(Cli, ProbsFirstRowIsB) {
  const auto r = run({"probs", "--b", "0.4", "--a-mag", "0.15", "--k-max", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const auto& row0 = doc["results"][0];
  for (const char* col : {"det", "recurrence", "closed", "factor"})
    EXPECT_NEAR(row0[col].get<double>(), 0.4, 1e-15);
  EXPECT_EQ(doc["results"].size(), 6u);
  EXPECT_TRUE(doc["pass"].get<bool>());
  for (const char* key : {"config", "version", "seed", "results", "pass"}) EXPECT_TRUE(doc.contains(key));
}

TEST(Cli, ProbsCsvHeader) {
  const auto r = run({"probs", "--b", "0.4", "--a-mag", "0.15", "--k-max", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find("\r\n")), "k,det,recurrence,closed,factor");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(Cli, InadmissibleSymbolIsUsageError) {
  const auto r = run({"probs", "--b", "0.3", "--a-mag", "0.2", "--k-max", "3"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("b - 2|a| < 0"), std::string::npos);
}

TEST(Cli, UsageErrorsNameTheFlag) {
  auto r = run({"probs", "--b", "0.3", "--a-mag", "0.1", "--k-max", "3", "--bogus", "1"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("--bogus"), std::string::npos);

  r = run({"probs", "--b", "0.3", "--a-mag", "0.1"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("--k-max"), std::string::npos);

  r = run({"probs", "--a-mag", "0.1", "--k-max", "3"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("--b"), std::string::npos);

  r = run({"verify", "--b", "0.3", "--a-mag", "0.1"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("--window"), std::string::npos);

  r = run({"probs", "--b", "x", "--a-mag", "0.1", "--k-max", "3"});
  EXPECT_EQ(r.code, cli::kExitUsage);

  r = run({});
  EXPECT_EQ(r.code, cli::kExitUsage);

  r = run({"mc", "--b", "0.4", "--a-mag", "0.1", "--pattern", "1x", "--n", "1000"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("--pattern"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, ComplexCoefficientInput) {
  const auto a = run({"probs", "--b", "0.4", "--a-re", "0.09", "--a-im", "0.12", "--k-max", "4", "--format", "json"});
  const auto b = run({"probs", "--b", "0.4", "--a-mag", "0.15", "--k-max", "4", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  const auto ja = nlohmann::json::parse(a.out);
  const auto jb = nlohmann::json::parse(b.out);
  EXPECT_NEAR(ja["config"]["a_mag"].get<double>(), 0.15, 1e-16);
  for (int k = 0; k <= 4; ++k)
    EXPECT_NEAR(ja["results"][k]["det"].get<double>(), jb["results"][k]["det"].get<double>(), 1e-15);
  const auto both = run({"probs", "--b", "0.4", "--a-re", "0.1", "--a-mag", "0.1", "--k-max", "2"});
  EXPECT_EQ(both.code, cli::kExitUsage);
}

TEST(Cli, VerifyComplementCase) {
  const auto r = run({"verify", "--b", "0.7", "--a-mag", "0.1", "--window", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_LE(doc["results"][0]["max_abs_diff"].get<double>(), 1e-9);
}

TEST(Cli, VerifyFailureExitsOne) {
  // a negative tolerance cannot be met
  const auto r = run({"verify", "--b", "0.4", "--a-mag", "0.1", "--window", "3", "--tol", "-1"});
  EXPECT_EQ(r.code, cli::kExitVerificationFailed);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["pass"].get<bool>());
}

TEST(Cli, VerifySweepIsDeterministic) {
  const auto a = run({"verify", "--sweep", "--window", "6", "--threads", "3"});
  const auto b = run({"verify", "--sweep", "--window", "6", "--threads", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["results"].size(), 50u);
}

TEST(Cli, JsonRoundTripIsExact) {
  const auto symbol = TrigSymbolDeg1::make(0.37, 0.11, 0.3);
  const auto r = run({"probs", "--b", "0.37", "--a-mag", "0.11", "--a-phase", "0.3", "--k-max", "30", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto rows = run_length_table(symbol, 30);
  for (const auto& row : rows) {
    const auto& j = doc["results"][row.k];
    EXPECT_EQ(j["det"].get<double>(), row.det);
    EXPECT_EQ(j["recurrence"].get<double>(), row.recurrence);
    EXPECT_EQ(j["closed"].get<double>(), row.closed);
    EXPECT_EQ(j["factor"].get<double>(), row.factor);
  }
}

TEST(Cli, RegionListingAndSvg) {
  const auto svg_path = temp_path("region.svg");
  const auto r = run({"region", "--b", "0.5", "--a-mag", "0.25", "--format", "json", "--svg", svg_path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["results"]["case"], "equal_roots");
  EXPECT_EQ(doc["results"]["boxes"].size(), 8u);
  const std::string svg = read_file(svg_path);
  EXPECT_EQ(svg, render_region_svg(build_region(TrigSymbolDeg1::make(0.5, 0.25))));
  std::filesystem::remove(svg_path);

  const auto csv = run({"region", "--b", "0.7", "--a-mag", "0.1", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find("\r\n")), "label,x_lo,x_hi,y_lo,y_hi,case,complemented");
  EXPECT_NE(csv.out.find("distinct_roots,true"), std::string::npos);
}

TEST(Cli, OutPathAndIoFailure) {
  const auto path = temp_path("probs.csv");
  auto r = run({"probs", "--b", "0.4", "--a-mag", "0.15", "--k-max", "2", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path).substr(0, 2), "k,");
  std::filesystem::remove(path);

  r = run({"probs", "--b", "0.4", "--a-mag", "0.15", "--k-max", "2", "--out", "/nonexistent/dir/x.csv"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("/nonexistent/dir/x.csv"), std::string::npos);
}

TEST(Cli, SampleIsSeededAndSized) {
  const auto a = run({"sample", "--b", "0.4", "--a-mag", "0.15", "--n", "200", "--seed", "7"});
  const auto b = run({"sample", "--b", "0.4", "--a-mag", "0.15", "--n", "200", "--seed", "7"});
  const auto c = run({"sample", "--b", "0.4", "--a-mag", "0.15", "--n", "200", "--seed", "8"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(a.out.size(), 201u);
  EXPECT_EQ(a.out.find_first_not_of("01"), 200u);

  const auto det = run({"sample", "--b", "0.4", "--a-mag", "0.15", "--n", "50", "--seed", "7",
                        "--source", "determinantal", "--format", "json"});
  ASSERT_EQ(det.code, 0) << det.err;
  const auto doc = nlohmann::json::parse(det.out);
  EXPECT_EQ(doc["seed"].get<std::uint64_t>(), 7u);
  EXPECT_EQ(doc["results"]["bits"].get<std::string>().size(), 50u);

  EXPECT_EQ(run({"sample", "--b", "0.4", "--a-mag", "0.1", "--n", "5", "--source", "x"}).code, cli::kExitUsage);
}

TEST(Cli, McEstimate) {
  const auto r = run({"mc", "--b", "0.4", "--a-mag", "0.15", "--pattern", "1.1", "--n", "200000", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["results"]["exact"].get<double>(), 0.16, 1e-12);
  EXPECT_LE(std::abs(doc["results"]["z"].get<double>()), 4.0);
  EXPECT_EQ(doc["seed"].get<int>(), 3);

  const auto csv = run({"mc", "--b", "0.4", "--a-mag", "0.15", "--pattern", "11", "--n", "1000", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find("\r\n")), "pattern,samples,frequency,std_error,exact,z");
  EXPECT_EQ(run({"mc", "--b", "0.4", "--a-mag", "0.1", "--pattern", "1", "--n", "10"}).code, cli::kExitUsage);
}

TEST(Report, CsvQuoting) {
  report::CsvWriter csv({"a", "b"});
  csv.add_row({"plain", "has,comma"});
  csv.add_row({"say \"hi\"", "line\nbreak"});
  EXPECT_EQ(csv.str(), "a,b\r\nplain,\"has,comma\"\r\n\"say \"\"hi\"\"\",\"line\nbreak\"\r\n");
}

TEST(Report, Number17RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 0.1375, 6.02214076e23, 5e-324})
    EXPECT_EQ(std::strtod(report::number17(v).c_str(), nullptr), v);
}

TEST(Svg, Renderings) {
  const std::string case1 = render_region_svg(region_case1(0.5));
  EXPECT_EQ(case1, render_region_svg(region_case1(0.5)));
  std::size_t shaded = 0;
  const std::string boxes = case1.substr(case1.find("<g id=\"boxes\""), case1.find("</g>") - case1.find("<g id=\"boxes\""));
  for (std::size_t pos = 0; (pos = boxes.find("<rect", pos)) != std::string::npos; ++pos) ++shaded;
  EXPECT_EQ(shaded, 8u);
  // gridlines at multiples of 1/4: pixel 30 + 100 k
  for (const char* x : {"x1=\"130.000\"", "x1=\"230.000\"", "x1=\"330.000\""})
    EXPECT_NE(case1.find(x), std::string::npos);
  for (int label = 1; label <= 8; ++label)
    EXPECT_NE(case1.find(">" + std::to_string(label) + "</text>"), std::string::npos);

  const std::string empty = render_region_svg(build_region(TrigSymbolDeg1::make(0.0, 0.0)));
  EXPECT_NE(empty.find("<g id=\"boxes\""), std::string::npos);
  EXPECT_EQ(empty.find("<text"), std::string::npos);
}

}  // namespace
}  // namespace tdpp
