#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "compa_cli/cli.hpp"
#include "support.hpp"

using namespace compa;
using namespace compa::cli;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run analyze(const std::string& path, bool as_json, const Limits& limits = {}) {
  std::ostringstream out, err;
  const int code = run_analyze(path, as_json, limits, out, err);
  return {code, out.str(), err.str()};
}

CorpusOptions small_options() {
  CorpusOptions o;
  o.max_degree = 6;
  o.seed_count = 2;
  return o;
}

}  // namespace

TEST(Analyze, PassingGroupExitsZero) {
  const auto path = write_temp("compa_cli_s4.grp", "degree: 4\n(0 1 2 3)\n(0 1)\n");
  const auto r = analyze(path, true);
  EXPECT_EQ(r.code, kOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_EQ(j["group"]["order"], "24");
  EXPECT_EQ(j["primitive"], true);
  const auto text = analyze(path, false);
  EXPECT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("verdict: PASS"), std::string::npos);
}

TEST(Analyze, DegreeTwoFailsGapCheck) {
  const auto path = write_temp("compa_cli_c2.grp", "degree: 2\n(0 1)\n");
  const auto r = analyze(path, true);
  EXPECT_EQ(r.code, kCheckFailed);
  EXPECT_EQ(json::parse(r.out)["verdict"], "FAIL");
}

TEST(Analyze, MalformedInputExitsTwo) {
  const auto path = write_temp("compa_cli_bad.grp", "degree: 4\n(0 1\n");
  const auto r = analyze(path, false);
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(analyze("/nonexistent/compa.grp", false).code, kInputError);
}

TEST(Analyze, RootLimitExitsThree) {
  const auto path = write_temp("compa_cli_s6.grp", "degree: 6\n(0 1 2 3 4 5)\n(0 1)\n");
  const auto r = analyze(path, true, Limits{kDefaultEnumerationLimit, 100});
  EXPECT_EQ(r.code, kResourceLimit);
  EXPECT_NE(r.err.find("resource limit"), std::string::npos);
}

TEST(Analyze, ReportJsonRoundTrip) {
  for (const auto& spec : {GroupSpec::symmetric(4), GroupSpec::cyclic(6),
                           GroupSpec::wreath_imprimitive(GroupSpec::cyclic(2), GroupSpec::symmetric(3))}) {
    const auto report = analyze_group(build(spec), spec.name());
    const json j = report.to_json();
    EXPECT_EQ(AnalysisReport::from_json(j).to_json(), j) << spec.name();
  }
}

TEST(Analyze, IntransitiveGroupSkipsTransitiveChecks) {
  const auto report = analyze_group(testing_support::group(4, {{{0, 1}}}), "c2_on_4");
  EXPECT_FALSE(report.transitive);
  EXPECT_FALSE(report.trace);
  EXPECT_EQ(report.verdict(), Verdict::pass);
}

TEST(Verify, DeterministicAcrossJobCounts) {
  const auto a = verify_corpus(small_options(), {}, 1).to_json();
  const auto b = verify_corpus(small_options(), {}, 1).to_json();
  const auto c = verify_corpus(small_options(), {}, 3).to_json();
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a.dump(), c.dump());
  EXPECT_GT(a["corpus_size"].get<std::size_t>(), 10u);
}

TEST(Verify, OnlyDegreeTwoFails) {
  const auto s = verify_corpus(small_options(), {}, 1);
  for (const auto& r : s.exceptions) {
    if (r.verdict == Verdict::fail) {
      EXPECT_EQ(r.lemma, "stabilizer_comp_a_gap");
      EXPECT_EQ(r.group.degree, 2u);
    }
  }
  std::ostringstream out, err;
  EXPECT_EQ(run_verify(small_options(), false, {}, 1, out, err), kCheckFailed);
  EXPECT_NE(out.str().find("FAIL stabilizer_comp_a_gap"), std::string::npos);
}

TEST(Threshold, OutputFormats) {
  std::ostringstream out, err;
  EXPECT_EQ(run_threshold(1000, false, out, err), kOk);
  EXPECT_NE(out.str().find("K0 = none <= 1000"), std::string::npos);
  std::ostringstream jout;
  EXPECT_EQ(run_threshold(2'000'000, true, jout, err), kOk);
  const auto j = json::parse(jout.str());
  EXPECT_EQ(j["k_max"], 2'000'000);
  EXPECT_EQ(j["k0"], *alternating_quotient_threshold(2'000'000));
  EXPECT_EQ(run_threshold(1, false, out, err), kInputError);
}

TEST(CorpusExport, WritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "compa_cli_export";
  std::filesystem::remove_all(dir);
  std::ostringstream out, err;
  CorpusOptions o;
  o.max_degree = 4;
  EXPECT_EQ(run_corpus_export(dir.string(), o, out, err), kOk);
  EXPECT_TRUE(std::filesystem::exists(dir / "symmetric_4_4.grp"));
  std::filesystem::remove_all(dir);
}

TEST(Main, ArgumentErrors) {
  const char* argv[] = {"compa", "frobnicate"};
  EXPECT_EQ(cli::main(2, const_cast<char**>(argv)), kInputError);
  const char* none[] = {"compa"};
  EXPECT_EQ(cli::main(1, const_cast<char**>(none)), kInputError);
}
