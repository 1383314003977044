#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "galcong/cli.hpp"
#include "galcong/io.hpp"
#include "galcong/modforms.hpp"

namespace {

namespace fs = std::filesystem;

const fs::path kData = GALCONG_TEST_DATA_DIR;
const fs::path kGolden = GALCONG_GOLDEN_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, bool color = false) {
  for (auto& a : args)
    if (a.rfind("@DATA@/", 0) == 0) a = (kData / a.substr(7)).string();
  std::ostringstream out, err;
  const int code = galcong::cli::run(args, out, err, color);
  std::string o = out.str();
  // paths are machine dependent
  for (std::size_t at; (at = o.find(kData.string())) != std::string::npos;) o.replace(at, kData.string().size(), "@DATA@");
  return {code, o, err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Compares with tests/golden/<name>.txt; GALCONG_UPDATE_GOLDEN=1 rewrites the file instead.
void expect_golden(const std::string& name, const std::vector<std::string>& args, int code) {
  const Outcome r = run(args);
  EXPECT_EQ(r.code, code) << r.err;
  const fs::path file = kGolden / (name + ".txt");
  if (std::getenv("GALCONG_UPDATE_GOLDEN")) {
    std::ofstream(file, std::ios::binary) << r.out;
    return;
  }
  ASSERT_TRUE(fs::exists(file)) << file;
  EXPECT_EQ(r.out, slurp(file)) << name;
  EXPECT_EQ(run(args).out, r.out) << "second run differs";
}

const std::string kEll = "16777259";

}  // namespace

TEST(CliGolden, BoundsCTilde) {
  expect_golden("bounds_ctilde", {"bounds", "eval", "--kind", "ctilde", "--n", "2", "--b", "11", "--e", "1", "--q", "2"}, 0);
  const Outcome r = run({"bounds", "eval", "--kind", "ctilde", "--n", "2", "--b", "11", "--e", "1", "--q", "2"});
  EXPECT_NE(r.out.find("16777216"), std::string::npos);
}

TEST(CliGolden, BoundsWithEll) {
  expect_golden("bounds_c1tilde_ell",
                {"bounds", "eval", "--kind", "c1tilde", "--n", "2", "--w", "22", "--q", "2", "--ell", kEll}, 0);
}

TEST(CliGolden, TameDigits) {
  const Outcome r = run({"tame", "digits", "--ell", "7", "--h", "2", "--d", "23", "--e", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2,3 → TI {1, 3/2}\n");
}

TEST(CliGolden, WeilWeights) {
  expect_golden("weil_weights_delta", {"weil", "weights", "--poly", "2048,24,1", "--q", "2"}, 0);
  expect_golden("weil_weights_not_w", {"weil", "weights", "--poly", "3,-3,1", "--q", "2"}, 3);
}

TEST(CliGolden, WeilCheck) {
  expect_golden("weil_check_delta", {"weil", "check", "--poly", "2048,24,1", "--q", "2", "--w", "11"}, 0);
  EXPECT_EQ(run({"weil", "check", "--poly", "2048,24,1", "--q", "2", "--w", "10"}).code, 3);
}

TEST(CliGolden, EngineConcluded) {
  expect_golden("engine_t11_identical",
                {"engine", "run", "--which", "t11", "--left", "@DATA@/delta_q2.desc", "--right", "@DATA@/delta_q2.desc",
                 "--ell", kEll, "--attest-u"},
                0);
}

TEST(CliGolden, EngineContradictionJson) {
  expect_golden("engine_t14_synthetic_json",
                {"engine", "run", "--which", "t14", "--left", "@DATA@/delta_q2.desc", "--right",
                 "@DATA@/synthetic_q2.desc", "--ell", kEll, "--attest-u", "--json"},
                3);
}

TEST(CliGolden, EngineInapplicable) {
  expect_golden("engine_t11_twisted",
                {"engine", "run", "--which", "t11", "--left", "@DATA@/delta_q2.desc", "--right",
                 "@DATA@/delta_q2_twisted.desc", "--ell", kEll, "--attest-u"},
                2);
  expect_golden("engine_t12_ell691",
                {"engine", "run", "--which", "t12", "--left", "@DATA@/delta_q2_ell691.desc", "--right",
                 "@DATA@/delta_q2_ell691.desc", "--ell", "691"},
                2);
  // without the attestation at u the chain stops at step 3
  const Outcome r = run({"engine", "run", "--which", "t11", "--left", "@DATA@/delta_q2.desc", "--right",
                     "@DATA@/delta_q2.desc", "--ell", kEll});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("Inapplicable at step 3"), std::string::npos);
}

TEST(CliGolden, MfDetectRamanujan) {
  expect_golden("mf_detect_k12", {"mf", "detect", "--k", "12", "--pmax", "97"}, 0);
  const Outcome r = run({"mf", "detect", "--k", "12", "--pmax", "97"});
  EXPECT_NE(r.out.find("691         0       1   0    11"), std::string::npos);
}

TEST(CliGolden, MfAudit) {
  expect_golden("mf_audit_k12_q2", {"mf", "audit", "--k", "12", "--q", "2"}, 2);
  // no cusp forms of weight 10: nothing to audit
  EXPECT_EQ(run({"mf", "audit", "--k", "10", "--q", "2"}).code, 0);
}

TEST(CliGolden, MfEigenforms) {
  expect_golden("mf_eigenforms_k24", {"mf", "eigenforms", "--k", "24", "--prec", "13"}, 0);
}

TEST(CliGolden, MfIngestLevelEleven) {
  expect_golden("mf_ingest_level11", {"mf", "ingest", "@DATA@/level11_weight2.eig", "--ell", "5"}, 2);
}

TEST(Cli, EmittedEigenformReingests) {
  const Outcome r = run({"mf", "eigenforms", "--k", "16", "--prec", "60", "--emit"});
  ASSERT_EQ(r.code, 0);
  const auto f = galcong::parse_eigenform(r.out);
  EXPECT_EQ(galcong::serialize_eigenform(f), r.out);
  const fs::path tmp = fs::temp_directory_path() / "galcong_cli_k16.eig";
  std::ofstream(tmp) << r.out;
  const Outcome ing = run({"mf", "ingest", tmp.string()});
  fs::remove(tmp);
  EXPECT_EQ(ing.code, 2) << ing.err;
  EXPECT_NE(ing.out.find("3617"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"bounds", "eval", "--n", "2"}).code, 1);                            // --kind missing
  EXPECT_EQ(run({"bounds", "eval", "--kind", "c", "--n", "2"}).code, 1);             // parameters missing
  EXPECT_EQ(run({"bounds", "eval", "--kind", "cc", "--n", "2", "--q", "2"}).code, 1);  // unknown kind
  EXPECT_EQ(run({"tame", "digits", "--ell", "seven", "--h", "2", "--d", "23"}).code, 1);
  EXPECT_EQ(run({"weil", "check", "--poly", "1,x", "--q", "2", "--w", "1"}).code, 1);
  EXPECT_EQ(run({"engine", "run", "--which", "t13", "--left", "@DATA@/delta_q2.desc", "--right",
                 "@DATA@/delta_q2.desc", "--ell", kEll})
                .code,
            1);
  EXPECT_EQ(run({"engine", "run", "--which", "t11", "--left", "@DATA@/delta_q2.desc", "--right",
                 "@DATA@/delta_q2.desc", "--ell", kEll, "--lambda-index", "1"})
                .code,
            1);
  // descriptors at a different ell are not comparable
  EXPECT_EQ(run({"engine", "run", "--which", "t11", "--left", "@DATA@/delta_q2.desc", "--right",
                 "@DATA@/delta_q2_ell691.desc", "--ell", kEll})
                .code,
            1);
  EXPECT_EQ(run({"mf", "ingest", "@DATA@/missing.eig"}).code, 1);
}

TEST(Cli, ParseErrorReportsLine) {
  const fs::path tmp = fs::temp_directory_path() / "galcong_cli_bad.desc";
  std::string text = slurp(kData / "delta_q2.desc");
  text.replace(text.find("b = 11"), 6, "bee = 11");
  std::ofstream(tmp) << text;
  const Outcome r = run({"engine", "run", "--which", "t11", "--left", tmp.string(), "--right", tmp.string(), "--ell", kEll});
  fs::remove(tmp);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST(Cli, HelpExitsZero) {
  const Outcome r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("engine"), std::string::npos);
}

TEST(Cli, ColourOnlyWhenRequested) {
  const std::vector<std::string> args{"engine", "run", "--which", "t11", "--left", "@DATA@/delta_q2.desc",
                                      "--right", "@DATA@/delta_q2.desc", "--ell", kEll, "--attest-u"};
  EXPECT_EQ(run(args, false).out.find('\033'), std::string::npos);
  EXPECT_NE(run(args, true).out.find('\033'), std::string::npos);
  std::vector<std::string> json_args = args;
  json_args.push_back("--json");
  EXPECT_EQ(run(json_args, true).out.find('\033'), std::string::npos);
}
