#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "framekit/cli.hpp"
#include "framekit/error.hpp"
#include "framekit/generate.hpp"
#include "framekit/io.hpp"

using namespace framekit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "framekit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("framekit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    io::write_text_file(path(name), text);
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, IdentityPairVerifies) {
  const auto f = write("id.json", io::dump(io::pair_to_json(FramePair(Matrix::identity(2), Matrix::identity(2), 2.0))));
  const auto r = run_cli({"verify", f});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = io::parse_json(r.out);
  EXPECT_EQ(j["classification"]["kind"], "SCHAUDER_FRAME");
  EXPECT_EQ(j["report"]["overall"], true);
}

TEST_F(CliTest, LinePairIsNotRiesz) {
  const auto f = write("line.json", io::dump(io::pair_to_json(
                                        FramePair(Matrix::from_rows({{1}, {1}}), Matrix::from_rows({{0.5, 0.5}}), 1.0))));
  const auto r = run_cli({"verify", f});
  EXPECT_EQ(r.code, 0);
  const auto j = io::parse_json(r.out);
  // S = [1/2 + 1/2] = I
  EXPECT_EQ(j["classification"]["kind"], "SCHAUDER_FRAME");
  EXPECT_EQ(j["report"]["defects"]["p_asf"], 0.0);
  EXPECT_EQ(j["p_approximate_riesz"]["is_riesz"], false);
}

TEST_F(CliTest, CorruptJsonExitsTwo) {
  const auto f = write("bad.json", "{\"space_dim\": 2, \"seq_dim\": ");
  EXPECT_EQ(run_cli({"verify", f}).code, 2);
  EXPECT_EQ(run_cli({"dilate", f}).code, 2);
  EXPECT_EQ(run_cli({"dual", f}).code, 2);
  EXPECT_EQ(run_cli({"verify", path("missing.json")}).code, 2);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"gen", "--kind", "SPIRAL"}).code, 2);
  EXPECT_EQ(run_cli({"gen", "-d", "3", "-n", "2"}).code, 2);
  EXPECT_EQ(run_cli({"gen", "--p", "0.5"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(CliTest, ZeroVectorsExitOne) {
  const auto f = write("zero.json", io::dump(io::pair_to_json(FramePair(Matrix(3, 2), Matrix(2, 3), 2.0))));
  EXPECT_EQ(run_cli({"verify", f}).code, 1);
  EXPECT_EQ(run_cli({"dilate", f}).code, 1);
  EXPECT_EQ(run_cli({"dual", f}).code, 1);
}

TEST_F(CliTest, GenRieszAndMercedes) {
  auto r = run_cli({"gen", "-d", "2", "-n", "2", "--kind", "RIESZ", "--seed", "1"});
  ASSERT_EQ(r.code, 0);
  const auto f = write("riesz.json", r.out);
  const auto v = io::parse_json(run_cli({"verify", f}).out);
  EXPECT_EQ(v["p_approximate_riesz"]["is_riesz"], true);

  r = run_cli({"gen", "-d", "2", "-n", "3", "--kind", "TIGHT", "--mercedes"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::pair_from_json(io::parse_json(r.out)), mercedes_pair());
}

TEST_F(CliTest, DilateMercedes) {
  const auto f = write("m.json", io::dump(io::pair_to_json(mercedes_pair())));
  const auto r = run_cli({"dilate", f, "--out", path("mb.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::parse_json(r.out);
  EXPECT_EQ(j["complement_dim"], 1);
  for (const auto& c : j["report"]["checks"]) EXPECT_LE(c["defect"].get<double>(), 1e-9) << c["name"];
  const std::string bundle = slurp(path("mb.json"));
  EXPECT_EQ(io::dump(io::bundle_to_json(io::bundle_from_json(io::parse_json(bundle)))), bundle);
  EXPECT_EQ(run_cli({"verify", path("mb.json")}).code, 0);
}

TEST_F(CliTest, DilateIdentityIsTrivial) {
  const auto f = write("id.json", io::dump(io::pair_to_json(FramePair(Matrix::identity(2), Matrix::identity(2), 3.0))));
  const auto r = run_cli({"dilate", f});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::parse_json(r.out)["degenerate"], true);
}

TEST_F(CliTest, DualOfDual) {
  const auto m = run_cli({"dual", write("m.json", io::dump(io::pair_to_json(mercedes_pair())))});
  const auto dm = io::pair_from_json(io::parse_json(m.out));
  EXPECT_LE(defect(dm.vectors(), (2.0 / 3.0) * mercedes_pair().vectors()), 1e-15);

  const auto g = run_cli({"gen", "-d", "3", "-n", "6", "--p", "1.5", "--seed", "5"});
  const auto orig = io::pair_from_json(io::parse_json(g.out));
  const auto once = run_cli({"dual", write("g.json", g.out), "--out", path("d1.json")});
  ASSERT_EQ(once.code, 0);
  const auto twice = run_cli({"dual", path("d1.json")});
  ASSERT_EQ(twice.code, 0);
  const auto back = io::pair_from_json(io::parse_json(twice.out));
  EXPECT_LE(defect(back.vectors(), orig.vectors()), 1e-10);
  EXPECT_LE(defect(back.functionals(), orig.functionals()), 1e-10);
}

TEST_F(CliTest, ToleranceOverrides) {
  EXPECT_EQ(cli::resolve_tolerance(1e-3), 1e-3);
  ::setenv("FRAMEKIT_TOLERANCE", "1e-5", 1);
  EXPECT_EQ(cli::resolve_tolerance(std::nan("")), 1e-5);
  EXPECT_EQ(cli::resolve_tolerance(1e-3), 1e-3);
  ::setenv("FRAMEKIT_TOLERANCE", "abc", 1);
  EXPECT_THROW(cli::resolve_tolerance(std::nan("")), InvalidArgument);
  ::unsetenv("FRAMEKIT_TOLERANCE");
  EXPECT_EQ(cli::resolve_tolerance(std::nan("")), kDefaultTolerance);
}

TEST_F(CliTest, NegativeToleranceFailsChecks) {
  const auto f = write("m.json", io::dump(io::pair_to_json(mercedes_pair())));
  EXPECT_EQ(run_cli({"verify", f, "--tolerance", "-1"}).code, 1);
}

#ifdef FRAMEKIT_CLI_PATH
TEST_F(CliTest, BinaryIsDeterministic) {
  const std::string exe = FRAMEKIT_CLI_PATH;
  for (int run = 0; run < 2; ++run) {
    const std::string out = path("run" + std::to_string(run) + ".json");
    const std::string cmd = "\"" + exe + "\" gen -d 3 -n 8 --p 3 --seed 12 --out \"" + out + "\"";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
  }
  EXPECT_EQ(slurp(path("run0.json")), slurp(path("run1.json")));
  const std::string bad = write("bad.json", "not json");
  const int status = std::system(("\"" + exe + "\" verify \"" + bad + "\" > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
#endif
