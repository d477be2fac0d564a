#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bpenta_cli.hpp"
#include "test_support.hpp"

namespace bpenta {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "bpenta");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(BPENTA_SAMPLES_DIR) + "/" + name; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bpenta_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveExactWithDeterminant) {
  const auto r = run({"solve", sample("five.txt"), "--mode", "exact", "--det"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n2\n3\n4\n5\ndet(A1) = 160\n");
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, DefaultModeIsExact) {
  EXPECT_EQ(run({"solve", sample("five.txt")}).out, "1\n2\n3\n4\n5\n");
}

TEST_F(CliTest, ExactModeZeroPivotExitsTwo) {
  const auto r = run({"solve", sample("five_zero_pivot.txt"), "--mode", "exact"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("zero pivot beta[1]"), std::string::npos) << r.err;
}

TEST_F(CliTest, SymbolicModeRescues) {
  const auto r = run({"solve", sample("five_zero_pivot.txt"), "--mode", "symbolic", "--det"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n2\n3\n4\n5\ndet(A1) = 88\n");
}

TEST_F(CliTest, DumpFactorsExact) {
  const auto r = run({"solve", sample("five.txt"), "--dump-factors"});
  EXPECT_EQ(r.out,
            "alpha = 1 6 -3 20/7\n"
            "beta = -1 2 -7 24/7 10/3\n"
            "gamma = -4 2 8/7 -2/3\n"
            "z = 4 30 -28 28 50/3\n"
            "1\n2\n3\n4\n5\n");
}

TEST_F(CliTest, DumpFactorsSymbolicShowsExpressions) {
  const auto r = run({"solve", sample("five_zero_pivot.txt"), "--mode", "symbolic", "--dump-factors"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("beta = x "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("replaced = 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("X(x) = -11/(9x-11) (22x-22)/(9x-11) (34x-33)/(9x-11) (51x-44)/(9x-11) (39x-55)/(9x-11)\n"),
            std::string::npos)
      << r.out;
}

TEST_F(CliTest, FloatModeUsesShortestRoundTrip) {
  const auto r = run({"solve", sample("five.txt"), "--mode", "float", "--det"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  for (int k = 1; k <= 5; ++k) {
    ASSERT_TRUE(std::getline(lines, line));
    EXPECT_NEAR(std::stod(line), k, 1e-12);
    EXPECT_EQ(std::to_string(std::stod(line)).empty(), false);
  }
  const auto third = run({"solve", write("third.txt", "5\n1 1 1\n1 1 1 1\n3 3 3 3 3\n0 0 0 0\n0 0 0\n1 1 1 1 1\n"),
                          "--mode", "float"});
  EXPECT_EQ(third.code, 0);
  EXPECT_NE(third.out.find("0.3333333333333333\n"), std::string::npos) << third.out;
}

TEST_F(CliTest, FloatToleranceFlag) {
  const auto r = run({"solve", sample("five.txt"), "--mode", "float", "--tol", "1.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("beta[1]"), std::string::npos);
}

TEST_F(CliTest, DetAndFactorCommands) {
  EXPECT_EQ(run({"det", sample("six.txt")}).out, "det(A1) = -8597\ndet(A) = 8597\n");
  EXPECT_EQ(run({"det", sample("six_zero_pivot.txt"), "--mode", "symbolic"}).out,
            "det(A1) = 1777\ndet(A) = -1777\n");
  EXPECT_EQ(run({"det", sample("six_zero_pivot.txt")}).code, 2);
  const auto f = run({"factor", sample("five.txt")});
  EXPECT_EQ(f.out, "alpha = 1 6 -3 20/7\nbeta = -1 2 -7 24/7 10/3\ngamma = -4 2 8/7 -2/3\n");
}

TEST_F(CliTest, CheckMatches) {
  const auto r = run({"check", sample("five.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 6), "MATCH\n");
  EXPECT_NE(r.out.find("banded (exact): 1 2 3 4 5"), std::string::npos);
  EXPECT_NE(r.out.find("oracle: 1 2 3 4 5"), std::string::npos);
}

TEST_F(CliTest, CheckFallsBackToSymbolic) {
  const auto r = run({"check", sample("six_zero_pivot.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 6), "MATCH\n");
  EXPECT_NE(r.out.find("symbolic"), std::string::npos);
}

TEST_F(CliTest, CheckSingularExitsThree) {
  const auto r = run({"check", sample("singular.txt")});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out.substr(0, 9), "SINGULAR\n");
}

TEST_F(CliTest, GenIsByteDeterministic) {
  const auto a = dir_ / "a.txt";
  const auto b = dir_ / "b.txt";
  EXPECT_EQ(run({"gen", "--seed", "1", "--n", "8", "--out", a.string()}).code, 0);
  EXPECT_EQ(run({"gen", "--seed", "1", "--n", "8", "--out", b.string()}).code, 0);
  EXPECT_EQ(read_file(a), read_file(b));
  EXPECT_FALSE(read_file(a).empty());
}

TEST_F(CliTest, GenForcedZeroLandsInDLine) {
  const auto out = dir_ / "z.txt";
  ASSERT_EQ(run({"gen", "--seed", "4", "--n", "7", "--zero", "d_n", "--out", out.string()}).code, 0);
  const auto sys = parse_system_file(read_file(out));
  EXPECT_TRUE(sys.d().back().is_zero());
  std::istringstream in(read_file(out));
  std::string line;
  std::vector<std::string> data;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') data.push_back(line);
  }
  ASSERT_EQ(data.size(), 7u);
  EXPECT_EQ(data[3].substr(data[3].size() - 2), " 0");
}

TEST_F(CliTest, GeneratedFilesPassCheck) {
  for (int seed = 0; seed < 20; ++seed) {
    const auto out = (dir_ / ("g" + std::to_string(seed) + ".txt")).string();
    std::vector<std::string> args = {"gen", "--seed", std::to_string(seed), "--n", std::to_string(5 + seed),
                                     "--planted", "--out", out};
    if (seed % 2) {
      args.push_back("--zero");
      args.push_back("d_n");
    }
    ASSERT_EQ(run(args).code, 0);
    const auto r = run({"check", out});
    EXPECT_TRUE(r.code == 0 || r.code == 3) << r.out;
    if (r.code == 0) {
      EXPECT_EQ(r.out.substr(0, 6), "MATCH\n");
    }
  }
}

TEST_F(CliTest, UsageAndParseErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"solve"}).code, 1);
  EXPECT_EQ(run({"solve", sample("five.txt"), "--mode", "fast"}).code, 1);
  EXPECT_EQ(run({"solve", (dir_ / "missing.txt").string()}).code, 1);
  EXPECT_EQ(run({"gen", "--seed", "1", "--n", "4"}).code, 1);
  EXPECT_EQ(run({"gen", "--seed", "1", "--n", "6", "--zero", "q_1"}).code, 1);

  const auto short_line = run({"solve", write("bad1.txt", "5\n1 1\n1 1 1 1\n1 1 1 1 1\n1 1 1 1\n1 1 1\n1 1 1 1 1\n")});
  EXPECT_EQ(short_line.code, 1);
  EXPECT_NE(short_line.err.find("a_tilde"), std::string::npos) << short_line.err;
  EXPECT_EQ(run({"solve", write("bad2.txt", "5\n1 1 1\n1 1 1 1\n1 1 1 1 q\n1 1 1 1\n1 1 1\n1 1 1 1 1\n")}).code, 1);
  EXPECT_EQ(run({"solve", write("bad3.txt", "4\n1 1\n1 1 1\n1 1 1 1\n1 1 1\n1 1\n1 1 1 1\n")}).code, 1);
  EXPECT_EQ(run({"solve", write("bad4.txt", "5\n1 1 1\n")}).code, 1);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(SystemFileTest, CommentsBlankLinesAndLiteralForms) {
  const auto s = parse_system_file(
      "# header\n\n5\n  # indented comment\n1/2 0.75 -3\n1 1 1 1\r\n2 2 2 2 2\n1 1 1 1\n1 1 1\n1 2 3 4 5\n");
  EXPECT_EQ(s.a_tilde(), testing::Qs({"1/2", "3/4", "-3"}));
  EXPECT_EQ(s.y(), testing::Qs({1, 2, 3, 4, 5}));
}

TEST(SystemFileTest, ParsePrintRoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto s = oracle::generate({.seed = seed, .n = 5 + seed % 9, .range = 1000, .force_zero = {},
                                     .planted_solution = false});
    const auto scaled = convert_system<BigRational>(s, [](const BigRational& v) { return v / BigRational(7); });
    const std::string text = format_system_file(scaled, {"round trip"});
    EXPECT_EQ(parse_system_file(text), scaled);
    EXPECT_EQ(format_system_file(parse_system_file(text), {"round trip"}), text);
  }
}

// For any valid file, exact mode either solves with zero residual or exits
// 2/3 with a pivot-indexed diagnostic.
TEST_F(CliTest, ExactSolveNeverSilentlyWrong) {
  for (int seed = 0; seed < 40; ++seed) {
    oracle::GeneratorConfig cfg{.seed = static_cast<std::uint64_t>(seed), .n = static_cast<std::size_t>(5 + seed % 7), .range = 2,
                                .force_zero = {}, .planted_solution = false};
    const auto sys = oracle::generate(cfg);
    const auto path = write("p" + std::to_string(seed) + ".txt", format_system_file(sys));
    const auto r = run({"solve", path});
    if (r.code == 0) {
      std::vector<BigRational> x;
      std::istringstream in(r.out);
      for (std::string tok; in >> tok;) x.push_back(BigRational::parse(tok));
      EXPECT_EQ(densify(sys).multiply(x), sys.y());
    } else {
      EXPECT_TRUE(r.code == 2 || r.code == 3);
      EXPECT_NE(r.err.find("beta["), std::string::npos) << r.err;
    }
  }
}

}  // namespace
}  // namespace bpenta
