#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ftsnd/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string cli = FTSND_CLI;
const std::string data_dir = FTSND_DATA_DIR;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ftsnd_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Outcome run(const std::string& args, const std::string& env = {}) const {
    const auto out = dir_ / "stdout", err = dir_ / "stderr";
    const std::string cmd = env + " '" + cli + "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  fs::path dir_;
};

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_F(Cli, VerifyYesAndNo) {
  ASSERT_EQ(run("construct steiner --m 7 --out " + path("fano.txt")).code, 0);
  const auto yes = run("verify --in " + path("fano.txt") + " --e 1");
  EXPECT_EQ(yes.code, 0);
  EXPECT_TRUE(has(yes.out, "FTSND: yes"));
  const auto no = run("verify --in " + path("fano.txt") + " --e 2");
  EXPECT_EQ(no.code, 1);
  EXPECT_TRUE(has(no.out, "violating pair: |A1 \\ A2| = 2 < 3")) << no.out;
  EXPECT_EQ(run("verify --oracle --in " + path("fano.txt") + " --e 1").code, 0);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify --in " + path("missing.txt") + " --e 1").code, 2);
  EXPECT_EQ(run("bounds --m 0 --e 1").code, 2);
  EXPECT_EQ(run("search --m 6 --e x").code, 2);
  EXPECT_EQ(run("certify --in x").code, 2);
  EXPECT_EQ(run("table --m-max 3", "FTSND_CELL_BUDGET=fast").code, 2);
  write("bad.txt", "m=4 n=2\n1 2\n3 9\n");
  const auto r = run("verify --in " + path("bad.txt") + " --e 0");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.err, "bad.txt:line 3")) << r.err;
}

TEST_F(Cli, SearchExactAndBracket) {
  const auto exact = run("search --m 9 --e 2 --time-limit 60 --canonical-first-block --witness-out " + path("w.txt"));
  EXPECT_EQ(exact.code, 0);
  EXPECT_TRUE(has(exact.out, "N(9,2) = 3 (exact)")) << exact.out;
  EXPECT_EQ(ftsnd::io::load_set_system(path("w.txt")).size(), 3u);
  const auto bracket = run("search --m 13 --e 2 --node-limit 5 --canonical-first-block");
  EXPECT_EQ(bracket.code, 3);
  EXPECT_TRUE(has(bracket.out, "(bracket)"));
  EXPECT_EQ(run("search --m 6 --e 1 --unbounded").code, 0);
}

TEST_F(Cli, ConstructRoundTrips) {
  for (const std::string c : {"middle-layer --m 6", "greedy --n 8 --d 2 --w 4", "greedy --n 8 --d 2 --w 4 --order seed=7",
                              "hadamard --e 1", "complete-uniform --n 5 --k 2", "steiner --m 8", "disjoint-pair --m 6 --e 1"}) {
    const auto r = run("construct --verify --out " + path("c.txt") + " " + c);
    ASSERT_EQ(r.code, 0) << c << "\n" << r.err;
    const auto text = slurp(path("c.txt"));
    EXPECT_EQ(ftsnd::io::format_set_system(ftsnd::io::parse_set_system(text)), text) << c;
    const auto stdout_run = run("construct " + c);
    EXPECT_EQ(stdout_run.out, text) << c;
  }
  ASSERT_EQ(run("construct --json --out " + path("j.json") + " hadamard --e 1").code, 0);
  EXPECT_EQ(ftsnd::io::load_set_system(path("j.json")), ftsnd::io::parse_set_system(run("construct hadamard --e 1").out));
  EXPECT_EQ(run("construct steiner --m 9").code, 2);
}

TEST_F(Cli, CertifyShippedAndMutated) {
  EXPECT_EQ(run("certify --in " + data_dir + "/certificates/steiner_m7.txt --e 1").code, 0);
  const auto bad = run("certify --in " + data_dir + "/mutated/01_*.txt --e 0");
  EXPECT_NE(bad.code, 0);
}

TEST_F(Cli, SimulateFano) {
  ASSERT_EQ(run("construct steiner --m 7 --out " + path("fano.txt")).code, 0);
  const auto r = run("simulate --in " + path("fano.txt") + " --witness 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "addressed before faults: 1\n")) << r.out;
  EXPECT_EQ(run("simulate --in " + path("fano.txt") + " --witness 1 --fault 1:3").code, 2);
  EXPECT_EQ(run("simulate --in " + path("fano.txt") + " --witness 1 --activate 1").code, 2);
}

TEST_F(Cli, BoundsTableAndInfobits) {
  const auto b = run("--format tsv bounds --m 12 --e 2");
  EXPECT_EQ(b.code, 0);
  EXPECT_TRUE(has(b.out, "bound\tkind\tvalue\tnote\n"));
  EXPECT_TRUE(has(b.out, "plotkin\tupper\t24"));
  const auto t = run("table --m-max 6 --cell-budget 10 --compare " + data_dir + "/reference/n_table.txt");
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_TRUE(has(t.out, "N(6,1): 4")) << t.out;
  EXPECT_TRUE(has(t.out, "0 conflicts")) << t.out;
  const auto i = run("infobits --e 1 --reference " + data_dir + "/reference/infobits.txt " + data_dir +
                     "/certificates/packing_m15_e1.txt");
  EXPECT_EQ(i.code, 0);
  EXPECT_TRUE(has(i.out, "matches")) << i.out;
  EXPECT_EQ(run("infobits --e 1").code, 0);
}
