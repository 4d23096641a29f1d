#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_raw(const std::string& cmd_line) {
  std::string out_path = "cli_test_stdout.txt";
  std::string cmd = cmd_line + " > " + out_path + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out_path.c_str());
  return {WEXITSTATUS(rc), ss.str()};
}

RunResult run(const std::string& args) {
  return run_raw(std::string(CHORDAL_CLI_PATH) + " " + args);
}

void write_worked_model(const std::string& path) {
  std::ofstream out(path);
  out << "10 1\n0 1 2 3 4 1 6 7 7 1\n3 4\n1 2 3 4 5 6 7 8 9 10\n7\n6\n";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen is deterministic and verifies") {
  auto r1 = run("gen -n 64 -k 6 -t 256 --seed 7 -o cli_a.model");
  auto r2 = run("gen -n 64 -k 6 -t 256 --seed 7 -o cli_b.model");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(slurp("cli_a.model") == slurp("cli_b.model"));

  auto v = run("verify cli_a.model");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("PASS") != std::string::npos);

  // the environment variable overrides the flag
  auto e1 = run_raw("env CHORDAL_SEED=99 " + std::string(CHORDAL_CLI_PATH) +
                    " gen -n 16 -k 3 -t 30 --seed 1 -o cli_env1.model");
  auto e2 = run("gen -n 16 -k 3 -t 30 --seed 99 -o cli_env2.model");
  CHECK(e1.exit_code == 0);
  CHECK(slurp("cli_env1.model") == slurp("cli_env2.model"));

  std::remove("cli_a.model");
  std::remove("cli_b.model");
  std::remove("cli_env1.model");
  std::remove("cli_env2.model");
}

TEST_CASE("encode, stats and queries on the worked model") {
  write_worked_model("cli_w.model");
  auto e1 = run("encode cli_w.model -o cli_w.blob");
  CHECK(e1.exit_code == 0);
  CHECK(e1.out.find("stored_paths=4") != std::string::npos);
  std::string blob1 = slurp("cli_w.blob");
  auto e2 = run("encode cli_w.model -o cli_w.blob");
  CHECK(e2.exit_code == 0);
  CHECK(slurp("cli_w.blob") == blob1);  // byte-identical re-encode

  CHECK(run("stats cli_w.blob").out.find("total_bits=") != std::string::npos);

  CHECK(run("query cli_w.blob adj 1 3").out == "true\n");
  CHECK(run("query cli_w.blob adj 2 3").out == "false\n");
  CHECK(run("query cli_w.blob nbh 3").out == "1\n");
  CHECK(run("query cli_w.blob deg 1").out == "2\n");
  CHECK(run("query cli_w.blob deg 99").exit_code == 2);
  CHECK(run("query cli_w.blob bogus 1").exit_code == 2);
  std::remove("cli_w.model");
  std::remove("cli_w.blob");
}

TEST_CASE("usage and format errors exit with 2") {
  CHECK(run("gen -n 1").exit_code == 2);            // missing required flags
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("verify does_not_exist.model").exit_code == 2);
  std::ofstream("cli_bad.model") << "not a model\n";
  CHECK(run("verify cli_bad.model").exit_code == 2);
  std::remove("cli_bad.model");
  CHECK(run("lbcheck -m 7 -k 4").exit_code == 2);   // 3 does not divide 4 leaves
}

TEST_CASE("lbcheck reports the measured distinctness") {
  auto r = run("lbcheck -m 7 -k 3 --dep 1 --csv cli_lb.csv");
  CHECK(r.out.find("structures=35") != std::string::npos);
  CHECK(r.out.find("distinct=23") != std::string::npos);
  CHECK(r.out.find("witness") != std::string::npos);
  CHECK(r.exit_code == 1);  // collisions exist, reported as a verification failure
  CHECK(slurp("cli_lb.csv").find("7,3,1,35,23,false") != std::string::npos);
  std::remove("cli_lb.csv");
}

TEST_CASE("bench runs") {
  write_worked_model("cli_w2.model");
  run("encode cli_w2.model -o cli_w2.blob");
  auto r = run("bench cli_w2.blob --queries 50 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("adjacency_us=") != std::string::npos);
  std::remove("cli_w2.model");
  std::remove("cli_w2.blob");
}
