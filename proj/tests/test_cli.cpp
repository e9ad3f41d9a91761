#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

std::string cli_path;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = cli_path + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe))
    output.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("analyze json on the AND-type function") {
  RunResult r = run("analyze --tt 08 -n 2 --json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 2);
  CHECK(j["tt"] == "08");
  CHECK(j["report"]["bent"] == "yes");
  CHECK(j["report"]["monotone"] == true);
  CHECK(j["report"]["plateaued_order"] == 0);
  CHECK(j["report"]["pc_degree"] == 2);
  CHECK(j["report"]["ltf"]["verdict"] == "member");
  CHECK(j["report"]["chow"] == nlohmann::json::array({2, 2, 2}));
  CHECK(j["spectrum"] == nlohmann::json::array({2, 2, 2, -2}));
  CHECK(j["influence"]["total"]["numerator"] == 1);
  CHECK(j["influence"]["total"]["exponent"] == 0);
  CHECK(j["entropy"] == 2.0);
}

TEST_CASE("classify text output") {
  RunResult r = run("classify --tt e8 -n 3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("monotone: yes") != std::string::npos);
  CHECK(r.output.find("sac: yes") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("analyze --tt 08").exit_code == 2);           // missing -n
  CHECK(run("analyze --tt zz -n 2").exit_code == 2);      // bad hex
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("experiment census -n 7").exit_code == 2);    // guard
  CHECK(run("experiment census -n 5").exit_code == 2);    // long-run flag required
  CHECK(run("").exit_code == 2);                          // subcommand required
}

TEST_CASE("experiment census n=4 confirms the empty intersection") {
  RunResult r = run("experiment census -n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("monotone ∩ (B∪S∪PC1): 0") != std::string::npos);
  CHECK(r.output.find("bent: 896") != std::string::npos);
  CHECK(r.output.find("ltf: 1882") != std::string::npos);
}

TEST_CASE("experiment census n=2 exits 0 and writes csv") {
  RunResult r = run("experiment census -n 2 --csv /tmp/bfa_census2.csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("bent: 8") != std::string::npos);
  std::ifstream csv("/tmp/bfa_census2.csv");
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "experiment,n,param,statistic,exact_num,exact_exp,value,bound,status");
}

TEST_CASE("generate determinism and provenance") {
  RunResult a = run("generate mm-bent -m 2 --seed 5");
  RunResult b = run("generate mm-bent -m 2 --seed 5");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("# generate mm-bent m=2 n=4 seed=5") != std::string::npos);

  // generated bent table analyzes as bent
  std::string hex = a.output.substr(0, a.output.find('\n'));
  RunResult check = run("analyze --tt " + hex + " -n 4 --json");
  auto j = nlohmann::json::parse(check.output);
  CHECK(j["report"]["bent"] == "yes");

  RunResult p = run("generate plateaued -n 6 -k 2 --seed 1");
  CHECK(p.exit_code == 0);
  RunResult l = run("generate ltf -n 8 --model normal --seed 3");
  CHECK(l.exit_code == 0);
  CHECK(l.output.find("# weights") != std::string::npos);
  CHECK(run("generate ptf -n 6 -d 2 --seed 3").exit_code == 0);
  CHECK(run("generate random -n 4 --seed 9").exit_code == 0);
  CHECK(run("generate plateaued -n 6 -k 1 --seed 1").exit_code == 2);  // parity
}

TEST_CASE("circuit subcommands") {
  const char* path = "/tmp/bfa_maj3.circuit";
  {
    std::ofstream out(path);
    out << "circuit n=3\nlevel 1 AND\ng1.1 = x1 x2\ng1.2 = x1 x3\ng1.3 = x2 x3\n"
           "level 2 OR\ng2.1 = g1.1 g1.2 g1.3\n";
  }
  RunResult parse = run(std::string("circuit parse ") + path);
  CHECK(parse.exit_code == 0);
  CHECK(parse.output.find("ok n=3 depth=2 size=4") != std::string::npos);

  RunResult eval = run(std::string("circuit eval ") + path + " --dnf /tmp/bfa_maj3_dnf.txt");
  CHECK(eval.exit_code == 0);
  CHECK(eval.output.substr(0, 2) == "e8");  // MAJ3 bits {3,5,6,7} -> byte 0xe8

  // round-trip: the DNF evaluates back to the same table
  RunResult dnf_eval = run("circuit eval /tmp/bfa_maj3_dnf.txt");
  CHECK(dnf_eval.exit_code == 0);
  CHECK(dnf_eval.output.substr(0, 2) == "e8");

  {
    std::ofstream out(path);
    out << "circuit n=2\nlevel 1 AND\ng1.1 = x1\nlevel 2 AND\ng2.1 = g1.1\n";
  }
  RunResult bad = run(std::string("circuit parse ") + path);
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("alternate") != std::string::npos);
}

TEST_CASE("experiment failures exit 1 vs guard exit 2") {
  CHECK(run("experiment fact2 -n 4").exit_code == 0);
  CHECK(run("experiment fact2 -n 6").exit_code == 2);  // long-run guard
  CHECK(run("experiment fact4 -k 1 --n-list 7,9").exit_code == 0);
  CHECK(run("experiment fact4 -k 1 --n-list 6").exit_code == 2);  // parity violation
  CHECK(run("experiment probe -n 6 -d 2 --samples 50 --seed 1").exit_code == 0);
  CHECK(run("experiment fact3 -n 6 --samples 100 --seed 1").exit_code == 0);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli>\n");
    return 1;
  }
  cli_path = argv[argc - 1];
  doctest::Context context;
  context.applyCommandLine(argc - 1, argv);
  return context.run();
}
