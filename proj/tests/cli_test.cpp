#include "doctest.h"
#include "lrcc/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string tmp = std::string(LRCC_DATA_DIR) + "/../build/cli_test_out.txt";
  std::string cmd = std::string(LRCC_BIN_PATH) + " " + args + " > " + tmp + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp);
  std::string out((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  return {code, out};
}

std::string data(const std::string& name) {
  return std::string(LRCC_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("construct subcommand") {
  RunResult r = run_cli("construct " + data("base_a_ex1.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[9, 4] code over GF(49)") != std::string::npos);

  r = run_cli("construct " + data("base_b_ex2.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[15, 8] code over GF(49)") != std::string::npos);

  r = run_cli("construct " + data("family_a_ex1.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[51, 32] code over GF(49)") != std::string::npos);
}

TEST_CASE("construct rejects malformed and infeasible inputs") {
  std::string bad = std::string(LRCC_DATA_DIR) + "/../build/bad.json";
  {
    std::ofstream f(bad);
    f << "{ not json";
  }
  RunResult r = run_cli("construct " + bad);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("ParseError") != std::string::npos);

  // a violated union-size condition exits 2 with the witness set
  std::string viol = std::string(LRCC_DATA_DIR) + "/../build/violating.json";
  {
    lrcc::ojson spec = lrcc::load_json_file(data("base_a_ex1.json"));
    spec["d"] = 5;
    spec["r"] = 3;
    spec["G"] = {{1, 2, 3, 4}, {1, 2, 3, 4}};
    spec["m"] = 2;
    lrcc::save_json_file(viol, spec);
  }
  r = run_cli("construct " + viol);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("ConditionGViolated") != std::string::npos);
  CHECK(r.out.find("{0,1}") != std::string::npos);
}

TEST_CASE("verify subcommand") {
  RunResult r = run_cli("verify " + data("base_b_ex2.json") + " --mr --optimal");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("maximally recoverable: pass (243/243 patterns)") != std::string::npos);
  CHECK(r.out.find("optimal") != std::string::npos);

  r = run_cli("verify " + data("family_a_ex1.json") + " --optimal --locality");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("distance: 4") != std::string::npos);

  // the merged family is not maximally recoverable: exit 2 with a witness
  r = run_cli("verify " + data("family_a_ex1.json") + " --mr");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("witness") != std::string::npos);

  r = run_cli("verify " + data("does_not_exist.json") + " --locality");
  CHECK(r.exit_code == 1);
}

TEST_CASE("plan and convert subcommands") {
  std::string plan_path = std::string(LRCC_DATA_DIR) + "/../build/ex1_plan.json";
  RunResult r = run_cli("plan " + data("family_a_ex1.json") +
                        " -t 8 --retained 1 --same-initial -o " + plan_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("initial [9, 4]") != std::string::npos);
  CHECK(r.out.find("final [51, 32]") != std::string::npos);

  r = run_cli("convert --plan " + plan_path + " --random 5");
  CHECK(r.exit_code == 0);
  // every run reads 16 and writes 3, matching the lower bound
  std::size_t count = 0, pos = 0;
  while ((pos = r.out.find("rho_r=16 rho_w=3  access-optimal", pos)) != std::string::npos) {
    ++count;
    pos += 1;
  }
  CHECK(count == 5);

  r = run_cli("convert --plan " + plan_path + " --random 2 --same-initial");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rho_r=16 rho_w=3") != std::string::npos);

  // infeasible plan parameters exit 2 naming the broken hypothesis
  r = run_cli("plan " + data("family_a_ex1.json") + " -t 5 --retained 1");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("HypothesisViolated") != std::string::npos);

  // codeword files: all-zero inputs are valid codewords of every window
  std::vector<std::string> cw_paths;
  for (int i = 0; i < 8; ++i) {
    std::string p = std::string(LRCC_DATA_DIR) + "/../build/cw" + std::to_string(i) + ".json";
    lrcc::save_json_file(
        p, lrcc::ojson{{"schema", "lrcc.codeword/1"}, {"v", std::vector<int>(9, 0)}});
    cw_paths.push_back(p);
  }
  std::string joined;
  for (const auto& p : cw_paths) joined += " " + p;
  r = run_cli("convert --plan " + plan_path + " --inputs" + joined);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rho_r=16 rho_w=3") != std::string::npos);
}

TEST_CASE("bounds subcommand") {
  RunResult r = run_cli("bounds --nF 51 --k 4 --t 8 --r 2 --delta 2 --d 4 --nI 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("improved: old read>=8 write>=-5 | new read>=16 write>=3") !=
        std::string::npos);

  // delta = 2 collapses the two bounds
  r = run_cli("bounds --nF 60 --k 10 --t 3 --r 4 --delta 2 --d 6 --nI 25");
  CHECK(r.exit_code == 0);
  auto classic_line = r.out.substr(r.out.find("classic"));
  classic_line = classic_line.substr(0, classic_line.find('\n'));
  auto old_part = classic_line.substr(classic_line.find("old"), classic_line.find(" | ") -
                                                                    classic_line.find("old"));
  auto new_part = classic_line.substr(classic_line.find("new") + 3);
  CHECK(old_part.substr(3) == new_part);

  r = run_cli("bounds --fig1-grid");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rate,delta,rho_r_old,rho_r_new") != std::string::npos);
  CHECK(r.out.find("0.85,3,48,69") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical outputs") {
  std::string plan_path = std::string(LRCC_DATA_DIR) + "/../build/det_plan.json";
  RunResult r = run_cli("plan " + data("base_b_ex2.json") + " -t 2 --retained 1 -o " +
                        plan_path + " --format json");
  CHECK(r.exit_code == 0);
  RunResult a = run_cli("convert --plan " + plan_path + " --random 4 --seed 99 --format json");
  RunResult b = run_cli("convert --plan " + plan_path + " --random 4 --seed 99 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  RunResult c = run_cli("convert --plan " + plan_path + " --random 4 --seed 7 --format json");
  CHECK(c.out != a.out);
}

TEST_CASE("work ceiling exits 3") {
  RunResult r = run_cli("verify " + data("family_a_ex1.json") +
                        " --distance --work-ceiling 50");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("WorkCeilingExceeded") != std::string::npos);

  // the environment variable sets the same budget
  std::string tmp = std::string(LRCC_DATA_DIR) + "/../build/cli_env_out.txt";
  std::string cmd = std::string("LRCC_WORK_CEILING=50 ") + LRCC_BIN_PATH + " verify " +
                    data("family_a_ex1.json") + " --distance > " + tmp + " 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("constructed code files round-trip through verify and plan") {
  std::string code_path = std::string(LRCC_DATA_DIR) + "/../build/ex2_code.json";
  RunResult r = run_cli("construct " + data("base_b_ex2.json") + " -o " + code_path);
  CHECK(r.exit_code == 0);

  r = run_cli("verify " + code_path + " --locality --optimal");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("optimal (classic bound 5): pass") != std::string::npos);

  std::string plan_path = std::string(LRCC_DATA_DIR) + "/../build/ex2_plan.json";
  r = run_cli("plan " + code_path + " -t 2 --retained 1 -o " + plan_path);
  CHECK(r.exit_code == 0);
  r = run_cli("convert --plan " + plan_path + " --random 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rho_r=4 rho_w=3  access-optimal") != std::string::npos);
}
