#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

const std::string kBin = DENDRO_BIN;
const std::string kFixtures = DENDRO_FIXTURES;
const std::string kGolden = DENDRO_GOLDEN;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = kBin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* args;
  const char* golden;
  int exit_code;
};

// one entry per documented verb form
const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"check algebra {F}/A1.json", "check_algebra_A1.json", 0},
      {"check algebra {F}/broken.json", "check_algebra_broken.json", 1},
      {"check representation {F}/A1_adjoint.json", "check_representation_A1.json", 0},
      {"check rota-baxter {F}/P1_rb.json", "check_rota_baxter_P1.json", 0},
      {"check rota-baxter {F}/P1_rb_broken.json", "check_rota_baxter_P1_broken.json", 1},
      {"check crossed-module {F}/crossed.json", "check_crossed_module.json", 0},
      {"check two-term {F}/twoterm.json", "check_two_term.json", 0},
      {"make semidirect {F}/A1_semidirect_input.json", "make_semidirect_A1.json", 0},
      {"make aguiar {F}/P1_rb.json", "make_aguiar_P1.json", 0},
      {"make extension {F}/A1_extension_input.json", "make_extension_A1.json", 0},
      {"make skeletal {F}/A1_skeletal_input.json", "make_skeletal_A1.json", 0},
      {"make strict {F}/crossed.json", "make_strict.json", 0},
      {"make split {F}/twoterm.json", "make_split.json", 0},
      {"cohomology {F}/A1.json --degree 2", "cohomology_A1_2.json", 0},
      {"cohomology {F}/A2.json --degree 2", "cohomology_A2_2.json", 0},
      {"hochschild-compare {F}/A1.json --degree 2", "hochschild_compare_A1_2.json", 0},
      {"deform check {F}/A2_deform.json", "deform_check_A2.json", 0},
      {"deform check {F}/zero_deform.json", "deform_check_zero.json", 0},
      {"deform obstruction {F}/zero_deform.json", "deform_obstruction_zero.json", 0},
      {"deform extend {F}/A2_deform.json", "deform_extend_A2.json", 0},
      {"udf {F}/A3_udf.json --order 4", "udf_A3.json", 0},
      {"homotopy check {F}/A2_graded.json", "homotopy_check_A2.json", 0},
      {"homotopy check {F}/broken_graded.json", "homotopy_check_broken.json", 1},
      {"homotopy check {F}/A2_shifted.json", "homotopy_check_A2_shifted.json", 0},
      {"homotopy shift {F}/A2_graded.json", "homotopy_shift_A2.json", 0},
      {"homotopy split {F}/twoterm.json", "homotopy_split_twoterm.json", 0},
      {"homotopy rb {F}/module_morphism_rb.json", "homotopy_rb_module_morphism.json", 0},
      {"coder-square {F}/A2_graded.json", "coder_square_A2.json", 0},
      {"coder-square {F}/broken_graded.json", "coder_square_broken.json", 1},
  };
  return cases;
}

std::string expand(std::string s) {
  const std::string key = "{F}";
  for (size_t pos; (pos = s.find(key)) != std::string::npos;) s.replace(pos, key.size(), kFixtures);
  return s;
}

}  // namespace

TEST_CASE("golden outputs are reproduced byte for byte") {
  for (const GoldenCase& c : golden_cases()) {
    CAPTURE(c.args);
    RunResult r = run(expand(c.args));
    CHECK(r.exit_code == c.exit_code);
    CHECK(r.output == slurp(kGolden + "/" + c.golden));
  }
}

TEST_CASE("make outputs re-verify under the matching check verb") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"make semidirect {F}/A1_semidirect_input.json", "check algebra "},
      {"make aguiar {F}/P1_rb.json", "check algebra "},
      {"make extension {F}/A1_extension_input.json", "check algebra "},
      {"make skeletal {F}/A1_skeletal_input.json", "check two-term "},
      {"make strict {F}/crossed.json", "check two-term "},
      {"make split {F}/twoterm.json", "homotopy check "},
      {"homotopy split {F}/twoterm.json", "homotopy check "},
      {"homotopy shift {F}/A2_graded.json", "homotopy check "},
      {"homotopy rb {F}/module_morphism_rb.json", "homotopy check "},
      {"udf {F}/A3_udf.json --order 3", "deform check "},
      {"deform extend {F}/A2_deform.json", "deform check "},
  };
  int i = 0;
  for (const auto& [make_cmd, check_cmd] : pairs) {
    CAPTURE(make_cmd);
    const std::string tmp = "/tmp/dendro_roundtrip_" + std::to_string(i++) + ".json";
    RunResult made = run(expand(make_cmd) + " --out " + tmp);
    CHECK(made.exit_code == 0);
    RunResult checked = run(check_cmd + tmp);
    CHECK(checked.exit_code == 0);
  }
}

TEST_CASE("--out matches stdout bytes") {
  const std::string tmp = "/tmp/dendro_out_test.json";
  RunResult direct = run(expand("cohomology {F}/A1.json --degree 2"));
  RunResult filed = run(expand("cohomology {F}/A1.json --degree 2 --out " + tmp));
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  CHECK(slurp(tmp) == direct.output);
}

TEST_CASE("usage and parse failures exit with code 2") {
  CHECK(run("frobnicate x.json").exit_code == 2);
  CHECK(run("check algebra /nonexistent.json").exit_code == 2);
  CHECK(run(expand("check algebra {F}/P1_rb.json")).exit_code == 2);  // wrong schema
  CHECK(run("check algebra").exit_code == 2);  // missing file argument
  CHECK(run("deform").exit_code == 2);         // missing subverb
}

TEST_CASE("mathematical failures exit with code 1 and name the culprit") {
  RunResult r = run(expand("check algebra {F}/broken.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("\"ok\": false") != std::string::npos);
  CHECK(r.output.find("\"basis\"") != std::string::npos);
  CHECK(run(expand("deform extend {F}/zero_deform.json")).exit_code == 1);
  CHECK(run(expand("make aguiar {F}/P1_rb_broken.json")).exit_code == 1);
}
