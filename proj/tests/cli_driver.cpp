// Copyright 2026 the finalg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Spawns the CLI binary and checks exit codes and key output fragments.
// argv[1]: path to the binary, argv[2]: data directory.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;
std::string g_cli;
std::string g_data;
std::string g_tmp;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  std::string out_file = g_tmp + "/cli_out.txt";
  std::string command = g_cli + " " + args + " > " + out_file + " 2>&1";
  int raw = std::system(command.c_str());
  RunResult result;
  if (raw >= 0 && WIFEXITED(raw)) result.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

void expect_exit(const std::string& args, int want) {
  RunResult r = run(args);
  if (r.exit_code != want) {
    ++g_failures;
    std::cerr << "FAIL: '" << args << "' exited " << r.exit_code << ", want " << want << "\n"
              << r.output;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_driver <cli-binary> <data-dir>\n";
    return 1;
  }
  g_cli = argv[1];
  g_data = argv[2];
  const char* tmpdir = std::getenv("TMPDIR");
  g_tmp = tmpdir ? tmpdir : "/tmp";

  std::string diamond = g_data + "/diamond.alg";

  expect_exit("validate " + diamond, 0);
  expect_exit("validate " + g_data + "/bad_entry.alg", 2);
  expect_exit("validate " + g_data + "/missing.alg", 2);
  expect_exit("", 2);
  expect_exit("frobnicate", 2);
  expect_exit("--help", 0);

  RunResult conlat = run("conlat " + diamond);
  expect(conlat.exit_code == 0, "conlat exits 0");
  expect(conlat.output.find("7 congruences") != std::string::npos, "conlat counts 7");
  expect(conlat.output.find("0|1 2 3") != std::string::npos, "conlat lists theta4");

  RunResult conlat_json = run("conlat " + diamond + " --json");
  expect(conlat_json.output.find("\"congruence_count\": 7") != std::string::npos,
         "conlat --json carries the count");

  std::string dot_path = g_tmp + "/diamond.dot";
  expect_exit("conlat " + diamond + " --dot " + dot_path, 0);
  {
    std::ifstream in(dot_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    expect(buffer.str().find("digraph conlat {") == 0, "dot file written");
    expect(buffer.str().find("n0 -> n1;") != std::string::npos, "dot has edges");
  }

  RunResult analyze = run("analyze " + diamond);
  expect(analyze.exit_code == 0, "analyze exits 0");
  expect(analyze.output.find("quasi-rees: yes") != std::string::npos, "analyze quasi-rees");
  expect(analyze.output.find("semimodular: yes") != std::string::npos, "analyze semimodular");
  expect(analyze.output.find("modular: no") != std::string::npos, "analyze modular");

  RunResult analyze_json = run("analyze " + diamond + " --json");
  expect(analyze_json.output.find("\"absorbing\": [") != std::string::npos,
         "analyze --json absorbing");

  // guard exceeded
  expect_exit("conlat " + g_data + "/big13.alg", 3);
  expect_exit("analyze " + g_data + "/big13.alg", 3);
  // ... unless the guard override raises the cap (empty signature: Bell
  // numbers would explode well before 13, so keep to validate here)
  expect_exit("validate " + g_data + "/big13.alg", 0);

  // quotient
  RunResult quot = run("quotient " + diamond + " --theta \"0|1 2 3\"");
  expect(quot.exit_code == 0, "quotient exits 0");
  expect(quot.output.find("size 2") != std::string::npos, "quotient has two elements");
  expect_exit("quotient " + diamond + " --theta \"0 3|1|2\"", 2);
  expect_exit("quotient " + diamond + " --theta \"0|1\"", 2);

  std::string quot_path = g_tmp + "/diamond_quot.alg";
  expect_exit("quotient " + diamond + " --theta \"0|1 2 3\" --out " + quot_path, 0);
  expect_exit("validate " + quot_path, 0);

  // identity checks
  expect_exit("check-identity " + diamond + " --lhs \"join(x,y)\" --rhs \"join(y,x)\"", 0);
  RunResult failing = run("check-identity " + diamond + " --lhs \"join(x,y)\" --rhs \"x\"");
  expect(failing.exit_code == 1, "failing identity exits 1");
  expect(failing.output.find("x=0 y=1") != std::string::npos, "counterexample printed");
  expect_exit("check-identity " + diamond + " --lhs \"meet(x,y)\" --rhs \"x\"", 2);

  // term condition checks
  std::string loop = g_data + "/loop3.alg";
  expect_exit("check-terms " + loop + " --p0 \"one\" --p \"rdiv(x,y)\"", 0);
  expect_exit("check-terms " + loop + " --constant 0 --p \"rdiv(x,y)\"", 0);
  expect_exit("check-terms " + loop + " --p0 \"one\"", 0);
  std::string imp = g_data + "/imp2.alg";
  expect_exit("check-terms " + imp + " --constant 1 --p \"imp(x,y)\" --p \"imp(y,x)\"", 0);
  expect_exit("check-terms " + diamond + " --constant 3 --p \"join(x,y)\"", 1);
  expect_exit("check-terms " + diamond + " --p0 \"join(x,y)\"", 2);  // two variables
  expect_exit("check-terms " + diamond, 2);

  // search
  RunResult search = run(
      "search --signature \"op f 2\" --size 2 --exhaustive --require directoid --json");
  expect(search.exit_code == 0, "search exits 0");
  expect(search.output.find("\"matched\": 2") != std::string::npos, "search matches 2");
  RunResult search_again = run(
      "search --signature \"op f 2\" --size 2 --exhaustive --require directoid --json");
  expect(search.output == search_again.output, "search output is stable");

  RunResult random_search =
      run("search --signature \"op f 2\" --size 3 --random 11 25 --require quasi-rees --json");
  expect(random_search.exit_code == 0, "random search exits 0");
  expect(random_search.output.find("\"examined\": 25") != std::string::npos,
         "random search examined 25");

  expect_exit("search --signature \"op f 2\" --size 2", 2);  // no mode picked
  expect_exit("search --signature \"op f 2\" --size 2 --exhaustive --require sparkly", 2);
  expect_exit("search --signature \"op f 2\" --size 4 --exhaustive", 3);
  // the guard override admits size 4 through the directoid enumerator
  expect_exit(
      "--max-size 4 search --signature \"op f 2\" --size 4 --exhaustive --require directoid", 0);

  // UA_MAX_SIZE acts as the same override through the environment
  {
    std::string saved = g_cli;
    g_cli = "UA_MAX_SIZE=5 " + saved;
    expect_exit("search --signature \"op f 2\" --size 5 --exhaustive --require directoid", 0);
    g_cli = "UA_MAX_SIZE=2 " + saved;
    expect_exit("conlat " + g_data + "/chain3.alg", 3);
    g_cli = saved;
  }

  if (g_failures == 0) {
    std::cout << "cli driver: all checks passed\n";
    return 0;
  }
  std::cerr << "cli driver: " << g_failures << " failures\n";
  return 1;
}
