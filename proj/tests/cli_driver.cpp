// End-to-end harness for the command-line tool. Invoked by ctest with the
// CLI path as argv[1]; builds fixtures in a scratch directory, runs the
// commands, and checks outputs and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string cmd = g_cli + " " + args + " > " + out_path + " 2> cli_stderr.tmp";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n";
  } else {
    std::cout << "ok: " << what << "\n";
  }
}

void write(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_driver <path-to-coexkit>\n";
    return 2;
  }
  g_cli = std::filesystem::absolute(argv[1]).string();
  const auto dir = std::filesystem::temp_directory_path() / "coexkit_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::filesystem::current_path(dir);

  write("half.json", R"({"dim": 2, "entries": [[[0.5,0],[0,0]],[[0,0],[0.5,0]]]})");
  write("gen.json", R"({"dim": 2, "entries": [[[0.45,0],[0.2,0.1]],[[0.2,-0.1],[0.55,0]]]})");
  write("proj.json", R"({"dim": 2, "entries": [[[1,0],[0,0]],[[0,0],[0,0]]]})");
  // 0.8 * projection at angle pi/4 (above the 2/3 threshold against 0.5 P)
  write("above.json",
        R"({"dim": 2, "entries": [[[0.4,0],[0.4,0]],[[0.4,0],[0.4,0]]]})");
  write("halfp.json", R"({"dim": 2, "entries": [[[0.5,0],[0,0]],[[0,0],[0,0]]]})");
  write("notherm.json", R"({"dim": 2, "entries": [[[0,0],[1,0]],[[0,0],[0,0]]]})");
  write("id_spec.json",
        R"({"unitary": {"dim": 2, "entries": [[[1,0],[0,0]],[[0,0],[1,0]]]},
            "antiunitary": false, "g_table": [], "g_default": "identity", "flip": "none"})");

  {
    const RunResult r = run("check --a half.json --b gen.json");
    expect(r.exit_code == 0, "scalar pair exits 0");
    expect(r.out.find("\"coexistent\"") != std::string::npos, "scalar pair coexistent");
    expect(r.out.find("\"commuting\"") != std::string::npos, "scalar pair method commuting");
  }
  {
    const RunResult r = run("check --a halfp.json --b above.json");
    expect(r.exit_code == 0, "above-threshold pair exits 0");
    expect(r.out.find("\"not_coexistent\"") != std::string::npos,
           "above-threshold pair not coexistent");
    expect(r.out.find("qubit_pair_formula") != std::string::npos,
           "above-threshold pair decided by the qubit formula");
  }
  {
    // A barely-infeasible qubit rank-one pair embedded as the first 4x4
    // block (the second block is benign): no feasible point exists, and one
    // cycle cannot fill the rejection window, so the starved solver has to
    // report an honest undecided, exit 3.
    write("embed_a.json",
          R"({"dim": 4, "entries": [
            [[0.5,0],[0,0],[0,0],[0,0]],
            [[0,0],[0,0],[0,0],[0,0]],
            [[0,0],[0,0],[0.3,0],[0,0]],
            [[0,0],[0,0],[0,0],[0.3,0]]]})");
    write("embed_b.json",
          R"({"dim": 4, "entries": [
            [[0.3333383333333333,0],[0.3333383333333333,0],[0,0],[0,0]],
            [[0.3333383333333333,0],[0.3333383333333333,0],[0,0],[0,0]],
            [[0,0],[0,0],[0.4,0],[0,0]],
            [[0,0],[0,0],[0,0],[0.4,0]]]})");
    const RunResult u = run("check --a embed_a.json --b embed_b.json --max-iter 1");
    expect(u.exit_code == 3, "starved solver exits 3, got " + std::to_string(u.exit_code));
    expect(u.out.find("\"undecided\"") != std::string::npos, "undecided verdict printed");
  }
  {
    const RunResult r = run("check --a notherm.json --b half.json");
    expect(r.exit_code == 2, "non-hermitian input exits 2");
    expect(slurp("cli_stderr.tmp").find("not_hermitian") != std::string::npos,
           "diagnostic names the broken invariant");
    write("id3.json",
          R"({"dim": 3, "entries": [[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]]})");
    const RunResult d = run("check --a half.json --b id3.json");
    expect(d.exit_code == 2, "dim mismatch exits 2");
    expect(slurp("cli_stderr.tmp").find("dim_mismatch") != std::string::npos,
           "diagnostic names the dim mismatch");
  }
  {
    const RunResult r = run("strength --a proj.json --dir [1,0]");
    expect(r.exit_code == 0, "strength along the range direction runs");
    expect(r.out.rfind("1 1 ", 0) == 0, "strength of P along its range is 1 1");
  }
  {
    const RunResult r = run("strength --a halfp.json --angle 0.7853981633974483");
    expect(r.exit_code == 0, "strength at an angle runs");
    expect(r.out.rfind("0 ", 0) == 0, "out-of-range probe reports 0");
  }
  {
    const RunResult r = run("profile --l1 0.5 --l2 0.5 --grid 9");
    expect(r.exit_code == 0, "profile runs");
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    expect(line == "alpha,T", "profile header");
    int ones = 0, rows = 0;
    while (std::getline(lines, line)) {
      ++rows;
      ones += line.substr(line.find(',') + 1) == "1";
    }
    expect(rows == 9 && ones == 9, "constant-1 profile for equal eigenvalues");
  }
  {
    const RunResult r = run("bloch --t 0.5 --mu 0 --grid 17 --out cone.csv");
    expect(r.exit_code == 0, "bloch export runs");
    const std::string csv = slurp("cone.csv");
    expect(csv.rfind("theta,coeff,x0,xmu,x3,tag\n", 0) == 0, "bloch csv header");
    expect(csv.find("1.5707963267948966,1,0.5,") != std::string::npos,
           "theta = pi/2 row has coefficient 1");
    expect(!std::filesystem::exists("cone.csv.tmp"), "no temp file left behind");
  }
  {
    write("p8.json", R"({"dim": 2, "entries": [[[0.8,0],[0,0]],[[0,0],[0.8,0]]]})");
    const RunResult r = run("compare --a half.json --b p8.json --samples 64 --seed 3");
    expect(r.exit_code == 0, "compare runs");
    expect(r.out.find("\"equal\"") != std::string::npos, "scalar profiles are identical");
    write("d1.json", R"({"dim": 2, "entries": [[[0.7,0],[0,0]],[[0,0],[0.2,0]]]})");
    write("d2.json", R"({"dim": 2, "entries": [[[0.6,0],[0,0]],[[0,0],[0.2,0]]]})");
    const RunResult d = run("compare --a d1.json --b d2.json --samples 512 --seed 3");
    expect(d.out.find("\"differs\"") != std::string::npos, "distinct diagonals differ");
    expect(d.out.find("separating_probe") != std::string::npos, "separating probe reported");
  }
  {
    const RunResult r1 = run("apply-auto --spec id_spec.json --in gen.json --out out1.json");
    expect(r1.exit_code == 0, "apply-auto runs");
    const RunResult r2 = run("apply-auto --spec id_spec.json --in out1.json --out out2.json");
    expect(r2.exit_code == 0, "apply-auto reruns");
    expect(slurp("out1.json") == slurp("out2.json"),
           "identity spec is idempotent on the canonical encoding");
  }
  {
    const RunResult r1 = run("verify --suite bloch --samples 80 --seed 42");
    expect(r1.exit_code == 0, "bloch suite passes");
    expect(r1.out.find("SUITE PASS bloch") != std::string::npos, "bloch suite report");
    const RunResult r2 = run("verify --suite bloch --samples 80 --seed 42");
    expect(r1.out == r2.out, "verify output is byte-identical across runs");
  }
  {
    const RunResult r = run("verify --suite symmetry --samples 80 --seed 42 --inject-broken-map");
    expect(r.exit_code == 1, "broken-map hook fails the symmetry suite");
    expect(r.out.find("counterexample") != std::string::npos, "counterexample dumped");
  }

  std::cout << (g_failures == 0 ? "CLI DRIVER PASS\n" : "CLI DRIVER FAIL\n");
  return g_failures == 0 ? 0 : 1;
}
