#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperspec/cli.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/io.hpp"

using namespace hyperspec;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hyperspec_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& text) const {
    const auto p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("check passes on the closed-form families") {
  const auto complete = run({"check", "complete", "--n", "4", "--c", "2"});
  CHECK(complete.code == kExitPass);
  CHECK(complete.out.find("0.666666666666667 3") != std::string::npos);
  CHECK(complete.out.find("verdict: pass") != std::string::npos);

  const auto lattice = run({"check", "lattice", "--l", "3"});
  CHECK(lattice.code == kExitPass);
  CHECK(lattice.out.find("1.5 4") != std::string::npos);

  CHECK(run({"check", "hypercycle", "--n", "9", "--l", "4"}).code == kExitPass);
  CHECK(run({"check", "hyperflower", "--l", "5", "--t", "3", "--r", "1", "--cores", "1"}).code ==
        kExitPass);
  const auto two = run({"check", "hyperflower", "--l", "3", "--r", "2", "--cores", "1,3"});
  CHECK(two.code == kExitPass);
  CHECK(two.out.find("at-least") != std::string::npos);
  CHECK(run({"check", "hyperflower", "--l", "3", "--r", "3", "--cores", "1,2,2"}).code == kExitPass);
}

TEST_CASE("check fails when the tolerance cannot be met") {
  // Round-off alone exceeds this.
  const auto r = run({"check", "hypercycle", "--n", "9", "--l", "4", "--tol", "1e-300"});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("verdict: fail") != std::string::npos);
}

TEST_CASE("spectrum") {
  TempDir dir;
  const auto edge_file = dir.file("edge.txt", "2 1\nin: 1 ; out: 2\n");
  const auto plain = run({"spectrum", edge_file});
  CHECK(plain.code == kExitPass);
  CHECK(plain.out == "0\n2\n");
  CHECK(run({"spectrum", "-"}, "2 1\nin: 1 ; out: 2\n").out == "0\n2\n");

  const auto path = dir.file("path.txt", "3 2\nin: 1 ; out: 2\nin: 2 ; out: 3\n");
  CHECK(run({"spectrum", path}).out == "0\n1\n2\n");
  CHECK(run({"spectrum", path, "--signless"}).out == "0\n1\n2\n");

  const auto triangle = dir.file("tri.txt", "3 3\nin: 1 ; out: 2\nin: 2 ; out: 3\nin: 3 ; out: 1\n");
  CHECK(run({"spectrum", triangle}).out == "0\n1.5\n1.5\n");
  CHECK(run({"spectrum", triangle, "--signless"}).out == "0.5\n0.5\n2\n");
  CHECK(run({"spectrum", triangle, "--multiplicities"}).out == "0 1\n1.5 2\n");

  const auto lattice = dir.file("lattice.txt", write_hypergraph(gen_lattice(3)));
  CHECK(run({"spectrum", lattice, "--multiplicities"}).out == "0 4\n1.5 4\n3 1\n");
}

TEST_CASE("generate") {
  TempDir dir;
  const auto out = (dir.path / "cycle.txt").string();
  CHECK(run({"generate", "hypercycle", "--n", "6", "--l", "3", "-o", out}).code == kExitPass);
  std::ifstream file(out);
  std::stringstream text;
  text << file.rdbuf();
  CHECK(parse_hypergraph(text.str()) == gen_hypercycle(6, 3));

  CHECK(run({"generate", "graph", "--edges", "1-2,2-3"}).out == "3 2\nin: 1 ; out: 2\nin: 2 ; out: 3\n");
  const auto a = run({"generate", "graph", "--n", "8", "--seed", "3"});
  CHECK(a.code == kExitPass);
  CHECK(a.out == run({"generate", "graph", "--n", "8", "--seed", "3"}).out);
  CHECK(run({"generate", "complete", "--n", "3", "--c", "3"}).out == "3 1\nin: 1 2 3 ; out:\n");
}

TEST_CASE("usage errors exit with 2") {
  TempDir dir;
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"check", "petunia"}).code == kExitUsage);
  CHECK(run({"check", "complete", "--n", "3", "--c", "5"}).code == kExitUsage);
  CHECK(run({"check", "lattice"}).code == kExitUsage);
  CHECK(run({"check", "graph", "--edges", "1-2"}).code == kExitUsage);
  CHECK(run({"check", "hyperflower", "--l", "3", "--r", "2", "--t", "2", "--cores", "1,1"}).code ==
        kExitUsage);
  CHECK(run({"check", "hyperflower", "--l", "3", "--r", "2", "--cores", "1"}).code == kExitUsage);
  CHECK(run({"generate", "graph", "--edges", "1-1"}).code == kExitUsage);
  CHECK(run({"generate", "graph", "--edges", "1-x"}).code == kExitUsage);
  CHECK(run({"check", "lattice", "--l", "3", "--tol", "-1"}).code == kExitUsage);

  const auto missing = run({"spectrum", (dir.path / "nope.txt").string()});
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.find("cannot read") != std::string::npos);

  const auto bad = dir.file("bad.txt", "2 1\nin: 1 ; out: 7\n");
  const auto parsed = run({"spectrum", bad});
  CHECK(parsed.code == kExitUsage);
  CHECK(parsed.err.find("line 2") != std::string::npos);

  CHECK(run({"--help"}).code == kExitPass);
}

TEST_SUITE_END();
