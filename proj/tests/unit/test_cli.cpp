#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "sheafdist/sheafdist.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SHEAFDIST_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 256> buf;
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(SHEAFDIST_DATA) + "/" + name; }

std::string temp_file(const char* name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("cli dist and match on the circle fixture") {
  const std::string f = data("circle_f.gbc"), g = data("circle_g.gbc");
  CHECK(run("dist " + f + " " + g).out == "1\n");
  CHECK(run("dist " + f + " " + f).out == "0\n");
  const Run m = run("match " + f + " " + g);
  CHECK(m.code == 0);
  CHECK(m.out == "1\nC -1 [-1,1]@0 [0,0]@0 1\nC 0 (-1,1)@0 [0,0]@1 1\n");
  CHECK(run("component " + f + " " + g).out == "true\n");
  CHECK(run("gamma " + f).out == "0 1\n1 1\n");
  CHECK(run("gamma --compact " + g).out == "0 1\n1 1\n");
  CHECK(run("interpolate " + f + " " + g + " --t 0.5").out == "0 [-0.5,0.5]\n0 (-0.5,0.5)\n");
}

TEST_CASE("cli infinite distance is a success") {
  const std::string open = temp_file("sd_open.gbc", "0 (0,1)\n");
  const std::string empty = temp_file("sd_empty.gbc", "");
  const Run r = run("dist " + open + " " + empty);
  CHECK(r.code == 0);
  CHECK(r.out == "inf\n");
  CHECK(run("component " + open + " " + empty).out == "false\n");
  CHECK(run("interpolate " + open + " " + empty + " --t 0").code == 1);
}

TEST_CASE("cli deletions and diagrams") {
  const std::string a = temp_file("sd_half_a.gbc", "0 [0,1)\n");
  const std::string e = temp_file("sd_half_e.gbc", "");
  CHECK(run("match " + a + " " + e).out == "0.5\nR 0 [0,1)@0 DELETED 0.5\n");
  CHECK(run("match " + e + " " + a).out == "0.5\nR 0 DELETED [0,1)@0 0.5\n");
  const std::string pdg = temp_file("sd_diag.pdg", "# diagram\n1 -5 2\n");
  CHECK(run("import-diagram " + pdg + " --side L").out == "1 (-2,5]\n");
  CHECK(run("import-diagram " + pdg).out == "1 [-5,2)\n");
  CHECK(run("import-diagram " + pdg + " --side X").code == 2);
}

TEST_CASE("cli convolve output re-parses to the library result") {
  const std::string f = data("circle_f.gbc");
  for (const char* eps : {"0", "0.5", "1", "3", "-0.25"}) {
    const Run r = run("convolve " + f + " --eps " + eps);
    REQUIRE(r.code == 0);
    const auto expected = sheafdist::convolve_barcode(sheafdist::read_barcode_file(f), std::stod(eps));
    CHECK(sheafdist::parse_barcode(r.out) == expected);
  }
}

TEST_CASE("cli hom") {
  CHECK(run("hom \"[1,2]@1\" \"(0,3)@0\"").out == "1\n");
  CHECK(run("hom \"(0,3)@1\" \"[1,2]@0\"").out == "0\n");
  CHECK(run("hom --oracle \"[0,1]@1\" \"(1,2)@0\"").out == "1\n");
  CHECK(run("hom --oracle \"[0,inf)@0\" \"(1,2)@0\"").code == 1);
  CHECK(run("hom \"[0,1\" \"(1,2)@0\"").code == 2);
}

TEST_CASE("cli exit codes and validation") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("dist --bogus a b").code == 2);
  CHECK(run("dist /nonexistent.gbc /nonexistent.gbc").code == 2);
  const std::string bad = temp_file("sd_bad.gbc", "0 [0,1]\n0 [2,1]\n");
  CHECK(run("validate " + bad).code == 2);
  CHECK(run("validate " + data("circle_f.gbc")).out == "0 [-1,1]\n0 (-1,1)\n");
  CHECK(run("--help").code == 0);
}

TEST_CASE("cli tolerance from flag and environment") {
  // (0,1.000001) meets [1,2] only in a sliver thinner than 1e-3.
  CHECK(run("hom \"(0,1.000001)@0\" \"[1,2]@0\"").out == "1\n");
  CHECK(run("--tol 1e-3 hom \"(0,1.000001)@0\" \"[1,2]@0\"").out == "0\n");
  CHECK(std::system((std::string("SHEAFDIST_TOL=1e-3 ") + SHEAFDIST_CLI +
                     " hom \"(0,1.000001)@0\" \"[1,2]@0\" | grep -qx 0").c_str()) == 0);
  CHECK(run("--tol -1 hom \"(0,1)@0\" \"[1,2]@0\"").code == 2);
}
