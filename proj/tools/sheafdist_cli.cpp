// Command-line front end. Talks to the library through the C API only.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sheafdist/sheafdist.h"

namespace {

enum Exit { kOk = 0, kDomain = 1, kInput = 2 };

// Thrown once an API call failed; carries the exit code to use.
struct Failure {
  int code;
};

void check(sd_status s) {
  if (s == SD_OK) return;
  std::cerr << "error: " << sd_last_error() << '\n';
  throw Failure{s == SD_ERR_PARSE || s == SD_ERR_IO ? kInput : kDomain};
}

struct BarcodeDeleter {
  void operator()(sd_barcode* b) const { sd_barcode_free(b); }
};
struct MatchingDeleter {
  void operator()(sd_matching* m) const { sd_matching_free(m); }
};
struct StringDeleter {
  void operator()(char* s) const { sd_string_free(s); }
};
using Barcode = std::unique_ptr<sd_barcode, BarcodeDeleter>;
using Matching = std::unique_ptr<sd_matching, MatchingDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

Barcode load(const std::string& path) {
  sd_barcode* b = nullptr;
  check(sd_barcode_read_file(path.c_str(), &b));
  return Barcode(b);
}

std::string number(double x) {
  char buf[64];
  check(sd_format_number(x, buf, sizeof buf));
  return buf;
}

std::string interval(const sd_interval& iv) {
  char* s = nullptr;
  check(sd_interval_format(&iv, &s));
  return String(s).get();
}

void print_barcode(const sd_barcode* b) {
  char* s = nullptr;
  check(sd_barcode_format(b, &s));
  std::cout << String(s).get();
}

const char* part_letter(sd_part p) {
  switch (p) {
    case SD_PART_CENTRAL: return "C";
    case SD_PART_RIGHT: return "R";
    case SD_PART_LEFT: return "L";
  }
  return "?";
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    throw Failure{kInput};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convolution distance between graded barcodes of sheaves on the real line"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sd_version());

  double tol = sd_default_tolerance();
  app.add_option("--tol", tol, "comparison tolerance")
      ->envname("SHEAFDIST_TOL")
      ->check(CLI::NonNegativeNumber);

  std::string a, b;

  auto* validate = app.add_subcommand("validate", "parse a .gbc file and print it canonically");
  validate->add_option("A", a, ".gbc file")->required();

  auto* dist = app.add_subcommand("dist", "convolution distance");
  dist->add_option("A", a)->required();
  dist->add_option("B", b)->required();

  auto* match = app.add_subcommand("match", "distance and an optimal matching");
  match->add_option("A", a)->required();
  match->add_option("B", b)->required();

  double eps = 0;
  auto* convolve = app.add_subcommand("convolve", "convolve with the kernel K_eps");
  convolve->add_option("A", a)->required();
  convolve->add_option("--eps", eps)->required();

  double t = 0;
  auto* interp = app.add_subcommand("interpolate", "point at time t on a geodesic from A to B");
  interp->add_option("A", a)->required();
  interp->add_option("B", b)->required();
  interp->add_option("--t", t)->required();

  bool oracle = false;
  auto* hom = app.add_subcommand("hom", "dimension of Hom between two graded intervals");
  hom->add_option("I", a, "source, e.g. \"[1,2]@1\"")->required();
  hom->add_option("J", b, "target, e.g. \"(0,3)@0\"")->required();
  hom->add_flag("--oracle", oracle, "use the resolution oracle (bounded intervals only)");

  bool compact = false;
  auto* gamma = app.add_subcommand("gamma", "graded dimensions of global sections");
  gamma->add_option("A", a)->required();
  gamma->add_flag("--compact", compact, "compactly supported sections");

  auto* component = app.add_subcommand("component", "whether A and B are at finite distance");
  component->add_option("A", a)->required();
  component->add_option("B", b)->required();

  std::string side = "R";
  auto* import = app.add_subcommand("import-diagram", "turn a .pdg diagram into half-open bars");
  import->add_option("P", a, ".pdg file")->required();
  import->add_option("--side", side)->check(CLI::IsMember({"R", "L"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*validate) {
      const Barcode f = load(a);
      print_barcode(f.get());
    } else if (*dist) {
      const Barcode f = load(a), g = load(b);
      double d = 0;
      check(sd_distance(f.get(), g.get(), &d));
      std::cout << number(d) << '\n';
    } else if (*match) {
      const Barcode f = load(a), g = load(b);
      sd_matching* raw = nullptr;
      check(sd_match(f.get(), g.get(), &raw));
      const Matching m(raw);
      std::cout << number(sd_matching_distance(m.get())) << '\n';
      for (size_t i = 0; i < sd_matching_size(m.get()); ++i) {
        sd_match_entry e;
        check(sd_matching_entry(m.get(), i, &e));
        std::cout << part_letter(e.part) << ' ' << e.index << ' '
                  << (e.has_left ? interval(e.left) : "DELETED") << ' '
                  << (e.has_right ? interval(e.right) : "DELETED") << ' ' << number(e.cost) << '\n';
      }
    } else if (*convolve) {
      const Barcode f = load(a);
      sd_barcode* out = nullptr;
      check(sd_convolve(f.get(), eps, &out));
      print_barcode(Barcode(out).get());
    } else if (*interp) {
      const Barcode f = load(a), g = load(b);
      sd_matching* raw = nullptr;
      check(sd_match(f.get(), g.get(), &raw));
      const Matching m(raw);
      sd_barcode* out = nullptr;
      check(sd_interpolate(f.get(), g.get(), m.get(), t, tol, &out));
      print_barcode(Barcode(out).get());
    } else if (*hom) {
      sd_interval src, tgt;
      check(sd_interval_parse(a.c_str(), &src));
      check(sd_interval_parse(b.c_str(), &tgt));
      int dim = 0;
      check(oracle ? sd_ext_oracle(&src, &tgt, tol, &dim) : sd_hom_dim(&src, &tgt, tol, &dim));
      std::cout << dim << '\n';
    } else if (*gamma) {
      const Barcode f = load(a);
      size_t count = 0;
      check(sd_global_sections(f.get(), compact, nullptr, nullptr, 0, &count));
      std::vector<int> degrees(count);
      std::vector<long> dims(count);
      check(sd_global_sections(f.get(), compact, degrees.data(), dims.data(), count, &count));
      for (size_t i = 0; i < count; ++i) std::cout << degrees[i] << ' ' << dims[i] << '\n';
    } else if (*component) {
      const Barcode f = load(a), g = load(b);
      int same = 0;
      check(sd_same_component(f.get(), g.get(), &same));
      std::cout << (same ? "true" : "false") << '\n';
    } else if (*import) {
      const std::string text = read_all(a);
      sd_barcode* out = nullptr;
      check(sd_diagram_import(text.c_str(), side == "R" ? SD_SIDE_RIGHT : SD_SIDE_LEFT, &out));
      print_barcode(Barcode(out).get());
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kOk;
}
