#include "sheafdist/sheafdist.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "sheafdist/sheafdist.hpp"

struct sd_barcode {
  sheafdist::GradedBarcode value;
};

struct sd_matching {
  sheafdist::Matching value;
  std::vector<sd_match_entry> entries;
};

namespace {

using namespace sheafdist;

thread_local std::string last_error;

sd_status fail(sd_status status, const std::string& message) {
  last_error = message;
  return status;
}

sd_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return SD_ERR_PARSE;
    case ErrorCode::invalid_argument: return SD_ERR_INVALID_ARGUMENT;
    case ErrorCode::unsupported: return SD_ERR_UNSUPPORTED;
    case ErrorCode::out_of_range: return SD_ERR_OUT_OF_RANGE;
    case ErrorCode::io: return SD_ERR_IO;
  }
  return SD_ERR_INTERNAL;
}

template <class F>
sd_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SD_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SD_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, std::string("null argument: ") + what);
}

GradedInterval from_c(const sd_interval& iv) {
  return {Interval::make(iv.lo, iv.lo_closed != 0, iv.hi, iv.hi_closed != 0), iv.degree};
}

sd_interval to_c(const GradedInterval& gi) {
  const Interval& iv = gi.interval;
  return {iv.lo(), iv.lo_closed() ? 1 : 0, iv.hi(), iv.hi_closed() ? 1 : 0, gi.degree};
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sd_barcode* wrap(GradedBarcode b) { return new sd_barcode{std::move(b)}; }

double to_double(ExtendedCost c) { return c.is_finite() ? c.value() : INFINITY; }

sd_part part_of(Side side) { return side == Side::right ? SD_PART_RIGHT : SD_PART_LEFT; }

}  // namespace

extern "C" {

const char* sd_version(void) { return "1.0.0"; }

const char* sd_last_error(void) { return last_error.c_str(); }

double sd_default_tolerance(void) { return kDefaultTolerance; }

void sd_string_free(char* s) { std::free(s); }

sd_status sd_format_number(double value, char* buf, size_t size) {
  return guarded([&] {
    require(buf != nullptr, "buf");
    const std::string s = format_number(value);
    if (s.size() + 1 > size) throw Error(ErrorCode::out_of_range, "buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

sd_status sd_interval_parse(const char* literal, sd_interval* out) {
  return guarded([&] {
    require(literal && out, "literal/out");
    *out = to_c(parse_graded_interval(literal));
  });
}

sd_status sd_interval_format(const sd_interval* iv, char** out) {
  return guarded([&] {
    require(iv && out, "iv/out");
    *out = dup_string(to_string(from_c(*iv)));
  });
}

sd_status sd_classify(const sd_interval* iv, sd_interval_type* out) {
  return guarded([&] {
    require(iv && out, "iv/out");
    switch (classify(from_c(*iv).interval)) {
      case IntervalType::central_open: *out = SD_CENTRAL_OPEN; break;
      case IntervalType::central_closed: *out = SD_CENTRAL_CLOSED; break;
      case IntervalType::right: *out = SD_RIGHT; break;
      case IntervalType::left: *out = SD_LEFT; break;
    }
  });
}

sd_status sd_barcode_parse(const char* text, sd_barcode** out) {
  return guarded([&] {
    require(text && out, "text/out");
    *out = wrap(parse_barcode(text));
  });
}

sd_status sd_barcode_read_file(const char* path, sd_barcode** out) {
  return guarded([&] {
    require(path && out, "path/out");
    *out = wrap(read_barcode_file(path));
  });
}

sd_status sd_barcode_from_intervals(const sd_interval* items, size_t count, sd_barcode** out) {
  return guarded([&] {
    require(out && (items || count == 0), "items/out");
    std::vector<GradedInterval> v;
    v.reserve(count);
    for (size_t i = 0; i < count; ++i) v.push_back(from_c(items[i]));
    *out = wrap(GradedBarcode(std::move(v)));
  });
}

void sd_barcode_free(sd_barcode* barcode) { delete barcode; }

size_t sd_barcode_size(const sd_barcode* barcode) { return barcode ? barcode->value.size() : 0; }

sd_status sd_barcode_get(const sd_barcode* barcode, size_t i, sd_interval* out) {
  return guarded([&] {
    require(barcode && out, "barcode/out");
    if (i >= barcode->value.size()) throw Error(ErrorCode::out_of_range, "index out of range");
    *out = to_c(barcode->value.items()[i]);
  });
}

sd_status sd_barcode_format(const sd_barcode* barcode, char** out) {
  return guarded([&] {
    require(barcode && out, "barcode/out");
    *out = dup_string(format_barcode(barcode->value));
  });
}

sd_status sd_barcode_equal(const sd_barcode* a, const sd_barcode* b, double tol, int* out) {
  return guarded([&] {
    require(a && b && out, "a/b/out");
    *out = approx_equal(a->value, b->value, tol) ? 1 : 0;
  });
}

sd_status sd_global_sections(const sd_barcode* barcode, int compact_support, int* degrees,
                             long* dims, size_t capacity, size_t* count) {
  return guarded([&] {
    require(barcode && count, "barcode/count");
    const GradedDims g = global_sections(barcode->value, compact_support != 0);
    *count = g.size();
    if (!degrees) return;
    require(dims != nullptr, "dims");
    if (capacity < g.size()) throw Error(ErrorCode::out_of_range, "capacity too small");
    size_t i = 0;
    for (const auto& [deg, dim] : g) {
      degrees[i] = deg;
      dims[i] = dim;
      ++i;
    }
  });
}

sd_status sd_distance(const sd_barcode* f, const sd_barcode* g, double* out) {
  return guarded([&] {
    require(f && g && out, "f/g/out");
    *out = to_double(bottleneck_distance(f->value, g->value));
  });
}

sd_status sd_bruteforce_distance(const sd_barcode* f, const sd_barcode* g, size_t limit,
                                 double* out) {
  return guarded([&] {
    require(f && g && out, "f/g/out");
    *out = to_double(bruteforce_distance(f->value, g->value, limit));
  });
}

sd_status sd_same_component(const sd_barcode* f, const sd_barcode* g, int* out) {
  return guarded([&] {
    require(f && g && out, "f/g/out");
    *out = same_component(f->value, g->value) ? 1 : 0;
  });
}

sd_status sd_match(const sd_barcode* f, const sd_barcode* g, sd_matching** out) {
  return guarded([&] {
    require(f && g && out, "f/g/out");
    auto m = std::make_unique<sd_matching>();
    m->value = distance_with_matching(f->value, g->value).matching;
    for (const auto& p : m->value.central_pairs) {
      m->entries.push_back({SD_PART_CENTRAL, p.index, 1, to_c(p.left), 1, to_c(p.right), to_double(p.cost)});
    }
    for (const auto& p : m->value.halfopen_pairs) {
      m->entries.push_back({part_of(p.side), p.degree, 1, to_c(p.left), 1, to_c(p.right), to_double(p.cost)});
    }
    for (const auto& d : m->value.deletions) {
      sd_match_entry e{part_of(d.side), d.degree, 0, {}, 0, {}, to_double(d.cost)};
      if (d.origin == Origin::first) {
        e.has_left = 1;
        e.left = to_c(d.bar);
      } else {
        e.has_right = 1;
        e.right = to_c(d.bar);
      }
      m->entries.push_back(e);
    }
    *out = m.release();
  });
}

void sd_matching_free(sd_matching* matching) { delete matching; }

double sd_matching_distance(const sd_matching* matching) {
  return matching ? to_double(matching->value.achieved) : NAN;
}

size_t sd_matching_size(const sd_matching* matching) { return matching ? matching->entries.size() : 0; }

sd_status sd_matching_entry(const sd_matching* matching, size_t i, sd_match_entry* out) {
  return guarded([&] {
    require(matching && out, "matching/out");
    if (i >= matching->entries.size()) throw Error(ErrorCode::out_of_range, "index out of range");
    *out = matching->entries[i];
  });
}

sd_status sd_convolve(const sd_barcode* barcode, double eps, sd_barcode** out) {
  return guarded([&] {
    require(barcode && out, "barcode/out");
    if (!std::isfinite(eps)) throw Error(ErrorCode::invalid_argument, "eps must be finite");
    *out = wrap(convolve_barcode(barcode->value, eps));
  });
}

sd_status sd_interpolate(const sd_barcode* f, const sd_barcode* g, const sd_matching* matching,
                         double t, double tol, sd_barcode** out) {
  return guarded([&] {
    require(f && g && matching && out, "f/g/matching/out");
    *out = wrap(interpolate(f->value, g->value, matching->value, t, tol));
  });
}

sd_status sd_hom_dim(const sd_interval* source, const sd_interval* target, double tol, int* out) {
  return guarded([&] {
    require(source && target && out, "source/target/out");
    *out = hom_dim({from_c(*source), from_c(*target)}, tol);
  });
}

sd_status sd_ext_oracle(const sd_interval* source, const sd_interval* target, double tol,
                        int* out) {
  return guarded([&] {
    require(source && target && out, "source/target/out");
    *out = ext_oracle({from_c(*source), from_c(*target)}, tol);
  });
}

sd_status sd_barcode_export_diagram(const sd_barcode* barcode, sd_side side, char** out) {
  return guarded([&] {
    require(barcode && out, "barcode/out");
    const CLRSplit split = split_clr(barcode->value);
    const Side s = side == SD_SIDE_RIGHT ? Side::right : Side::left;
    std::map<int, PersistenceDiagram> diagrams;
    for (const auto& [degree, _] : s == Side::right ? split.right : split.left) {
      diagrams[degree] = to_persistence(split, s, degree);
    }
    *out = dup_string(format_diagrams(diagrams));
  });
}

sd_status sd_diagram_import(const char* text, sd_side side, sd_barcode** out) {
  return guarded([&] {
    require(text && out, "text/out");
    const Side s = side == SD_SIDE_RIGHT ? Side::right : Side::left;
    std::vector<GradedInterval> items;
    for (const auto& [degree, diagram] : parse_diagrams(text)) {
      for (auto& gi : from_persistence(diagram, s)) items.push_back(gi);
    }
    *out = wrap(GradedBarcode(std::move(items)));
  });
}

}  // extern "C"
