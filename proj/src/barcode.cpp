#include "sheafdist/barcode.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sheafdist/error.hpp"

namespace sheafdist {

GradedBarcode::GradedBarcode(std::vector<GradedInterval> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end(), canonical_less);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<int> parse_degree(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

GradedBarcode parse_barcode(std::string_view text) {
  std::vector<GradedInterval> items;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) throw ParseError(line_no, "expected '<degree> <interval>'");
    const auto degree = parse_degree(line.substr(0, gap));
    if (!degree) throw ParseError(line_no, "bad degree '" + std::string(line.substr(0, gap)) + "'");
    const std::string_view literal = trim(line.substr(gap));
    if (literal.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError(line_no, "unexpected whitespace in '" + std::string(literal) + "'");
    }
    try {
      items.push_back({parse_interval(literal), *degree});
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return GradedBarcode(std::move(items));
}

std::string format_barcode(const GradedBarcode& barcode) {
  std::string out;
  for (const auto& gi : barcode.items()) {
    out += std::to_string(gi.degree);
    out += ' ';
    out += to_string(gi.interval);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::io, "cannot read '" + path.string() + "'");
  return buf.str();
}

GradedBarcode read_barcode_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_barcode(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

bool approx_equal(const GradedBarcode& a, const GradedBarcode& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a.items()) {
    bool found = false;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (!used[k] && approx_equal(x, b.items()[k], tol)) {
        used[k] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

int central_index(const GradedInterval& gi) {
  switch (classify(gi.interval)) {
    case IntervalType::central_open: return gi.degree;
    case IntervalType::central_closed: return gi.degree - 1;
    default: throw Error(ErrorCode::invalid_argument, to_string(gi) + " is not a central bar");
  }
}

CLRSplit split_clr(const GradedBarcode& barcode) {
  CLRSplit split;
  for (const auto& gi : barcode.items()) {
    switch (classify(gi.interval)) {
      case IntervalType::central_open:
      case IntervalType::central_closed: split.central[central_index(gi)].push_back(gi); break;
      case IntervalType::right: split.right[gi.degree].push_back(gi); break;
      case IntervalType::left: split.left[gi.degree].push_back(gi); break;
    }
  }
  return split;
}

namespace {

// Relative degree of the single nonzero cohomology of Gamma(R, k_I)
// (or Gamma_c), if any.
std::optional<int> section_degree(const Interval& iv, bool compact_support) {
  const bool lo_inf = std::isinf(iv.lo());
  const bool hi_inf = std::isinf(iv.hi());
  if (lo_inf && hi_inf) return compact_support ? 1 : 0;
  const bool lo_closed = iv.lo_closed();
  const bool hi_closed = iv.hi_closed();
  if (!lo_inf && !hi_inf) {
    if (lo_closed && hi_closed) return 0;
    if (!lo_closed && !hi_closed) return 1;
    return std::nullopt;
  }
  // Rays: the finite end decides closed or open.
  const bool closed_ray = lo_inf ? hi_closed : lo_closed;
  if (compact_support) return closed_ray ? std::nullopt : std::optional<int>(1);
  return closed_ray ? std::optional<int>(0) : std::nullopt;
}

}  // namespace

GradedDims global_sections(const GradedBarcode& barcode, bool compact_support) {
  GradedDims dims;
  for (const auto& gi : barcode.items()) {
    if (const auto rel = section_degree(gi.interval, compact_support)) ++dims[gi.degree + *rel];
  }
  return dims;
}

}  // namespace sheafdist
