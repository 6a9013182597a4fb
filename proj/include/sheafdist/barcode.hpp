#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sheafdist/interval.hpp"

namespace sheafdist {

/// Finite multiset of graded intervals, kept in canonical order so that
/// equality is multiset equality.
class GradedBarcode {
 public:
  GradedBarcode() = default;
  explicit GradedBarcode(std::vector<GradedInterval> items);

  std::span<const GradedInterval> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  friend bool operator==(const GradedBarcode&, const GradedBarcode&) = default;

 private:
  std::vector<GradedInterval> items_;
};

/// Parses the `.gbc` text format: `<degree> <interval>` per line, `#` comments.
GradedBarcode parse_barcode(std::string_view text);
/// Canonical `.gbc` text, one bar per line.
std::string format_barcode(const GradedBarcode& barcode);
/// Throws Error(io) when the file cannot be read.
GradedBarcode read_barcode_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Multiset equality up to tolerance on endpoints.
bool approx_equal(const GradedBarcode& a, const GradedBarcode& b, double tol);

/// Central (C-type) bars are bucketed by matching index: an open interval
/// in degree m and a closed interval in degree m+1 both go to index m.
/// Right and left bars are bucketed by degree.
struct CLRSplit {
  std::map<int, std::vector<GradedInterval>> central;
  std::map<int, std::vector<GradedInterval>> right;
  std::map<int, std::vector<GradedInterval>> left;
};

/// Matching index of a central bar. Throws for non-central bars.
int central_index(const GradedInterval& gi);

CLRSplit split_clr(const GradedBarcode& barcode);

/// Degree -> dimension, zero entries omitted.
using GradedDims = std::map<int, long>;

/// Cohomology of Gamma(R, F) or, with `compact_support`, of Gamma_c(R, F).
GradedDims global_sections(const GradedBarcode& barcode, bool compact_support);

}  // namespace sheafdist
