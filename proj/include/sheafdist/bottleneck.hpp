#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sheafdist/barcode.hpp"
#include "sheafdist/cost.hpp"

namespace sheafdist {

enum class Side { right, left };

/// Which barcode a deleted bar came from.
enum class Origin { first, second };

/// Selects a part of the CLR decomposition.
struct PartKind {
  enum class Tag { central, right, left };

  Tag tag = Tag::central;
  /// Matching index for central parts, degree for half-open parts.
  int index = 0;

  static PartKind central(int m) { return {Tag::central, m}; }
  static PartKind halfopen(Side side, int degree) {
    return {side == Side::right ? Tag::right : Tag::left, degree};
  }

  friend bool operator==(const PartKind&, const PartKind&) = default;
};

struct PartPair {
  GradedInterval left;
  GradedInterval right;
  ExtendedCost cost;
};

struct PartDeletion {
  GradedInterval bar;
  Origin origin;
  ExtendedCost cost;
};

/// Optimal matching of one part. When `cost` is infinite no pairing exists
/// and both lists are empty.
struct PartMatching {
  ExtendedCost cost;
  std::vector<PartPair> pairs;
  std::vector<PartDeletion> deletions;
};

/// Exact bottleneck cost of one part: central parts need a bijection,
/// half-open parts allow deletions at their deletion cost. Throws
/// Error(invalid_argument) if an item does not belong to `kind`.
PartMatching part_bottleneck(std::span<const GradedInterval> left,
                             std::span<const GradedInterval> right, PartKind kind);

struct CentralPair {
  int index;
  GradedInterval left;
  GradedInterval right;
  ExtendedCost cost;
};

struct HalfOpenPair {
  Side side;
  int degree;
  GradedInterval left;
  GradedInterval right;
  ExtendedCost cost;
};

struct Deletion {
  Side side;
  int degree;
  Origin origin;
  GradedInterval bar;
  ExtendedCost cost;
};

struct Matching {
  std::vector<CentralPair> central_pairs;
  std::vector<HalfOpenPair> halfopen_pairs;
  std::vector<Deletion> deletions;
  /// Max over all listed costs; infinite when some part admits no matching
  /// (that part contributes no entries).
  ExtendedCost achieved;
};

struct DistanceResult {
  ExtendedCost distance;
  Matching matching;
};

/// Bottleneck distance between graded barcodes together with an optimal
/// matching. Equals the convolution distance of the underlying sheaves.
DistanceResult distance_with_matching(const GradedBarcode& f, const GradedBarcode& g);

ExtendedCost bottleneck_distance(const GradedBarcode& f, const GradedBarcode& g);

inline constexpr std::size_t kBruteforceLimit = 6;

/// Exhaustive enumeration of bijections / partial matchings per part.
/// Throws Error(out_of_range) when a part holds more than `limit` bars on
/// either side.
ExtendedCost bruteforce_distance(const GradedBarcode& f, const GradedBarcode& g,
                                 std::size_t limit = kBruteforceLimit);

}  // namespace sheafdist
