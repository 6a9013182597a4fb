#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sheafdist/barcode.hpp"
#include "sheafdist/bottleneck.hpp"

namespace sheafdist {

/// (birth, death) standing for the interval module on [birth, death).
struct PersistencePair {
  double birth;
  double death;

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

struct PersistenceDiagram {
  int degree = 0;
  std::vector<PersistencePair> pairs;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

/// Right bars [a,b) map to (a,b); left bars (a,b] are reflected to (-b,-a)
/// so both sides share one convention.
PersistenceDiagram to_persistence(const CLRSplit& split, Side side, int degree);

/// Inverse of to_persistence. Throws Error(invalid_argument) on pairs with
/// birth >= death or pairs that do not land on `side`.
std::vector<GradedInterval> from_persistence(const PersistenceDiagram& diagram, Side side);

/// `.pdg` text: `<degree> <birth> <death>` per line, `#` comments. One
/// diagram per degree that occurs.
std::map<int, PersistenceDiagram> parse_diagrams(std::string_view text);
std::string format_diagrams(const std::map<int, PersistenceDiagram>& diagrams);

}  // namespace sheafdist
