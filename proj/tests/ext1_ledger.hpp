#pragma once

#include <string>

#include "sheafdist/hom.hpp"
#include "support/printed_tables.hpp"

namespace sheafdist::testing {

// Every bounded pair over the {0,1,2,3} grid where the reference degree-one
// table differs from hom_dim, one line each.
inline std::string ext1_deviation_ledger() {
  std::string out =
      "# Ext^1(k_I, k_J): reference table vs computed, bounded grid over {0,1,2,3}\n"
      "# source target reference computed position\n";
  const auto grid = grid_intervals(false);
  for (const auto& s : grid) {
    for (const auto& t : grid) {
      const int printed = printed_ext1(s, t);
      const int computed = ext_dim(s, t, 1, kDefaultTolerance);
      if (printed == computed) continue;
      out += to_string(s) + ' ' + to_string(t) + ' ' + std::to_string(printed) + ' ' +
             std::to_string(computed) + ' ' + (generic_position(s, t) ? "generic" : "touching") +
             '\n';
    }
  }
  return out;
}

}  // namespace sheafdist::testing
