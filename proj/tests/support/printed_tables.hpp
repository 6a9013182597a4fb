#pragma once

// Literal transcriptions of the reference Hom tables, kept apart from the
// library so tests can compare against them. Rows are read with infinite
// source endpoints as open, columns with infinite target endpoints as
// closed. Set conditions are written as the endpoint inequalities they
// stand for.

#include <cmath>
#include <vector>

#include "sheafdist/interval.hpp"

namespace sheafdist::testing {

enum class Shape { open, closed, closed_open, open_closed };

inline Shape row_shape(const Interval& iv) {
  const bool l = std::isfinite(iv.lo()) && iv.lo_closed();
  const bool h = std::isfinite(iv.hi()) && iv.hi_closed();
  return l ? (h ? Shape::closed : Shape::closed_open) : (h ? Shape::open_closed : Shape::open);
}

inline Shape column_shape(const Interval& iv) {
  const bool l = !std::isfinite(iv.lo()) || iv.lo_closed();
  const bool h = !std::isfinite(iv.hi()) || iv.hi_closed();
  return l ? (h ? Shape::closed : Shape::closed_open) : (h ? Shape::open_closed : Shape::open);
}

inline int printed_hom0(const Interval& s, const Interval& t) {
  const double a = s.lo(), b = s.hi(), c = t.lo(), d = t.hi();
  const Shape col = column_shape(t);
  switch (row_shape(s)) {
    case Shape::open:
      switch (col) {
        case Shape::open: return c <= a && b <= d;
        case Shape::closed: return a < d && c < b;
        case Shape::closed_open: return c < b && b <= d;
        case Shape::open_closed: return c <= a && a < d;
      }
      break;
    case Shape::closed: return col == Shape::closed && a <= c && d <= b;
    case Shape::closed_open:
      if (col == Shape::closed) return a <= c && c < b;
      if (col == Shape::closed_open) return a <= c && c < b && b <= d;
      return 0;
    case Shape::open_closed:
      if (col == Shape::closed) return a < b && b <= d;
      if (col == Shape::open_closed) return c <= a && a < d && d <= b;
      return 0;
  }
  return 0;
}

inline int printed_ext1(const Interval& s, const Interval& t) {
  const double a = s.lo(), b = s.hi(), c = t.lo(), d = t.hi();
  const Shape col = column_shape(t);
  switch (row_shape(s)) {
    case Shape::open: return col == Shape::open && a < c && d < b;
    case Shape::closed:
      switch (col) {
        case Shape::open: return a < d && c < b;
        case Shape::closed: return c <= a && b <= d;
        case Shape::closed_open: return c < a;
        case Shape::open_closed: return b < d;
      }
      break;
    case Shape::closed_open:
      if (col == Shape::open) return a <= d && d < b;
      if (col == Shape::closed_open) return c < a && a <= d && d < b;
      return 0;
    case Shape::open_closed:
      if (col == Shape::open) return a < c && c <= b;
      if (col == Shape::open_closed) return a < c && c <= b && b < d;
      return 0;
  }
  return 0;
}

// Every interval with endpoints in {0,1,2,3}, points included, and
// optionally every ray and the whole line.
inline std::vector<Interval> grid_intervals(bool with_rays) {
  std::vector<Interval> out;
  for (int a = 0; a <= 3; ++a) {
    out.push_back(Interval::point(a));
    for (int b = a + 1; b <= 3; ++b) {
      out.push_back(Interval::open(a, b));
      out.push_back(Interval::closed(a, b));
      out.push_back(Interval::closed_open(a, b));
      out.push_back(Interval::open_closed(a, b));
    }
  }
  if (with_rays) {
    for (int x = 0; x <= 3; ++x) {
      out.push_back(Interval::make(-kInfinity, false, x, false));
      out.push_back(Interval::make(-kInfinity, false, x, true));
      out.push_back(Interval::make(x, true, kInfinity, false));
      out.push_back(Interval::make(x, false, kInfinity, false));
    }
    out.push_back(Interval::real_line());
  }
  return out;
}

// All four endpoints pairwise distinct (so no points).
inline bool generic_position(const Interval& s, const Interval& t) {
  const double v[] = {s.lo(), s.hi(), t.lo(), t.hi()};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  return true;
}

}  // namespace sheafdist::testing
