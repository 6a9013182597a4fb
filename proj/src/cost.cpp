#include "sheafdist/cost.hpp"

#include <algorithm>
#include <cmath>

#include "sheafdist/error.hpp"

namespace sheafdist {

ExtendedCost::ExtendedCost(double value) : value_(value) {
  if (std::isnan(value) || value < 0.0) {
    throw Error(ErrorCode::invalid_argument, "cost must be nonnegative");
  }
}

std::string to_string(ExtendedCost cost) { return format_number(cost.value()); }

namespace {

// |x - y| on extended reals with |inf - inf| = 0.
double endpoint_gap(double x, double y) {
  if (x == y) return 0.0;
  if (std::isinf(x) || std::isinf(y)) return kInfinity;
  return std::fabs(x - y);
}

ExtendedCost endpoint_cost(const Interval& a, const Interval& b) {
  return ExtendedCost(std::max(endpoint_gap(a.lo(), b.lo()), endpoint_gap(a.hi(), b.hi())));
}

// Open U in degree m against closed S in degree m+1: U has to collapse
// (eps >= radius) and the collapsed interval around cent(U) must cover S.
ExtendedCost collapse_cost(const Interval& open, const Interval& closed) {
  const double radius = 0.5 * open.length();
  const double center = open.center();
  return ExtendedCost(radius + std::max(center - closed.lo(), closed.hi() - center));
}

}  // namespace

ExtendedCost pair_cost(const GradedInterval& a, const GradedInterval& b) {
  const IntervalType ta = classify(a.interval);
  const IntervalType tb = classify(b.interval);
  if (ta == tb) {
    if (a.degree != b.degree) return ExtendedCost::infinity();
    return endpoint_cost(a.interval, b.interval);
  }
  if (ta == IntervalType::central_open && tb == IntervalType::central_closed &&
      b.degree == a.degree + 1) {
    return collapse_cost(a.interval, b.interval);
  }
  if (ta == IntervalType::central_closed && tb == IntervalType::central_open &&
      a.degree == b.degree + 1) {
    return collapse_cost(b.interval, a.interval);
  }
  return ExtendedCost::infinity();
}

ExtendedCost deletion_cost(const GradedInterval& a) {
  const IntervalType t = classify(a.interval);
  if (is_central(t) || !a.interval.is_bounded()) return ExtendedCost::infinity();
  return ExtendedCost(0.5 * a.interval.length());
}

}  // namespace sheafdist
