#include "sheafdist/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "sheafdist/error.hpp"

namespace sheafdist {

namespace {

double lerp_endpoint(double from, double to, double lambda) {
  if (!std::isfinite(from) || !std::isfinite(to)) return from;  // equal infinities
  return from + lambda * (to - from);
}

// Open bar (m) shrinking to its centre, then growing as a closed bar (m+1).
GradedInterval collapse_path(const GradedInterval& open, const GradedInterval& closed, double t,
                             double c) {
  const Interval& u = open.interval;
  const double r = 0.5 * u.length();
  if (t < r) return {Interval::open(u.lo() + t, u.hi() - t), open.degree};
  const double mid = u.center();
  const double lambda = c > r ? (t - r) / (c - r) : 1.0;
  const Interval& s = closed.interval;
  return {Interval::closed(mid + lambda * (s.lo() - mid), mid + lambda * (s.hi() - mid)),
          closed.degree};
}

double checked_time(double t, double c, double tol) {
  if (std::isnan(t) || t < -tol || t > c + tol) {
    throw Error(ErrorCode::out_of_range,
                "t = " + format_number(t) + " outside [0," + format_number(c) + "]");
  }
  return std::clamp(t, 0.0, c);
}

}  // namespace

std::optional<GradedInterval> pair_path(const GradedInterval& source,
                                        const std::optional<GradedInterval>& target, double t,
                                        double tol) {
  if (!target) {
    const ExtendedCost cost = deletion_cost(source);
    if (!cost.is_finite()) {
      throw Error(ErrorCode::invalid_argument, to_string(source) + " cannot be deleted");
    }
    const double c = cost.value();
    t = checked_time(t, c, tol);
    if (t <= 0.0) return source;
    if (t >= c) return std::nullopt;
    const Interval& iv = source.interval;
    return GradedInterval{Interval::make(iv.lo() + t, iv.lo_closed(), iv.hi() - t, iv.hi_closed()),
                          source.degree};
  }

  const ExtendedCost cost = pair_cost(source, *target);
  if (!cost.is_finite()) {
    throw Error(ErrorCode::invalid_argument,
                to_string(source) + " and " + to_string(*target) + " are at infinite cost");
  }
  const double c = cost.value();
  t = checked_time(t, c, tol);
  if (t <= 0.0 || c == 0.0) return source;
  if (t >= c) return *target;

  const IntervalType from = classify(source.interval);
  const IntervalType to = classify(target->interval);
  if (from == IntervalType::central_open && to == IntervalType::central_closed) {
    return collapse_path(source, *target, t, c);
  }
  if (from == IntervalType::central_closed && to == IntervalType::central_open) {
    return collapse_path(*target, source, c - t, c);
  }
  const double lambda = t / c;
  const Interval& a = source.interval;
  const Interval& b = target->interval;
  return GradedInterval{Interval::make(lerp_endpoint(a.lo(), b.lo(), lambda), a.lo_closed(),
                                       lerp_endpoint(a.hi(), b.hi(), lambda), a.hi_closed()),
                        source.degree};
}

namespace {

void check_covers(const GradedBarcode& barcode, std::vector<GradedInterval> listed,
                  const char* which) {
  if (GradedBarcode(std::move(listed)) != barcode) {
    throw Error(ErrorCode::invalid_argument,
                std::string("matching does not cover the ") + which + " barcode");
  }
}

}  // namespace

GradedBarcode interpolate(const GradedBarcode& f, const GradedBarcode& g, const Matching& matching,
                          double t, double tol) {
  if (!matching.achieved.is_finite()) {
    throw Error(ErrorCode::invalid_argument, "no geodesic between barcodes at infinite distance");
  }
  std::vector<GradedInterval> lefts, rights;
  for (const auto& p : matching.central_pairs) {
    lefts.push_back(p.left);
    rights.push_back(p.right);
  }
  for (const auto& p : matching.halfopen_pairs) {
    lefts.push_back(p.left);
    rights.push_back(p.right);
  }
  for (const auto& d : matching.deletions) (d.origin == Origin::first ? lefts : rights).push_back(d.bar);
  check_covers(f, std::move(lefts), "first");
  check_covers(g, std::move(rights), "second");

  const double eps = matching.achieved.value();
  t = checked_time(t, eps, tol);
  if (t <= 0.0) return f;
  if (t >= eps) return g;

  std::vector<GradedInterval> items;
  const auto add = [&](std::optional<GradedInterval> gi) {
    if (gi) items.push_back(*gi);
  };
  for (const auto& p : matching.central_pairs) add(pair_path(p.left, p.right, std::min(t, p.cost.value()), tol));
  for (const auto& p : matching.halfopen_pairs) add(pair_path(p.left, p.right, std::min(t, p.cost.value()), tol));
  for (const auto& d : matching.deletions) {
    const double c = d.cost.value();
    if (d.origin == Origin::first) {
      add(pair_path(d.bar, std::nullopt, std::min(t, c), tol));
    } else if (eps - t < c) {
      add(pair_path(d.bar, std::nullopt, eps - t, tol));
    }
  }
  return GradedBarcode(std::move(items));
}

bool same_component(const GradedBarcode& f, const GradedBarcode& g) {
  return bottleneck_distance(f, g).is_finite();
}

}  // namespace sheafdist
