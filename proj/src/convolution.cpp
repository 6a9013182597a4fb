#include "sheafdist/convolution.hpp"

#include <algorithm>
#include <cmath>

namespace sheafdist {

std::optional<GradedInterval> convolve_interval(const GradedInterval& gi, double eps) {
  const Interval& iv = gi.interval;
  if (eps == 0.0) return gi;

  // Closed ends move outward by eps, open ends inward; infinite ends stay.
  const double lo = iv.lo_closed() ? iv.lo() - eps : iv.lo() + eps;
  const double hi = iv.hi_closed() ? iv.hi() + eps : iv.hi() - eps;

  const IntervalType type = classify(iv);
  if (type == IntervalType::central_open && eps > 0.0 && !(lo < hi)) {
    // Collapse: a closed interval around the center, one degree up.
    const double spread = std::max(0.0, eps - 0.5 * iv.length());
    const double c = iv.center();
    return GradedInterval{Interval::closed(c - spread, c + spread), gi.degree + 1};
  }
  if (type == IntervalType::central_closed && eps < 0.0 && lo > hi) {
    // Shrunk past a point: the open interval (b - delta, a + delta), one degree down.
    return GradedInterval{Interval::open(hi, lo), gi.degree - 1};
  }
  if (!(lo < hi || (lo == hi && iv.lo_closed() && iv.hi_closed()))) return std::nullopt;
  return GradedInterval{Interval::make(lo, iv.lo_closed(), hi, iv.hi_closed()), gi.degree};
}

GradedBarcode convolve_barcode(const GradedBarcode& barcode, double eps) {
  std::vector<GradedInterval> out;
  out.reserve(barcode.size());
  for (const auto& gi : barcode.items()) {
    if (auto c = convolve_interval(gi, eps)) out.push_back(*c);
  }
  return GradedBarcode(std::move(out));
}

StalkDims stalk_type(const GradedInterval& gi, double eps, double x) {
  // Kernel window: the closed ball for eps >= 0, the open ball shifted by
  // [1] for eps < 0.
  const Interval window = eps >= 0.0 ? Interval::closed(x - eps, x + eps)
                                     : Interval::open(x + eps, x - eps);
  const auto overlap = intersect(gi.interval, window);
  if (!overlap) return {};
  int relative = 0;
  if (overlap->lo_closed() && overlap->hi_closed()) {
    relative = 0;
  } else if (!overlap->lo_closed() && !overlap->hi_closed()) {
    relative = 1;
  } else {
    return {};  // half-open: no compactly supported cohomology
  }
  return {{gi.degree + relative - (eps < 0.0 ? 1 : 0), 1}};
}

StalkDims stalk_dims(const GradedInterval& gi, double x) {
  if (!gi.interval.contains(x)) return {};
  return {{gi.degree, 1}};
}

}  // namespace sheafdist
