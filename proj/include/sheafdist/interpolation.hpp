#pragma once

#include <optional>

#include "sheafdist/barcode.hpp"
#include "sheafdist/bottleneck.hpp"

namespace sheafdist {

/// Position at time t of a bar travelling along its matched pair (or
/// shrinking to nothing when `target` is empty). Valid for 0 <= t <= c where
/// c is the pair or deletion cost; nullopt once a deleted bar has vanished.
std::optional<GradedInterval> pair_path(const GradedInterval& source,
                                        const std::optional<GradedInterval>& target, double t,
                                        double tol = kDefaultTolerance);

/// Barcode U_t on the geodesic from f (t = 0) to g (t = eps) induced by a
/// matching between them, eps = matching.achieved.
GradedBarcode interpolate(const GradedBarcode& f, const GradedBarcode& g, const Matching& matching,
                          double t, double tol = kDefaultTolerance);

/// True iff f and g are at finite distance.
bool same_component(const GradedBarcode& f, const GradedBarcode& g);

}  // namespace sheafdist
