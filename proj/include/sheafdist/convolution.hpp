#pragma once

#include <map>
#include <optional>

#include "sheafdist/barcode.hpp"
#include "sheafdist/interval.hpp"

namespace sheafdist {

/// Degree -> dimension of a stalk.
using StalkDims = std::map<int, int>;

/// k_I[-j] convolved with K_eps, for any real eps. Open intervals collapse
/// to a closed interval one degree up once eps reaches their radius; for
/// negative eps closed intervals that shrink past a point turn into open
/// intervals one degree down.
std::optional<GradedInterval> convolve_interval(const GradedInterval& gi, double eps);

GradedBarcode convolve_barcode(const GradedBarcode& barcode, double eps);

/// Stalk at x of k_I[-j] * K_eps computed fibrewise: compactly supported
/// cohomology of I intersected with the kernel window around x.
StalkDims stalk_type(const GradedInterval& gi, double eps, double x);

/// Stalk at x of k_I[-j] itself.
StalkDims stalk_dims(const GradedInterval& gi, double x);

}  // namespace sheafdist
