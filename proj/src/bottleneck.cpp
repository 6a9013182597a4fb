#include "sheafdist/bottleneck.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "hopcroft_karp.hpp"
#include "sheafdist/error.hpp"

namespace sheafdist {

namespace {

bool belongs_to(const GradedInterval& gi, PartKind kind) {
  const IntervalType t = classify(gi.interval);
  switch (kind.tag) {
    case PartKind::Tag::central: return is_central(t) && central_index(gi) == kind.index;
    case PartKind::Tag::right: return t == IntervalType::right && gi.degree == kind.index;
    case PartKind::Tag::left: return t == IntervalType::left && gi.degree == kind.index;
  }
  return false;
}

std::vector<GradedInterval> checked_sorted(std::span<const GradedInterval> items, PartKind kind) {
  std::vector<GradedInterval> out(items.begin(), items.end());
  for (const auto& gi : out) {
    if (!belongs_to(gi, kind)) {
      throw Error(ErrorCode::invalid_argument, to_string(gi) + " does not belong to this part");
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

using CostMatrix = std::vector<std::vector<ExtendedCost>>;

CostMatrix cost_matrix(const std::vector<GradedInterval>& l, const std::vector<GradedInterval>& r) {
  CostMatrix m(l.size(), std::vector<ExtendedCost>(r.size()));
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) m[i][j] = pair_cost(l[i], r[j]);
  }
  return m;
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Smallest candidate at which `feasible` holds, or nullopt. `feasible` is
// monotone in the threshold.
template <class Feasible>
std::optional<double> smallest_feasible(const std::vector<double>& candidates, Feasible feasible) {
  if (candidates.empty() || !feasible(candidates.back())) return std::nullopt;
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

bool within(ExtendedCost c, double eps) { return c.is_finite() && c.value() <= eps; }

PartMatching central_matching(const std::vector<GradedInterval>& l,
                              const std::vector<GradedInterval>& r) {
  PartMatching out{ExtendedCost{}, {}, {}};
  if (l.size() != r.size()) {
    out.cost = ExtendedCost::infinity();
    return out;
  }
  if (l.empty()) return out;
  const CostMatrix m = cost_matrix(l, r);
  std::vector<double> candidates;
  for (const auto& row : m) {
    for (const auto c : row) {
      if (c.is_finite()) candidates.push_back(c.value());
    }
  }
  const auto build = [&](double eps) {
    detail::HopcroftKarp hk(l.size(), r.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (within(m[i][j], eps)) hk.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
    return hk;
  };
  const auto eps = smallest_feasible(sorted_unique(std::move(candidates)), [&](double e) {
    return build(e).run() == l.size();
  });
  if (!eps) {
    out.cost = ExtendedCost::infinity();
    return out;
  }
  auto hk = build(*eps);
  hk.run();
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto j = static_cast<std::size_t>(hk.mate_of_left(static_cast<int>(i)));
    out.pairs.push_back({l[i], r[j], m[i][j]});
    out.cost = max(out.cost, m[i][j]);
  }
  return out;
}

// Left vertices: left bars 0..n-1, then diagonal copies of right bars.
// Right vertices: right bars 0..k-1, then diagonal copies of left bars.
PartMatching halfopen_matching(const std::vector<GradedInterval>& l,
                               const std::vector<GradedInterval>& r) {
  PartMatching out{ExtendedCost{}, {}, {}};
  const std::size_t n = l.size(), k = r.size();
  if (n + k == 0) return out;
  const CostMatrix m = cost_matrix(l, r);
  std::vector<ExtendedCost> del_l(n), del_r(k);
  std::vector<double> candidates{0.0};
  for (std::size_t i = 0; i < n; ++i) {
    del_l[i] = deletion_cost(l[i]);
    if (del_l[i].is_finite()) candidates.push_back(del_l[i].value());
    for (std::size_t j = 0; j < k; ++j) {
      if (m[i][j].is_finite()) candidates.push_back(m[i][j].value());
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    del_r[j] = deletion_cost(r[j]);
    if (del_r[j].is_finite()) candidates.push_back(del_r[j].value());
  }
  const auto build = [&](double eps) {
    detail::HopcroftKarp hk(n + k, k + n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (within(m[i][j], eps)) hk.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
      if (within(del_l[i], eps)) hk.add_edge(static_cast<int>(i), static_cast<int>(k + i));
    }
    for (std::size_t j = 0; j < k; ++j) {
      const int u = static_cast<int>(n + j);
      if (within(del_r[j], eps)) hk.add_edge(u, static_cast<int>(j));
      for (std::size_t i = 0; i < n; ++i) hk.add_edge(u, static_cast<int>(k + i));
    }
    return hk;
  };
  const auto eps = smallest_feasible(sorted_unique(std::move(candidates)), [&](double e) {
    return build(e).run() == n + k;
  });
  if (!eps) {
    out.cost = ExtendedCost::infinity();
    return out;
  }
  auto hk = build(*eps);
  hk.run();
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<std::size_t>(hk.mate_of_left(static_cast<int>(i)));
    if (v < k) {
      out.pairs.push_back({l[i], r[v], m[i][v]});
      out.cost = max(out.cost, m[i][v]);
    } else {
      out.deletions.push_back({l[i], Origin::first, del_l[i]});
      out.cost = max(out.cost, del_l[i]);
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (static_cast<std::size_t>(hk.mate_of_right(static_cast<int>(j))) >= n) {
      out.deletions.push_back({r[j], Origin::second, del_r[j]});
      out.cost = max(out.cost, del_r[j]);
    }
  }
  return out;
}

template <class F>
void for_each_key(const std::map<int, std::vector<GradedInterval>>& a,
                  const std::map<int, std::vector<GradedInterval>>& b, F f) {
  std::set<int> keys;
  for (const auto& [key, _] : a) keys.insert(key);
  for (const auto& [key, _] : b) keys.insert(key);
  static const std::vector<GradedInterval> none;
  for (const int key : keys) {
    const auto ia = a.find(key);
    const auto ib = b.find(key);
    f(key, ia == a.end() ? none : ia->second, ib == b.end() ? none : ib->second);
  }
}

// Exhaustive search over bijections.
ExtendedCost brute_central(const std::vector<GradedInterval>& l,
                           const std::vector<GradedInterval>& r) {
  if (l.size() != r.size()) return ExtendedCost::infinity();
  std::vector<std::size_t> perm(r.size());
  std::iota(perm.begin(), perm.end(), 0);
  ExtendedCost best = ExtendedCost::infinity();
  if (l.empty()) return ExtendedCost{};
  do {
    ExtendedCost worst{};
    for (std::size_t i = 0; i < l.size(); ++i) worst = max(worst, pair_cost(l[i], r[perm[i]]));
    if (worst < best) best = worst;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Exhaustive search over partial matchings; unmatched bars pay deletion.
ExtendedCost brute_halfopen(const std::vector<GradedInterval>& l,
                            const std::vector<GradedInterval>& r, std::size_t i,
                            std::vector<bool>& used, ExtendedCost so_far) {
  if (i == l.size()) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!used[j]) so_far = max(so_far, deletion_cost(r[j]));
    }
    return so_far;
  }
  ExtendedCost best = brute_halfopen(l, r, i + 1, used, max(so_far, deletion_cost(l[i])));
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    const ExtendedCost c = brute_halfopen(l, r, i + 1, used, max(so_far, pair_cost(l[i], r[j])));
    used[j] = false;
    if (c < best) best = c;
  }
  return best;
}

}  // namespace

PartMatching part_bottleneck(std::span<const GradedInterval> left,
                             std::span<const GradedInterval> right, PartKind kind) {
  const auto l = checked_sorted(left, kind);
  const auto r = checked_sorted(right, kind);
  return kind.tag == PartKind::Tag::central ? central_matching(l, r) : halfopen_matching(l, r);
}

DistanceResult distance_with_matching(const GradedBarcode& f, const GradedBarcode& g) {
  const CLRSplit a = split_clr(f);
  const CLRSplit b = split_clr(g);
  Matching matching;
  matching.achieved = ExtendedCost{};

  for_each_key(a.central, b.central, [&](int m, const auto& l, const auto& r) {
    const PartMatching pm = part_bottleneck(l, r, PartKind::central(m));
    matching.achieved = max(matching.achieved, pm.cost);
    for (const auto& p : pm.pairs) matching.central_pairs.push_back({m, p.left, p.right, p.cost});
  });
  const auto halfopen = [&](Side side, const auto& pa, const auto& pb) {
    for_each_key(pa, pb, [&](int j, const auto& l, const auto& r) {
      const PartMatching pm = part_bottleneck(l, r, PartKind::halfopen(side, j));
      matching.achieved = max(matching.achieved, pm.cost);
      for (const auto& p : pm.pairs) {
        matching.halfopen_pairs.push_back({side, j, p.left, p.right, p.cost});
      }
      for (const auto& d : pm.deletions) {
        matching.deletions.push_back({side, j, d.origin, d.bar, d.cost});
      }
    });
  };
  halfopen(Side::right, a.right, b.right);
  halfopen(Side::left, a.left, b.left);
  return {matching.achieved, std::move(matching)};
}

ExtendedCost bottleneck_distance(const GradedBarcode& f, const GradedBarcode& g) {
  return distance_with_matching(f, g).distance;
}

ExtendedCost bruteforce_distance(const GradedBarcode& f, const GradedBarcode& g,
                                 std::size_t limit) {
  const CLRSplit a = split_clr(f);
  const CLRSplit b = split_clr(g);
  ExtendedCost result{};
  const auto check = [limit](const auto& l, const auto& r) {
    if (l.size() > limit || r.size() > limit) {
      throw Error(ErrorCode::out_of_range,
                  "part exceeds brute-force limit of " + std::to_string(limit) + " bars");
    }
  };
  for_each_key(a.central, b.central, [&](int, const auto& l, const auto& r) {
    check(l, r);
    result = max(result, brute_central(l, r));
  });
  for (const auto* pair : {&a.right, &a.left}) {
    const auto& other = pair == &a.right ? b.right : b.left;
    for_each_key(*pair, other, [&](int, const auto& l, const auto& r) {
      check(l, r);
      std::vector<bool> used(r.size(), false);
      result = max(result, brute_halfopen(l, r, 0, used, ExtendedCost{}));
    });
  }
  return result;
}

}  // namespace sheafdist
