#include "sheafdist/hom.hpp"

#include <cmath>
#include <optional>
#include <utility>

#include "sheafdist/error.hpp"

namespace sheafdist {

namespace {

// Interval data that may be compared under a tolerance; unlike Interval it
// is not revalidated, so near-degenerate overlaps survive.
struct Span {
  double lo;
  bool lo_closed;
  double hi;
  bool hi_closed;
};

Span span_of(const Interval& iv) { return {iv.lo(), iv.lo_closed(), iv.hi(), iv.hi_closed()}; }

std::optional<Span> overlap(const Span& a, const Span& b, double tol) {
  Span s = a;
  if (const int c = compare_endpoints(b.lo, a.lo, tol); c > 0) {
    s.lo = b.lo;
    s.lo_closed = b.lo_closed;
  } else if (c == 0) {
    s.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (const int c = compare_endpoints(b.hi, a.hi, tol); c < 0) {
    s.hi = b.hi;
    s.hi_closed = b.hi_closed;
  } else if (c == 0) {
    s.hi_closed = a.hi_closed && b.hi_closed;
  }
  const int c = compare_endpoints(s.lo, s.hi, tol);
  if (c < 0 || (c == 0 && s.lo_closed && s.hi_closed)) return s;
  return std::nullopt;
}

}  // namespace

namespace detail {

bool hom0_nonzero(const Interval& source, const Interval& target, double tol) {
  const Span i = span_of(source);
  const Span j = span_of(target);
  const auto x = overlap(i, j, tol);
  if (!x) return false;
  // Closed in the source: an open finite end of the overlap must be an open
  // end of the source itself.
  if (!x->lo_closed && std::isfinite(x->lo) &&
      !(compare_endpoints(x->lo, i.lo, tol) == 0 && !i.lo_closed)) {
    return false;
  }
  if (!x->hi_closed && std::isfinite(x->hi) &&
      !(compare_endpoints(x->hi, i.hi, tol) == 0 && !i.hi_closed)) {
    return false;
  }
  // Open in the target: a closed end of the overlap must be a closed end of
  // the target.
  if (x->lo_closed && !(compare_endpoints(x->lo, j.lo, tol) == 0 && j.lo_closed)) return false;
  if (x->hi_closed && !(compare_endpoints(x->hi, j.hi, tol) == 0 && j.hi_closed)) return false;
  return true;
}

}  // namespace detail

namespace {

// Boundary shape used by the tables: infinite ends read as open on the
// source side and closed on the target side.
struct Shape {
  double a;
  double b;
  bool lo_closed;
  bool hi_closed;
};

Shape source_shape(const Interval& iv) {
  return {iv.lo(), iv.hi(), std::isfinite(iv.lo()) && iv.lo_closed(),
          std::isfinite(iv.hi()) && iv.hi_closed()};
}

Shape target_shape(const Interval& iv) {
  return {iv.lo(), iv.hi(), !std::isfinite(iv.lo()) || iv.lo_closed(),
          !std::isfinite(iv.hi()) || iv.hi_closed()};
}

bool ext1_nonzero(const Interval& source, const Interval& target, double tol) {
  const Shape s = source_shape(source);
  const Shape t = target_shape(target);
  const auto lt = [tol](double x, double y) { return compare_endpoints(x, y, tol) < 0; };
  const auto le = [tol](double x, double y) { return compare_endpoints(x, y, tol) <= 0; };
  const double a = s.a, b = s.b, c = t.a, d = t.b;
  const bool t_open = !t.lo_closed && !t.hi_closed;
  const bool t_closed = t.lo_closed && t.hi_closed;
  const bool t_right = t.lo_closed && !t.hi_closed;
  const bool t_left = !t.lo_closed && t.hi_closed;

  if (!s.lo_closed && !s.hi_closed) {
    // (a,b) -> (c,d): [c,d] inside (a,b).
    return t_open && lt(a, c) && lt(d, b);
  }
  if (s.lo_closed && s.hi_closed) {
    if (t_open) return le(a, d) && le(c, b);  // closures meet
    if (t_closed) return lt(c, a) && lt(b, d);
    if (t_right) return lt(c, a) && le(a, d);
    return le(c, b) && lt(b, d);
  }
  if (s.lo_closed) {  // [a,b)
    if (t_open) return le(a, d) && lt(d, b);
    if (t_right) return lt(c, a) && le(a, d) && lt(d, b);
    return false;
  }
  // (a,b]
  if (t_open) return lt(a, c) && le(c, b);
  if (t_left) return lt(a, c) && le(c, b) && lt(b, d);
  return false;
}

}  // namespace

int ext_dim(const Interval& source, const Interval& target, int n, double tol) {
  switch (n) {
    case 0: return detail::hom0_nonzero(source, target, tol) ? 1 : 0;
    case 1: return ext1_nonzero(source, target, tol) ? 1 : 0;
    default: return 0;
  }
}

int hom_dim(const HomQuery& query, double tol) {
  return ext_dim(query.source.interval, query.target.interval, query.ext_degree(), tol);
}

bool generator_composite_nonzero(const Interval& i, const Interval& j, const Interval& k,
                                 double tol) {
  if (!detail::hom0_nonzero(i, j, tol) || !detail::hom0_nonzero(j, k, tol)) {
    throw Error(ErrorCode::invalid_argument,
                "composite requires nonzero Hom(" + to_string(i) + "," + to_string(j) +
                    ") and Hom(" + to_string(j) + "," + to_string(k) + ")");
  }
  if (!detail::hom0_nonzero(i, k, tol)) return false;
  const auto ij = overlap(span_of(i), span_of(j), tol);
  return ij && overlap(*ij, span_of(k), tol).has_value();
}

namespace {

// Two-term resolutions. `terms[0]` / `terms[1]` are the summands in the
// lower / upper degree: -1 and 0 for the open left resolution of the
// source, 0 and 1 for the closed right resolution of the target.
struct Resolution {
  std::vector<Interval> terms[2];
};

Resolution open_resolution(const Interval& iv) {
  const bool lo_closed = std::isfinite(iv.lo()) && iv.lo_closed();
  const bool hi_closed = std::isfinite(iv.hi()) && iv.hi_closed();
  if (!lo_closed && !hi_closed) return {{{}, {iv}}};
  if (lo_closed && hi_closed) {
    return {{{Interval::open(-kInfinity, iv.lo()), Interval::open(iv.hi(), kInfinity)},
             {Interval::real_line()}}};
  }
  if (lo_closed) {
    return {{{Interval::open(-kInfinity, iv.lo())}, {Interval::open(-kInfinity, iv.hi())}}};
  }
  return {{{Interval::open(iv.hi(), kInfinity)}, {Interval::open(iv.lo(), kInfinity)}}};
}

Resolution closed_resolution(const Interval& iv) {
  const bool lo_finite = std::isfinite(iv.lo());
  const bool hi_finite = std::isfinite(iv.hi());
  Resolution r;
  r.terms[0].push_back(Interval::make(iv.lo(), lo_finite, iv.hi(), hi_finite));
  if (lo_finite && !iv.lo_closed()) r.terms[1].push_back(Interval::point(iv.lo()));
  if (hi_finite && !iv.hi_closed()) r.terms[1].push_back(Interval::point(iv.hi()));
  return r;
}

// Basis element of Hom(O^p_i, K^q_l), living in total degree q - p.
struct BasisElement {
  int p;
  std::size_t i;
  int q;
  std::size_t l;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

long long mod(long long x) {
  x %= detail::kPrime;
  return x < 0 ? x + detail::kPrime : x;
}

long long power(long long base, long long exp) {
  long long result = 1;
  base = mod(base);
  while (exp > 0) {
    if (exp & 1) result = result * base % detail::kPrime;
    base = base * base % detail::kPrime;
    exp >>= 1;
  }
  return result;
}

int rank_mod_p(std::vector<std::vector<long long>> m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const long long inv = power(m[rank][c], detail::kPrime - 2);
    for (auto& v : m[rank]) v = v * inv % detail::kPrime;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const long long f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = mod(m[r][k] - f * m[rank][k] % detail::kPrime);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

namespace detail {

ExtComplex build_ext_complex(const Interval& source, const Interval& target, double tol) {
  const Resolution o = open_resolution(source);
  const Resolution k = closed_resolution(target);
  const auto& o_at = [&](int p) -> const std::vector<Interval>& { return o.terms[p + 1]; };
  const auto& k_at = [&](int q) -> const std::vector<Interval>& { return k.terms[q]; };

  std::vector<std::vector<BasisElement>> basis(4);  // total degrees -1..2
  for (int n = -1; n <= 2; ++n) {
    for (int p = -1; p <= 0; ++p) {
      const int q = n + p;
      if (q < 0 || q > 1) continue;
      for (std::size_t i = 0; i < o_at(p).size(); ++i) {
        for (std::size_t l = 0; l < k_at(q).size(); ++l) {
          if (hom0_nonzero(o_at(p)[i], k_at(q)[l], tol)) basis[n + 1].push_back({p, i, q, l});
        }
      }
    }
  }

  ExtComplex cx;
  for (const auto& b : basis) cx.dims.push_back(static_cast<int>(b.size()));

  // d(phi) = d_K . phi - (-1)^n phi . d_O, the component maps of d_O and d_K
  // being canonical generators with coefficient +1.
  for (int n = -1; n <= 1; ++n) {
    const auto& src = basis[n + 1];
    const auto& dst = basis[n + 2];
    std::vector<std::vector<long long>> d(dst.size(), std::vector<long long>(src.size(), 0));
    const auto find = [&](const BasisElement& e) -> std::optional<std::size_t> {
      for (std::size_t r = 0; r < dst.size(); ++r) {
        if (dst[r] == e) return r;
      }
      return std::nullopt;
    };
    for (std::size_t s = 0; s < src.size(); ++s) {
      const BasisElement& e = src[s];
      const Interval& from = o_at(e.p)[e.i];
      const Interval& to = k_at(e.q)[e.l];
      if (e.q == 0) {
        for (std::size_t l2 = 0; l2 < k_at(1).size(); ++l2) {
          const auto row = find({e.p, e.i, 1, l2});
          if (row && hom0_nonzero(to, k_at(1)[l2], tol) &&
              generator_composite_nonzero(from, to, k_at(1)[l2], tol)) {
            d[*row][s] = mod(d[*row][s] + 1);
          }
        }
      }
      if (e.p == 0) {
        for (std::size_t i2 = 0; i2 < o_at(-1).size(); ++i2) {
          const auto row = find({-1, i2, e.q, e.l});
          if (row && hom0_nonzero(o_at(-1)[i2], from, tol) &&
              generator_composite_nonzero(o_at(-1)[i2], from, to, tol)) {
            d[*row][s] = mod(d[*row][s] + (n % 2 == 0 ? -1 : 1));
          }
        }
      }
    }
    cx.differentials.push_back(std::move(d));
  }
  return cx;
}

int resolution_ext_dim(const Interval& source, const Interval& target, int n, double tol) {
  if (n < -1 || n > 2) return 0;
  const ExtComplex cx = build_ext_complex(source, target, tol);
  const auto rank_of = [&](int m) {
    if (m < -1 || m > 1) return 0;
    const auto& d = cx.differentials[m + 1];
    return d.empty() || d[0].empty() ? 0 : rank_mod_p(d);
  };
  return cx.dims[n + 1] - rank_of(n) - rank_of(n - 1);
}

}  // namespace detail

int ext_oracle(const HomQuery& query, double tol) {
  if (!query.source.interval.is_bounded() || !query.target.interval.is_bounded()) {
    throw Error(ErrorCode::unsupported, "ext oracle needs bounded intervals");
  }
  return detail::resolution_ext_dim(query.source.interval, query.target.interval,
                                    query.ext_degree(), tol);
}

}  // namespace sheafdist
