#include "sheafdist/interval.hpp"

#include <charconv>
#include <cmath>
#include <tuple>

#include "sheafdist/error.hpp"

namespace sheafdist {

int compare_endpoints(double x, double y, double tol) noexcept {
  if (x == y) return 0;
  if (std::isinf(x) || std::isinf(y)) return x < y ? -1 : 1;
  if (std::fabs(x - y) <= tol) return 0;
  return x < y ? -1 : 1;
}

Interval Interval::make(double lo, bool lo_closed, double hi, bool hi_closed) {
  if (std::isnan(lo) || std::isnan(hi)) {
    throw Error(ErrorCode::invalid_argument, "interval endpoint is NaN");
  }
  if ((std::isinf(lo) && lo_closed) || (std::isinf(hi) && hi_closed)) {
    throw Error(ErrorCode::invalid_argument, "closed flag on an infinite endpoint");
  }
  if (lo == kInfinity || hi == -kInfinity) {
    throw Error(ErrorCode::invalid_argument, "empty interval");
  }
  const bool nonempty = lo < hi || (lo == hi && lo_closed && hi_closed);
  if (!nonempty) throw Error(ErrorCode::invalid_argument, "empty interval");
  return Interval(lo, lo_closed, hi, hi_closed);
}

bool Interval::is_bounded() const noexcept { return std::isfinite(lo_) && std::isfinite(hi_); }

bool Interval::contains(double x) const noexcept {
  const bool above = lo_closed_ ? x >= lo_ : x > lo_;
  const bool below = hi_closed_ ? x <= hi_ : x < hi_;
  return above && below;
}

IntervalType classify(const Interval& iv) noexcept {
  const bool lo_finite = std::isfinite(iv.lo());
  const bool hi_finite = std::isfinite(iv.hi());
  if (lo_finite && hi_finite) {
    if (iv.lo_closed() == iv.hi_closed()) {
      return iv.lo_closed() ? IntervalType::central_closed : IntervalType::central_open;
    }
    return iv.lo_closed() ? IntervalType::right : IntervalType::left;
  }
  if (!lo_finite && hi_finite) return iv.hi_closed() ? IntervalType::left : IntervalType::right;
  if (lo_finite && !hi_finite) return iv.lo_closed() ? IntervalType::right : IntervalType::left;
  // The whole line is a [a,b) with a = -inf, b = +inf, and never of type L.
  return IntervalType::right;
}

bool is_central(IntervalType t) noexcept {
  return t == IntervalType::central_open || t == IntervalType::central_closed;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  double lo = a.lo();
  bool lo_closed = a.lo_closed();
  if (b.lo() > lo) {
    lo = b.lo();
    lo_closed = b.lo_closed();
  } else if (b.lo() == lo) {
    lo_closed = lo_closed && b.lo_closed();
  }
  double hi = a.hi();
  bool hi_closed = a.hi_closed();
  if (b.hi() < hi) {
    hi = b.hi();
    hi_closed = b.hi_closed();
  } else if (b.hi() == hi) {
    hi_closed = hi_closed && b.hi_closed();
  }
  if (lo < hi || (lo == hi && lo_closed && hi_closed)) {
    return Interval::make(lo, lo_closed, hi, hi_closed);
  }
  return std::nullopt;
}

bool approx_equal(const Interval& a, const Interval& b, double tol) noexcept {
  return a.lo_closed() == b.lo_closed() && a.hi_closed() == b.hi_closed() &&
         compare_endpoints(a.lo(), b.lo(), tol) == 0 && compare_endpoints(a.hi(), b.hi(), tol) == 0;
}

bool canonical_less(const GradedInterval& a, const GradedInterval& b) noexcept {
  const Interval& x = a.interval;
  const Interval& y = b.interval;
  // Closed flags sort first, hence the negation.
  return std::make_tuple(a.degree, x.lo(), x.hi(), !x.lo_closed(), !x.hi_closed()) <
         std::make_tuple(b.degree, y.lo(), y.hi(), !y.lo_closed(), !y.hi_closed());
}

bool approx_equal(const GradedInterval& a, const GradedInterval& b, double tol) noexcept {
  return a.degree == b.degree && approx_equal(a.interval, b.interval, tol);
}

std::string format_number(double x) {
  if (x == kInfinity) return "inf";
  if (x == -kInfinity) return "-inf";
  if (x == 0.0) return "0";  // also folds -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::optional<double> parse_number(std::string_view text) {
  if (text == "inf" || text == "+inf") return kInfinity;
  if (text == "-inf") return -kInfinity;
  if (text.empty()) return std::nullopt;
  std::string_view body = text;
  if (body.front() == '+') body.remove_prefix(1);
  if (body.empty() || body.front() == '+') return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(body.data(), body.data() + body.size(), value, std::chars_format::general);
  if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string to_string(const Interval& iv) {
  std::string out;
  out += iv.lo_closed() ? '[' : '(';
  out += format_number(iv.lo());
  out += ',';
  out += format_number(iv.hi());
  out += iv.hi_closed() ? ']' : ')';
  return out;
}

std::string to_string(const GradedInterval& gi) {
  return to_string(gi.interval) + "@" + std::to_string(gi.degree);
}

std::string to_string(IntervalType t) {
  switch (t) {
    case IntervalType::central_open: return "C_open";
    case IntervalType::central_closed: return "C_closed";
    case IntervalType::right: return "R";
    case IntervalType::left: return "L";
  }
  return "?";
}

Interval parse_interval(std::string_view text) {
  if (text.size() < 5) throw ParseError(0, "malformed interval '" + std::string(text) + "'");
  const char open = text.front();
  const char close = text.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')')) {
    throw ParseError(0, "malformed interval '" + std::string(text) + "'");
  }
  const std::string_view body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError(0, "malformed interval '" + std::string(text) + "'");
  }
  const auto lo = parse_number(body.substr(0, comma));
  const auto hi = parse_number(body.substr(comma + 1));
  if (!lo || !hi) throw ParseError(0, "bad endpoint in '" + std::string(text) + "'");
  const bool lo_closed = open == '[';
  const bool hi_closed = close == ']';
  if ((std::isinf(*lo) && lo_closed) || (std::isinf(*hi) && hi_closed)) {
    throw ParseError(0, "closed flag on an infinite endpoint in '" + std::string(text) + "'");
  }
  if (!(*lo < *hi || (*lo == *hi && lo_closed && hi_closed))) {
    throw ParseError(0, "empty interval '" + std::string(text) + "'");
  }
  return Interval::make(*lo, lo_closed, *hi, hi_closed);
}

GradedInterval parse_graded_interval(std::string_view text) {
  const auto at = text.rfind('@');
  if (at == std::string_view::npos) {
    throw ParseError(0, "expected <interval>@<degree>, got '" + std::string(text) + "'");
  }
  std::string_view deg = text.substr(at + 1);
  if (!deg.empty() && deg.front() == '+') deg.remove_prefix(1);
  int degree = 0;
  auto [ptr, ec] = std::from_chars(deg.data(), deg.data() + deg.size(), degree);
  if (deg.empty() || ec != std::errc() || ptr != deg.data() + deg.size()) {
    throw ParseError(0, "bad degree in '" + std::string(text) + "'");
  }
  return {parse_interval(text.substr(0, at)), degree};
}

}  // namespace sheafdist
