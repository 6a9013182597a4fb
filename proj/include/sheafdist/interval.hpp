#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace sheafdist {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultTolerance = 1e-9;

/// Three-way comparison of extended reals. Finite values closer than `tol`
/// compare equal; an infinity only equals the infinity of the same sign.
int compare_endpoints(double x, double y, double tol) noexcept;

/// Topological type used by the CLR decomposition.
enum class IntervalType {
  central_open,    // (a,b), a,b finite
  central_closed,  // [a,b], a,b finite (points included)
  right,           // [a,b), including (-inf,b), [a,+inf) and the whole line
  left,            // (a,b], including (-inf,b] and (a,+inf)
};

/// A nonempty interval of the real line. Infinite endpoints are always
/// stored with the open flag.
class Interval {
 public:
  /// Throws Error(invalid_argument) for empty intervals, NaN endpoints or a
  /// closed flag on an infinite endpoint.
  static Interval make(double lo, bool lo_closed, double hi, bool hi_closed);

  static Interval closed(double lo, double hi) { return make(lo, true, hi, true); }
  static Interval open(double lo, double hi) { return make(lo, false, hi, false); }
  static Interval closed_open(double lo, double hi) { return make(lo, true, hi, false); }
  static Interval open_closed(double lo, double hi) { return make(lo, false, hi, true); }
  static Interval point(double x) { return make(x, true, x, true); }
  static Interval real_line() { return make(-kInfinity, false, kInfinity, false); }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  bool lo_closed() const noexcept { return lo_closed_; }
  bool hi_closed() const noexcept { return hi_closed_; }

  bool is_bounded() const noexcept;
  bool contains(double x) const noexcept;
  double center() const noexcept { return 0.5 * (lo_ + hi_); }
  /// hi - lo; infinite for rays.
  double length() const noexcept { return hi_ - lo_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Interval(double lo, bool lo_closed, double hi, bool hi_closed) noexcept
      : lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {}

  double lo_;
  double hi_;
  bool lo_closed_;
  bool hi_closed_;
};

IntervalType classify(const Interval& iv) noexcept;

bool is_central(IntervalType t) noexcept;

/// Exact intersection; nullopt when empty.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

bool approx_equal(const Interval& a, const Interval& b, double tol) noexcept;

/// The atom k_I placed in cohomological degree `degree`.
struct GradedInterval {
  Interval interval;
  int degree = 0;

  friend bool operator==(const GradedInterval&, const GradedInterval&) = default;
};

/// Canonical order: degree, lo, hi, then flags (closed before open).
bool canonical_less(const GradedInterval& a, const GradedInterval& b) noexcept;

bool approx_equal(const GradedInterval& a, const GradedInterval& b, double tol) noexcept;

/// Shortest round-trip decimal; infinities as `inf` / `-inf`.
std::string format_number(double x);
/// Accepts decimals with optional sign and fraction, and `inf`, `+inf`, `-inf`.
std::optional<double> parse_number(std::string_view text);

/// `[a,b)` style literal, no interior spaces.
std::string to_string(const Interval& iv);
/// `[a,b)@j`.
std::string to_string(const GradedInterval& gi);
std::string to_string(IntervalType t);

/// Throws ParseError (line 0) on malformed literals or invalid intervals.
Interval parse_interval(std::string_view text);
/// Parses `<interval>@<degree>`.
GradedInterval parse_graded_interval(std::string_view text);

}  // namespace sheafdist
