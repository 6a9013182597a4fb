#include "sheafdist/persistence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "sheafdist/error.hpp"

namespace sheafdist {

PersistenceDiagram to_persistence(const CLRSplit& split, Side side, int degree) {
  PersistenceDiagram out;
  out.degree = degree;
  const auto& part = side == Side::right ? split.right : split.left;
  const auto it = part.find(degree);
  if (it == part.end()) return out;
  for (const auto& gi : it->second) {
    const Interval& iv = gi.interval;
    if (side == Side::right) {
      out.pairs.push_back({iv.lo(), iv.hi()});
    } else {
      out.pairs.push_back({-iv.hi(), -iv.lo()});
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end(), [](const auto& a, const auto& b) {
    return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
  });
  return out;
}

std::vector<GradedInterval> from_persistence(const PersistenceDiagram& diagram, Side side) {
  std::vector<GradedInterval> out;
  for (const auto& p : diagram.pairs) {
    if (!(p.birth < p.death)) {
      throw Error(ErrorCode::invalid_argument, "pair (" + format_number(p.birth) + "," +
                                                   format_number(p.death) + ") has birth >= death");
    }
    const Interval iv = side == Side::right
                            ? Interval::make(p.birth, std::isfinite(p.birth), p.death, false)
                            : Interval::make(-p.death, false, -p.birth, std::isfinite(p.birth));
    const IntervalType want = side == Side::right ? IntervalType::right : IntervalType::left;
    if (classify(iv) != want) {
      throw Error(ErrorCode::invalid_argument, to_string(iv) + " is not a " + to_string(want) + " bar");
    }
    out.push_back({iv, diagram.degree});
  }
  return out;
}

std::map<int, PersistenceDiagram> parse_diagrams(std::string_view text) {
  std::map<int, PersistenceDiagram> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> tokens;
    while (true) {
      const auto start = line.find_first_not_of(" \t\r");
      if (start == std::string_view::npos) break;
      line.remove_prefix(start);
      const auto end = std::min(line.find_first_of(" \t\r"), line.size());
      tokens.push_back(line.substr(0, end));
      line.remove_prefix(end);
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 3) throw ParseError(line_no, "expected '<degree> <birth> <death>'");

    std::string_view deg_token = tokens[0];
    if (deg_token.front() == '+') deg_token.remove_prefix(1);
    int degree = 0;
    const auto [ptr, ec] = std::from_chars(deg_token.data(), deg_token.data() + deg_token.size(), degree);
    if (deg_token.empty() || ec != std::errc() || ptr != deg_token.data() + deg_token.size()) {
      throw ParseError(line_no, "bad degree '" + std::string(tokens[0]) + "'");
    }
    const auto birth = parse_number(tokens[1]);
    const auto death = parse_number(tokens[2]);
    if (!birth || !death) throw ParseError(line_no, "bad number");
    if (!(*birth < *death)) throw ParseError(line_no, "birth must be less than death");
    auto& diagram = out[degree];
    diagram.degree = degree;
    diagram.pairs.push_back({*birth, *death});
  }
  return out;
}

std::string format_diagrams(const std::map<int, PersistenceDiagram>& diagrams) {
  std::string out;
  for (const auto& [degree, diagram] : diagrams) {
    for (const auto& p : diagram.pairs) {
      out += std::to_string(degree) + ' ' + format_number(p.birth) + ' ' + format_number(p.death) + '\n';
    }
  }
  return out;
}

}  // namespace sheafdist
