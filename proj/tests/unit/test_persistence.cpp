#include <doctest.h>

#include "sheafdist/sheafdist.hpp"
#include "support/classical_bottleneck.hpp"
#include "support/random_barcodes.hpp"

using namespace sheafdist;

TEST_CASE("bridge examples") {
  const CLRSplit r = split_clr(parse_barcode("0 [0,3)"));
  CHECK(to_persistence(r, Side::right, 0) == PersistenceDiagram{0, {{0, 3}}});
  CHECK(to_persistence(r, Side::right, 1) == PersistenceDiagram{1, {}});
  CHECK(to_persistence(r, Side::left, 0).pairs.empty());

  const CLRSplit l = split_clr(parse_barcode("1 (-2,5]"));
  CHECK(to_persistence(l, Side::left, 1) == PersistenceDiagram{1, {{-5, 2}}});

  CHECK(from_persistence({0, {{0, 3}}}, Side::right) ==
        std::vector<GradedInterval>{parse_graded_interval("[0,3)@0")});
  CHECK(from_persistence({1, {{-5, 2}}}, Side::left) ==
        std::vector<GradedInterval>{parse_graded_interval("(-2,5]@1")});
  CHECK(from_persistence({0, {}}, Side::right).empty());
  CHECK(from_persistence({0, {{-kInfinity, kInfinity}}}, Side::right) ==
        std::vector<GradedInterval>{parse_graded_interval("(-inf,inf)@0")});
  CHECK_THROWS_AS(from_persistence({0, {{-kInfinity, kInfinity}}}, Side::left), Error);
  CHECK_THROWS_AS(from_persistence({0, {{2, 1}}}, Side::right), Error);
}

TEST_CASE("bridge round trips") {
  testing::BarcodeGenerator gen(71);
  for (int i = 0; i < 300; ++i) {
    const GradedBarcode b = gen.barcode(12, 12, 0.3);
    const CLRSplit s = split_clr(b);
    for (const auto side : {Side::right, Side::left}) {
      for (const auto& [deg, bars] : side == Side::right ? s.right : s.left) {
        const PersistenceDiagram d = to_persistence(s, side, deg);
        CHECK(GradedBarcode(from_persistence(d, side)) == GradedBarcode(bars));
        const auto back = split_clr(GradedBarcode(from_persistence(d, side)));
        CHECK(to_persistence(back, side, deg) == d);
      }
    }
  }
}

TEST_CASE("diagram text") {
  const auto d = parse_diagrams("# comment\n0 0 3\n0 -inf 2\n1 1.5 inf\n\n");
  REQUIRE(d.size() == 2);
  CHECK(d.at(0).pairs.size() == 2);
  CHECK(d.at(1).pairs == std::vector<PersistencePair>{{1.5, kInfinity}});
  CHECK(format_diagrams(d) == "0 0 3\n0 -inf 2\n1 1.5 inf\n");
  CHECK_THROWS_AS(parse_diagrams("0 3 1"), ParseError);
  CHECK_THROWS_AS(parse_diagrams("0 1"), ParseError);
  CHECK_THROWS_AS(parse_diagrams("a 1 2"), ParseError);
}

TEST_CASE("bridge is an isometry") {
  testing::BarcodeGenerator gen(72);
  for (int i = 0; i < 300; ++i) {
    std::vector<GradedInterval> a, b;
    for (int k = gen.uniform_int(0, 6); k > 0; --k) a.push_back({gen.bounded(IntervalType::right), 0});
    for (int k = gen.uniform_int(0, 6); k > 0; --k) b.push_back({gen.bounded(IntervalType::right), 0});
    if (gen.coin(0.3)) {
      a.push_back({Interval::make(gen.grid(), true, kInfinity, false), 0});
      b.push_back({Interval::make(gen.grid(), true, kInfinity, false), 0});
    }
    const ExtendedCost ours = part_bottleneck(a, b, PartKind::halfopen(Side::right, 0)).cost;
    const double classical =
        testing::classical_bottleneck(to_persistence(split_clr(GradedBarcode(a)), Side::right, 0).pairs,
                                      to_persistence(split_clr(GradedBarcode(b)), Side::right, 0).pairs);
    CHECK(ours.value() == classical);
  }
}
