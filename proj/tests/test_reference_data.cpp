#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "xc01/pipeline.hpp"

using namespace xc01;

// Consistency of the bundled tables with each other, independent of any computation.

namespace {

const ReferenceData& ref() {
  static const ReferenceData r = load_reference(XC01_REFERENCE_DIR);
  return r;
}

}  // namespace

TEST_CASE("table sizes") {
  CHECK(ref().table2.size() == 12);
  CHECK(ref().table3.size() == 12);
  CHECK(ref().table4.size() == 202);
}

TEST_CASE("table 2 totals") {
  std::uint64_t polys = 0;
  int zo = 0, aff = 0;
  for (const auto& r : ref().table2) {
    polys += r.polytopes;
    zo += r.zero_one_classes;
    aff += r.affine_classes;
  }
  CHECK(polys == 60879);
  CHECK(zo == 347);
  CHECK(aff == 202);
}

TEST_CASE("table 4 agrees with table 2 per vertex count") {
  std::map<int, int> rows, classes01;
  for (const auto& t : ref().table4) {
    ++rows[t.vertices];
    classes01[t.vertices] += 1 + static_cast<int>(t.further_reps.size());
  }
  for (const auto& r : ref().table2) {
    CAPTURE(r.vertices);
    CHECK(rows[r.vertices] == r.affine_classes);
    CHECK(classes01[r.vertices] == r.zero_one_classes);
  }
}

TEST_CASE("table 4 rows are internally consistent") {
  std::set<Mask> seen;
  for (const auto& t : ref().table4) {
    CAPTURE(t.id);
    CHECK(seen.insert(t.id).second);
    for (Mask m : t.further_reps) CHECK(seen.insert(m).second);
    CHECK(std::popcount(t.id) == t.vertices);
    for (Mask m : t.further_reps) CHECK(std::popcount(m) == t.vertices);
    CHECK(t.omega <= t.rc);
    CHECK(t.rc <= t.rrc);
    CHECK(t.rrc <= t.xcs);
    CHECK(t.xcs <= std::min(t.vertices, t.facets));
    CHECK(t.pred_id.has_value() == t.pred_class.has_value());
    CHECK(t.pred_id.has_value() == (t.op != "-" && t.op != "Δ"));
    if (t.op == "-") CHECK(t.xcs == t.facets);
    if (t.op == "Δ") CHECK(t.xcs == t.vertices);
  }
}

TEST_CASE("anchors") {
  std::map<Mask, const Table4Row*> by_id;
  for (const auto& t : ref().table4) by_id[t.id] = &t;
  auto row = [&](Mask id) {
    REQUIRE(by_id.count(id));
    return *by_id[id];
  };
  auto a = row(279);
  CHECK(a.vertices == 5);
  CHECK(a.facets == 5);
  CHECK(a.xcs == 5);
  auto b = row(5759);
  CHECK(b.omega == 8);
  CHECK(b.rc == 9);
  CHECK(b.xcs == 9);
  auto c = row(27606);
  CHECK(c.rc == 9);
  CHECK(c.rrc == 10);
  auto d = row(32511);
  CHECK(d.rc == 10);
  CHECK(row(65535).xcs == 8);
  CHECK(row(16383).pred_class == Mask{127});
  CHECK(row(15869).op == "÷*");
  CHECK(row(7167).op == "↓");
}

TEST_CASE("table 3") {
  int bipyramid = 0;
  for (const auto& t : ref().table3) {
    CHECK(std::popcount(t.id) == t.vertices);
    if (t.name == "bipyramid") {
      bipyramid = t.xcs;
      CHECK(t.facets == 6);
    }
  }
  CHECK(bipyramid == 5);
}
