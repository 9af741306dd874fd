#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "osg/biideals.hpp"
#include "osg/greens.hpp"
#include "osg/transform.hpp"
#include "test_util.hpp"

using namespace osg;
using namespace osg::test;

namespace {

std::vector<std::vector<uint32_t>> named_classes(
    const OrderedSemigroup& s, const std::vector<std::vector<std::string>>& want) {
  std::vector<std::vector<uint32_t>> out;
  for (const auto& cls : want) {
    std::vector<uint32_t> c;
    for (const auto& n : cls) c.push_back(elem(s, n));
    std::sort(c.begin(), c.end());
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

TEST_CASE("ordered Greens relations on the five-element instance") {
  OrderedSemigroup s = ex26();
  GreensPartitions g = greens_partitions(s, GreensMode::ordered);
  CHECK(g.d.classes == named_classes(s, {{"a", "b"}, {"c", "d", "e"}}));
  CHECK(g.l.classes == named_classes(s, {{"a"}, {"b"}, {"c", "d", "e"}}));
  CHECK(g.r.classes == named_classes(s, {{"a", "b"}, {"c"}, {"d"}, {"e"}}));
  CHECK(g.h.classes == named_classes(s, {{"a"}, {"b"}, {"c"}, {"d"}, {"e"}}));
  CHECK(g.j == g.d);
}

TEST_CASE("plain Greens relations on B(S) of the five-element instance") {
  BiIdealSemigroup b = build_biideal_semigroup(ex26());
  GreensPartitions g = greens_partitions(b.sgp, nullptr, GreensMode::plain);
  // indices follow the canonical family naming B1..B6
  CHECK(g.d.classes
        == std::vector<std::vector<uint32_t>>{{0, 2}, {1}, {3, 4, 5}});
  CHECK(g.l.classes
        == std::vector<std::vector<uint32_t>>{{0, 2}, {1}, {3}, {4}, {5}});
  CHECK(g.r.classes
        == std::vector<std::vector<uint32_t>>{{0}, {1}, {2}, {3, 4, 5}});
  CHECK_THROWS_AS(greens_partitions(b.sgp, nullptr, GreensMode::ordered),
                  MissingOrder);
}

TEST_CASE("singleton partitions collapse to one class") {
  OrderedSemigroup s = validate_ordered_semigroup({"x"}, {0}, {});
  GreensPartitions g = greens_partitions(s, GreensMode::ordered);
  for (const auto* p : {&g.l, &g.r, &g.j, &g.h, &g.d}) {
    CHECK(p->classes == std::vector<std::vector<uint32_t>>{{0}});
  }
}

TEST_CASE("refinement chain H below L,R below D on the whole corpus") {
  for (const auto& [name, s] : corpus()) {
    CAPTURE(name);
    for (GreensMode mode : {GreensMode::ordered, GreensMode::plain}) {
      GreensPartitions g = greens_partitions(s, mode);
      CHECK(partition_refines(g.h, g.l));
      CHECK(partition_refines(g.h, g.r));
      CHECK(partition_refines(g.l, g.d));
      CHECK(partition_refines(g.r, g.d));
    }
  }
}

TEST_CASE("the join matches the union-find oracle") {
  for (const auto& [name, s] : corpus()) {
    CAPTURE(name);
    GreensPartitions g = greens_partitions(s, GreensMode::ordered);
    CHECK(g.d == join_oracle(g.l, g.r));
    CHECK(partition_join(g.j, g.h) == join_oracle(g.j, g.h));
  }
}

TEST_CASE("L witnesses on (T2,<=)") {
  OrderedSemigroup s = ordered_semigroup(build_full_transformation(2));
  uint32_t id = elem(s, "(1,2)"), sw = elem(s, "(2,1)");
  uint32_t c1 = elem(s, "(1,1)"), c2 = elem(s, "(2,2)");

  auto w = l_witness_regular(s, id, sw);
  REQUIRE(w.has_value());
  CHECK(*w == std::pair<uint32_t, uint32_t>{sw, sw});
  // replay: a <= x.b and b <= y.a
  CHECK(s.ord().le(id, s.sgp().product(w->first, sw)));
  CHECK(s.ord().le(sw, s.sgp().product(w->second, id)));

  CHECK(!l_witness_regular(s, c1, c2).has_value());

  auto r = r_witness_regular(s, c1, c2);
  REQUIRE(r.has_value());
  CHECK(s.ord().le(c1, s.sgp().product(c2, r->first)));
  CHECK(s.ord().le(c2, s.sgp().product(c1, r->second)));
}

TEST_CASE("witness existence is equivalent to the Greens relation") {
  for (const auto& [name, s] : corpus()) {
    if (!regularity(s).regular) continue;
    CAPTURE(name);
    GreensPartitions g = greens_partitions(s, GreensMode::ordered);
    for (uint32_t a = 0; a < s.size(); ++a) {
      for (uint32_t b = 0; b < s.size(); ++b) {
        CHECK(l_witness_regular(s, a, b).has_value() == g.l.related(a, b));
        CHECK(r_witness_regular(s, a, b).has_value() == g.r.related(a, b));
      }
    }
  }
}

TEST_CASE("witness search demands regularity") {
  CHECK_THROWS_AS(l_witness_regular(ex26(), 0, 1), NotRegular);
}

TEST_CASE("on regular instances a L b iff (Sa] = (Sb]") {
  for (const auto& [name, s] : corpus()) {
    if (!regularity(s).regular) continue;
    CAPTURE(name);
    GreensPartitions g = greens_partitions(s, GreensMode::ordered);
    std::vector<ElementSet> sa;
    for (uint32_t a = 0; a < s.size(); ++a) {
      sa.push_back(s.close(s.col_product(a)));
    }
    for (uint32_t a = 0; a < s.size(); ++a) {
      for (uint32_t b = 0; b < s.size(); ++b) {
        CHECK((sa[a] == sa[b]) == g.l.related(a, b));
      }
    }
  }
}

TEST_CASE("egg-box of the five-element instance") {
  EggBox box = egg_box(greens_partitions(ex26(), GreensMode::ordered));
  REQUIRE(box.dclasses.size() == 2);
  // {a, b}: one R-row, two L-columns
  CHECK(box.dclasses[0].members == std::vector<uint32_t>{0, 1});
  CHECK(box.dclasses[0].rows() == 1);
  CHECK(box.dclasses[0].cols() == 2);
  // {c, d, e}: three R-rows, one L-column
  CHECK(box.dclasses[1].members == std::vector<uint32_t>{2, 3, 4});
  CHECK(box.dclasses[1].rows() == 3);
  CHECK(box.dclasses[1].cols() == 1);
}

TEST_CASE("egg-box of B(T2)") {
  BiIdealSemigroup b =
      build_biideal_semigroup(ordered_semigroup(build_full_transformation(2)));
  EggBox box = egg_box(greens_partitions(b.sgp, nullptr, GreensMode::plain));
  REQUIRE(box.dclasses.size() == 2);
  CHECK(box.dclasses[0].members == std::vector<uint32_t>{3});  // {B4}
  CHECK(box.dclasses[1].members == std::vector<uint32_t>{0, 1, 2});
  CHECK(box.dclasses[1].rows() == 1);
  CHECK(box.dclasses[1].cols() == 3);
  for (const auto& cell : box.dclasses[1].cells[0]) CHECK(cell.size() == 1);
}

TEST_CASE("egg-box of T3") {
  OrderedSemigroup s = ordered_semigroup(build_full_transformation(3));
  EggBox box = egg_box(greens_partitions(s, GreensMode::ordered));
  REQUIRE(box.dclasses.size() == 3);
  CHECK(box.dclasses[0].members.size() == 3);
  CHECK(box.dclasses[0].rows() == 1);
  CHECK(box.dclasses[0].cols() == 3);
  CHECK(box.dclasses[1].members.size() == 6);
  CHECK(box.dclasses[1].rows() == 1);
  CHECK(box.dclasses[1].cols() == 1);
  CHECK(box.dclasses[1].cells[0][0].size() == 6);
  CHECK(box.dclasses[2].members.size() == 18);
  CHECK(box.dclasses[2].rows() == 3);
  CHECK(box.dclasses[2].cols() == 3);
  for (const auto& row : box.dclasses[2].cells) {
    for (const auto& cell : row) CHECK(cell.size() == 2);
  }
}

TEST_CASE("egg-box cells are exactly the H-classes and tile each D-class") {
  for (const auto& [name, s] : corpus()) {
    CAPTURE(name);
    GreensPartitions g = greens_partitions(s, GreensMode::ordered);
    EggBox box = egg_box(g);
    size_t total = 0;
    for (const auto& d : box.dclasses) {
      size_t covered = 0;
      for (const auto& row : d.cells) {
        for (const auto& cell : row) {
          covered += cell.size();
          if (cell.empty()) continue;
          // each nonempty cell is one whole H-class
          CHECK(cell == g.h.classes[g.h.class_id[cell.front()]]);
        }
      }
      CHECK(covered == d.members.size());
      total += covered;
    }
    CHECK(total == s.size());
  }
}
