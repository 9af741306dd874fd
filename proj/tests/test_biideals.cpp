#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "osg/biideals.hpp"
#include "osg/transform.hpp"
#include "test_util.hpp"

using namespace osg;
using namespace osg::test;

namespace {

// Cayley table of B(S) for the five-element instance, indices into B1..B6
const std::vector<uint32_t> kExpectedBS = {
    0, 0, 0, 0, 0, 0,  //
    0, 0, 0, 0, 0, 0,  //
    2, 2, 2, 2, 2, 2,  //
    2, 2, 2, 3, 4, 5,  //
    2, 2, 2, 3, 4, 5,  //
    2, 2, 2, 3, 4, 5};

// Cayley table of B(T2), indices into B1..B4
const std::vector<uint32_t> kExpectedBT2 = {
    0, 1, 2, 2,  //
    0, 1, 2, 2,  //
    0, 1, 2, 2,  //
    0, 1, 2, 3};

}  // namespace

TEST_CASE("star products") {
  OrderedSemigroup s = ex26();
  ElementSet b4 = set_of(s, {"a", "c", "d", "e"});
  ElementSet b5 = set_of(s, {"b", "c", "d", "e"});
  ElementSet b2 = set_of(s, {"c", "e"});
  CHECK(star(s, b4, b5) == b5);
  CHECK(star(s, b2, b2) == set_of(s, {"c"}));
  CHECK_THROWS_AS(star(s, ElementSet(5), b2), EmptyInput);

  OrderedSemigroup t2 = ordered_semigroup(build_full_transformation(2));
  ElementSet all = ElementSet::full(4);
  CHECK(star(t2, all, all) == all);
}

TEST_CASE("B(S) of the five-element instance matches the expected table") {
  BiIdealSemigroup b = build_biideal_semigroup(ex26());
  REQUIRE(b.family.members.size() == 6);
  CHECK(b.sgp.table() == kExpectedBS);
  CHECK(b.sgp.names() == default_names("B", 6));
  BandRegular br = band_and_regular(b.sgp);
  CHECK(!br.band);    // B2 * B2 = B1
  CHECK(!br.regular);
}

TEST_CASE("B(T2) matches the expected table and is a band") {
  BiIdealSemigroup b =
      build_biideal_semigroup(ordered_semigroup(build_full_transformation(2)));
  REQUIRE(b.family.members.size() == 4);
  CHECK(b.sgp.table() == kExpectedBT2);
  BandRegular br = band_and_regular(b.sgp);
  CHECK(br.band);
  CHECK(br.regular);
}

TEST_CASE("B(S) of the singleton") {
  BiIdealSemigroup b =
      build_biideal_semigroup(validate_ordered_semigroup({"x"}, {0}, {}));
  CHECK(b.sgp.size() == 1);
  CHECK(b.sgp.product(0, 0) == 0);
}

TEST_CASE("induced relations on the five-element instance") {
  OrderedSemigroup s = ex26();
  BiIdealSemigroup b = build_biideal_semigroup(s);
  InducedRelation lp = induced_relation(s, b, InducedKind::l_prime);
  InducedRelation rp = induced_relation(s, b, InducedKind::r_prime);
  CHECK(lp.partition.classes
        == std::vector<std::vector<uint32_t>>{{0, 1, 2}, {3}, {4}, {5}});
  CHECK(rp.partition.classes
        == std::vector<std::vector<uint32_t>>{{0}, {1}, {2}, {3, 4, 5}});
  CHECK(lp.partition.related(0, 1));  // (B1, B2)
  CHECK(lp.partition.related(0, 2));  // (B1, B3)
  CHECK(lp.partition.related(0, 0));
}

TEST_CASE("relation_compare") {
  OrderedSemigroup s = ex26();
  BiIdealSemigroup b = build_biideal_semigroup(s);
  GreensPartitions gb = greens_partitions(b.sgp, nullptr, GreensMode::plain);
  InducedRelation lp = induced_relation(s, b, InducedKind::l_prime);
  InducedRelation rp = induced_relation(s, b, InducedKind::r_prime);

  SUBCASE("L on B(S) is strictly below L'") {
    RelationComparison c = relation_compare(gb.l, lp.partition);
    CHECK(c.subset);
    CHECK(!c.equal);
    REQUIRE(c.witness.has_value());
    CHECK(*c.witness == std::pair<uint32_t, uint32_t>{0, 1});  // (B1, B2)
  }

  SUBCASE("R on B(S) equals R' here") {
    RelationComparison c = relation_compare(gb.r, rp.partition);
    CHECK(c.subset);
    CHECK(c.equal);
    CHECK(!c.witness.has_value());
  }

  SUBCASE("a relation compared with itself") {
    RelationComparison c = relation_compare(lp.partition, lp.partition);
    CHECK(c.subset);
    CHECK(c.equal);
  }

  SUBCASE("reverse strict inclusion yields a witness from the larger side") {
    RelationComparison c = relation_compare(lp.partition, gb.l);
    CHECK(!c.subset);
    CHECK(!c.equal);
    REQUIRE(c.witness.has_value());
    CHECK(*c.witness == std::pair<uint32_t, uint32_t>{0, 1});
  }

  SUBCASE("carrier mismatch is rejected") {
    EquivalencePartition tiny = partition_by_key({0});
    CHECK_THROWS_AS(relation_compare(tiny, lp.partition), CarrierMismatch);
  }
}

TEST_CASE("on T2 the induced relations equal the Greens relations on B(T2)") {
  OrderedSemigroup s = ordered_semigroup(build_full_transformation(2));
  BiIdealSemigroup b = build_biideal_semigroup(s);
  GreensPartitions gb = greens_partitions(b.sgp, nullptr, GreensMode::plain);
  CHECK(relation_compare(gb.l, induced_relation(s, b, InducedKind::l_prime).partition)
            .equal);
  CHECK(relation_compare(gb.r, induced_relation(s, b, InducedKind::r_prime).partition)
            .equal);
}

TEST_CASE("induced relations match their elementwise definition on the corpus") {
  for (const auto& [name, s] : corpus()) {
    CAPTURE(name);
    BiIdealSemigroup b = build_biideal_semigroup(s);
    GreensPartitions base = greens_partitions(s, GreensMode::ordered);
    for (InducedKind kind : {InducedKind::l_prime, InducedKind::r_prime}) {
      const EquivalencePartition& cls =
          kind == InducedKind::l_prime ? base.l : base.r;
      InducedRelation rel = induced_relation(cls, b, kind);
      uint32_t m = static_cast<uint32_t>(b.family.members.size());
      for (uint32_t i = 0; i < m; ++i) {
        for (uint32_t j = 0; j < m; ++j) {
          // each element of one side related to some element of the other
          bool fwd = true, bwd = true;
          b.family.members[i].for_each([&](uint32_t x) {
            bool hit = false;
            b.family.members[j].for_each(
                [&](uint32_t y) { hit = hit || cls.related(x, y); });
            fwd = fwd && hit;
          });
          b.family.members[j].for_each([&](uint32_t y) {
            bool hit = false;
            b.family.members[i].for_each(
                [&](uint32_t x) { hit = hit || cls.related(x, y); });
            bwd = bwd && hit;
          });
          CHECK(rel.partition.related(i, j) == (fwd && bwd));
        }
      }
    }
  }
}

TEST_CASE("L'/R' are equivalences and contain the Greens relations on B(S)") {
  for (const auto& [name, s] : corpus()) {
    CAPTURE(name);
    BiIdealSemigroup b = build_biideal_semigroup(s);
    GreensPartitions gb = greens_partitions(b.sgp, nullptr, GreensMode::plain);
    for (InducedKind kind : {InducedKind::l_prime, InducedKind::r_prime}) {
      InducedRelation rel = induced_relation(s, b, kind);
      const EquivalencePartition& p = rel.partition;
      uint32_t m = p.n;
      // equivalence axioms, stated on the relation itself
      for (uint32_t i = 0; i < m; ++i) {
        CHECK(p.related(i, i));
        for (uint32_t j = 0; j < m; ++j) {
          CHECK(p.related(i, j) == p.related(j, i));
          for (uint32_t k = 0; k < m; ++k) {
            if (p.related(i, j) && p.related(j, k)) CHECK(p.related(i, k));
          }
        }
      }
      const EquivalencePartition& greens =
          kind == InducedKind::l_prime ? gb.l : gb.r;
      CHECK(relation_compare(greens, p).subset);
    }
  }
}

TEST_CASE("star is idempotent on left and right ideal families of regular instances") {
  for (const auto& [name, s] : corpus()) {
    if (!regularity(s).regular) continue;
    CAPTURE(name);
    for (IdealKind k : {IdealKind::left, IdealKind::right}) {
      IdealFamily fam = enumerate_family(s, k);
      for (const ElementSet& x : fam.members) {
        CHECK(star(s, x, x) == x);
      }
    }
  }
}

TEST_CASE("star-intersection law on regular instances") {
  for (const auto& [name, s] : corpus()) {
    if (!regularity(s).regular) continue;
    CAPTURE(name);
    IdealFamily lefts = enumerate_family(s, IdealKind::left);
    IdealFamily rights = enumerate_family(s, IdealKind::right);
    for (const ElementSet& r : rights.members) {
      for (const ElementSet& l : lefts.members) {
        CHECK(star(s, r, l) == (r & l));
      }
    }
  }
}
