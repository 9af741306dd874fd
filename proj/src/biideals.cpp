#include "osg/biideals.hpp"

namespace osg {

ElementSet star(const OrderedSemigroup& s, const ElementSet& a,
                const ElementSet& b) {
  return downward_closure(s, subset_product(s, a, b));
}

BiIdealSemigroup build_biideal_semigroup(const OrderedSemigroup& s,
                                         uint64_t budget) {
  IdealFamily fam = enumerate_family(s, IdealKind::bi, budget);
  uint32_t m = static_cast<uint32_t>(fam.members.size());
  std::vector<uint32_t> table(size_t(m) * m);
  for (uint32_t i = 0; i < m; ++i) {
    for (uint32_t j = 0; j < m; ++j) {
      int k = fam.index_of(star(s, fam.members[i], fam.members[j]));
      if (k < 0) throw NotClosed(i, j);
      table[size_t(i) * m + j] = static_cast<uint32_t>(k);
    }
  }
  // PlainSemigroup re-verifies associativity of the index table
  PlainSemigroup sgp(default_names("B", m), std::move(table));
  return BiIdealSemigroup{s, std::move(fam), std::move(sgp)};
}

BandRegular band_and_regular(const PlainSemigroup& t) {
  uint32_t n = t.size();
  BandRegular out{true, true};
  for (uint32_t a = 0; a < n; ++a) {
    if (t.product(a, a) != a) out.band = false;
    bool has = false;
    for (uint32_t x = 0; x < n && !has; ++x) {
      has = t.product(t.product(a, x), a) == a;
    }
    if (!has) out.regular = false;
  }
  return out;
}

InducedRelation induced_relation(const EquivalencePartition& base,
                                 const BiIdealSemigroup& b, InducedKind kind) {
  uint32_t m = static_cast<uint32_t>(b.family.members.size());
  uint32_t nclasses = static_cast<uint32_t>(base.classes.size());
  // signature: the set of base classes a family member meets
  std::vector<ElementSet> sigs;
  sigs.reserve(m);
  for (const ElementSet& member : b.family.members) {
    ElementSet sig(nclasses);
    member.for_each([&](uint32_t x) { sig.insert(base.class_id[x]); });
    sigs.push_back(sig);
  }
  std::vector<std::vector<uint32_t>> classes;
  std::vector<int> assigned(m, -1);
  for (uint32_t i = 0; i < m; ++i) {
    if (assigned[i] >= 0) continue;
    std::vector<uint32_t> cls{i};
    assigned[i] = static_cast<int>(classes.size());
    for (uint32_t j = i + 1; j < m; ++j) {
      if (assigned[j] < 0 && sigs[j] == sigs[i]) {
        cls.push_back(j);
        assigned[j] = assigned[i];
      }
    }
    classes.push_back(std::move(cls));
  }
  return InducedRelation{kind, partition_from_classes(m, std::move(classes))};
}

InducedRelation induced_relation(const OrderedSemigroup& s,
                                 const BiIdealSemigroup& b, InducedKind kind) {
  GreensPartitions parts = greens_partitions(s, GreensMode::ordered);
  const EquivalencePartition& base =
      kind == InducedKind::l_prime ? parts.l : parts.r;
  return induced_relation(base, b, kind);
}

RelationComparison relation_compare(const EquivalencePartition& r1,
                                    const EquivalencePartition& r2) {
  if (r1.n != r2.n) throw CarrierMismatch();
  RelationComparison out{true, true, std::nullopt};
  std::optional<std::pair<uint32_t, uint32_t>> extra1;  // in r1 \ r2
  for (uint32_t i = 0; i < r1.n && !(out.witness && extra1); ++i) {
    for (uint32_t j = i + 1; j < r1.n; ++j) {
      bool in1 = r1.related(i, j), in2 = r2.related(i, j);
      if (in1 && !in2 && !extra1) extra1 = {i, j};
      if (in2 && !in1 && !out.witness) out.witness = {i, j};
    }
  }
  out.subset = !extra1.has_value();
  out.equal = out.subset && !out.witness.has_value();
  if (!out.equal && !out.witness) out.witness = extra1;
  return out;
}

}  // namespace osg
