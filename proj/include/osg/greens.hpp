#ifndef OSG_GREENS_HPP_
#define OSG_GREENS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "osg/core.hpp"

namespace osg {

enum class GreensMode { ordered, plain };

//! A partition of [0, n).  Classes are listed by ascending smallest member
//! and class ids follow that listing, so equal relations compare equal.
struct EquivalencePartition {
  uint32_t n = 0;
  std::vector<uint32_t> class_id;
  std::vector<std::vector<uint32_t>> classes;

  bool related(uint32_t a, uint32_t b) const { return class_id[a] == class_id[b]; }
  bool operator==(const EquivalencePartition&) const = default;
};

//! Builds the canonical partition grouping indices by key.
EquivalencePartition partition_by_key(const std::vector<uint64_t>& keys);
//! Canonical form of explicitly given classes.
EquivalencePartition partition_from_classes(uint32_t n,
                                            std::vector<std::vector<uint32_t>> classes);
//! Common refinement (as relations: intersection).
EquivalencePartition partition_meet(const EquivalencePartition& p,
                                    const EquivalencePartition& q);
//! Smallest equivalence containing both, via transitive closure of the union.
EquivalencePartition partition_join(const EquivalencePartition& p,
                                    const EquivalencePartition& q);
//! Whether p refines q (every p-class lies inside one q-class).
bool partition_refines(const EquivalencePartition& p, const EquivalencePartition& q);

struct GreensPartitions {
  EquivalencePartition l, r, j, h, d;
};

//! L, R, J from equality of principal ideals (downward-closed in ordered
//! mode, raw in plain mode), H = L meet R, D = L join R.
GreensPartitions greens_partitions(const PlainSemigroup& s, const PartialOrder* ord,
                                   GreensMode mode);
GreensPartitions greens_partitions(const OrderedSemigroup& s, GreensMode mode);

//! On a regular ordered semigroup, a L b iff some x, y satisfy a <= xb and
//! b <= ya.  Returns the first such witness in index order, or nothing when
//! a and b are not L-related.  Throws NotRegular otherwise.
std::optional<std::pair<uint32_t, uint32_t>> l_witness_regular(
    const OrderedSemigroup& s, uint32_t a, uint32_t b);
//! Right-sided analogue: a <= bu and b <= av.
std::optional<std::pair<uint32_t, uint32_t>> r_witness_regular(
    const OrderedSemigroup& s, uint32_t a, uint32_t b);

//! D-classes arranged as R-class rows by L-class columns of H-cells.
struct EggBox {
  struct DClass {
    std::vector<uint32_t> members;                     // ascending
    std::vector<std::vector<std::vector<uint32_t>>> cells;  // rows x cols
    size_t rows() const { return cells.size(); }
    size_t cols() const { return cells.empty() ? 0 : cells[0].size(); }
  };
  std::vector<DClass> dclasses;
};

//! Deterministic arrangement: D-classes by (size, smallest member), rows and
//! columns by smallest member.  Cells that meet the D-class emptily stay
//! empty.
EggBox egg_box(const GreensPartitions& parts);

}  // namespace osg

#endif  // OSG_GREENS_HPP_
