#ifndef OSG_BIIDEALS_HPP_
#define OSG_BIIDEALS_HPP_

#include <optional>
#include <utility>

#include "osg/core.hpp"
#include "osg/greens.hpp"
#include "osg/ideals.hpp"

namespace osg {

//! A * B = (AB].
ElementSet star(const OrderedSemigroup& s, const ElementSet& a, const ElementSet& b);

//! The semigroup of bi-ideals (B(S), *) over the canonical family.  B(S)
//! carries no order; its Cayley table is over family indices and its
//! elements are named B1..Bm following the canonical family order.
struct BiIdealSemigroup {
  OrderedSemigroup base;
  IdealFamily family;
  PlainSemigroup sgp;
};

//! Enumerates the family and builds the full * table.  A product that
//! leaves the family raises NotClosed; the table constructor re-verifies
//! associativity.
BiIdealSemigroup build_biideal_semigroup(const OrderedSemigroup& s,
                                         uint64_t budget = kDefaultDownSetBudget);

struct BandRegular {
  bool band;     // every element idempotent
  bool regular;  // every a has x with a = a.x.a
};

BandRegular band_and_regular(const PlainSemigroup& t);

enum class InducedKind { l_prime, r_prime };

//! The elementwise relation on B(S): A related to B iff every element of A
//! is Greens-related (in S, ordered sense) to some element of B and vice
//! versa; equivalently, A and B meet the same Greens classes.
struct InducedRelation {
  InducedKind kind;
  EquivalencePartition partition;
};

InducedRelation induced_relation(const OrderedSemigroup& s,
                                 const BiIdealSemigroup& b, InducedKind kind);
//! Variant reusing an already computed base partition (L for l_prime,
//! R for r_prime).
InducedRelation induced_relation(const EquivalencePartition& base_classes,
                                 const BiIdealSemigroup& b, InducedKind kind);

struct RelationComparison {
  bool subset;  // r1 refines-or-equals r2 as a relation
  bool equal;
  //! First pair (row-major) related in exactly one of the two, present
  //! whenever the relations differ; drawn from r2 minus r1 when possible.
  std::optional<std::pair<uint32_t, uint32_t>> witness;
};

RelationComparison relation_compare(const EquivalencePartition& r1,
                                    const EquivalencePartition& r2);

}  // namespace osg

#endif  // OSG_BIIDEALS_HPP_
