#ifndef OSG_IDEALS_HPP_
#define OSG_IDEALS_HPP_

#include <string>
#include <vector>

#include "osg/core.hpp"

namespace osg {

enum class IdealKind { left, right, two_sided, bi, subidempotent_bi };

//! Short display prefix for family members of a kind: L, R, I, B, SB.
std::string kind_prefix(IdealKind kind);

//! The complete family of ideals of one kind, in canonical
//! (cardinality, lexicographic member list) order with no duplicates.
struct IdealFamily {
  IdealKind kind;
  std::vector<ElementSet> members;

  //! Index of a member, or -1 when absent.
  int index_of(const ElementSet& s) const;
  //! 1-based display name, e.g. "B3".
  std::string member_name(uint32_t i) const;
};

//! L(a) = (a u Sa], R(a) = (a u aS], I(a) = (a u Sa u aS u SaS],
//! B(a) = (a u aSa].  The subidempotent kind has no principal form.
ElementSet principal_ideal(const OrderedSemigroup& s, uint32_t a, IdealKind kind);

struct SubsetFlags {
  bool left, right, two_sided, bi, subidempotent_bi;
};

//! Exact truth values of the defining conditions for a nonempty subset.
SubsetFlags classify_subset(const OrderedSemigroup& s, const ElementSet& a);

inline constexpr uint64_t kDefaultDownSetBudget = 5'000'000;

//! Enumerates every ideal of the given kind by walking the down-set lattice
//! of (S, <=) and filtering by the multiplicative condition.  Aborts with
//! BudgetExceeded once more than `budget` down-sets have been visited.
IdealFamily enumerate_family(const OrderedSemigroup& s, IdealKind kind,
                             uint64_t budget = kDefaultDownSetBudget);

struct Regularity {
  bool regular;        // every a has a in (aSa]
  bool intra_regular;  // every a has a in (S a^2 S]
};

Regularity regularity(const OrderedSemigroup& s);

}  // namespace osg

#endif  // OSG_IDEALS_HPP_
