#ifndef OSG_TRANSFORM_HPP_
#define OSG_TRANSFORM_HPP_

#include <string>
#include <vector>

#include "osg/core.hpp"
#include "osg/greens.hpp"

namespace osg {

//! A self-map of {0, .., n-1}; displayed 1-based as "(i,j,k)".
struct Transformation {
  uint32_t degree = 0;
  std::vector<uint8_t> images;

  std::string name() const;
  bool operator==(const Transformation&) const = default;
};

//! The full transformation semigroup on n points: all n^n maps in
//! lexicographic image-tuple order, composed left to right, i.e.
//! (f.g)(x) = g(f(x)).
struct TnSemigroup {
  uint32_t degree = 0;
  std::vector<Transformation> elements;
  PlainSemigroup sgp;
};

//! n in [1, 4]; larger degrees are rejected with TooLarge.
TnSemigroup build_full_transformation(uint32_t n);

//! The natural partial order: f <= g iff the plain right ideal of f is
//! contained in that of g and some a satisfies a.f = f and a.g = f.
//! Passes the partial-order axioms by construction; it is not compatible
//! with composition on either side once n >= 3, so no compatibility level
//! is imposed when attaching it.
PartialOrder natural_partial_order(const TnSemigroup& t);

//! (Tn, <=) as an ordered semigroup, compatibility recorded but not
//! required.
OrderedSemigroup ordered_semigroup(const TnSemigroup& t);

//! Set of output points of f.
std::vector<uint32_t> image_of(const Transformation& f);
//! Preimage partition of the domain.
EquivalencePartition kernel_of(const Transformation& f);

}  // namespace osg

#endif  // OSG_TRANSFORM_HPP_
