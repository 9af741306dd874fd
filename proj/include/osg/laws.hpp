#ifndef OSG_LAWS_HPP_
#define OSG_LAWS_HPP_

#include <string>
#include <vector>

#include "osg/biideals.hpp"
#include "osg/core.hpp"

namespace osg {

enum class Verdict { pass, fail, not_applicable };

std::string verdict_name(Verdict v);

struct LawResult {
  std::string id;
  std::string statement;
  Verdict verdict;
  std::string witness;  // counterexample or diagnostic detail; empty if none
};

//! One verification run over a concrete instance.  Every law id of the
//! registry appears exactly once; a fail always carries a witness.
struct LawReport {
  std::string instance;
  std::vector<LawResult> laws;

  bool all_passed() const {
    for (const auto& l : laws) {
      if (l.verdict == Verdict::fail) return false;
    }
    return true;
  }
};

//! Runs laws 1-7 against S:
//!   1  S regular iff B(S) regular
//!   2  B(S) band iff S regular and intra-regular
//!   3  Greens L/R on B(S) contained in L'/R' (equality reported)
//!   4  bi-ideal family = nonempty intersections R meet L   [regular only]
//!   5  B(a) = R(a) meet L(a) for every a                   [regular only]
//!   6  (RL] = R meet L for all R, L                        [regular only]
//!   7  right and left ideal families are bands under *     [regular only]
//! Laws whose hypothesis fails report not-applicable.
LawReport verify_instance(const OrderedSemigroup& s, const std::string& name,
                          uint64_t budget = kDefaultDownSetBudget);

//! Laws 1-7 on (Tn, <=) plus the transformation-specific laws:
//!   T1 ordered = plain Greens L/R = image/kernel equality
//!   T2 f L g iff B(f) and B(g) are L'-related
//!   T3 L' and R' equal Greens L/R on B(Tn)
//!   T4 B(Tn) is a regular semigroup
//!   T5 egg-box shapes of (Tn,<=) and B(Tn) match the expected grids
//! Supported for n in {1, 2, 3}.
LawReport verify_transformation(uint32_t n,
                                uint64_t budget = kDefaultDownSetBudget);

}  // namespace osg

#endif  // OSG_LAWS_HPP_
