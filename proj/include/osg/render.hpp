#ifndef OSG_RENDER_HPP_
#define OSG_RENDER_HPP_

#include <string>
#include <vector>

#include "osg/core.hpp"
#include "osg/greens.hpp"

namespace osg {

enum class RenderFormat { ascii, dot };

//! Draws one grid per D-class (labeled D1, D2, ...), rows = R-classes,
//! columns = L-classes, each cell listing its H-class members.  The dot
//! form emits one cluster per D-class and one node per nonempty H-class.
std::string render_eggbox(const EggBox& box, const std::vector<std::string>& names,
                          RenderFormat format);

//! Bordered Cayley table under the given operation symbol.
std::string render_cayley(const PlainSemigroup& s, const std::string& op);

//! "L: {a} {b} {c, d, e}" style line for one partition.
std::string render_partition(const std::string& label,
                             const EquivalencePartition& p,
                             const std::vector<std::string>& names);

}  // namespace osg

#endif  // OSG_RENDER_HPP_
