#ifndef OSG_OSGFILE_HPP_
#define OSG_OSGFILE_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osg/core.hpp"

namespace osg {

//! In-memory form of an OSG v1 file.
//!
//! The format is line oriented:
//!   # comment
//!   name: optional instance name
//!   source: optional provenance note
//!   elements: a b c d e
//!   table:
//!   <n rows of n element names, entry = row.column>
//!   order:
//!   <lines "x<=y">
//! Blank lines are ignored; reflexive order pairs may be omitted.  The
//! loader completes the listed pairs to their reflexive-transitive closure.
struct OsgDocument {
  std::string name, source;
  std::vector<std::string> elements;
  std::vector<uint32_t> table;  // n*n entries, row major
  std::vector<std::pair<uint32_t, uint32_t>> order_pairs;  // as listed

  bool operator==(const OsgDocument&) const = default;
};

OsgDocument parse_osg(std::string_view text);

std::string emit_osg(const OsgDocument& doc);

//! Validates the document.  Compatibility of the order with multiplication
//! is computed and recorded on the result; `require` decides which sides
//! are enforced (files produced from transformation semigroups satisfy
//! neither side once the degree reaches 3).
OrderedSemigroup load(const OsgDocument& doc, Compat require = Compat::none);

//! Canonical document for a validated instance: order pairs are the full
//! non-reflexive closure, sorted.  parse(emit(.)) is the identity on
//! canonical documents.
OsgDocument make_document(const OrderedSemigroup& s, std::string name,
                          std::string source = "");

}  // namespace osg

#endif  // OSG_OSGFILE_HPP_
