#include "osg/osgfile.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace osg {

namespace {

std::string trim(std::string_view sv) {
  size_t b = sv.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = sv.find_last_not_of(" \t\r");
  return std::string(sv.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

OsgDocument parse_osg(std::string_view text) {
  OsgDocument doc;
  std::unordered_map<std::string, uint32_t> index;
  enum class Section { none, table, order } section = Section::none;
  size_t rows_seen = 0;
  int lineno = 0;
  size_t pos = 0;
  auto resolve = [&](const std::string& tok) -> uint32_t {
    auto it = index.find(tok);
    if (it == index.end()) throw ParseError(lineno, "unknown element '" + tok + "'");
    return it->second;
  };
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("name:", 0) == 0) {
      doc.name = trim(line.substr(5));
      continue;
    }
    if (line.rfind("source:", 0) == 0) {
      doc.source = trim(line.substr(7));
      continue;
    }
    if (line.rfind("elements:", 0) == 0) {
      if (!doc.elements.empty()) throw ParseError(lineno, "duplicate elements line");
      doc.elements = split_ws(line.substr(9));
      if (doc.elements.empty()) throw ParseError(lineno, "no elements listed");
      for (uint32_t i = 0; i < doc.elements.size(); ++i) {
        if (!index.emplace(doc.elements[i], i).second) {
          throw ParseError(lineno, "duplicate element '" + doc.elements[i] + "'");
        }
      }
      continue;
    }
    if (line == "table:") {
      if (doc.elements.empty()) throw ParseError(lineno, "table before elements");
      section = Section::table;
      continue;
    }
    if (line == "order:") {
      if (doc.elements.empty()) throw ParseError(lineno, "order before elements");
      section = Section::order;
      continue;
    }
    switch (section) {
      case Section::none:
        throw ParseError(lineno, "unexpected line '" + line + "'");
      case Section::table: {
        size_t n = doc.elements.size();
        if (rows_seen == n) throw ParseError(lineno, "too many table rows");
        std::vector<std::string> toks = split_ws(line);
        if (toks.size() != n) {
          throw ParseError(lineno, "expected " + std::to_string(n)
                                       + " entries, got "
                                       + std::to_string(toks.size()));
        }
        for (const std::string& tok : toks) doc.table.push_back(resolve(tok));
        ++rows_seen;
        break;
      }
      case Section::order: {
        size_t sep = line.find("<=");
        if (sep == std::string::npos) {
          throw ParseError(lineno, "order line must be of the form x<=y");
        }
        std::string lhs = trim(line.substr(0, sep));
        std::string rhs = trim(line.substr(sep + 2));
        if (lhs.empty() || rhs.empty()) {
          throw ParseError(lineno, "order line must name two elements");
        }
        doc.order_pairs.emplace_back(resolve(lhs), resolve(rhs));
        break;
      }
    }
  }
  if (doc.elements.empty()) throw ParseError(lineno, "missing elements line");
  if (rows_seen != doc.elements.size()) {
    throw ParseError(lineno, "expected " + std::to_string(doc.elements.size())
                                 + " table rows, got " + std::to_string(rows_seen));
  }
  return doc;
}

std::string emit_osg(const OsgDocument& doc) {
  std::string out;
  if (!doc.name.empty()) out += "name: " + doc.name + "\n";
  if (!doc.source.empty()) out += "source: " + doc.source + "\n";
  out += "elements:";
  for (const std::string& e : doc.elements) out += " " + e;
  out += "\ntable:\n";
  size_t n = doc.elements.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (j) out += " ";
      out += doc.elements[doc.table[i * n + j]];
    }
    out += "\n";
  }
  out += "order:\n";
  for (auto [i, j] : doc.order_pairs) {
    out += doc.elements[i] + "<=" + doc.elements[j] + "\n";
  }
  return out;
}

OrderedSemigroup load(const OsgDocument& doc, Compat require) {
  return validate_ordered_semigroup(doc.elements, doc.table, doc.order_pairs,
                                    require);
}

OsgDocument make_document(const OrderedSemigroup& s, std::string name,
                          std::string source) {
  OsgDocument doc;
  doc.name = std::move(name);
  doc.source = std::move(source);
  doc.elements = s.sgp().names();
  doc.table = s.sgp().table();
  doc.order_pairs = s.ord().pairs();
  std::sort(doc.order_pairs.begin(), doc.order_pairs.end());
  return doc;
}

}  // namespace osg
