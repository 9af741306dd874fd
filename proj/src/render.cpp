#include "osg/render.hpp"

#include <algorithm>

namespace osg {

namespace {

std::string join_names(const std::vector<uint32_t>& xs,
                       const std::vector<std::string>& names) {
  std::string out;
  for (size_t k = 0; k < xs.size(); ++k) {
    if (k) out += " ";
    out += names[xs[k]];
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string ascii_grid(const EggBox::DClass& d,
                       const std::vector<std::string>& names) {
  size_t rows = d.rows(), cols = d.cols();
  std::vector<std::vector<std::string>> text(rows, std::vector<std::string>(cols));
  std::vector<size_t> width(cols, 1);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      text[r][c] = join_names(d.cells[r][c], names);
      width[c] = std::max(width[c], text[r][c].size());
    }
  }
  std::string border = "+";
  for (size_t c = 0; c < cols; ++c) border += std::string(width[c] + 2, '-') + "+";
  border += "\n";
  std::string out = border;
  for (size_t r = 0; r < rows; ++r) {
    out += "|";
    for (size_t c = 0; c < cols; ++c) {
      out += " " + text[r][c] + std::string(width[c] - text[r][c].size(), ' ') + " |";
    }
    out += "\n" + border;
  }
  return out;
}

}  // namespace

std::string render_eggbox(const EggBox& box, const std::vector<std::string>& names,
                          RenderFormat format) {
  std::string out;
  if (format == RenderFormat::ascii) {
    for (size_t k = 0; k < box.dclasses.size(); ++k) {
      out += "D" + std::to_string(k + 1) + "\n";
      out += ascii_grid(box.dclasses[k], names);
    }
    return out;
  }
  out = "graph eggbox {\n  node [shape=box];\n";
  for (size_t k = 0; k < box.dclasses.size(); ++k) {
    const auto& d = box.dclasses[k];
    out += "  subgraph cluster_d" + std::to_string(k + 1) + " {\n";
    out += "    label=\"D" + std::to_string(k + 1) + "\";\n";
    for (size_t r = 0; r < d.rows(); ++r) {
      for (size_t c = 0; c < d.cols(); ++c) {
        if (d.cells[r][c].empty()) continue;
        out += "    d" + std::to_string(k + 1) + "_r" + std::to_string(r + 1)
               + "_c" + std::to_string(c + 1) + " [label=\""
               + dot_escape(join_names(d.cells[r][c], names)) + "\"];\n";
      }
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

std::string render_cayley(const PlainSemigroup& s, const std::string& op) {
  uint32_t n = s.size();
  size_t w = op.size();
  for (uint32_t i = 0; i < n; ++i) w = std::max(w, s.name(i).size());
  auto pad = [&](const std::string& t) {
    return t + std::string(w - t.size(), ' ');
  };
  std::string out = pad(op) + " |";
  for (uint32_t j = 0; j < n; ++j) out += " " + pad(s.name(j));
  out += "\n" + std::string(w, '-') + "-+" + std::string(n * (w + 1), '-') + "\n";
  for (uint32_t i = 0; i < n; ++i) {
    out += pad(s.name(i)) + " |";
    for (uint32_t j = 0; j < n; ++j) out += " " + pad(s.name(s.product(i, j)));
    out += "\n";
  }
  return out;
}

std::string render_partition(const std::string& label,
                             const EquivalencePartition& p,
                             const std::vector<std::string>& names) {
  std::string out = label + ":";
  for (const auto& cls : p.classes) {
    out += " {";
    for (size_t k = 0; k < cls.size(); ++k) {
      if (k) out += ", ";
      out += names[cls[k]];
    }
    out += "}";
  }
  return out;
}

}  // namespace osg
