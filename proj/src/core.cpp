#include "osg/core.hpp"

namespace osg {

PlainSemigroup::PlainSemigroup(std::vector<std::string> names,
                               std::vector<uint32_t> table)
    : n_(static_cast<uint32_t>(names.size())),
      names_(std::move(names)),
      table_(std::move(table)) {
  if (n_ == 0) throw Error("semigroup needs at least one element");
  if (n_ > ElementSet::max_capacity) {
    throw TooLarge("carrier size " + std::to_string(n_) + " exceeds "
                   + std::to_string(ElementSet::max_capacity));
  }
  if (table_.size() != size_t(n_) * n_) {
    throw Error("table must have n*n entries");
  }
  for (uint32_t v : table_) {
    if (v >= n_) throw Error("table entry " + std::to_string(v) + " out of range");
  }
  for (uint32_t i = 0; i < n_; ++i) {
    for (uint32_t j = 0; j < n_; ++j) {
      uint32_t ij = product(i, j);
      for (uint32_t k = 0; k < n_; ++k) {
        if (product(ij, k) != product(i, product(j, k))) {
          throw NotAssociative(i, j, k);
        }
      }
    }
  }
}

PartialOrder::PartialOrder(uint32_t n,
                           const std::vector<std::pair<uint32_t, uint32_t>>& pairs)
    : n_(n) {
  if (n == 0) throw Error("order needs a nonempty carrier");
  down_.assign(n, ElementSet(n));
  for (uint32_t i = 0; i < n; ++i) down_[i].insert(i);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) throw Error("order pair index out of range");
    down_[j].insert(i);
  }
  // transitive closure: down(j) absorbs down(i) for every i <= j
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint32_t j = 0; j < n; ++j) {
      ElementSet acc = down_[j];
      down_[j].for_each([&](uint32_t i) { acc |= down_[i]; });
      if (!(acc == down_[j])) {
        down_[j] = acc;
        changed = true;
      }
    }
  }
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = i + 1; j < n; ++j) {
      if (le(i, j) && le(j, i)) throw NotAntisymmetric(i, j);
    }
  }
  up_.assign(n, ElementSet(n));
  for (uint32_t j = 0; j < n; ++j) {
    down_[j].for_each([&](uint32_t i) { up_[i].insert(j); });
  }
}

std::vector<std::pair<uint32_t, uint32_t>> PartialOrder::pairs() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t i = 0; i < n_; ++i) {
    up_[i].for_each([&](uint32_t j) {
      if (i != j) out.emplace_back(i, j);
    });
  }
  return out;
}

OrderedSemigroup::OrderedSemigroup(PlainSemigroup sgp, PartialOrder ord,
                                   Compat require)
    : sgp_(std::move(sgp)), ord_(std::move(ord)) {
  uint32_t n = sgp_.size();
  if (ord_.size() != n) throw CarrierMismatch();
  left_compatible_ = right_compatible_ = true;
  bool need_left = require == Compat::left || require == Compat::two_sided;
  bool need_right = require == Compat::right || require == Compat::two_sided;
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b : ord_.up(a).members()) {
      for (uint32_t x = 0; x < n; ++x) {
        if (!ord_.le(sgp_.product(x, a), sgp_.product(x, b))) {
          if (need_left) throw NotCompatible(a, b, x, Side::left);
          left_compatible_ = false;
        }
        if (!ord_.le(sgp_.product(a, x), sgp_.product(b, x))) {
          if (need_right) throw NotCompatible(a, b, x, Side::right);
          right_compatible_ = false;
        }
      }
    }
  }
  row_prod_.reserve(n);
  col_prod_.reserve(n);
  for (uint32_t a = 0; a < n; ++a) {
    ElementSet row(n), col(n);
    for (uint32_t s = 0; s < n; ++s) {
      row.insert(sgp_.product(a, s));
      col.insert(sgp_.product(s, a));
    }
    row_prod_.push_back(row);
    col_prod_.push_back(col);
  }
}

OrderedSemigroup validate_ordered_semigroup(
    std::vector<std::string> names, std::vector<uint32_t> table,
    const std::vector<std::pair<uint32_t, uint32_t>>& pairs, Compat require) {
  uint32_t n = static_cast<uint32_t>(names.size());
  PlainSemigroup sgp(std::move(names), std::move(table));
  PartialOrder ord(n, pairs);
  return OrderedSemigroup(std::move(sgp), std::move(ord), require);
}

ElementSet downward_closure(const OrderedSemigroup& s, const ElementSet& a) {
  if (a.empty()) throw EmptyInput("downward_closure");
  return s.close(a);
}

ElementSet subset_product(const OrderedSemigroup& s, const ElementSet& a,
                          const ElementSet& b) {
  if (a.empty() || b.empty()) throw EmptyInput("subset_product");
  ElementSet out(s.size());
  a.for_each([&](uint32_t x) {
    b.for_each([&](uint32_t y) { out.insert(s.sgp().product(x, y)); });
  });
  return out;
}

std::vector<std::string> default_names(const std::string& prefix, uint32_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (uint32_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

std::string set_to_string(const ElementSet& a,
                          const std::vector<std::string>& names) {
  std::string out = "{";
  bool sep = false;
  a.for_each([&](uint32_t i) {
    if (sep) out += ", ";
    out += names[i];
    sep = true;
  });
  return out + "}";
}

}  // namespace osg
