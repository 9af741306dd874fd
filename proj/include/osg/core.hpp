#ifndef OSG_CORE_HPP_
#define OSG_CORE_HPP_

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "osg/errors.hpp"

namespace osg {

//! A subset of the elements of a fixed finite carrier, stored as a
//! fixed-capacity bit vector.  Carriers are capped at 256 elements, which
//! covers every structure this library enumerates on.
class ElementSet {
 public:
  static constexpr uint32_t max_capacity = 256;

  ElementSet() = default;
  explicit ElementSet(uint32_t n) : n_(n) {
    if (n > max_capacity) {
      throw TooLarge("carrier size " + std::to_string(n) + " exceeds "
                     + std::to_string(max_capacity));
    }
  }

  static ElementSet full(uint32_t n) {
    ElementSet s(n);
    for (uint32_t w = 0; w * 64 < n; ++w) {
      uint32_t bits = std::min<uint32_t>(64, n - w * 64);
      s.w_[w] = bits == 64 ? ~uint64_t(0) : (uint64_t(1) << bits) - 1;
    }
    return s;
  }

  static ElementSet single(uint32_t n, uint32_t i) {
    ElementSet s(n);
    s.insert(i);
    return s;
  }

  uint32_t carrier() const { return n_; }

  bool contains(uint32_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  void insert(uint32_t i) {
    assert(i < n_);
    w_[i >> 6] |= uint64_t(1) << (i & 63);
  }

  void erase(uint32_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
  }

  uint32_t size() const {
    uint32_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : w_) {
      if (w) return false;
    }
    return true;
  }

  bool subset_of(const ElementSet& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) {
      if (w_[k] & ~o.w_[k]) return false;
    }
    return true;
  }

  bool intersects(const ElementSet& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) {
      if (w_[k] & o.w_[k]) return true;
    }
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  //! Visits members in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w) {
        f(static_cast<uint32_t>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<uint32_t> members() const {
    std::vector<uint32_t> out;
    out.reserve(size());
    for_each([&](uint32_t i) { out.push_back(i); });
    return out;
  }

  uint64_t hash() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  //! Orders by (cardinality, lexicographic ascending member list): with equal
  //! cardinality the set containing the smallest element of the symmetric
  //! difference comes first.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    uint32_t ca = a.size(), cb = b.size();
    if (ca != cb) return ca < cb;
    for (size_t k = 0; k < a.w_.size(); ++k) {
      uint64_t diff = a.w_[k] ^ b.w_[k];
      if (diff) return (a.w_[k] >> std::countr_zero(diff)) & 1;
    }
    return false;
  }

 private:
  uint32_t n_ = 0;
  std::array<uint64_t, max_capacity / 64> w_{};
};

bool canonical_less(const ElementSet& a, const ElementSet& b);

//! A finite semigroup presented by its Cayley table over abstract indices.
//! Associativity is verified on construction.
class PlainSemigroup {
 public:
  PlainSemigroup(std::vector<std::string> names, std::vector<uint32_t> table);

  uint32_t size() const { return n_; }

  uint32_t product(uint32_t i, uint32_t j) const {
    assert(i < n_ && j < n_);
    return table_[size_t(i) * n_ + j];
  }

  const std::string& name(uint32_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<uint32_t>& table() const { return table_; }

 private:
  uint32_t n_;
  std::vector<std::string> names_;
  std::vector<uint32_t> table_;
};

//! A partial order on [0, n), built as the reflexive-transitive closure of
//! a list of generator pairs and checked for antisymmetry.
class PartialOrder {
 public:
  PartialOrder(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& pairs);

  uint32_t size() const { return n_; }

  bool le(uint32_t i, uint32_t j) const { return down_[j].contains(i); }

  //! All x with x <= j.
  const ElementSet& down(uint32_t j) const { return down_[j]; }
  //! All y with i <= y.
  const ElementSet& up(uint32_t i) const { return up_[i]; }

  //! Every non-reflexive related pair, sorted by (first, second).
  std::vector<std::pair<uint32_t, uint32_t>> pairs() const;

 private:
  uint32_t n_;
  std::vector<ElementSet> down_, up_;
};

//! Which sides of the compatibility law a validation call must enforce.
//! The law itself (a <= b implies xa <= xb and ax <= bx) is always computed
//! and recorded; `none` admits structures such as transformation semigroups
//! under their natural order, which fail it on one or both sides.
enum class Compat { none, left, right, two_sided };

//! A validated ordered semigroup (S, ., <=) with cached per-element
//! down-sets and one-sided products.  Immutable after construction.
class OrderedSemigroup {
 public:
  OrderedSemigroup(PlainSemigroup sgp, PartialOrder ord,
                   Compat require = Compat::two_sided);

  const PlainSemigroup& sgp() const { return sgp_; }
  const PartialOrder& ord() const { return ord_; }
  uint32_t size() const { return sgp_.size(); }

  bool left_compatible() const { return left_compatible_; }
  bool right_compatible() const { return right_compatible_; }

  //! (A] without the nonempty-input guard; used internally.
  ElementSet close(const ElementSet& a) const {
    ElementSet out(size());
    a.for_each([&](uint32_t i) { out |= ord_.down(i); });
    return out;
  }

  //! a.S
  const ElementSet& row_product(uint32_t a) const { return row_prod_[a]; }
  //! S.a
  const ElementSet& col_product(uint32_t a) const { return col_prod_[a]; }

 private:
  PlainSemigroup sgp_;
  PartialOrder ord_;
  bool left_compatible_, right_compatible_;
  std::vector<ElementSet> row_prod_, col_prod_;
};

//! Builds and validates an ordered semigroup from a raw index grid and a
//! generator list of order pairs.  The pairs are completed to their
//! reflexive-transitive closure before the antisymmetry check.
OrderedSemigroup validate_ordered_semigroup(
    std::vector<std::string> names, std::vector<uint32_t> table,
    const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
    Compat require = Compat::two_sided);

//! (A] = {x | x <= a for some a in A}.  Rejects the empty set.
ElementSet downward_closure(const OrderedSemigroup& s, const ElementSet& a);

//! AB = {a.b | a in A, b in B}.  Rejects empty inputs.
ElementSet subset_product(const OrderedSemigroup& s, const ElementSet& a,
                          const ElementSet& b);

//! "e1 e2 ..." -> {"e1", "e2", ...}; names for carriers without given ones.
std::vector<std::string> default_names(const std::string& prefix, uint32_t n);

//! "{a, c, d}" style rendering of a subset under the carrier's names.
std::string set_to_string(const ElementSet& a, const std::vector<std::string>& names);

}  // namespace osg

#endif  // OSG_CORE_HPP_
