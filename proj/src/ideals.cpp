#include "osg/ideals.hpp"

#include <algorithm>
#include <numeric>

namespace osg {

std::string kind_prefix(IdealKind kind) {
  switch (kind) {
    case IdealKind::left: return "L";
    case IdealKind::right: return "R";
    case IdealKind::two_sided: return "I";
    case IdealKind::bi: return "B";
    case IdealKind::subidempotent_bi: return "SB";
  }
  return "?";
}

int IdealFamily::index_of(const ElementSet& s) const {
  auto it = std::lower_bound(members.begin(), members.end(), s,
                             [](const ElementSet& a, const ElementSet& b) {
                               return canonical_less(a, b);
                             });
  if (it != members.end() && *it == s) {
    return static_cast<int>(it - members.begin());
  }
  return -1;
}

std::string IdealFamily::member_name(uint32_t i) const {
  return kind_prefix(kind) + std::to_string(i + 1);
}

ElementSet principal_ideal(const OrderedSemigroup& s, uint32_t a, IdealKind kind) {
  uint32_t n = s.size();
  if (a >= n) throw Error("element index out of range");
  ElementSet seed = ElementSet::single(n, a);
  switch (kind) {
    case IdealKind::left:
      seed |= s.col_product(a);
      break;
    case IdealKind::right:
      seed |= s.row_product(a);
      break;
    case IdealKind::two_sided: {
      seed |= s.col_product(a);
      seed |= s.row_product(a);
      s.col_product(a).for_each([&](uint32_t t) { seed |= s.row_product(t); });
      break;
    }
    case IdealKind::bi: {
      for (uint32_t x = 0; x < n; ++x) {
        seed.insert(s.sgp().product(s.sgp().product(a, x), a));
      }
      break;
    }
    case IdealKind::subidempotent_bi:
      throw BadKind("subidempotent bi-ideals have no principal form");
  }
  return s.close(seed);
}

namespace {

bool is_down_closed(const OrderedSemigroup& s, const ElementSet& a) {
  return s.close(a) == a;
}

bool mult_left(const OrderedSemigroup& s, const ElementSet& a) {
  ElementSet req(s.size());
  a.for_each([&](uint32_t x) { req |= s.col_product(x); });
  return req.subset_of(a);
}

bool mult_right(const OrderedSemigroup& s, const ElementSet& a) {
  ElementSet req(s.size());
  a.for_each([&](uint32_t x) { req |= s.row_product(x); });
  return req.subset_of(a);
}

bool mult_bi(const OrderedSemigroup& s, const ElementSet& a) {
  uint32_t n = s.size();
  bool ok = true;
  a.for_each([&](uint32_t x) {
    if (!ok) return;
    ElementSet xs(n);
    for (uint32_t t = 0; t < n; ++t) xs.insert(s.sgp().product(x, t));
    a.for_each([&](uint32_t y) {
      if (!ok) return;
      ElementSet xsy(n);
      xs.for_each([&](uint32_t t) { xsy.insert(s.sgp().product(t, y)); });
      if (!xsy.subset_of(a)) ok = false;
    });
  });
  return ok;
}

bool square_inside(const OrderedSemigroup& s, const ElementSet& a) {
  bool ok = true;
  a.for_each([&](uint32_t x) {
    a.for_each([&](uint32_t y) {
      if (!a.contains(s.sgp().product(x, y))) ok = false;
    });
  });
  return ok;
}

//! Walks every down-set of (S, <=) in a fixed linear extension, maintaining
//! the monotone requirement set for left/right kinds and filtering bi kinds
//! on completed down-sets.
class DownSetWalk {
 public:
  DownSetWalk(const OrderedSemigroup& s, IdealKind kind, uint64_t budget)
      : s_(s), kind_(kind), budget_(budget), n_(s.size()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0u);
    std::sort(order_.begin(), order_.end(), [&](uint32_t i, uint32_t j) {
      uint32_t di = s.ord().down(i).size(), dj = s.ord().down(j).size();
      return di != dj ? di < dj : i < j;
    });
    track_left_ = kind == IdealKind::left || kind == IdealKind::two_sided;
    track_right_ = kind == IdealKind::right || kind == IdealKind::two_sided;
    if (kind == IdealKind::bi || kind == IdealKind::subidempotent_bi) {
      sandwich_.resize(size_t(n_) * n_, ElementSet(n_));
      for (uint32_t a = 0; a < n_; ++a) {
        for (uint32_t t = 0; t < n_; ++t) {
          uint32_t at = s.sgp().product(a, t);
          for (uint32_t b = 0; b < n_; ++b) {
            sandwich_[size_t(a) * n_ + b].insert(s.sgp().product(at, b));
          }
        }
      }
    }
  }

  std::vector<ElementSet> run() {
    rec(0, ElementSet(n_), ElementSet(n_));
    return std::move(found_);
  }

 private:
  void rec(uint32_t k, ElementSet cur, ElementSet req) {
    if (k == n_) {
      if (++visited_ > budget_) throw BudgetExceeded(visited_);
      if (!cur.empty() && accept(cur, req)) found_.push_back(cur);
      return;
    }
    uint32_t e = order_[k];
    ElementSet with = cur;
    with.insert(e);
    bool can_add = s_.ord().down(e).subset_of(with);
    if (req.contains(e)) {
      if (can_add) rec(k + 1, with, grow(req, e));
      return;  // a required element cannot be excluded
    }
    rec(k + 1, cur, req);
    if (can_add) rec(k + 1, with, grow(req, e));
  }

  ElementSet grow(ElementSet req, uint32_t e) const {
    if (track_left_) req |= s_.col_product(e);
    if (track_right_) req |= s_.row_product(e);
    return req;
  }

  bool accept(const ElementSet& a, const ElementSet& req) const {
    if ((track_left_ || track_right_) && !req.subset_of(a)) return false;
    switch (kind_) {
      case IdealKind::left:
      case IdealKind::right:
      case IdealKind::two_sided:
        return true;
      case IdealKind::bi:
        return sandwich_inside(a);
      case IdealKind::subidempotent_bi:
        return sandwich_inside(a) && square_inside(s_, a);
    }
    return false;
  }

  bool sandwich_inside(const ElementSet& a) const {
    bool ok = true;
    a.for_each([&](uint32_t x) {
      if (!ok) return;
      a.for_each([&](uint32_t y) {
        if (ok && !sandwich_[size_t(x) * n_ + y].subset_of(a)) ok = false;
      });
    });
    return ok;
  }

  const OrderedSemigroup& s_;
  IdealKind kind_;
  uint64_t budget_, visited_ = 0;
  uint32_t n_;
  bool track_left_ = false, track_right_ = false;
  std::vector<uint32_t> order_;
  std::vector<ElementSet> sandwich_;
  std::vector<ElementSet> found_;
};

}  // namespace

SubsetFlags classify_subset(const OrderedSemigroup& s, const ElementSet& a) {
  if (a.empty()) throw EmptyInput("classify_subset");
  SubsetFlags f{};
  bool closed = is_down_closed(s, a);
  f.left = closed && mult_left(s, a);
  f.right = closed && mult_right(s, a);
  f.two_sided = f.left && f.right;
  f.bi = closed && mult_bi(s, a);
  f.subidempotent_bi = f.bi && square_inside(s, a);
  return f;
}

IdealFamily enumerate_family(const OrderedSemigroup& s, IdealKind kind,
                             uint64_t budget) {
  DownSetWalk walk(s, kind, budget);
  IdealFamily fam{kind, walk.run()};
  std::sort(fam.members.begin(), fam.members.end(),
            [](const ElementSet& a, const ElementSet& b) {
              return canonical_less(a, b);
            });
  return fam;
}

Regularity regularity(const OrderedSemigroup& s) {
  uint32_t n = s.size();
  Regularity r{true, true};
  for (uint32_t a = 0; a < n && (r.regular || r.intra_regular); ++a) {
    ElementSet asa(n);
    for (uint32_t x = 0; x < n; ++x) {
      asa.insert(s.sgp().product(s.sgp().product(a, x), a));
    }
    if (!s.close(asa).contains(a)) r.regular = false;
    uint32_t a2 = s.sgp().product(a, a);
    ElementSet saas(n);
    s.col_product(a2).for_each([&](uint32_t t) { saas |= s.row_product(t); });
    if (!s.close(saas).contains(a)) r.intra_regular = false;
  }
  return r;
}

}  // namespace osg
