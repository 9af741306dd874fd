#include "osg/transform.hpp"

#include <algorithm>

namespace osg {

std::string Transformation::name() const {
  std::string out = "(";
  for (uint32_t k = 0; k < degree; ++k) {
    if (k) out += ",";
    out += std::to_string(images[k] + 1);
  }
  return out + ")";
}

TnSemigroup build_full_transformation(uint32_t n) {
  if (n < 1 || n > 4) {
    throw TooLarge("full transformation semigroup supported for 1 <= n <= 4");
  }
  uint32_t count = 1;
  for (uint32_t k = 0; k < n; ++k) count *= n;
  std::vector<Transformation> elems;
  elems.reserve(count);
  for (uint32_t code = 0; code < count; ++code) {
    Transformation f{n, std::vector<uint8_t>(n)};
    uint32_t c = code;
    for (uint32_t k = n; k-- > 0;) {
      f.images[k] = static_cast<uint8_t>(c % n);
      c /= n;
    }
    elems.push_back(std::move(f));
  }
  auto index_of = [&](const std::vector<uint8_t>& im) {
    uint32_t code = 0;
    for (uint32_t k = 0; k < n; ++k) code = code * n + im[k];
    return code;
  };
  std::vector<uint32_t> table(size_t(count) * count);
  std::vector<std::string> names;
  names.reserve(count);
  std::vector<uint8_t> comp(n);
  for (uint32_t f = 0; f < count; ++f) {
    names.push_back(elems[f].name());
    for (uint32_t g = 0; g < count; ++g) {
      for (uint32_t x = 0; x < n; ++x) {
        comp[x] = elems[g].images[elems[f].images[x]];
      }
      table[size_t(f) * count + g] = index_of(comp);
    }
  }
  PlainSemigroup sgp(std::move(names), std::move(table));
  return TnSemigroup{n, std::move(elems), std::move(sgp)};
}

PartialOrder natural_partial_order(const TnSemigroup& t) {
  uint32_t m = t.sgp.size();
  std::vector<ElementSet> right(m, ElementSet(m));
  for (uint32_t f = 0; f < m; ++f) {
    right[f].insert(f);
    for (uint32_t h = 0; h < m; ++h) right[f].insert(t.sgp.product(f, h));
  }
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t f = 0; f < m; ++f) {
    for (uint32_t g = 0; g < m; ++g) {
      if (!right[f].subset_of(right[g])) continue;
      for (uint32_t a = 0; a < m; ++a) {
        if (t.sgp.product(a, f) == f && t.sgp.product(a, g) == f) {
          pairs.emplace_back(f, g);
          break;
        }
      }
    }
  }
  return PartialOrder(m, pairs);
}

OrderedSemigroup ordered_semigroup(const TnSemigroup& t) {
  return OrderedSemigroup(t.sgp, natural_partial_order(t), Compat::none);
}

std::vector<uint32_t> image_of(const Transformation& f) {
  std::vector<uint32_t> out;
  for (uint32_t x = 0; x < f.degree; ++x) out.push_back(f.images[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EquivalencePartition kernel_of(const Transformation& f) {
  std::vector<uint64_t> keys(f.degree);
  for (uint32_t x = 0; x < f.degree; ++x) keys[x] = f.images[x];
  return partition_by_key(keys);
}

}  // namespace osg
