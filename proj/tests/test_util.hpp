// Shared fixtures and independent oracles for the test suites.  The oracles
// recompute results from raw definitions (full subset scans, union-find) and
// never touch the down-set walker or partition-join code they check.
#ifndef OSG_TESTS_TEST_UTIL_HPP_
#define OSG_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "osg/core.hpp"
#include "osg/greens.hpp"
#include "osg/ideals.hpp"
#include "osg/osgfile.hpp"
#include "osg/transform.hpp"

namespace osg::test {

inline std::string data_path(const std::string& file) {
  return std::string(OSG_DATA_DIR) + "/" + file;
}

inline OsgDocument load_doc(const std::string& file) {
  std::ifstream in(data_path(file), std::ios::binary);
  if (!in) throw Error("missing data file " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_osg(ss.str());
}

inline OrderedSemigroup load_instance(const std::string& file) {
  return load(load_doc(file));
}

inline OrderedSemigroup ex26() { return load_instance("example26.osg"); }

struct NamedInstance {
  std::string name;
  OrderedSemigroup s;
};

//! The bundled corpus: every .osg file plus (T1..T3, <=).
inline std::vector<NamedInstance> corpus() {
  std::vector<NamedInstance> out;
  for (const char* f : {"example26.osg", "brandt2.osg", "leftzero3.osg",
                        "chain3.osg", "null2.osg"}) {
    OsgDocument doc = load_doc(f);
    out.push_back({doc.name, load(doc)});
  }
  for (uint32_t n = 1; n <= 3; ++n) {
    out.push_back({"T" + std::to_string(n),
                   ordered_semigroup(build_full_transformation(n))});
  }
  return out;
}

//! Deterministic splitmix-style generator for property-style tests.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  //! Uniform nonempty subset of [0, n).
  ElementSet subset(uint32_t n) {
    ElementSet s(n);
    while (s.empty()) {
      for (uint32_t i = 0; i < n; ++i) {
        if (next() & 1) s.insert(i);
      }
    }
    return s;
  }
};

//! Oracle: the complete ideal family of a kind by scanning all 2^n - 1
//! subsets and checking the definitions with raw loops.
inline std::vector<ElementSet> naive_family(const OrderedSemigroup& s,
                                            IdealKind kind) {
  uint32_t n = s.size();
  if (n > 20) throw Error("naive oracle limited to small carriers");
  const PlainSemigroup& g = s.sgp();
  const PartialOrder& ord = s.ord();
  std::vector<ElementSet> out;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    auto in = [&](uint32_t i) { return (mask >> i) & 1; };
    bool ok = true;
    // downward closed
    for (uint32_t i = 0; i < n && ok; ++i) {
      if (!in(i)) continue;
      for (uint32_t j = 0; j < n && ok; ++j) {
        if (ord.le(j, i) && !in(j)) ok = false;
      }
    }
    // multiplicative condition
    for (uint32_t a = 0; a < n && ok; ++a) {
      if (!in(a)) continue;
      for (uint32_t x = 0; x < n && ok; ++x) {
        bool left_ok = in(g.product(x, a));
        bool right_ok = in(g.product(a, x));
        switch (kind) {
          case IdealKind::left:
            ok = left_ok;
            break;
          case IdealKind::right:
            ok = right_ok;
            break;
          case IdealKind::two_sided:
            ok = left_ok && right_ok;
            break;
          case IdealKind::bi:
          case IdealKind::subidempotent_bi:
            for (uint32_t c = 0; c < n && ok; ++c) {
              if (in(c) && !in(g.product(g.product(a, x), c))) ok = false;
            }
            break;
        }
      }
      if (ok && kind == IdealKind::subidempotent_bi) {
        for (uint32_t c = 0; c < n && ok; ++c) {
          if (in(c) && !in(g.product(a, c))) ok = false;
        }
      }
    }
    if (!ok) continue;
    ElementSet set(n);
    for (uint32_t i = 0; i < n; ++i) {
      if (in(i)) set.insert(i);
    }
    out.push_back(set);
  }
  std::sort(out.begin(), out.end(),
            [](const ElementSet& a, const ElementSet& b) {
              return canonical_less(a, b);
            });
  return out;
}

//! Oracle: smallest equivalence containing two partitions, by union-find.
inline EquivalencePartition join_oracle(const EquivalencePartition& p,
                                        const EquivalencePartition& q) {
  uint32_t n = p.n;
  std::vector<uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };
  for (const auto* part : {&p, &q}) {
    for (const auto& cls : part->classes) {
      for (uint32_t x : cls) unite(cls.front(), x);
    }
  }
  std::vector<std::vector<uint32_t>> classes(n);
  for (uint32_t x = 0; x < n; ++x) classes[find(x)].push_back(x);
  std::erase_if(classes, [](const auto& c) { return c.empty(); });
  return partition_from_classes(n, std::move(classes));
}

//! Index of a named element.
inline uint32_t elem(const OrderedSemigroup& s, const std::string& name) {
  const auto& names = s.sgp().names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error("no element named " + name);
  return static_cast<uint32_t>(it - names.begin());
}

//! Set literal from element names.
inline ElementSet set_of(const OrderedSemigroup& s,
                         const std::vector<std::string>& members) {
  ElementSet out(s.size());
  for (const auto& m : members) out.insert(elem(s, m));
  return out;
}

}  // namespace osg::test

#endif  // OSG_TESTS_TEST_UTIL_HPP_
