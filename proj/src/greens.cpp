#include "osg/greens.hpp"

#include <algorithm>
#include <map>

#include "osg/ideals.hpp"

namespace osg {

EquivalencePartition partition_by_key(const std::vector<uint64_t>& keys) {
  uint32_t n = static_cast<uint32_t>(keys.size());
  std::map<uint64_t, std::vector<uint32_t>> groups;
  for (uint32_t i = 0; i < n; ++i) groups[keys[i]].push_back(i);
  std::vector<std::vector<uint32_t>> classes;
  classes.reserve(groups.size());
  for (auto& [k, v] : groups) classes.push_back(std::move(v));
  return partition_from_classes(n, std::move(classes));
}

EquivalencePartition partition_from_classes(
    uint32_t n, std::vector<std::vector<uint32_t>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  EquivalencePartition p;
  p.n = n;
  p.class_id.assign(n, 0);
  p.classes = std::move(classes);
  for (uint32_t c = 0; c < p.classes.size(); ++c) {
    for (uint32_t x : p.classes[c]) p.class_id[x] = c;
  }
  return p;
}

EquivalencePartition partition_meet(const EquivalencePartition& p,
                                    const EquivalencePartition& q) {
  if (p.n != q.n) throw CarrierMismatch();
  std::vector<uint64_t> keys(p.n);
  for (uint32_t i = 0; i < p.n; ++i) {
    keys[i] = (uint64_t(p.class_id[i]) << 32) | q.class_id[i];
  }
  return partition_by_key(keys);
}

EquivalencePartition partition_join(const EquivalencePartition& p,
                                    const EquivalencePartition& q) {
  if (p.n != q.n) throw CarrierMismatch();
  uint32_t n = p.n;
  // transitive closure of the union relation, explored class by class
  std::vector<bool> seen(n, false);
  std::vector<std::vector<uint32_t>> classes;
  for (uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<uint32_t> comp, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      uint32_t x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (const auto* part : {&p, &q}) {
        for (uint32_t y : part->classes[part->class_id[x]]) {
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
    classes.push_back(std::move(comp));
  }
  return partition_from_classes(n, std::move(classes));
}

bool partition_refines(const EquivalencePartition& p,
                       const EquivalencePartition& q) {
  if (p.n != q.n) throw CarrierMismatch();
  for (const auto& c : p.classes) {
    for (uint32_t x : c) {
      if (q.class_id[x] != q.class_id[c.front()]) return false;
    }
  }
  return true;
}

namespace {

EquivalencePartition group_by_set(const std::vector<ElementSet>& ideals) {
  std::map<ElementSet, std::vector<uint32_t>,
           bool (*)(const ElementSet&, const ElementSet&)>
      groups(&canonical_less);
  for (uint32_t i = 0; i < ideals.size(); ++i) groups[ideals[i]].push_back(i);
  std::vector<std::vector<uint32_t>> classes;
  classes.reserve(groups.size());
  for (auto& [k, v] : groups) classes.push_back(std::move(v));
  return partition_from_classes(static_cast<uint32_t>(ideals.size()),
                                std::move(classes));
}

}  // namespace

GreensPartitions greens_partitions(const PlainSemigroup& s, const PartialOrder* ord,
                                   GreensMode mode) {
  if (mode == GreensMode::ordered && ord == nullptr) throw MissingOrder();
  uint32_t n = s.size();
  std::vector<ElementSet> row(n, ElementSet(n)), col(n, ElementSet(n));
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t x = 0; x < n; ++x) {
      row[a].insert(s.product(a, x));
      col[a].insert(s.product(x, a));
    }
  }
  auto close = [&](ElementSet e) {
    if (mode == GreensMode::plain) return e;
    ElementSet out(n);
    e.for_each([&](uint32_t i) { out |= ord->down(i); });
    return out;
  };
  std::vector<ElementSet> ls, rs, js;
  ls.reserve(n);
  rs.reserve(n);
  js.reserve(n);
  for (uint32_t a = 0; a < n; ++a) {
    ElementSet l = col[a], r = row[a], j = col[a] | row[a];
    l.insert(a);
    r.insert(a);
    j.insert(a);
    col[a].for_each([&](uint32_t t) { j |= row[t]; });
    ls.push_back(close(l));
    rs.push_back(close(r));
    js.push_back(close(j));
  }
  GreensPartitions g;
  g.l = group_by_set(ls);
  g.r = group_by_set(rs);
  g.j = group_by_set(js);
  g.h = partition_meet(g.l, g.r);
  g.d = partition_join(g.l, g.r);
  return g;
}

GreensPartitions greens_partitions(const OrderedSemigroup& s, GreensMode mode) {
  return greens_partitions(s.sgp(), &s.ord(), mode);
}

namespace {

std::optional<std::pair<uint32_t, uint32_t>> witness_search(
    const OrderedSemigroup& s, uint32_t a, uint32_t b, bool left_sided) {
  if (!regularity(s).regular) throw NotRegular();
  uint32_t n = s.size();
  auto find = [&](uint32_t tgt, uint32_t src) -> std::optional<uint32_t> {
    for (uint32_t x = 0; x < n; ++x) {
      uint32_t prod = left_sided ? s.sgp().product(x, src) : s.sgp().product(src, x);
      if (s.ord().le(tgt, prod)) return x;
    }
    return std::nullopt;
  };
  auto x = find(a, b);
  if (!x) return std::nullopt;
  auto y = find(b, a);
  if (!y) return std::nullopt;
  return std::make_pair(*x, *y);
}

}  // namespace

std::optional<std::pair<uint32_t, uint32_t>> l_witness_regular(
    const OrderedSemigroup& s, uint32_t a, uint32_t b) {
  return witness_search(s, a, b, true);
}

std::optional<std::pair<uint32_t, uint32_t>> r_witness_regular(
    const OrderedSemigroup& s, uint32_t a, uint32_t b) {
  return witness_search(s, a, b, false);
}

EggBox egg_box(const GreensPartitions& parts) {
  EggBox box;
  for (const auto& dmembers : parts.d.classes) {
    EggBox::DClass dc;
    dc.members = dmembers;
    std::vector<uint32_t> rows, cols;
    for (uint32_t x : dmembers) {
      uint32_t rc = parts.r.class_id[x], lc = parts.l.class_id[x];
      if (std::find(rows.begin(), rows.end(), rc) == rows.end()) rows.push_back(rc);
      if (std::find(cols.begin(), cols.end(), lc) == cols.end()) cols.push_back(lc);
    }
    auto by_least = [&](const EquivalencePartition& part) {
      return [&part](uint32_t c1, uint32_t c2) {
        return part.classes[c1].front() < part.classes[c2].front();
      };
    };
    std::sort(rows.begin(), rows.end(), by_least(parts.r));
    std::sort(cols.begin(), cols.end(), by_least(parts.l));
    dc.cells.assign(rows.size(), std::vector<std::vector<uint32_t>>(cols.size()));
    for (uint32_t x : dmembers) {
      size_t ri = std::find(rows.begin(), rows.end(), parts.r.class_id[x])
                  - rows.begin();
      size_t ci = std::find(cols.begin(), cols.end(), parts.l.class_id[x])
                  - cols.begin();
      dc.cells[ri][ci].push_back(x);
    }
    for (auto& r : dc.cells) {
      for (auto& cell : r) std::sort(cell.begin(), cell.end());
    }
    box.dclasses.push_back(std::move(dc));
  }
  std::sort(box.dclasses.begin(), box.dclasses.end(),
            [](const EggBox::DClass& a, const EggBox::DClass& b) {
              if (a.members.size() != b.members.size()) {
                return a.members.size() < b.members.size();
              }
              return a.members.front() < b.members.front();
            });
  return box;
}

}  // namespace osg
