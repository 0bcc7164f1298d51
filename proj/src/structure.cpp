#include "hyperspec/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hyperspec {

namespace {

// Union-find over elements carrying a parity relative to their root.
// unite(a, b, p) records color(a) xor color(b) == p.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, bool> find(std::size_t x) {
    bool p = false;
    std::size_t root = x;
    while (parent_[root] != root) {
      p ^= parity_[root] != 0;
      root = parent_[root];
    }
    // Path compression, fixing parities along the way.
    bool acc = p;
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      const bool own = parity_[x] != 0;
      parent_[x] = root;
      parity_[x] = acc ? 1 : 0;
      acc ^= own;
      x = next;
    }
    return {root, p};
  }

  // Returns false when the constraint contradicts earlier ones.
  bool unite(std::size_t a, std::size_t b, bool differ) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == differ;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    parity_[rb] = (pa ^ pb ^ differ) ? 1 : 0;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

  // Two-coloring with the smallest element of every component colored false.
  std::vector<bool> canonical_colors() {
    const std::size_t n = parent_.size();
    std::vector<bool> color(n);
    std::vector<int> flip(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
      const auto [root, p] = find(x);
      if (flip[root] < 0) flip[root] = p ? 1 : 0;
      color[x] = p != (flip[root] == 1);
    }
    return color;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> parity_;
  std::vector<unsigned char> rank_;
};

template <class Key>
std::vector<std::vector<VertexId>> group_by(std::size_t n, Key&& key_of) {
  using K = decltype(key_of(VertexId{}));
  std::map<K, std::size_t> index;
  std::vector<std::vector<VertexId>> groups;
  for (VertexId v = 0; v < n; ++v) {
    auto [it, inserted] = index.try_emplace(key_of(v), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(v);
  }
  return groups;
}

}  // namespace

TwinClassPartition find_twin_classes(const OrientedHypergraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, Side>>> incidence(n);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& h = g.edges()[k];
    for (VertexId v : h.inputs()) incidence[v].emplace_back(k, Side::input);
    for (VertexId v : h.outputs()) incidence[v].emplace_back(k, Side::output);
  }
  TwinClassPartition p;
  p.classes = group_by(n, [&](VertexId v) { return incidence[v]; });
  p.class_of.resize(n);
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    for (VertexId v : p.classes[c]) p.class_of[v] = c;
  }
  return p;
}

std::vector<std::pair<VertexId, VertexId>> find_duplicate_pairs(const OrientedHypergraph& g) {
  const auto a = adjacency_matrix(g);
  const auto groups = group_by(g.vertex_count(), [&](VertexId v) {
    const auto col = a.col(v);
    return std::vector<Count>(col.begin(), col.end());
  });
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& grp : groups) {
    for (std::size_t x = 0; x < grp.size(); ++x) {
      for (std::size_t y = x + 1; y < grp.size(); ++y) pairs.emplace_back(grp[x], grp[y]);
    }
  }
  std::ranges::sort(pairs);
  return pairs;
}

std::vector<DuplicateTwinFamily> find_duplicate_twin_families(const OrientedHypergraph& g) {
  const auto a = adjacency_matrix(g);
  const auto twins = find_twin_classes(g);

  // Two classes X, Y of equal size belong to one family iff the adjacency row
  // of a representative of X with X masked out equals that of Y with Y masked
  // out. The masked entries force A(X,Y) = 0, the rest forces agreement on
  // every outside vertex, and the relation is transitive.
  std::map<std::pair<std::size_t, std::vector<Count>>, std::vector<std::size_t>> buckets;
  for (std::size_t c = 0; c < twins.classes.size(); ++c) {
    const auto& cls = twins.classes[c];
    const auto col = a.col(cls.front());
    std::vector<Count> row(col.begin(), col.end());
    for (VertexId v : cls) row[v] = 0;
    buckets[{cls.size(), std::move(row)}].push_back(c);
  }

  std::vector<DuplicateTwinFamily> families;
  for (auto& [key, members] : buckets) {
    if (members.size() < 2) continue;
    DuplicateTwinFamily f;
    f.l = members.size();
    f.t = key.first;
    for (std::size_t c : members) f.classes.push_back(twins.classes[c]);
    families.push_back(std::move(f));
  }
  std::ranges::sort(families, {}, [](const auto& f) { return f.classes.front().front(); });
  return families;
}

std::optional<Bipartition> is_bipartite(const OrientedHypergraph& g) {
  ParityUnionFind uf(g.vertex_count());
  for (const auto& h : g.edges()) {
    const auto ins = h.inputs();
    const auto outs = h.outputs();
    const VertexId anchor = ins.empty() ? outs.front() : ins.front();
    const bool anchor_is_input = !ins.empty();
    for (VertexId v : ins) {
      if (!uf.unite(anchor, v, !anchor_is_input)) return std::nullopt;
    }
    for (VertexId v : outs) {
      if (!uf.unite(anchor, v, anchor_is_input)) return std::nullopt;
    }
  }
  const auto color = uf.canonical_colors();
  Bipartition parts;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    (color[v] ? parts.part2 : parts.part1).push_back(v);
  }
  return parts;
}

std::optional<HyperedgeBipartition> is_vertex_bipartite(const OrientedHypergraph& g) {
  ParityUnionFind uf(g.edge_count());
  std::vector<std::optional<std::pair<std::size_t, Side>>> first_seen(g.vertex_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& h = g.edges()[k];
    for (const Side side : {Side::input, Side::output}) {
      for (VertexId v : side == Side::input ? h.inputs() : h.outputs()) {
        auto& anchor = first_seen[v];
        if (!anchor) {
          anchor.emplace(k, side);
        } else if (!uf.unite(anchor->first, k, anchor->second != side)) {
          return std::nullopt;
        }
      }
    }
  }
  const auto color = uf.canonical_colors();
  HyperedgeBipartition split;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    (color[k] ? split.second : split.first).push_back(k);
  }
  return split;
}

bool respects_orientation(const OrientedHypergraph& g, const Bipartition& parts) {
  const std::size_t n = g.vertex_count();
  std::vector<int> part(n, -1);
  for (VertexId v : parts.part1) {
    if (v >= n || part[v] != -1) return false;
    part[v] = 0;
  }
  for (VertexId v : parts.part2) {
    if (v >= n || part[v] != -1) return false;
    part[v] = 1;
  }
  if (std::ranges::find(part, -1) != part.end()) return false;

  for (const auto& h : g.edges()) {
    const auto ins = h.inputs();
    const auto outs = h.outputs();
    if (std::ranges::any_of(ins, [&](VertexId v) { return part[v] != part[ins.front()]; }))
      return false;
    if (std::ranges::any_of(outs, [&](VertexId v) { return part[v] != part[outs.front()]; }))
      return false;
    if (!ins.empty() && !outs.empty() && part[ins.front()] == part[outs.front()]) return false;
  }
  return true;
}

}  // namespace hyperspec
