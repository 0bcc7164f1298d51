#include "hyperspec/random.hpp"

#include <algorithm>

#include "hyperspec/errors.hpp"

namespace hyperspec {

namespace {

std::size_t uniform_index(std::size_t n, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

struct SplitEdge {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
};

OrientedHypergraph assemble(std::size_t n, std::vector<SplitEdge>& edges, Rng& rng,
                            bool random_orientation) {
  std::vector<OrientedHyperedge> out;
  out.reserve(edges.size());
  for (auto& e : edges) {
    if (random_orientation && coin(rng)) {
      out.emplace_back(std::move(e.b), std::move(e.a));
    } else {
      out.emplace_back(std::move(e.a), std::move(e.b));
    }
  }
  return OrientedHypergraph(n, std::move(out));
}

}  // namespace

OrientedHypergraph random_simple_graph(std::size_t n, double p, Rng& rng) {
  if (n < 2) throw InvalidArgument("random graph needs at least 2 vertices");
  std::vector<SplitEdge> edges;
  std::vector<bool> covered(n, false);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng, p)) {
        edges.push_back({{u}, {v}});
        covered[u] = covered[v] = true;
      }
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    if (covered[u]) continue;
    auto v = static_cast<VertexId>(uniform_index(n - 1, rng));
    if (v >= u) ++v;
    edges.push_back({{u}, {v}});
    covered[u] = covered[v] = true;
  }
  return assemble(n, edges, rng, true);
}

OrientedHypergraph random_oriented_hypergraph(std::size_t n, std::size_t m, Rng& rng) {
  if (n == 0 || m == 0) throw InvalidArgument("random hypergraph needs n, m >= 1");
  std::vector<SplitEdge> edges(m);
  std::vector<bool> covered(n, false);
  const double density = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
  for (auto& e : edges) {
    for (VertexId v = 0; v < n; ++v) {
      if (!coin(rng, density)) continue;
      (coin(rng) ? e.a : e.b).push_back(v);
      covered[v] = true;
    }
    if (e.a.empty() && e.b.empty()) {
      const auto v = static_cast<VertexId>(uniform_index(n, rng));
      e.a.push_back(v);
      covered[v] = true;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (covered[v]) continue;
    auto& e = edges[uniform_index(m, rng)];
    (coin(rng) ? e.a : e.b).push_back(v);
  }
  return assemble(n, edges, rng, false);
}

OrientedHypergraph random_bipartite_hypergraph(std::size_t n, std::size_t m, Rng& rng) {
  if (n == 0 || m == 0) throw InvalidArgument("random hypergraph needs n, m >= 1");
  std::vector<bool> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = coin(rng);
  std::vector<SplitEdge> edges(m);
  std::vector<bool> covered(n, false);
  const double density = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
  auto place = [&](SplitEdge& e, VertexId v) {
    (color[v] ? e.b : e.a).push_back(v);
    covered[v] = true;
  };
  for (auto& e : edges) {
    for (VertexId v = 0; v < n; ++v) {
      if (coin(rng, density)) place(e, v);
    }
    if (e.a.empty() && e.b.empty()) place(e, static_cast<VertexId>(uniform_index(n, rng)));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!covered[v]) place(edges[uniform_index(m, rng)], v);
  }
  return assemble(n, edges, rng, true);
}

PlantedFamily random_planted_family(std::size_t l, std::size_t t, std::size_t base_vertices,
                                    Rng& rng) {
  if (l < 2 || t < 1 || base_vertices < 1) {
    throw InvalidArgument("planted family needs l >= 2, t >= 1 and a nonempty base");
  }
  const std::size_t b = base_vertices;
  const std::size_t n = b + l * t;

  std::vector<SplitEdge> edges;
  std::vector<bool> covered(n, false);
  const std::size_t base_edges = 1 + uniform_index(3, rng);
  for (std::size_t k = 0; k < base_edges; ++k) {
    SplitEdge e;
    for (VertexId v = 0; v < b; ++v) {
      if (coin(rng)) (coin(rng) ? e.a : e.b).push_back(v);
    }
    if (e.a.empty() && e.b.empty()) e.a.push_back(static_cast<VertexId>(uniform_index(b, rng)));
    edges.push_back(std::move(e));
  }

  struct Template {
    SplitEdge base;
    bool class_on_a = true;
  };
  std::vector<Template> templates(1 + uniform_index(3, rng));
  for (auto& tpl : templates) {
    for (VertexId v = 0; v < b; ++v) {
      if (coin(rng)) (coin(rng) ? tpl.base.a : tpl.base.b).push_back(v);
    }
    if (tpl.base.a.empty() && tpl.base.b.empty()) {
      tpl.base.b.push_back(static_cast<VertexId>(uniform_index(b, rng)));
    }
    tpl.class_on_a = coin(rng);
  }

  std::vector<std::vector<VertexId>> classes;
  for (std::size_t j = 0; j < l; ++j) {
    std::vector<VertexId> cls;
    for (std::size_t z = 0; z < t; ++z) cls.push_back(static_cast<VertexId>(b + j * t + z));
    for (const auto& tpl : templates) {
      SplitEdge e = tpl.base;
      auto& side = tpl.class_on_a ? e.a : e.b;
      side.insert(side.end(), cls.begin(), cls.end());
      edges.push_back(std::move(e));
    }
    classes.push_back(std::move(cls));
  }

  for (const auto& e : edges) {
    for (VertexId v : e.a) covered[v] = true;
    for (VertexId v : e.b) covered[v] = true;
  }
  for (VertexId v = 0; v < b; ++v) {
    if (!covered[v]) edges[uniform_index(base_edges, rng)].a.push_back(v);
  }
  return {assemble(n, edges, rng, true), std::move(classes)};
}

}  // namespace hyperspec
