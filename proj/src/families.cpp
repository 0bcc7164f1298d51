#include "hyperspec/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "hyperspec/errors.hpp"

namespace hyperspec {

namespace {

constexpr double kMergeTolerance = 1e-12;
// Prediction values produced numerically (cosine sums, reduced spectra) are
// merged at this tolerance before being listed.
constexpr double kNumericMergeTolerance = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

void validate_hyperflower(std::size_t l, std::size_t r, std::size_t t,
                          std::span<const std::size_t> core_sizes) {
  require(l >= 1 && r >= 1 && t >= 1, "hyperflower needs l, r, t >= 1");
  require(core_sizes.size() == r, "hyperflower needs exactly r = " + std::to_string(r) +
                                      " core sizes, got " + std::to_string(core_sizes.size()));
  require(std::ranges::all_of(core_sizes, [](std::size_t w) { return w >= 1; }),
          "hyperflower core sizes must be >= 1");
}

void validate_complete(std::size_t n, std::size_t c) {
  require(c >= 2 && c <= n, "complete hypergraph needs 2 <= c <= n");
}

void validate_lattice(std::size_t l) { require(l >= 2, "lattice needs l >= 2"); }

void validate_hypercycle(std::size_t n, std::size_t l) {
  require(l >= 2 && 2 * l <= n, "hypercycle needs 2 <= l <= n/2");
}

void add_clustered(SpectrumPrediction& p, const RealSpectrum& values) {
  for (const auto& c : cluster_multiplicities(values, kNumericMergeTolerance)) {
    p.add(c.value, c.multiplicity);
  }
}

}  // namespace

std::size_t HyperflowerSpec::vertex_count() const {
  return t * l + std::accumulate(core_sizes.begin(), core_sizes.end(), std::size_t{0});
}

void validate(const FamilySpec& spec) {
  std::visit(overloaded{
                 [](const HyperflowerSpec& s) { validate_hyperflower(s.l, s.r, s.t, s.core_sizes); },
                 [](const CompleteSpec& s) { validate_complete(s.n, s.c); },
                 [](const LatticeSpec& s) { validate_lattice(s.l); },
                 [](const HypercycleSpec& s) { validate_hypercycle(s.n, s.l); },
                 [](const GraphSpec& s) { require(!s.edges.empty(), "graph needs an edge"); },
             },
             spec);
}

std::string describe(const FamilySpec& spec) {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const HyperflowerSpec& s) {
                   out << "hyperflower l=" << s.l << " r=" << s.r << " t=" << s.t << " cores=";
                   for (std::size_t i = 0; i < s.core_sizes.size(); ++i) {
                     out << (i ? "," : "") << s.core_sizes[i];
                   }
                 },
                 [&](const CompleteSpec& s) { out << "complete n=" << s.n << " c=" << s.c; },
                 [&](const LatticeSpec& s) { out << "lattice l=" << s.l; },
                 [&](const HypercycleSpec& s) { out << "hypercycle n=" << s.n << " l=" << s.l; },
                 [&](const GraphSpec& s) { out << "graph edges=" << s.edges.size(); },
             },
             spec);
  return out.str();
}

OrientedHypergraph gen_hyperflower(std::size_t l, std::size_t r, std::size_t t,
                                   std::span<const std::size_t> core_sizes) {
  validate_hyperflower(l, r, t, core_sizes);
  std::vector<std::vector<VertexId>> cores(r);
  auto next = static_cast<VertexId>(t * l);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t w = 0; w < core_sizes[i]; ++w) cores[i].push_back(next++);
  }
  std::vector<OrientedHyperedge> edges;
  edges.reserve(r * l);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      auto members = cores[i];
      for (std::size_t z = 0; z < t; ++z) members.push_back(static_cast<VertexId>(z * l + j));
      edges.push_back(OrientedHyperedge::all_input(std::move(members)));
    }
  }
  return OrientedHypergraph(next, std::move(edges));
}

OrientedHypergraph gen_complete(std::size_t n, std::size_t c) {
  validate_complete(n, c);
  std::vector<OrientedHyperedge> edges;
  std::vector<VertexId> pick(c);
  std::iota(pick.begin(), pick.end(), VertexId{0});
  while (true) {
    edges.push_back(OrientedHyperedge::all_input(pick));
    // Advance to the next c-subset in lexicographic order.
    std::size_t k = c;
    while (k > 0 && pick[k - 1] == n - c + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < c; ++j) pick[j] = pick[j - 1] + 1;
  }
  return OrientedHypergraph(n, std::move(edges));
}

OrientedHypergraph gen_lattice(std::size_t l) {
  validate_lattice(l);
  std::vector<OrientedHyperedge> edges;
  edges.reserve(2 * l);
  for (std::size_t row = 0; row < l; ++row) {
    std::vector<VertexId> members;
    for (std::size_t col = 0; col < l; ++col) members.push_back(static_cast<VertexId>(row * l + col));
    edges.push_back(OrientedHyperedge::all_input(std::move(members)));
  }
  for (std::size_t col = 0; col < l; ++col) {
    std::vector<VertexId> members;
    for (std::size_t row = 0; row < l; ++row) members.push_back(static_cast<VertexId>(row * l + col));
    edges.push_back(OrientedHyperedge::all_input(std::move(members)));
  }
  return OrientedHypergraph(l * l, std::move(edges));
}

OrientedHypergraph gen_hypercycle(std::size_t n, std::size_t l) {
  validate_hypercycle(n, l);
  std::vector<OrientedHyperedge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<VertexId> members;
    for (std::size_t k = 0; k < l; ++k) members.push_back(static_cast<VertexId>((i + k) % n));
    edges.push_back(OrientedHyperedge::all_input(std::move(members)));
  }
  return OrientedHypergraph(n, std::move(edges));
}

OrientedHypergraph gen_graph(std::span<const std::pair<VertexId, VertexId>> edges) {
  require(!edges.empty(), "graph needs at least one edge");
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<OrientedHyperedge> hyperedges;
  VertexId top = 0;
  for (const auto& [u, v] : edges) {
    require(u != v, "self-loop at vertex " + std::to_string(u + 1));
    require(seen.insert(std::minmax(u, v)).second,
            "repeated edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
    top = std::max({top, u, v});
    hyperedges.emplace_back(std::vector<VertexId>{u}, std::vector<VertexId>{v});
  }
  return OrientedHypergraph(std::size_t{top} + 1, std::move(hyperedges));
}

OrientedHypergraph generate(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const HyperflowerSpec& s) { return gen_hyperflower(s.l, s.r, s.t, s.core_sizes); },
          [](const CompleteSpec& s) { return gen_complete(s.n, s.c); },
          [](const LatticeSpec& s) { return gen_lattice(s.l); },
          [](const HypercycleSpec& s) { return gen_hypercycle(s.n, s.l); },
          [](const GraphSpec& s) { return gen_graph(s.edges); },
      },
      spec);
}

std::vector<Count> hypercycle_weights(std::size_t n, std::size_t l) {
  validate_hypercycle(n, l);
  std::vector<Count> m(n, 0);
  for (std::size_t r = 1; r < l; ++r) {
    m[r] = static_cast<Count>(l - r);
    m[n - r] = m[r];
  }
  return m;
}

std::vector<VertexId> hyperflower_peripherals(const HyperflowerSpec& spec) {
  require(spec.t == 1, "peripheral vertices v_1..v_l are defined for t = 1 only");
  std::vector<VertexId> p(spec.l);
  std::iota(p.begin(), p.end(), VertexId{0});
  return p;
}

OrientedHypergraph reduce_hyperflower(const OrientedHypergraph& g,
                                      std::span<const VertexId> peripherals) {
  const std::size_t n = g.vertex_count();
  const std::size_t l = peripherals.size();
  if (l == 0) throw ValidationError("hyperflower needs at least one peripheral vertex");
  if (!g.is_all_input()) throw ValidationError("hyperflower must be all-input");

  std::vector<std::size_t> petal_of(n, l);
  for (std::size_t j = 0; j < l; ++j) {
    const VertexId v = peripherals[j];
    if (v >= n || petal_of[v] != l) throw ValidationError("invalid or repeated peripheral vertex");
    petal_of[v] = j;
  }

  // Every hyperedge is one core plus exactly one peripheral; the cores are
  // pairwise disjoint and each meets every peripheral exactly once.
  std::vector<std::vector<VertexId>> cores;
  std::vector<std::vector<bool>> core_petals;
  std::vector<std::size_t> core_of(n, SIZE_MAX);
  for (const auto& h : g.edges()) {
    std::vector<VertexId> core;
    std::size_t petal = l;
    for (VertexId v : h.inputs()) {
      if (petal_of[v] == l) {
        core.push_back(v);
      } else if (petal != l) {
        throw ValidationError("hyperedge contains two peripheral vertices");
      } else {
        petal = petal_of[v];
      }
    }
    if (petal == l) throw ValidationError("hyperedge contains no peripheral vertex");
    if (core.empty()) throw ValidationError("hyperedge has an empty core");

    std::size_t id = core_of[core.front()];
    if (id == SIZE_MAX) {
      if (std::ranges::any_of(core, [&](VertexId v) { return core_of[v] != SIZE_MAX; })) {
        throw ValidationError("cores are not disjoint");
      }
      id = cores.size();
      for (VertexId v : core) core_of[v] = id;
      cores.push_back(core);
      core_petals.emplace_back(l, false);
    } else if (cores[id] != core) {
      throw ValidationError("cores are not disjoint");
    }
    if (core_petals[id][petal]) throw ValidationError("repeated hyperflower hyperedge");
    core_petals[id][petal] = true;
  }
  for (const auto& petals : core_petals) {
    if (!std::ranges::all_of(petals, [](bool b) { return b; })) {
      throw ValidationError("some core misses a peripheral vertex");
    }
  }

  std::vector<VertexId> new_index(n, 0);
  std::vector<bool> dropped(n, false);
  for (std::size_t j = 1; j < l; ++j) dropped[peripherals[j]] = true;
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!dropped[v]) new_index[v] = next++;
  }
  std::vector<OrientedHyperedge> kept;
  for (const auto& h : g.edges()) {
    const auto in = h.inputs();
    if (std::ranges::any_of(in, [&](VertexId v) { return dropped[v]; })) continue;
    std::vector<VertexId> members;
    for (VertexId v : in) members.push_back(new_index[v]);
    kept.push_back(OrientedHyperedge::all_input(std::move(members)));
  }
  return OrientedHypergraph(next, std::move(kept));
}

SpectrumPrediction& SpectrumPrediction::add(double value, std::size_t multiplicity, Mode mode) {
  if (multiplicity == 0) return *this;
  auto it = std::ranges::find_if(
      entries_, [&](const auto& e) { return std::abs(e.value - value) <= kMergeTolerance; });
  if (it != entries_.end()) {
    it->multiplicity += multiplicity;
    if (mode == Mode::at_least) it->mode = Mode::at_least;
    return *this;
  }
  entries_.push_back({value, multiplicity, mode});
  std::ranges::sort(entries_, {}, &PredictedEigenvalue::value);
  return *this;
}

SpectrumPrediction& SpectrumPrediction::set_residual(ResidualConstraint residual) {
  residual_ = residual;
  return *this;
}

std::size_t SpectrumPrediction::listed_multiplicity() const noexcept {
  std::size_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

bool SpectrumPrediction::fully_exact() const noexcept {
  return !residual_ && listed_multiplicity() == order_ &&
         std::ranges::all_of(entries_, [](const auto& e) { return e.mode == Mode::exact; });
}

std::vector<double> SpectrumPrediction::expanded() const {
  std::vector<double> values;
  values.reserve(listed_multiplicity());
  for (const auto& e : entries_) values.insert(values.end(), e.multiplicity, e.value);
  return values;
}

SpectrumPrediction predict_hyperflower_r1(std::size_t l, std::size_t t, std::size_t core_size) {
  const std::size_t sizes[] = {core_size};
  validate_hyperflower(l, 1, t, sizes);
  const std::size_t n = t * l + core_size;
  SpectrumPrediction p(n);
  p.add(0.0, n - l);
  p.add(static_cast<double>(t), l - 1);
  p.add(static_cast<double>(n - t * l + t), 1);
  return p;
}

SpectrumPrediction predict_hyperflower_l2(std::size_t l, std::size_t w1, std::size_t w2) {
  const std::size_t sizes[] = {w1, w2};
  validate_hyperflower(l, 2, 1, sizes);
  const std::size_t n = l + w1 + w2;
  SpectrumPrediction p(n);
  p.add(0.0, n - l - 1);
  if (w1 == w2) {
    // Constant hyperedge cardinality pins the two remaining eigenvalues.
    const double top = static_cast<double>(n - l) / 2.0 + 1.0;
    p.add(1.0, l - 1);
    p.add(top - 1.0, 1);
    p.add(top, 1);
  } else {
    p.add(1.0, l - 1, Mode::at_least);
    p.set_residual({2, static_cast<double>(n - l + 1), 1.0});
  }
  return p;
}

SpectrumPrediction predict_hyperflower_by_reduction(const HyperflowerSpec& spec) {
  validate_hyperflower(spec.l, spec.r, spec.t, spec.core_sizes);
  const auto g = gen_hyperflower(spec.l, spec.r, spec.t, spec.core_sizes);
  const auto reduced = reduce_hyperflower(g, hyperflower_peripherals(spec));
  const auto base = spectrum(reduced);
  std::vector<double> values(base.values().begin(), base.values().end());
  values.insert(values.end(), spec.l - 1, 1.0);
  SpectrumPrediction p(g.vertex_count());
  add_clustered(p, RealSpectrum(std::move(values)));
  return p;
}

SpectrumPrediction predict_complete(std::size_t n, std::size_t c) {
  validate_complete(n, c);
  SpectrumPrediction p(n);
  p.add(static_cast<double>(n - c) / static_cast<double>(n - 1), n - 1);
  p.add(static_cast<double>(c), 1);
  return p;
}

SpectrumPrediction predict_lattice(std::size_t l) {
  validate_lattice(l);
  SpectrumPrediction p(l * l);
  p.add(0.0, (l - 1) * (l - 1));
  p.add(static_cast<double>(l) / 2.0, 2 * (l - 1));
  p.add(static_cast<double>(l), 1);
  return p;
}

SpectrumPrediction predict_hypercycle(std::size_t n, std::size_t l) {
  const auto m = hypercycle_weights(n, l);
  SpectrumPrediction p(n);
  add_clustered(p, circulant_eigenvalues(m, n, static_cast<Count>(l)));
  return p;
}

}  // namespace hyperspec
