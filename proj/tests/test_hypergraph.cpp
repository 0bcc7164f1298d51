#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "hyperspec/errors.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/random.hpp"
#include "oracles.hpp"

using namespace hyperspec;
using fixtures::edge;

TEST_SUITE_BEGIN("hypergraph");

TEST_CASE("hyperedge sides are sets and must be disjoint and nonempty") {
  const auto h = edge({2, 0, 2}, {5});
  CHECK(std::vector<VertexId>(h.inputs().begin(), h.inputs().end()) == std::vector<VertexId>{0, 2});
  CHECK(h.cardinality() == 3);
  CHECK(h.side_of(5) == Side::output);
  CHECK(h.side_of(0) == Side::input);
  CHECK_FALSE(h.contains(1));

  CHECK_THROWS_AS(edge({0, 1}, {1}), ValidationError);
  CHECK_THROWS_AS(edge({}, {}), ValidationError);
  CHECK_NOTHROW(edge({}, {3}));
}

TEST_CASE("cardinality") {
  CHECK(cardinality(edge({0, 1}, {3, 4})) == 4);
  CHECK(cardinality(edge({7})) == 1);
  const auto lattice = gen_lattice(4);
  for (const auto& h : lattice.edges()) CHECK(cardinality(h) == 4);
}

TEST_CASE("construction rejects isolated and out-of-range vertices") {
  CHECK_THROWS_AS(OrientedHypergraph(3, {edge({0}, {1})}), DegenerateInput);
  CHECK_THROWS_AS(OrientedHypergraph(2, {edge({0}, {2})}), InvalidArgument);
  CHECK_THROWS_AS(OrientedHypergraph(0, {}), InvalidArgument);
}

TEST_CASE("degree") {
  const auto complete = gen_complete(4, 2);
  for (VertexId v = 0; v < 4; ++v) CHECK(degree(complete, v) == 3);

  const auto single = fixtures::single_hyperedge(5);
  for (VertexId v = 0; v < 5; ++v) CHECK(degree(single, v) == 1);

  const auto cycle = gen_hypercycle(6, 3);
  for (VertexId v = 0; v < 6; ++v) CHECK(degree(cycle, v) == 3);

  CHECK_THROWS_AS(degree(single, 5), InvalidArgument);
}

TEST_CASE("adjacency matrix examples") {
  const auto a = adjacency_matrix(fixtures::single_edge());
  CHECK(a(0, 1) == 1);
  CHECK(a(1, 0) == 1);

  const auto b = adjacency_matrix(OrientedHypergraph(2, {edge({0, 1})}));
  CHECK(b(0, 1) == -1);

  // Twins sharing all of their d hyperedges: A = -d.
  const auto g = OrientedHypergraph(4, {edge({0, 1}, {2}), edge({0, 1, 3}), edge({3}, {0, 1})});
  const auto c = adjacency_matrix(g);
  CHECK(c(0, 1) == -degree(g, 0));
  CHECK(c(0, 1) == -3);

  // Repeated hyperedges count with multiplicity.
  const auto d = adjacency_matrix(OrientedHypergraph(2, {edge({0}, {1}), edge({0}, {1})}));
  CHECK(d(0, 1) == 2);
}

TEST_CASE("adjacency matrix matches the pairwise definition on random hypergraphs") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_oriented_hypergraph(2 + trial % 9, 1 + trial % 6, rng);
    const auto a = adjacency_matrix(g);
    const auto expected = oracle::adjacency(g);
    CHECK(a.cast<double>() == expected);
    CHECK(a == a.transpose());
    CHECK(a.diagonal().isZero());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        CHECK(std::abs(a(i, j)) <= std::min(g.degree(i), g.degree(j)));
      }
    }
  }
}

TEST_CASE("normalized Laplacian") {
  const auto l = normalized_laplacian(fixtures::single_edge());
  CHECK(l.kind == LaplacianKind::normalized);
  CHECK(l.values.isApprox((Eigen::Matrix2d() << 1, -1, -1, 1).finished()));

  const auto m = normalized_laplacian(OrientedHypergraph(2, {edge({0, 1})}));
  CHECK(m.values.isApprox((Eigen::Matrix2d() << 1, 1, 1, 1).finished()));

  for (const auto [n, c] : {std::pair{5, 3}, std::pair{6, 2}, std::pair{7, 4}}) {
    const auto lc = normalized_laplacian(gen_complete(n, c));
    const double off = static_cast<double>(c - 1) / (n - 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(lc.values(i, j) == doctest::Approx(i == j ? 1.0 : off).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("normalized Laplacian has unit diagonal and trace N") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_oriented_hypergraph(3 + trial % 8, 2 + trial % 4, rng);
    const auto l = normalized_laplacian(g);
    CHECK(l.values.diagonal().isOnes());
    CHECK(l.values.trace() == static_cast<double>(g.vertex_count()));
    CHECK((l.values - oracle::laplacian(g)).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("underlying hypergraph") {
  const auto g = OrientedHypergraph(3, {edge({0, 1}, {2})});
  const auto u = underlying_hypergraph(g);
  CHECK(u.edge(0) == edge({0, 1, 2}));

  const auto bip = underlying_hypergraph(fixtures::two_hyperedge_bipartite());
  CHECK(bip.edge(0) == edge({0, 1, 3, 4}));
  CHECK(bip.edge(1) == edge({1, 2, 4, 5}));

  const auto all_input = gen_lattice(3);
  CHECK(underlying_hypergraph(all_input) == all_input);

  Rng rng(3);
  const auto r = random_oriented_hypergraph(7, 4, rng);
  const auto ur = underlying_hypergraph(r);
  CHECK(std::ranges::equal(ur.degrees(), r.degrees()));
  CHECK(ur.is_all_input());
}

TEST_CASE("signless normalized Laplacian") {
  const auto l = signless_normalized_laplacian(fixtures::single_edge());
  CHECK(l.kind == LaplacianKind::signless);
  CHECK(l.values.isApprox((Eigen::Matrix2d() << 1, 1, 1, 1).finished()));

  const auto lattice = gen_lattice(3);
  CHECK(signless_normalized_laplacian(lattice).values == normalized_laplacian(lattice).values);

  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_simple_graph(3 + trial % 10, 0.4, rng);
    const auto plain = normalized_laplacian(g).values;
    const auto signless = signless_normalized_laplacian(g).values;
    const auto n = plain.rows();
    CHECK((signless - (2.0 * Eigen::MatrixXd::Identity(n, n) - plain)).cwiseAbs().maxCoeff() == 0.0);
    // A' = -A with the same degrees.
    CHECK(adjacency_matrix(underlying_hypergraph(g)) == -adjacency_matrix(g));
  }
}

TEST_CASE("reorient") {
  const auto g = fixtures::single_edge();
  const auto r = reorient(g, 0);
  CHECK(r.edge(0) == edge({1}, {0}));
  CHECK(reorient(r, 0) == g);
  CHECK_THROWS_AS(reorient(g, 1), InvalidArgument);

  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = random_oriented_hypergraph(2 + trial % 7, 1 + trial % 5, rng);
    const auto a = adjacency_matrix(h);
    for (std::size_t k = 0; k < h.edge_count(); ++k) {
      CHECK(adjacency_matrix(reorient(h, k)) == a);
      CHECK(reorient(reorient(h, k), k) == h);
    }
  }
}

TEST_SUITE_END();
