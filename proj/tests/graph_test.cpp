#include <gtest/gtest.h>

#include <random>

#include "grouprep/corpus.hpp"
#include "grouprep/error.hpp"
#include "grouprep/graph.hpp"
#include "oracles.hpp"

namespace grouprep {
namespace {

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, e);
}

Graph random_graph(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> im(n);
  for (Point i = 0; i < n; ++i) im[i] = i;
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

TEST(Graph, ConstructorValidates) {
  EXPECT_THROW(Graph(0, {}), InputError);
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  const Graph x(3, {{2, 0}, {1, 0}});
  EXPECT_EQ(x.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_TRUE(x.adjacent(2, 0));
  EXPECT_EQ(x.degree(0), 2u);
}

TEST(Graph, ComplementAndUnion) {
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(are_isomorphic(complement(c5), c5).has_value());
  std::vector<Graph> parts{complete_graph(3), path_graph(2)};
  const auto u = disjoint_union(parts);
  EXPECT_EQ(u.graph.vertex_count(), 5u);
  EXPECT_EQ(u.offsets, (std::vector<Vertex>{0, 3}));
  EXPECT_TRUE(u.graph.adjacent(3, 4));
  EXPECT_THROW(disjoint_union(std::span<const Graph>{}), InputError);
  EXPECT_FALSE(is_connected(u.graph));
  EXPECT_TRUE(is_connected(complement(u.graph)));
}

TEST(Isomorphism, RelabelledCopiesAreIsomorphic) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const Graph x = random_graph(n, 0.4, rng);
    const Graph y = relabel(x, random_perm(n, rng));
    const auto iso = are_isomorphic(x, y);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(is_isomorphism(x, y, *iso));
  }
}

TEST(Isomorphism, SameDegreeSequenceDifferentGraphs) {
  std::vector<Graph> parts{complete_graph(3), complete_graph(3)};
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(parts).graph).has_value());
  EXPECT_FALSE(are_isomorphic(path_graph(4), complete_graph(4)).has_value());
  EXPECT_FALSE(are_isomorphic(path_graph(4), path_graph(5)).has_value());
}

TEST(Isomorphism, MatchesBruteForceOnSmallRandomPairs) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const Graph x = random_graph(n, 0.5, rng);
    const Graph y = random_graph(n, 0.5, rng);
    bool brute = false;
    std::vector<Vertex> p(n);
    for (Vertex i = 0; i < n; ++i) p[i] = i;
    do brute = brute || is_isomorphism(x, y, p);
    while (!brute && std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(are_isomorphic(x, y).has_value(), brute);
  }
}

TEST(Automorphisms, OrderMatchesBruteForce) {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto& g : connected_graphs(n)) graphs.push_back(g);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) graphs.push_back(random_graph(1 + rng() % 8, 0.35, rng));
  for (const auto& x : graphs) {
    const GenSet gens = automorphism_generators(x);
    for (const auto& g : gens.gens()) EXPECT_TRUE(is_automorphism(x, g));
    EXPECT_EQ(schreier_sims(gens).order(), testing::brute_force_automorphisms(x).size());
    EXPECT_EQ(aut_order_by_components(x), testing::brute_force_automorphisms(x).size());
  }
}

TEST(Automorphisms, KnownOrders) {
  EXPECT_EQ(schreier_sims(automorphism_generators(petersen())).order(), 120);
  EXPECT_EQ(schreier_sims(automorphism_generators(cycle_graph(12))).order(), 24);
  EXPECT_EQ(schreier_sims(automorphism_generators(complete_graph(10))).order(), factorial(10));
  std::vector<Graph> parts{complete_graph(3), complete_graph(3)};
  EXPECT_EQ(aut_order_by_components(disjoint_union(parts).graph), 72);
}

TEST(Components, IsoClassesWithWitnesses) {
  std::vector<Graph> parts{path_graph(3), complete_graph(3), path_graph(3), path_graph(1)};
  const Graph x = relabel(disjoint_union(parts).graph,
                          Permutation({9, 0, 4, 1, 7, 2, 3, 6, 5, 8}));
  const auto d = connected_components(x);
  EXPECT_EQ(d.components.size(), 4u);
  EXPECT_EQ(d.iso_classes.size(), 3u);
  for (const auto& cls : d.iso_classes) {
    const Graph rep = induced_subgraph(x, d.components[cls.representative()]);
    for (std::size_t i = 0; i < cls.multiplicity(); ++i) {
      const Graph member = induced_subgraph(x, d.components[cls.members[i]]);
      EXPECT_TRUE(is_isomorphism(rep, member, cls.witnesses[i]));
    }
  }
}

TEST(Limits, SearchCapThrows) {
  EXPECT_THROW(automorphism_generators(path_graph(33)), CapExceeded);
  EXPECT_THROW(are_isomorphic(path_graph(33), path_graph(33)), CapExceeded);
  EXPECT_NO_THROW(automorphism_generators(path_graph(33), SearchLimits{64}));
}

}  // namespace
}  // namespace grouprep
