#include <gtest/gtest.h>

#include <random>

#include "grouprep/corpus.hpp"
#include "grouprep/error.hpp"
#include "grouprep/tree.hpp"
#include "oracles.hpp"

namespace grouprep {
namespace {

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

// Two adjacent centres, each carrying two leaves.
Graph double_star() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

// Middle vertex m joined to a and b, each carrying two leaves.
Graph spider() { return Graph(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}); }

std::vector<Graph> trees_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& t : free_trees(k)) out.push_back(t);
  return out;
}

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> im(n);
  for (Point i = 0; i < n; ++i) im[i] = i;
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

TEST(RootedTree, Validation) {
  EXPECT_THROW(RootedTree({}, 0), InputError);
  EXPECT_THROW(RootedTree({0, 0}, 1), InputError);
  EXPECT_THROW(RootedTree({0, 2, 1}, 0), InputError);
  EXPECT_THROW(RootedTree({0, 1}, 0), InputError);
  const RootedTree t({1, 1, 1}, 1);
  EXPECT_EQ(t.children(1), (std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(t.is_leaf(0));
  EXPECT_THROW(RootedTree::from_graph(Graph(3, {{0, 1}}), 0), InputError);
  EXPECT_FALSE(is_tree(Graph(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST(Ahu, CodesAreIsomorphismInvariants) {
  const RootedTree p3 = RootedTree::from_graph(path_graph(3), 0);
  EXPECT_EQ(ahu_code(p3, 0), "((()))");
  EXPECT_EQ(ahu_code(RootedTree::from_graph(path_graph(3), 1), 1), "(()())");
  std::mt19937 rng(17);
  for (const auto& t : trees_up_to(8)) {
    const auto p = random_perm(t.vertex_count(), rng);
    const Graph u = relabel(t, p);
    EXPECT_EQ(free_tree_code(t), free_tree_code(u));
    for (Vertex r = 0; r < t.vertex_count(); ++r)
      EXPECT_EQ(ahu_code(RootedTree::from_graph(t, r), r),
                ahu_code(RootedTree::from_graph(u, p[r]), p[r]));
  }
  const auto all = free_trees(8);
  std::set<std::string> codes;
  for (const auto& t : all) codes.insert(free_tree_code(t));
  EXPECT_EQ(codes.size(), all.size());
}

TEST(Ahu, SubtreeMatchingIsIsomorphism) {
  const RootedTree t = RootedTree::from_graph(spider(), 0);
  const auto codes = ahu_codes(t);
  const auto pairs = match_subtrees(t, codes, 1, 2);
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(pairs[0], (std::pair<Vertex, Vertex>{1, 2}));
  for (auto [x, y] : pairs) EXPECT_EQ(codes[x], codes[y]);
  EXPECT_THROW(match_subtrees(t, codes, 1, 3), InputError);
  std::vector<Vertex> original;
  const RootedTree sub = subtree_at(t, 2, &original);
  EXPECT_EQ(sub.size(), 3u);
  EXPECT_EQ(original.front(), 2u);
  EXPECT_EQ(ahu_code(sub, 0), codes[2]);
}

TEST(Centers, PathsAndStars) {
  EXPECT_EQ(tree_centers(path_graph(4)), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(tree_centers(path_graph(5)), (std::vector<Vertex>{2}));
  EXPECT_EQ(tree_centers(star(4)), (std::vector<Vertex>{0}));
  EXPECT_EQ(tree_centers(path_graph(2)), (std::vector<Vertex>{0, 1}));
}

TEST(TreeAutomorphisms, KnownOrders) {
  EXPECT_EQ(schreier_sims(tree_aut_generators(star(3))).order(), 6);
  EXPECT_EQ(schreier_sims(tree_aut_generators(star(4))).order(), 24);
  EXPECT_EQ(schreier_sims(tree_aut_generators(double_star())).order(), 8);
  EXPECT_EQ(schreier_sims(tree_aut_generators(spider())).order(), 8);
  EXPECT_EQ(schreier_sims(tree_aut_generators(path_graph(1))).order(), 1);
  EXPECT_EQ(schreier_sims(tree_aut_generators(path_graph(2))).order(), 2);
}

TEST(TreeAutomorphisms, MatchBruteForce) {
  for (const auto& t : trees_up_to(8)) {
    const GenSet gens = tree_aut_generators(t);
    for (const auto& g : gens.gens()) EXPECT_TRUE(is_automorphism(t, g));
    EXPECT_EQ(schreier_sims(gens).order(), testing::brute_force_automorphisms(t).size());
  }
}

TEST(Orbits, StarAndPath) {
  const auto o = aut_orbits(star(3));
  EXPECT_EQ(o.orbits, (std::vector<std::vector<Vertex>>{{0}, {1, 2, 3}}));
  EXPECT_EQ(o.orbit_of[2], 1u);
  EXPECT_EQ(aut_orbits(path_graph(4)).orbits, (std::vector<std::vector<Vertex>>{{0, 3}, {1, 2}}));
}

TEST(OrbitSubtree, LeavesAreTheOrbit) {
  const Graph s3 = star(3);
  const std::vector<Vertex> leaves{1, 2, 3};
  const auto sub = orbit_subtree(s3, leaves);
  EXPECT_EQ(sub.vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  const std::vector<Vertex> not_orbit{1, 2};
  EXPECT_THROW(orbit_subtree(s3, not_orbit), InputError);

  for (const auto& t : trees_up_to(9)) {
    for (const auto& delta : aut_orbits(t).orbits) {
      const auto s = orbit_subtree(t, delta);
      EXPECT_TRUE(is_tree(s.graph));
      if (delta.size() < 2) {
        EXPECT_EQ(s.vertices, delta);
        continue;
      }
      std::vector<Vertex> leaves_found;
      for (Vertex v = 0; v < s.graph.vertex_count(); ++v)
        if (s.graph.degree(v) == 1) leaves_found.push_back(s.vertices[v]);
      EXPECT_EQ(leaves_found, delta);
    }
  }
}

TEST(Rooting, FixedVertexOrSubdividedEdge) {
  const auto s5 = root_tree(star(5));
  EXPECT_EQ(s5.kind, RootingKind::fixed_vertex);
  EXPECT_EQ(s5.tree.root(), 0u);
  const auto p4 = root_tree(path_graph(4));
  EXPECT_EQ(p4.kind, RootingKind::dummy_edge_root);
  EXPECT_EQ(p4.tree.root(), 4u);
  EXPECT_EQ(p4.subdivided_edge, (std::optional<Edge>{{1, 2}}));

  for (const auto& t : trees_up_to(10)) {
    const auto r = root_tree(t);
    const auto orbits = aut_orbits(t).orbits;
    const bool has_fixed = std::any_of(orbits.begin(), orbits.end(),
                                       [](const auto& o) { return o.size() == 1; });
    EXPECT_EQ(r.kind == RootingKind::fixed_vertex, has_fixed);
    if (has_fixed) {
      const GenSet gens = tree_aut_generators(t);
      for (const auto& g : gens.gens()) EXPECT_EQ(g[r.tree.root()], r.tree.root());
    } else {
      EXPECT_EQ(r.tree.size(), t.vertex_count() + 1);
    }
  }
}

TEST(Wreath, StarDecomposition) {
  const RootedTree t = RootedTree::from_graph(star(4), 0);
  const auto d = child_partition(t);
  ASSERT_EQ(d.t(), 1u);
  EXPECT_EQ(d.classes[0].multiplicity, 4u);
  EXPECT_EQ(d.classes[0].representative.size(), 1u);
  EXPECT_EQ(d.classes[0].aut_order(), 1);
  EXPECT_EQ(wreath_aut_order(t), 24);
  const RootedTree sp = RootedTree::from_graph(spider(), 0);
  EXPECT_EQ(wreath_aut_order(sp), 8);
  EXPECT_EQ(child_partition(sp).classes[0].aut_order(), 2);
}

}  // namespace
}  // namespace grouprep
