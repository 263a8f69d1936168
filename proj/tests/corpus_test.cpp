#include <gtest/gtest.h>

#include <set>

#include "grouprep/corpus.hpp"
#include "grouprep/error.hpp"
#include "grouprep/tree.hpp"
#include "oracles.hpp"

namespace grouprep {
namespace {

// Free tree from a Pruefer sequence on n >= 2 vertices.
Graph pruefer_tree(std::size_t n, const std::vector<Vertex>& seq) {
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) ++degree[v];
  std::vector<Edge> edges;
  for (Vertex v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return Graph(n, edges);
}

TEST(Corpus, ConnectedGraphCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(connected_graphs(n).size(), expected[n - 1]);
  EXPECT_THROW(connected_graphs(7), InputError);
}

TEST(Corpus, ConnectedGraphsCoverAllLabelledGraphs) {
  // Labelled connected graphs on n vertices: 1, 1, 4, 38, 728, 26704.
  const std::vector<std::size_t> labelled{1, 1, 4, 38, 728, 26704};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t total = 0;
    for (const auto& x : connected_graphs(n)) {
      EXPECT_TRUE(is_connected(x));
      total += factorial(n).convert_to<std::size_t>() / testing::brute_force_automorphisms(x).size();
    }
    EXPECT_EQ(total, labelled[n - 1]) << n;
  }
}

TEST(Corpus, FreeTreeCounts) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto trees = free_trees(n);
    EXPECT_EQ(trees.size(), expected[n - 1]) << n;
    for (const auto& t : trees) EXPECT_TRUE(is_tree(t));
  }
}

TEST(Corpus, FreeTreesMatchPrueferEnumeration) {
  for (std::size_t n = 3; n <= 8; ++n) {
    std::set<std::string> codes;
    std::vector<Vertex> seq(n - 2, 0);
    while (true) {
      codes.insert(free_tree_code(pruefer_tree(n, seq)));
      std::size_t k = 0;
      while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
      if (k == seq.size()) break;
    }
    std::set<std::string> generated;
    for (const auto& t : free_trees(n)) generated.insert(free_tree_code(t));
    EXPECT_EQ(generated, codes) << n;
  }
}

TEST(Corpus, NamedFamilies) {
  EXPECT_EQ(path_graph(1).edge_count(), 0u);
  EXPECT_EQ(path_graph(5).edge_count(), 4u);
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
}

}  // namespace
}  // namespace grouprep
