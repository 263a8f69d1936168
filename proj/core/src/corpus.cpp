#include "grouprep/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "grouprep/error.hpp"
#include "grouprep/tree.hpp"

namespace grouprep {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

namespace {

// Bit k of a mask is the k-th pair (u, v), u < v, in lexicographic order.
std::vector<Edge> vertex_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

Graph from_mask(std::size_t n, const std::vector<Edge>& pairs, std::uint32_t mask) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (mask >> k & 1u) edges.push_back(pairs[k]);
  return Graph(n, edges);
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n == 0 || n > 6) throw InputError("connected graph corpus supports 1 <= n <= 6");
  const auto pairs = vertex_pairs(n);
  std::vector<std::size_t> index(n * n, 0);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    index[pairs[k].first * n + pairs[k].second] = k;
    index[pairs[k].second * n + pairs[k].first] = k;
  }
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint32_t> seen;
  const std::uint32_t limit = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!is_connected(from_mask(n, pairs, mask))) continue;
    std::uint32_t best = mask;
    for (const auto& q : perms) {
      std::uint32_t image = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1u) image |= 1u << index[q[pairs[k].first] * n + q[pairs[k].second]];
      best = std::min(best, image);
    }
    seen.insert(best);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask : seen) out.push_back(from_mask(n, pairs, mask));
  return out;
}

std::vector<Graph> free_trees(std::size_t n) {
  if (n == 0 || n > 14) throw InputError("tree corpus supports 1 <= n <= 14");
  std::map<std::string, Graph> level;
  level.emplace(free_tree_code(Graph(1, std::span<const Edge>{})), Graph(1, std::span<const Edge>{}));
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const auto& [code, tree] : level) {
      for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        std::vector<Edge> edges = tree.edges();
        edges.emplace_back(v, static_cast<Vertex>(tree.vertex_count()));
        Graph grown(size, edges);
        next.try_emplace(free_tree_code(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, tree] : level) out.push_back(std::move(tree));
  return out;
}

}  // namespace grouprep
