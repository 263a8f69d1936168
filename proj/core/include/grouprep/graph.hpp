#pragma once

/**
 * @file graph.hpp
 * @brief Simple undirected graphs, exact isomorphism and automorphism search.
 *
 * Search is individualization/refinement backtracking: colour refinement
 * on the pair of graphs, then branch on the first non-singleton cell in
 * ascending vertex order. No canonical labelling is computed.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grouprep/bigint.hpp"
#include "grouprep/perm.hpp"

namespace grouprep {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  /// Throws InputError for n == 0, self-loops, out-of-range endpoints and
  /// duplicate edges (in either orientation).
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[v]; }
  std::size_t degree(Vertex v) const { return nbrs_[v].size(); }

  /// Normalized (u < v) and sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<char> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Edge> edges_;
};

struct SearchLimits {
  /// Largest graph handed to the backtracking search.
  std::size_t max_vertices = 32;
};

Graph complement(const Graph& x);

struct DisjointUnion {
  Graph graph;
  /// offsets[i] is the first vertex of parts[i] in `graph`.
  std::vector<Vertex> offsets;
};

/// Throws InputError on an empty sequence.
DisjointUnion disjoint_union(std::span<const Graph> parts);

/// Induced subgraph; local vertex i is vertices[i].
Graph induced_subgraph(const Graph& x, std::span<const Vertex> vertices);

/// Image of x under the relabelling v -> perm[v].
Graph relabel(const Graph& x, const Permutation& perm);

bool is_connected(const Graph& x);

struct IsoClass {
  /// Indices into ComponentDecomposition::components; members[0] is the representative.
  std::vector<std::size_t> members;
  /// witnesses[i] maps local vertex v of the representative to a local vertex
  /// of component members[i] (local indices follow the sorted component).
  std::vector<std::vector<Vertex>> witnesses;

  std::size_t multiplicity() const { return members.size(); }
  std::size_t representative() const { return members.front(); }
};

struct ComponentDecomposition {
  /// Each component sorted; listed by smallest vertex.
  std::vector<std::vector<Vertex>> components;
  std::vector<IsoClass> iso_classes;
};

ComponentDecomposition connected_components(const Graph& x,
                                            const SearchLimits& limits = {});

bool is_isomorphism(const Graph& x, const Graph& y, std::span<const Vertex> map);
bool is_automorphism(const Graph& x, const Permutation& p);

/// Vertex bijection x -> y, or nullopt. Throws CapExceeded above the limit.
std::optional<std::vector<Vertex>> are_isomorphic(const Graph& x, const Graph& y,
                                                  const SearchLimits& limits = {});

/// Generators of Aut(x), forming a strong generating set relative to the
/// base 0, 1, ..., n-1. Throws CapExceeded above the limit.
GenSet automorphism_generators(const Graph& x, const SearchLimits& limits = {});

/// prod over isomorphism classes of components of m! * |Aut(C)|^m.
/// The search cap applies per component.
BigInt aut_order_by_components(const Graph& x, const SearchLimits& limits = {});

}  // namespace grouprep
