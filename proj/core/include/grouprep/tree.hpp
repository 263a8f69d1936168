#pragma once

/**
 * @file tree.hpp
 * @brief Rooted trees, AHU canonical codes, tree automorphisms, orbit
 * subtrees, rooting and the wreath decomposition of a rooted tree's
 * automorphism group.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grouprep/bigint.hpp"
#include "grouprep/graph.hpp"
#include "grouprep/perm.hpp"

namespace grouprep {

class RootedTree {
 public:
  /// parent[root] == root. Throws InputError unless the links form a single
  /// tree hanging from `root`.
  RootedTree(std::vector<Vertex> parent, Vertex root);

  /// Orients a tree graph away from `root`. Throws InputError if `tree` is
  /// not a tree or `root` is out of range.
  static RootedTree from_graph(const Graph& tree, Vertex root);

  std::size_t size() const { return parent_.size(); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  const std::vector<Vertex>& parents() const { return parent_; }
  /// Ascending.
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  bool is_leaf(Vertex v) const { return children_[v].empty(); }

  Graph underlying_graph() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.root_ == b.root_ && a.parent_ == b.parent_;
  }

 private:
  std::vector<Vertex> parent_;
  Vertex root_;
  std::vector<std::vector<Vertex>> children_;
};

bool is_tree(const Graph& x);

/// Throws InputError unless `x` is a tree.
void require_tree(const Graph& x);

/// Canonical code of the subtree rooted at v: "(" + sorted child codes + ")".
std::string ahu_code(const RootedTree& t, Vertex v);

/// ahu_code for every vertex at once.
std::vector<std::string> ahu_codes(const RootedTree& t);

/// Subtree rooted at v, relabelled in breadth-first order (v becomes 0).
/// `original`, when given, receives the original label of each new vertex.
RootedTree subtree_at(const RootedTree& t, Vertex v,
                      std::vector<Vertex>* original = nullptr);

/// Isomorphism from the subtree at `a` onto the subtree at `b` (same tree,
/// equal codes required), as pairs (x, image of x) in preorder.
std::vector<std::pair<Vertex, Vertex>> match_subtrees(const RootedTree& t,
                                                      const std::vector<std::string>& codes,
                                                      Vertex a, Vertex b);

/// One or two centres of a tree, ascending.
std::vector<Vertex> tree_centers(const Graph& tree);

/// Isomorphism-invariant code of an unrooted tree (minimum over centre rootings).
std::string free_tree_code(const Graph& tree);

/// Generators of Aut(tree): anchored at the centre (the central edge is
/// subdivided for bicentral trees); one swap per pair of code-adjacent
/// isomorphic siblings, plus the central flip when the halves match.
GenSet tree_aut_generators(const Graph& tree);

struct OrbitPartition {
  std::vector<std::vector<Vertex>> orbits;
  /// orbit_of[v] indexes `orbits`.
  std::vector<std::size_t> orbit_of;
};

OrbitPartition aut_orbits(const Graph& tree);

struct Subtree {
  Graph graph;
  /// Local vertex i is original vertex vertices[i] (ascending).
  std::vector<Vertex> vertices;
};

/// T_delta: every vertex and edge on a path between two members of `delta`.
/// Throws InputError if `delta` is not an orbit of Aut(tree).
Subtree orbit_subtree(const Graph& tree, std::span<const Vertex> delta);

enum class RootingKind { fixed_vertex, dummy_edge_root };

struct RootingResult {
  RootedTree tree;
  RootingKind kind;
  /// The edge {alpha, beta} that was subdivided; the new vertex is
  /// tree.root() == original vertex count.
  std::optional<Edge> subdivided_edge;
};

/// Roots at the smallest vertex fixed by Aut(tree), or else subdivides the
/// edge joining a two-element orbit and roots at the new vertex.
RootingResult root_tree(const Graph& tree);

struct ChildClass {
  std::size_t multiplicity = 0;
  std::string code;
  /// Root children in this class, ascending.
  std::vector<Vertex> members;
  /// Subtree at members[0].
  RootedTree representative;

  BigInt aut_order() const;
};

struct WreathDecomposition {
  /// Ordered by code.
  std::vector<ChildClass> classes;

  std::size_t t() const { return classes.size(); }
};

WreathDecomposition child_partition(const RootedTree& t);

/// prod_i k_i! |A_i|^{k_i}, recursively.
BigInt wreath_aut_order(const RootedTree& t);

}  // namespace grouprep
