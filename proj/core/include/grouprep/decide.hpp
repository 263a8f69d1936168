#pragma once

/**
 * @file decide.hpp
 * @brief Group representability decisions.
 *
 * A group G is representable on a graph X when some homomorphism
 * G -> Aut(X) is nontrivial. This header provides:
 *  - the reduction from graph isomorphism to representability of Z/pZ,
 *  - the prime-factor decision for solvable groups,
 *  - the recursive decision on trees driven by permutation representability,
 *  - an exhaustive oracle used as ground truth.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grouprep/bigint.hpp"
#include "grouprep/graph.hpp"
#include "grouprep/perm.hpp"
#include "grouprep/table_group.hpp"

namespace grouprep {

using GroupInput = std::variant<TableGroup, GenSet>;

enum class Method { prime_factor, recursive_tree, oracle_search, star_reduction };

std::string_view to_string(Method m);

/// Images of a generating list of G.
///
/// For a TableGroup, `generators` are element indices (the group's
/// minimal_generating_sequence). For a GenSet they are positions in
/// gens(), always 0..r-1.
struct HomWitness {
  std::vector<std::uint32_t> generators;
  std::vector<Permutation> images;
};

struct DecisionStats {
  std::size_t recursive_calls = 0;
  std::size_t perm_rep_queries = 0;
  std::size_t search_nodes = 0;
};

struct Verdict {
  bool representable = false;
  std::optional<HomWitness> witness;
  Method method = Method::oracle_search;
  DecisionStats stats;
};

struct DecideLimits {
  SearchLimits graph;
  /// Largest n for which decide_perm_rep searches S_n.
  std::size_t max_perm_degree = 10;
  /// Largest #G handled by homomorphism search (and table materialization).
  std::size_t max_group_order = 2000;
  /// oracle_representable refuses larger graphs ...
  std::size_t oracle_max_vertices = 10;
  /// ... and larger automorphism groups.
  std::size_t oracle_max_aut = 100000;
  /// decide_perm_rep answers n >= #G > 1 with the regular action instead of searching.
  bool use_regular_action = true;
};

BigInt group_order(const GroupInput& g);

/// #G / #G'.
BigInt abelianization_order(const GroupInput& g);

bool is_solvable(const GroupInput& g);

/// Multiplication table of a permutation group. elements[0] is the
/// identity; generator_elements[i] is the index of gens()[i].
struct MaterializedGroup {
  TableGroup table;
  std::vector<Permutation> elements;
  std::vector<Element> generator_elements;
};

/// Throws CapExceeded when the group order exceeds `cap`.
MaterializedGroup materialize(const GenSet& g, std::size_t cap);

struct ComponentSource {
  char source;  // 'X' or 'Y'
  Vertex offset;
};

struct ReductionOutput {
  Graph z;
  std::uint32_t p;
  /// Cyclic group of order p.
  TableGroup group;
  /// Whether both inputs were replaced by their complements.
  bool complemented;
  /// Vertex count of each input.
  std::size_t n;
  /// One entry per copy, in vertex order: p-1 copies of X then one of Y.
  std::vector<ComponentSource> components;
};

struct ShortCircuit {
  bool isomorphic;
  std::string reason;
};

using ReductionResult = std::variant<ReductionOutput, ShortCircuit>;

/// Smallest prime p with n < p < 2n. Throws InputError for n < 2.
std::uint32_t smallest_prime_between(std::size_t n);

/// Z = (p-1) copies of X plus one copy of Y, for the smallest prime
/// n < p < 2n; both inputs are complemented first if either is
/// disconnected. Short-circuits on different vertex counts, on n == 1 and
/// when the connectivity of X and Y cannot be matched by complementing.
ReductionResult reduce_gi_to_abelian(const Graph& x, const Graph& y);

/// The order-p automorphism of Z built from an isomorphism `iso` from X to Y:
/// copy i -> copy i+1 for the first p-2 copies, the last X copy -> Y via
/// iso, and Y -> the first copy via iso^-1.
Permutation reduction_cycle_automorphism(const ReductionOutput& out,
                                         std::span<const Vertex> iso);

/// gcd(#G/G', #Aut(X)) > 1. Throws InputError for non-solvable groups.
Verdict decide_solvable_rep(const GroupInput& g, const Graph& x,
                            const DecideLimits& limits = {});

/// Whether a nontrivial homomorphism G -> S_n exists, by exact backtracking
/// over generator images. Throws InputError for n == 0 and CapExceeded
/// beyond the limits.
Verdict decide_perm_rep(const GroupInput& g, std::size_t n, const DecideLimits& limits = {});

/// Hub 0 joined to leaves 1..n. Throws InputError for n == 0.
Graph star_tree(std::size_t n);

/// Representability on a tree: root it, then recurse over the classes of
/// isomorphic child subtrees, asking decide_perm_rep for each multiplicity.
/// The witness, when present, consists of automorphisms of `tree`.
Verdict decide_tree_rep(const GroupInput& g, const Graph& tree,
                        const DecideLimits& limits = {});

/// Permutation representability answered on star_tree(n) (on a single
/// vertex for n == 1).
Verdict decide_perm_rep_by_star(const GroupInput& g, std::size_t n,
                                const DecideLimits& limits = {});

/// Ground truth by exhaustive search: enumerates Aut(X) by plain
/// backtracking and searches all generator images.
Verdict oracle_representable(const GroupInput& g, const Graph& x,
                             const DecideLimits& limits = {});

/// Every automorphism of x by vertex-by-vertex backtracking (no refinement).
/// Throws CapExceeded once more than `cap` are found.
std::vector<Permutation> enumerate_automorphisms(const Graph& x, std::size_t cap);

/// Checks the homomorphism law, that the generators generate G, and that
/// some image is nontrivial.
bool validate_witness(const GroupInput& g, const HomWitness& w, std::size_t degree);

/// As above, and every image is an automorphism of `target`.
bool validate_witness(const GroupInput& g, const HomWitness& w, const Graph& target);

/// Images of every element of `g` under the homomorphism defined by the
/// generator images, or nullopt if they do not define one.
std::optional<std::vector<Permutation>> extend_homomorphism(const TableGroup& g,
                                                            std::span<const Element> gens,
                                                            std::span<const Permutation> images);

}  // namespace grouprep
