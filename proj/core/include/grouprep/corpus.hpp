#pragma once

/**
 * @file corpus.hpp
 * @brief Small exhaustive graph and tree families.
 */

#include <cstddef>
#include <vector>

#include "grouprep/graph.hpp"

namespace grouprep {

/// Path on n vertices (0-1-...-(n-1)).
Graph path_graph(std::size_t n);

/// Complete graph K_n.
Graph complete_graph(std::size_t n);

/// One representative of every connected graph on n vertices up to
/// isomorphism, 1 <= n <= 6. Each representative is the labelling with the
/// lexicographically smallest adjacency bitmask, and the list is sorted by it.
std::vector<Graph> connected_graphs(std::size_t n);

/// One representative of every free tree on n vertices up to isomorphism,
/// 1 <= n <= 14, sorted by free_tree_code.
std::vector<Graph> free_trees(std::size_t n);

}  // namespace grouprep
