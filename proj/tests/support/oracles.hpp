#pragma once

// Independent brute-force references used to check the library. None of
// these call into the code under test beyond its value types.

#include <cstddef>
#include <set>
#include <vector>

#include "grouprep/graph.hpp"
#include "grouprep/perm.hpp"
#include "grouprep/table_group.hpp"

namespace grouprep::testing {

/// Every element of the group generated by g, by closing under right
/// multiplication with the generators. Refuses degree > 8.
std::set<std::vector<Point>> closure_elements(const GenSet& g);

/// All n! vertex permutations filtered by the automorphism condition. Refuses n > 8.
std::vector<std::vector<Point>> brute_force_automorphisms(const Graph& x);

/// Every subgroup of g as a sorted element list, found by closing cyclic
/// subgroups under pairwise joins.
std::vector<std::vector<Element>> all_subgroups(const TableGroup& g);

/// A nontrivial homomorphism g -> S_n exists iff some proper subgroup has
/// index at most n (the action on its cosets).
bool subgroup_index_oracle(const TableGroup& g, std::size_t n);

/// Nontrivial homomorphism g -> Aut(x), by trying every assignment of
/// brute-force automorphisms to a generating set and checking the
/// homomorphism law on the whole table.
bool brute_force_representable(const TableGroup& g, const Graph& x);

/// Multiplication table of the group generated by g, elements in sorted order
/// with the identity moved to index 0.
TableGroup brute_force_table(const GenSet& g);

}  // namespace grouprep::testing
