#pragma once

/**
 * @file table_group.hpp
 * @brief Finite groups given by a full multiplication table.
 *
 * Elements are indices 0..n-1 and element 0 is always the identity.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "grouprep/perm.hpp"

namespace grouprep {

using Element = std::uint32_t;

enum class StandardKind { cyclic, dihedral, symmetric, alternating, quaternion };

class TableGroup {
 public:
  std::size_t order() const { return n_; }
  Element product(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::size_t element_order(Element a) const;
  bool is_abelian() const;

  std::vector<std::vector<Element>> rows() const;

  friend bool operator==(const TableGroup&, const TableGroup&) = default;

 private:
  friend TableGroup validate_table(const std::vector<std::vector<Element>>& raw);
  friend TableGroup table_from_permutations(std::span<const Permutation> elements);
  friend TableGroup make_standard(StandardKind kind, std::size_t n);

  TableGroup(std::size_t n, std::vector<Element> table);

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

/// Throws InputError when an entry is out of range, a row or column is not
/// Latin, element 0 is not a two-sided identity, or associativity fails
/// (the message names a witness triple).
TableGroup validate_table(const std::vector<std::vector<Element>>& raw);

/// Multiplication table of a list of permutations closed under composition,
/// with the identity at position 0. Element i*j is the index of
/// elements[i] * elements[j]. Throws InputError if the list is not a group.
TableGroup table_from_permutations(std::span<const Permutation> elements);

/// Sorted set of element indices; always contains 0 when produced by a
/// closure routine.
struct ElementSubset {
  std::vector<Element> members;

  std::size_t size() const { return members.size(); }
  bool contains(Element e) const;
  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;
};

ElementSubset subgroup_closure(const TableGroup& g, std::span<const Element> gens);

/// Closure of all commutators [x, y] with x, y in `h` (a subgroup of g).
ElementSubset commutator_subgroup(const TableGroup& g, const ElementSubset& h);
ElementSubset commutator_subgroup(const TableGroup& g);

/// #G / #G'.
std::size_t abelianization_order(const TableGroup& g);

/// Sizes of G, G', G'', ... until the series stabilizes.
std::vector<std::size_t> derived_series_sizes(const TableGroup& g);

bool is_solvable_table(const TableGroup& g);

/// Throws InputError on an unknown name.
StandardKind parse_standard_kind(std::string_view name);

/// Caps: symmetric/alternating n <= 6; cyclic/dihedral 1 <= n <= 1000
/// (dihedral n has order 2n); quaternion requires n == 8.
/// Symmetric and alternating elements are listed in lexicographic image order.
TableGroup make_standard(StandardKind kind, std::size_t n);

/// Greedy: scan elements by ascending index and keep each one not already in
/// the closure of those kept so far.
std::vector<Element> minimal_generating_sequence(const TableGroup& g);

}  // namespace grouprep
