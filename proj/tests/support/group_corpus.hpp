#pragma once

#include <string>
#include <vector>

#include "grouprep/decide.hpp"

namespace grouprep::testing {

struct NamedGroup {
  std::string name;
  GroupInput group;
  std::size_t order;
};

GenSet perm_group(std::size_t degree, const std::vector<std::vector<std::vector<Point>>>& cycles);

/// Cyclic 2-16, dihedral of orders 6-16, S3, Q8, the trivial group, and the
/// subgroups Z2, Z3, Z4, V4, S3, D4, A4 of S4 given by permutation generators.
std::vector<NamedGroup> groups_up_to_16();

/// groups_up_to_16 plus A4 and S4 as tables and S4 by permutation generators.
std::vector<NamedGroup> groups_up_to_24();

}  // namespace grouprep::testing
