#pragma once

/**
 * @file perm.hpp
 * @brief Permutations acting on {0..n-1} from the right, generator sets
 * and deterministic Schreier-Sims stabilizer chains.
 *
 * Convention: `p[i]` is the image of i under p, and `p * q` applies p
 * first, then q.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grouprep/bigint.hpp"

namespace grouprep {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;

  /// Throws InputError unless `images` is a bijection on {0..size-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Smallest point moved by this permutation, or degree() for the identity.
  Point smallest_moved() const;

  /// Least common multiple of the cycle lengths.
  BigInt order() const;

  /// Lengths of all cycles (including fixed points), sorted descending.
  std::vector<std::size_t> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// Result maps i to (i^p)^q. Throws InputError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// [x, y] = x y x^-1 y^-1 (left factor applied first).
Permutation commutator(const Permutation& x, const Permutation& y);

/// Space-separated image list, e.g. "1 2 0".
std::string to_string(const Permutation& p);

/// Cycle notation with 0-indexed points, e.g. "(0 1 2)"; "()" for the identity.
std::string to_cycle_string(const Permutation& p);

/// A permutation group presented by generators. An empty generator list
/// denotes the trivial group.
class GenSet {
 public:
  /// Throws InputError for degree 0 or a generator of the wrong degree.
  GenSet(std::size_t degree, std::vector<Permutation> gens);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& gens() const { return gens_; }

  friend bool operator==(const GenSet&, const GenSet&) = default;

 private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
};

/// Base and strong generating set with explicit transversals.
///
/// Level i stabilizes base[0..i-1] pointwise; its transversal maps base[i]
/// to every point in its orbit.
class StrongGenSet {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    /// Indexed by point; degree-0 placeholder when the point is not in the orbit.
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;

    bool in_orbit(Point p) const { return transversal[p].degree() != 0; }
  };

  explicit StrongGenSet(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<Point> base() const;

  /// Union of the level generators, without duplicates.
  std::vector<Permutation> strong_generators() const;

  BigInt order() const;

  /// Sifts `p` through the levels starting at `from`. Returns the residue
  /// and the level at which sifting stopped (levels().size() if it went
  /// all the way through).
  std::pair<Permutation, std::size_t> sift(Permutation p,
                                           std::size_t from = 0) const;

  /// Throws InputError on degree mismatch.
  bool contains(const Permutation& p) const;

 private:
  friend StrongGenSet schreier_sims(const GenSet& g);

  void rebuild_orbit(std::size_t level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Deterministic Schreier-Sims. New base points are the smallest point
/// moved by the generator that forces them.
StrongGenSet schreier_sims(const GenSet& g);

inline BigInt order(const StrongGenSet& sgs) { return sgs.order(); }
inline bool contains(const StrongGenSet& sgs, const Permutation& p) {
  return sgs.contains(p);
}

/// Orbits of the generated group, each sorted, listed by smallest member.
std::vector<std::vector<Point>> orbits(const GenSet& g);

/// Generators of the commutator subgroup G' (normal closure of the
/// commutators of generator pairs).
GenSet commutator_gens(const GenSet& g);

/// Orders of G, G', G'', ... until the series stabilizes.
std::vector<BigInt> derived_series_orders(const GenSet& g);

bool is_solvable_perm(const GenSet& g);

/// Every element of the group, enumerated from the transversals.
/// Throws CapExceeded if the order exceeds `cap`.
std::vector<Permutation> enumerate_elements(const StrongGenSet& sgs,
                                            std::size_t cap);

}  // namespace grouprep
