#include "grouprep/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "grouprep/error.hpp"

namespace grouprep {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InputError("permutation images are not a bijection on 0.." +
                       std::to_string(images_.size() ? images_.size() - 1 : 0));
    seen[p] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]])
        throw InputError("invalid cycle specification");
      used[c[i]] = 1;
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Point Permutation::smallest_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

BigInt Permutation::order() const {
  BigInt r = 1;
  for (std::size_t len : cycle_type()) {
    BigInt l = len;
    r = r / boost::multiprecision::gcd(r, l) * l;
  }
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InputError("cannot compose permutations of degree " +
                     std::to_string(p.degree()) + " and " +
                     std::to_string(q.degree()));
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < r.images_.size(); ++i) r.images_[i] = q.images_[p.images_[i]];
  return r;
}

Permutation commutator(const Permutation& x, const Permutation& y) {
  return x * y * x.inverse() * y.inverse();
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) os << ' ';
    os << p[static_cast<Point>(i)];
  }
  return os.str();
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream os;
  std::vector<char> seen(p.degree(), 0);
  bool any = false;
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    os << '(';
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (j != i) os << ' ';
      os << j;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

GenSet::GenSet(std::size_t degree, std::vector<Permutation> gens)
    : degree_(degree), gens_(std::move(gens)) {
  if (degree_ == 0) throw InputError("generator set must have positive degree");
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw InputError("generator of degree " + std::to_string(g.degree()) +
                       " in a generator set of degree " + std::to_string(degree_));
}

// ---------------------------------------------------------------------------
// Stabilizer chain

std::vector<Point> StrongGenSet::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

std::vector<Permutation> StrongGenSet::strong_generators() const {
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  for (const auto& l : levels_)
    for (const auto& g : l.generators)
      if (seen.insert(g).second) out.push_back(g);
  return out;
}

BigInt StrongGenSet::order() const {
  BigInt r = 1;
  for (const auto& l : levels_) r *= l.orbit.size();
  return r;
}

std::pair<Permutation, std::size_t> StrongGenSet::sift(Permutation p,
                                                       std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    Point beta = p[l.base_point];
    if (!l.in_orbit(beta)) return {std::move(p), i};
    p = p * l.inverse_transversal[beta];
  }
  return {std::move(p), levels_.size()};
}

bool StrongGenSet::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw InputError("membership test with a permutation of degree " +
                     std::to_string(p.degree()) + " against a group of degree " +
                     std::to_string(degree_));
  return sift(p).first.is_identity();
}

void StrongGenSet::rebuild_orbit(std::size_t level) {
  Level& l = levels_[level];
  l.orbit.clear();
  l.transversal.assign(degree_, Permutation());
  l.inverse_transversal.assign(degree_, Permutation());
  l.transversal[l.base_point] = Permutation::identity(degree_);
  l.inverse_transversal[l.base_point] = Permutation::identity(degree_);
  l.orbit.push_back(l.base_point);
  for (std::size_t head = 0; head < l.orbit.size(); ++head) {
    Point beta = l.orbit[head];
    for (const auto& s : l.generators) {
      Point gamma = s[beta];
      if (l.in_orbit(gamma)) continue;
      l.transversal[gamma] = l.transversal[beta] * s;
      l.inverse_transversal[gamma] = l.transversal[gamma].inverse();
      l.orbit.push_back(gamma);
    }
  }
}

StrongGenSet schreier_sims(const GenSet& g) {
  StrongGenSet sgs(g.degree());
  auto& levels = sgs.levels_;

  std::vector<Permutation> gens;
  for (const auto& p : g.gens())
    if (!p.is_identity() && std::find(gens.begin(), gens.end(), p) == gens.end())
      gens.push_back(p);

  auto fixes_prefix = [&](const Permutation& p, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
      if (p[levels[i].base_point] != levels[i].base_point) return false;
    return true;
  };

  for (const auto& p : gens) {
    if (fixes_prefix(p, levels.size())) {
      StrongGenSet::Level l;
      l.base_point = p.smallest_moved();
      levels.push_back(std::move(l));
    }
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (const auto& p : gens)
      if (fixes_prefix(p, i)) levels[i].generators.push_back(p);
    sgs.rebuild_orbit(i);
  }

  // Levels above `i` are complete; check the Schreier generators at `i`.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const std::size_t lvl = static_cast<std::size_t>(i);
    const std::vector<Point> orbit = levels[lvl].orbit;
    const std::vector<Permutation> level_gens = levels[lvl].generators;
    for (std::size_t oi = 0; oi < orbit.size() && !extended; ++oi) {
      Point beta = orbit[oi];
      for (const auto& s : level_gens) {
        Point image = s[beta];
        Permutation h = levels[lvl].transversal[beta] * s *
                        levels[lvl].inverse_transversal[image];
        if (h.is_identity()) continue;
        auto [residue, stop] = sgs.sift(std::move(h), lvl + 1);
        if (residue.is_identity()) continue;
        if (stop == levels.size()) {
          StrongGenSet::Level l;
          l.base_point = residue.smallest_moved();
          levels.push_back(std::move(l));
        }
        for (std::size_t j = lvl + 1; j <= stop; ++j) {
          levels[j].generators.push_back(residue);
          sgs.rebuild_orbit(j);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
  return sgs;
}

std::vector<std::vector<Point>> orbits(const GenSet& g) {
  const std::size_t n = g.degree();
  std::vector<int> id(n, -1);
  std::vector<std::vector<Point>> out;
  for (Point start = 0; start < n; ++start) {
    if (id[start] >= 0) continue;
    std::vector<Point> orbit{start};
    id[start] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& p : g.gens()) {
        Point q = p[orbit[head]];
        if (id[q] < 0) {
          id[q] = static_cast<int>(out.size());
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

GenSet commutator_gens(const GenSet& g) {
  const auto& gens = g.gens();
  std::vector<Permutation> normal;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      Permutation c = commutator(gens[a], gens[b]);
      if (!c.is_identity() && std::find(normal.begin(), normal.end(), c) == normal.end())
        normal.push_back(std::move(c));
    }

  // Normal closure: conjugate by the generators of G until closed.
  StrongGenSet sgs = schreier_sims(GenSet(g.degree(), normal));
  for (std::size_t head = 0; head < normal.size(); ++head) {
    for (const auto& x : gens) {
      Permutation conj = x.inverse() * normal[head] * x;
      if (sgs.contains(conj)) continue;
      normal.push_back(std::move(conj));
      sgs = schreier_sims(GenSet(g.degree(), normal));
    }
  }
  return GenSet(g.degree(), std::move(normal));
}

std::vector<BigInt> derived_series_orders(const GenSet& g) {
  std::vector<BigInt> out{schreier_sims(g).order()};
  GenSet current = g;
  while (out.back() > 1) {
    GenSet next = commutator_gens(current);
    BigInt ord = schreier_sims(next).order();
    if (ord == out.back()) break;
    out.push_back(ord);
    current = std::move(next);
  }
  return out;
}

bool is_solvable_perm(const GenSet& g) { return derived_series_orders(g).back() == 1; }

std::vector<Permutation> enumerate_elements(const StrongGenSet& sgs, std::size_t cap) {
  if (sgs.order() > cap)
    throw CapExceeded("group of order " + sgs.order().str() +
                      " exceeds the element enumeration cap of " + std::to_string(cap));
  // Every element factors uniquely as u_{k-1} ... u_1 u_0 with u_i in the
  // level-i transversal.
  std::vector<Permutation> elems{Permutation::identity(sgs.degree())};
  const auto& levels = sgs.levels();
  for (std::size_t i = levels.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(elems.size() * levels[i].orbit.size());
    for (const auto& e : elems)
      for (Point beta : levels[i].orbit) next.push_back(e * levels[i].transversal[beta]);
    elems = std::move(next);
  }
  return elems;
}

}  // namespace grouprep
