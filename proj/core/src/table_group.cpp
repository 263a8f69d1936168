#include "grouprep/table_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "grouprep/error.hpp"

namespace grouprep {

TableGroup::TableGroup(std::size_t n, std::vector<Element> table)
    : n_(n), table_(std::move(table)), inverse_(n, 0) {
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b)
      if (product(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
}

std::size_t TableGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = product(x, a)) ++k;
  return k;
}

bool TableGroup::is_abelian() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (product(a, b) != product(b, a)) return false;
  return true;
}

std::vector<std::vector<Element>> TableGroup::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    out[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  return out;
}

TableGroup validate_table(const std::vector<std::vector<Element>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw InputError("group table must have at least one element");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n)
      throw InputError("row " + std::to_string(i) + " has " +
                       std::to_string(raw[i].size()) + " entries, expected " +
                       std::to_string(n));
    for (Element e : raw[i]) {
      if (e >= n)
        throw InputError("entry " + std::to_string(e) + " in row " + std::to_string(i) +
                         " is out of range");
      flat.push_back(e);
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[at(i, j)]++)
        throw InputError("row " + std::to_string(i) + " is not Latin (repeats " +
                         std::to_string(at(i, j)) + ")");
      if (col[at(j, i)]++)
        throw InputError("column " + std::to_string(i) + " is not Latin (repeats " +
                         std::to_string(at(j, i)) + ")");
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (at(0, j) != j || at(j, 0) != j)
      throw InputError("element 0 is not a two-sided identity");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw InputError("associativity fails for (" + std::to_string(a) + ", " +
                           std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  return TableGroup(n, std::move(flat));
}

TableGroup table_from_permutations(std::span<const Permutation> elements) {
  const std::size_t n = elements.size();
  if (n == 0 || !elements[0].is_identity())
    throw InputError("permutation list must start with the identity");
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(elements[i], static_cast<Element>(i)).second)
      throw InputError("duplicate permutation in element list");
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(elements[a] * elements[b]);
      if (it == index.end()) throw InputError("permutation list is not closed");
      flat[a * n + b] = it->second;
    }
  return TableGroup(n, std::move(flat));
}

bool ElementSubset::contains(Element e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

ElementSubset subgroup_closure(const TableGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> list{0};
  in[0] = 1;
  for (std::size_t head = 0; head < list.size(); ++head)
    for (Element s : gens) {
      Element x = g.product(list[head], s);
      if (!in[x]) {
        in[x] = 1;
        list.push_back(x);
      }
    }
  std::sort(list.begin(), list.end());
  return ElementSubset{std::move(list)};
}

ElementSubset commutator_subgroup(const TableGroup& g, const ElementSubset& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> comms;
  for (Element x : h.members)
    for (Element y : h.members) {
      Element c = g.product(g.product(x, y), g.product(g.inverse(x), g.inverse(y)));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_closure(g, comms);
}

ElementSubset commutator_subgroup(const TableGroup& g) {
  ElementSubset all;
  all.members.resize(g.order());
  std::iota(all.members.begin(), all.members.end(), Element{0});
  return commutator_subgroup(g, all);
}

std::size_t abelianization_order(const TableGroup& g) {
  return g.order() / commutator_subgroup(g).size();
}

std::vector<std::size_t> derived_series_sizes(const TableGroup& g) {
  ElementSubset h;
  h.members.resize(g.order());
  std::iota(h.members.begin(), h.members.end(), Element{0});
  std::vector<std::size_t> out{h.size()};
  while (h.size() > 1) {
    ElementSubset next = commutator_subgroup(g, h);
    if (next.size() == h.size()) break;
    out.push_back(next.size());
    h = std::move(next);
  }
  return out;
}

bool is_solvable_table(const TableGroup& g) { return derived_series_sizes(g).back() == 1; }

StandardKind parse_standard_kind(std::string_view name) {
  if (name == "cyclic") return StandardKind::cyclic;
  if (name == "dihedral") return StandardKind::dihedral;
  if (name == "symmetric") return StandardKind::symmetric;
  if (name == "alternating") return StandardKind::alternating;
  if (name == "quaternion") return StandardKind::quaternion;
  throw InputError("unknown standard group kind '" + std::string(name) + "'");
}

namespace {

std::vector<Permutation> lexicographic_permutations(std::size_t n, bool even_only) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<Permutation> out;
  do {
    Permutation p(im);
    if (!even_only || (n - p.cycle_type().size()) % 2 == 0) out.push_back(std::move(p));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// Unit quaternions +-1, +-i, +-j, +-k as (sign, basis) with basis 0..3 = 1,i,j,k.
TableGroup quaternion_group() {
  // basis_mul[a][b] = (sign, basis) of e_a * e_b.
  static constexpr int kSign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int kBasis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  // Index 2*basis + (sign < 0): 0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k.
  std::vector<std::vector<Element>> raw(8, std::vector<Element>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int bx = x / 2, by = y / 2;
      int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * kSign[bx][by];
      raw[x][y] = static_cast<Element>(2 * kBasis[bx][by] + (sign < 0 ? 1 : 0));
    }
  return validate_table(raw);
}

}  // namespace

TableGroup make_standard(StandardKind kind, std::size_t n) {
  switch (kind) {
    case StandardKind::cyclic: {
      if (n < 1 || n > 1000) throw InputError("cyclic group order must be in 1..1000");
      std::vector<Element> flat(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = static_cast<Element>((i + j) % n);
      return TableGroup(n, std::move(flat));
    }
    case StandardKind::dihedral: {
      if (n < 1 || n > 1000) throw InputError("dihedral parameter must be in 1..1000");
      // Element r^a s^b has index a + n*b; s r s = r^-1.
      const std::size_t order = 2 * n;
      std::vector<Element> flat(order * order);
      for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
          std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
          std::size_t rot = b ? (a + n - c) % n : (a + c) % n;
          flat[x * order + y] = static_cast<Element>(rot + n * ((b + d) % 2));
        }
      return TableGroup(order, std::move(flat));
    }
    case StandardKind::symmetric:
    case StandardKind::alternating: {
      if (n < 1 || n > 6)
        throw InputError("symmetric/alternating degree must be in 1..6");
      auto elems = lexicographic_permutations(n, kind == StandardKind::alternating);
      return table_from_permutations(elems);
    }
    case StandardKind::quaternion:
      if (n != 8) throw InputError("the quaternion group is only available with order 8");
      return quaternion_group();
  }
  throw InputError("unknown standard group kind");
}

std::vector<Element> minimal_generating_sequence(const TableGroup& g) {
  std::vector<Element> seq;
  ElementSubset closure{{0}};
  for (Element e = 1; e < g.order() && closure.size() < g.order(); ++e) {
    if (closure.contains(e)) continue;
    seq.push_back(e);
    closure = subgroup_closure(g, seq);
  }
  return seq;
}

}  // namespace grouprep
