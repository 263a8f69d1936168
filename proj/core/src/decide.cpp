#include "grouprep/decide.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "grouprep/error.hpp"
#include "grouprep/tree.hpp"

namespace grouprep {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::prime_factor: return "prime_factor";
    case Method::recursive_tree: return "recursive_tree";
    case Method::oracle_search: return "oracle_search";
    case Method::star_reduction: return "star_reduction";
  }
  return "unknown";
}

BigInt group_order(const GroupInput& g) {
  if (const auto* t = std::get_if<TableGroup>(&g)) return t->order();
  return schreier_sims(std::get<GenSet>(g)).order();
}

BigInt abelianization_order(const GroupInput& g) {
  if (const auto* t = std::get_if<TableGroup>(&g)) return abelianization_order(*t);
  const auto& gs = std::get<GenSet>(g);
  return schreier_sims(gs).order() / schreier_sims(commutator_gens(gs)).order();
}

bool is_solvable(const GroupInput& g) {
  if (const auto* t = std::get_if<TableGroup>(&g)) return is_solvable_table(*t);
  return is_solvable_perm(std::get<GenSet>(g));
}

MaterializedGroup materialize(const GenSet& g, std::size_t cap) {
  auto elements = enumerate_elements(schreier_sims(g), cap);
  TableGroup table = table_from_permutations(elements);
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], static_cast<Element>(i));
  std::vector<Element> gens;
  for (const auto& p : g.gens()) gens.push_back(index.at(p));
  return MaterializedGroup{std::move(table), std::move(elements), std::move(gens)};
}

std::optional<std::vector<Permutation>> extend_homomorphism(const TableGroup& g,
                                                            std::span<const Element> gens,
                                                            std::span<const Permutation> images) {
  if (gens.size() != images.size() || images.empty()) {
    if (g.order() == 1 && gens.empty()) return std::vector<Permutation>{};
    return std::nullopt;
  }
  const std::size_t degree = images[0].degree();
  for (const auto& im : images)
    if (im.degree() != degree) return std::nullopt;
  for (Element s : gens)
    if (s >= g.order()) return std::nullopt;

  std::vector<Permutation> full(g.order());
  full[0] = Permutation::identity(degree);
  std::vector<Element> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element a = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element e = g.product(a, gens[i]);
      Permutation img = full[a] * images[i];
      if (full[e].degree() == 0) {
        full[e] = std::move(img);
        queue.push_back(e);
      } else if (full[e] != img) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != g.order()) return std::nullopt;
  return full;
}

namespace {

bool cycles_divide(std::span<const Point> p, std::size_t order, std::vector<char>& seen) {
  seen.assign(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    if (order % len != 0) return false;
  }
  return true;
}

bool is_identity_span(std::span<const Point> p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

using Visitor = std::function<bool(std::span<const Point>)>;

// Enumerates candidate images for the generator at a given search depth,
// nontrivial candidates first and the identity last. Stops as soon as the
// visitor returns true; returns whether it stopped.
class CandidateSource {
 public:
  virtual ~CandidateSource() = default;
  virtual std::size_t degree() const = 0;
  virtual bool for_each(std::size_t depth, std::size_t gen_order, const Visitor& visit) const = 0;
};

// S_n. At depth 0 only one representative per cycle type is tried:
// conjugating a homomorphism gives a homomorphism.
class SymmetricCandidates final : public CandidateSource {
 public:
  explicit SymmetricCandidates(std::size_t n) : n_(n) {}
  std::size_t degree() const override { return n_; }

  bool for_each(std::size_t depth, std::size_t gen_order, const Visitor& visit) const override {
    if (depth == 0) {
      std::vector<std::size_t> parts;
      return partitions(n_, n_, gen_order, parts, visit);
    }
    std::vector<Point> p(n_);
    std::iota(p.begin(), p.end(), Point{0});
    std::vector<char> seen;
    while (std::next_permutation(p.begin(), p.end()))
      if (cycles_divide(p, gen_order, seen) && visit(p)) return true;
    std::iota(p.begin(), p.end(), Point{0});
    return visit(p);
  }

 private:
  // Partitions of `rest` into parts <= `max_part`, each dividing gen_order,
  // in decreasing lexicographic order (so all-ones, the identity, comes last).
  bool partitions(std::size_t rest, std::size_t max_part, std::size_t gen_order,
                  std::vector<std::size_t>& parts, const Visitor& visit) const {
    if (rest == 0) {
      std::vector<Point> p(n_);
      Point start = 0;
      for (std::size_t len : parts) {
        for (std::size_t i = 0; i < len; ++i)
          p[start + i] = static_cast<Point>(start + (i + 1) % len);
        start += static_cast<Point>(len);
      }
      return visit(p);
    }
    for (std::size_t part = std::min(rest, max_part); part >= 1; --part) {
      if (gen_order % part != 0) continue;
      parts.push_back(part);
      const bool stop = partitions(rest - part, part, gen_order, parts, visit);
      parts.pop_back();
      if (stop) return true;
    }
    return false;
  }

  std::size_t n_;
};

class ListCandidates final : public CandidateSource {
 public:
  explicit ListCandidates(const std::vector<Permutation>& elements)
      : elements_(elements), degree_(elements.empty() ? 0 : elements[0].degree()) {}
  std::size_t degree() const override { return degree_; }

  bool for_each(std::size_t, std::size_t gen_order, const Visitor& visit) const override {
    std::vector<char> seen;
    const Permutation* identity = nullptr;
    for (const auto& e : elements_) {
      if (e.is_identity()) {
        identity = &e;
        continue;
      }
      if (cycles_divide(e.images(), gen_order, seen) && visit(e.images())) return true;
    }
    return identity && visit(identity->images());
  }

 private:
  const std::vector<Permutation>& elements_;
  std::size_t degree_;
};

// Backtracking over images of the generators: after each assignment the
// partial map is extended over the subgroup generated so far and rejected
// on the first conflict.
class HomSearch {
 public:
  HomSearch(const TableGroup& g, std::vector<Element> gens, const CandidateSource& source)
      : g_(g),
        gens_(std::move(gens)),
        source_(source),
        degree_(source.degree()),
        images_(gens_.size() * degree_),
        buffer_(g.order() * degree_),
        defined_(g.order(), 0),
        scratch_(degree_) {
    for (Element s : gens_) orders_.push_back(g_.element_order(s));
  }

  std::optional<std::vector<Permutation>> run() {
    if (gens_.empty() || !dfs(0, 0)) return std::nullopt;
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      out.emplace_back(std::vector<Point>(images_.begin() + static_cast<std::ptrdiff_t>(i * degree_),
                                          images_.begin() + static_cast<std::ptrdiff_t>((i + 1) * degree_)));
    return out;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  Point* image(std::size_t gen) { return images_.data() + gen * degree_; }
  Point* element_image(Element e) { return buffer_.data() + e * degree_; }

  bool consistent(std::size_t last) {
    std::fill(defined_.begin(), defined_.end(), 0);
    std::iota(element_image(0), element_image(0) + degree_, Point{0});
    defined_[0] = 1;
    queue_.assign(1, 0);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Element a = queue_[head];
      for (std::size_t s = 0; s <= last; ++s) {
        const Element e = g_.product(a, gens_[s]);
        const Point* ia = element_image(a);
        const Point* is = image(s);
        for (std::size_t i = 0; i < degree_; ++i) scratch_[i] = is[ia[i]];
        Point* ie = element_image(e);
        if (defined_[e]) {
          if (!std::equal(scratch_.begin(), scratch_.end(), ie)) return false;
        } else {
          std::copy(scratch_.begin(), scratch_.end(), ie);
          defined_[e] = 1;
          queue_.push_back(e);
        }
      }
    }
    return true;
  }

  bool dfs(std::size_t depth, std::size_t nontrivial) {
    if (depth == gens_.size()) return nontrivial > 0;
    return source_.for_each(depth, orders_[depth], [&](std::span<const Point> cand) {
      ++nodes_;
      const bool trivial = is_identity_span(cand);
      if (trivial && nontrivial == 0 && depth + 1 == gens_.size()) return false;
      std::copy(cand.begin(), cand.end(), image(depth));
      if (!consistent(depth)) return false;
      return dfs(depth + 1, nontrivial + (trivial ? 0 : 1));
    });
  }

  const TableGroup& g_;
  std::vector<Element> gens_;
  std::vector<std::size_t> orders_;
  const CandidateSource& source_;
  std::size_t degree_;
  std::vector<Point> images_;
  std::vector<Point> buffer_;
  std::vector<char> defined_;
  std::vector<Element> queue_;
  std::vector<Point> scratch_;
  std::size_t nodes_ = 0;
};

// The group as a multiplication table together with the generators that
// witnesses are reported in.
struct TableView {
  TableGroup table;
  std::vector<Element> search_generators;
  /// Element index of each reported generator.
  std::vector<Element> witness_elements;
  /// Reported generator ids (element indices or input positions).
  std::vector<std::uint32_t> witness_ids;
};

TableView table_view(const GroupInput& g, std::size_t cap) {
  if (const auto* t = std::get_if<TableGroup>(&g)) {
    if (t->order() > cap)
      throw CapExceeded("group of order " + std::to_string(t->order()) +
                        " exceeds the homomorphism search cap of " + std::to_string(cap));
    auto mgs = minimal_generating_sequence(*t);
    std::vector<std::uint32_t> ids(mgs.begin(), mgs.end());
    return TableView{*t, mgs, mgs, std::move(ids)};
  }
  auto m = materialize(std::get<GenSet>(g), cap);
  auto mgs = minimal_generating_sequence(m.table);
  std::vector<std::uint32_t> ids(m.generator_elements.size());
  std::iota(ids.begin(), ids.end(), std::uint32_t{0});
  return TableView{std::move(m.table), std::move(mgs), std::move(m.generator_elements),
                   std::move(ids)};
}

HomWitness make_witness(const TableView& view, const std::vector<Permutation>& search_images) {
  auto full = extend_homomorphism(view.table, view.search_generators, search_images);
  if (!full) throw std::logic_error("search produced an inconsistent homomorphism");
  HomWitness w;
  w.generators = view.witness_ids;
  for (Element e : view.witness_elements) w.images.push_back((*full)[e]);
  return w;
}

std::optional<HomWitness> search_witness(const TableView& view, const CandidateSource& source,
                                         DecisionStats& stats) {
  HomSearch search(view.table, view.search_generators, source);
  auto images = search.run();
  stats.search_nodes += search.nodes();
  if (!images) return std::nullopt;
  return make_witness(view, *images);
}

// Recursive tree decision; memoized on subtree codes so each distinct
// subtree is decided once.
class TreeDecider {
 public:
  TreeDecider(const GroupInput& g, const RootedTree& t, const DecideLimits& limits)
      : g_(g), t_(t), limits_(limits), codes_(ahu_codes(t)) {}

  bool decide(Vertex v) {
    if (t_.is_leaf(v)) return false;
    if (auto it = memo_.find(codes_[v]); it != memo_.end()) return it->second;
    ++stats.recursive_calls;
    const auto classes = child_classes(v);
    bool result = false;
    for (const auto& cls : classes)
      if (cls.size() >= 2 && perm(cls.size()).representable) {
        result = true;
        break;
      }
    if (!result)
      for (const auto& cls : classes)
        if (decide(cls.front())) {
          result = true;
          break;
        }
    memo_.emplace(codes_[v], result);
    return result;
  }

  // Automorphisms of t_ (acting only inside the subtree at v) that images
  // the reported generators nontrivially. Requires decide(v).
  HomWitness lift(Vertex v) {
    const auto classes = child_classes(v);
    for (const auto& cls : classes) {
      if (cls.size() < 2 || !perm(cls.size()).representable) continue;
      const HomWitness& pw = *perm(cls.size()).witness;
      // copies[j][i] is the vertex of copy j matching position i of copy 0.
      std::vector<std::vector<Vertex>> copies;
      for (Vertex c : cls) {
        std::vector<Vertex> row;
        for (auto [x, y] : match_subtrees(t_, codes_, cls.front(), c)) row.push_back(y);
        copies.push_back(std::move(row));
      }
      HomWitness w;
      w.generators = pw.generators;
      for (const auto& sigma : pw.images) {
        std::vector<Point> im(t_.size());
        std::iota(im.begin(), im.end(), Point{0});
        for (std::size_t j = 0; j < cls.size(); ++j)
          for (std::size_t i = 0; i < copies[j].size(); ++i)
            im[copies[j][i]] = copies[sigma[static_cast<Point>(j)]][i];
        w.images.emplace_back(std::move(im));
      }
      return w;
    }
    for (const auto& cls : classes)
      if (decide(cls.front())) return lift(cls.front());
    throw std::logic_error("lift called on a subtree without a representation");
  }

  DecisionStats stats;

 private:
  std::vector<std::vector<Vertex>> child_classes(Vertex v) const {
    std::map<std::string, std::vector<Vertex>> groups;
    for (Vertex c : t_.children(v)) groups[codes_[c]].push_back(c);
    std::vector<std::vector<Vertex>> out;
    for (auto& [code, members] : groups) out.push_back(std::move(members));
    return out;
  }

  const Verdict& perm(std::size_t k) {
    auto it = perm_memo_.find(k);
    if (it == perm_memo_.end()) {
      ++stats.perm_rep_queries;
      Verdict v = decide_perm_rep(g_, k, limits_);
      stats.search_nodes += v.stats.search_nodes;
      it = perm_memo_.emplace(k, std::move(v)).first;
    }
    return it->second;
  }

  const GroupInput& g_;
  const RootedTree& t_;
  const DecideLimits& limits_;
  std::vector<std::string> codes_;
  std::map<std::string, bool> memo_;
  std::map<std::size_t, Verdict> perm_memo_;
};

}  // namespace

std::uint32_t smallest_prime_between(std::size_t n) {
  if (n < 2) throw InputError("no prime strictly between n and 2n for n < 2");
  const std::size_t limit = 2 * n;
  std::vector<char> composite(limit + 1, 0);
  for (std::size_t i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (std::size_t j = i * i; j <= limit; j += i) composite[j] = 1;
  for (std::size_t p = n + 1; p < limit; ++p)
    if (!composite[p]) return static_cast<std::uint32_t>(p);
  throw std::logic_error("no prime between n and 2n");
}

ReductionResult reduce_gi_to_abelian(const Graph& x, const Graph& y) {
  const std::size_t n = x.vertex_count();
  if (y.vertex_count() != n) return ShortCircuit{false, "vertex counts differ"};
  if (n == 1) return ShortCircuit{true, "single-vertex graphs"};

  const bool complemented = !is_connected(x) || !is_connected(y);
  const Graph gx = complemented ? complement(x) : x;
  const Graph gy = complemented ? complement(y) : y;
  if (!is_connected(gx) || !is_connected(gy))
    return ShortCircuit{false, "exactly one graph is connected and complementing cannot fix it"};

  const std::uint32_t p = smallest_prime_between(n);
  std::vector<Graph> parts(p - 1, gx);
  parts.push_back(gy);
  DisjointUnion u = disjoint_union(parts);

  std::vector<ComponentSource> components;
  for (std::uint32_t i = 0; i < p; ++i)
    components.push_back(ComponentSource{i + 1 < p ? 'X' : 'Y', u.offsets[i]});
  return ReductionOutput{std::move(u.graph), p, make_standard(StandardKind::cyclic, p),
                         complemented, n, std::move(components)};
}

Permutation reduction_cycle_automorphism(const ReductionOutput& out,
                                         std::span<const Vertex> iso) {
  const std::size_t n = out.n;
  const std::uint32_t p = out.p;
  if (iso.size() != n) throw InputError("isomorphism has the wrong size");
  std::vector<Vertex> inv(n);
  for (Vertex v = 0; v < n; ++v) inv[iso[v]] = v;
  std::vector<Point> im(out.z.vertex_count());
  const auto copy = [&](std::uint32_t c, Vertex v) { return static_cast<Point>(c * n + v); };
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t c = 0; c + 2 < p; ++c) im[copy(c, v)] = copy(c + 1, v);
    im[copy(p - 2, v)] = copy(p - 1, iso[v]);
    im[copy(p - 1, v)] = copy(0, inv[v]);
  }
  return Permutation(std::move(im));
}

Verdict decide_solvable_rep(const GroupInput& g, const Graph& x, const DecideLimits& limits) {
  if (!is_solvable(g)) throw InputError("group is not solvable");
  Verdict v;
  v.method = Method::prime_factor;
  const BigInt quotient = abelianization_order(g);
  const BigInt aut = aut_order_by_components(x, limits.graph);
  v.representable = boost::multiprecision::gcd(quotient, aut) > 1;
  return v;
}

Verdict decide_perm_rep(const GroupInput& g, std::size_t n, const DecideLimits& limits) {
  if (n == 0) throw InputError("permutation degree must be positive");
  Verdict v;
  v.method = Method::oracle_search;
  if (n == 1) return v;
  const BigInt order = group_order(g);
  if (order == 1) return v;

  if (limits.use_regular_action && order <= n) {
    const TableView view = table_view(g, limits.max_group_order);
    HomWitness w;
    w.generators = view.witness_ids;
    for (Element s : view.witness_elements) {
      std::vector<Point> im(n);
      std::iota(im.begin(), im.end(), Point{0});
      for (Element a = 0; a < view.table.order(); ++a) im[a] = view.table.product(a, s);
      w.images.emplace_back(std::move(im));
    }
    v.representable = true;
    v.witness = std::move(w);
    return v;
  }

  if (n > limits.max_perm_degree)
    throw CapExceeded("permutation degree " + std::to_string(n) +
                      " exceeds the search cap of " + std::to_string(limits.max_perm_degree));
  const TableView view = table_view(g, limits.max_group_order);
  SymmetricCandidates source(n);
  v.witness = search_witness(view, source, v.stats);
  v.representable = v.witness.has_value();
  return v;
}

Graph star_tree(std::size_t n) {
  if (n == 0) throw InputError("star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= n; ++leaf) edges.emplace_back(0, leaf);
  return Graph(n + 1, edges);
}

Verdict decide_tree_rep(const GroupInput& g, const Graph& tree, const DecideLimits& limits) {
  const RootingResult rooting = root_tree(tree);
  TreeDecider decider(g, rooting.tree, limits);
  Verdict v;
  v.method = Method::recursive_tree;
  v.representable = decider.decide(rooting.tree.root());
  if (v.representable) {
    HomWitness w = decider.lift(rooting.tree.root());
    if (rooting.kind == RootingKind::dummy_edge_root) {
      // The subdivision vertex is the root and is fixed; drop it.
      for (auto& im : w.images) {
        auto pts = im.images();
        im = Permutation(std::vector<Point>(pts.begin(), pts.end() - 1));
      }
    }
    v.witness = std::move(w);
  }
  v.stats = decider.stats;
  return v;
}

Verdict decide_perm_rep_by_star(const GroupInput& g, std::size_t n, const DecideLimits& limits) {
  // star_tree(1) is a single edge, whose automorphism group is S_2; the
  // one-vertex tree realizes S_1.
  Verdict v = n == 1 ? decide_tree_rep(g, Graph(1, std::span<const Edge>{}), limits)
                     : decide_tree_rep(g, star_tree(n), limits);
  v.method = Method::star_reduction;
  return v;
}

std::vector<Permutation> enumerate_automorphisms(const Graph& x, std::size_t cap) {
  const std::size_t n = x.vertex_count();
  std::vector<Permutation> out;
  std::vector<Point> map(n);
  std::vector<char> used(n, 0);
  std::function<void(Vertex)> extend = [&](Vertex v) {
    if (v == n) {
      if (out.size() >= cap)
        throw CapExceeded("more than " + std::to_string(cap) + " automorphisms");
      out.emplace_back(map);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || x.degree(w) != x.degree(v)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = x.adjacent(u, v) == x.adjacent(map[u], w);
      if (!ok) continue;
      used[w] = 1;
      map[v] = w;
      extend(v + 1);
      used[w] = 0;
    }
  };
  extend(0);
  return out;
}

Verdict oracle_representable(const GroupInput& g, const Graph& x, const DecideLimits& limits) {
  if (x.vertex_count() > limits.oracle_max_vertices)
    throw CapExceeded("oracle limited to graphs with at most " +
                      std::to_string(limits.oracle_max_vertices) + " vertices");
  Verdict v;
  v.method = Method::oracle_search;
  const auto automorphisms = enumerate_automorphisms(x, limits.oracle_max_aut);
  if (group_order(g) == 1 || automorphisms.size() == 1) return v;
  const TableView view = table_view(g, limits.max_group_order);
  ListCandidates source(automorphisms);
  v.witness = search_witness(view, source, v.stats);
  v.representable = v.witness.has_value();
  return v;
}

bool validate_witness(const GroupInput& g, const HomWitness& w, std::size_t degree) {
  if (w.generators.size() != w.images.size()) return false;
  for (const auto& im : w.images)
    if (im.degree() != degree) return false;
  if (std::all_of(w.images.begin(), w.images.end(),
                  [](const Permutation& p) { return p.is_identity(); }))
    return false;

  if (const auto* t = std::get_if<TableGroup>(&g)) {
    std::vector<Element> gens(w.generators.begin(), w.generators.end());
    return extend_homomorphism(*t, gens, w.images).has_value();
  }

  // The map g_i -> rho_i extends to a homomorphism iff the group generated
  // by the pairs (g_i, rho_i) acting on the disjoint union of both point
  // sets projects injectively onto G, i.e. has the same order.
  const auto& gs = std::get<GenSet>(g);
  const std::size_t m = gs.degree();
  if (w.generators.size() != gs.gens().size()) return false;
  std::vector<Permutation> pairs;
  std::vector<Permutation> chosen;
  for (std::size_t i = 0; i < w.generators.size(); ++i) {
    if (w.generators[i] != i) return false;
    const Permutation& a = gs.gens()[i];
    std::vector<Point> im(m + degree);
    for (Point p = 0; p < m; ++p) im[p] = a[p];
    for (Point p = 0; p < degree; ++p) im[m + p] = static_cast<Point>(m + w.images[i][p]);
    pairs.emplace_back(std::move(im));
    chosen.push_back(a);
  }
  const BigInt order = schreier_sims(gs).order();
  return schreier_sims(GenSet(m + degree, pairs)).order() == order;
}

bool validate_witness(const GroupInput& g, const HomWitness& w, const Graph& target) {
  if (!validate_witness(g, w, target.vertex_count())) return false;
  return std::all_of(w.images.begin(), w.images.end(),
                     [&](const Permutation& p) { return is_automorphism(target, p); });
}

}  // namespace grouprep
