#include "grouprep/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "grouprep/error.hpp"

namespace grouprep {

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : n_(n), adj_(n * n, 0), nbrs_(n) {
  if (n == 0) throw InputError("graph must have at least one vertex");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (adj_[u * n + v])
      throw InputError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    adj_[u * n + v] = adj_[v * n + u] = 1;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto [u, v] : edges_) {
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
  }
  for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
}

Graph complement(const Graph& x) {
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(x.vertex_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!x.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

DisjointUnion disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw InputError("disjoint union of an empty sequence");
  std::vector<Vertex> offsets;
  std::vector<Edge> edges;
  Vertex offset = 0;
  for (const auto& g : parts) {
    offsets.push_back(offset);
    for (auto [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
    offset += static_cast<Vertex>(g.vertex_count());
  }
  return DisjointUnion{Graph(offset, edges), std::move(offsets)};
}

Graph induced_subgraph(const Graph& x, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (x.adjacent(vertices[i], vertices[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(vertices.size(), edges);
}

Graph relabel(const Graph& x, const Permutation& perm) {
  if (perm.degree() != x.vertex_count())
    throw InputError("relabelling permutation has the wrong degree");
  std::vector<Edge> edges;
  for (auto [u, v] : x.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(x.vertex_count(), edges);
}

namespace {

std::vector<std::vector<Vertex>> component_lists(const Graph& x) {
  const std::size_t n = x.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : x.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

using Colouring = std::vector<std::uint32_t>;

// Joint colour refinement of x and y until stable. Colour ids come from the
// sorted order of signatures, so a colour means the same thing on both sides.
// Returns false as soon as the colour class sizes differ between x and y.
bool refine(const Graph& x, const Graph& y, Colouring& cx, Colouring& cy) {
  const std::size_t n = x.vertex_count();
  std::size_t classes = 0;
  while (true) {
    using Signature = std::vector<std::uint32_t>;
    std::vector<Signature> sx(n), sy(n);
    auto build = [](const Graph& g, const Colouring& c, std::vector<Signature>& s) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        s[v].reserve(g.degree(v) + 1);
        s[v].push_back(c[v]);
        for (Vertex w : g.neighbors(v)) s[v].push_back(c[w]);
        std::sort(s[v].begin() + 1, s[v].end());
      }
    };
    build(x, cx, sx);
    build(y, cy, sy);

    std::map<Signature, std::uint32_t> ids;
    for (const auto& s : sx) ids.emplace(s, 0);
    for (const auto& s : sy) ids.emplace(s, 0);
    std::uint32_t next = 0;
    for (auto& [sig, id] : ids) id = next++;

    std::vector<int> balance(ids.size(), 0);
    for (Vertex v = 0; v < n; ++v) {
      cx[v] = ids[sx[v]];
      cy[v] = ids[sy[v]];
      ++balance[cx[v]];
      --balance[cy[v]];
    }
    if (std::any_of(balance.begin(), balance.end(), [](int b) { return b != 0; }))
      return false;
    if (ids.size() == classes) return true;
    classes = ids.size();
  }
}

class PairSearch {
 public:
  PairSearch(const Graph& x, const Graph& y) : x_(x), y_(y) {}

  std::optional<std::vector<Vertex>> run(Colouring cx, Colouring cy) const {
    if (!refine(x_, y_, cx, cy)) return std::nullopt;
    const std::size_t n = x_.vertex_count();
    const std::uint32_t fresh = *std::max_element(cx.begin(), cx.end()) + 1;
    std::vector<std::uint32_t> cell_size(fresh, 0);
    for (auto c : cx) ++cell_size[c];

    Vertex target = static_cast<Vertex>(n);
    for (Vertex v = 0; v < n; ++v)
      if (cell_size[cx[v]] > 1) {
        target = v;
        break;
      }

    if (target == n) {
      std::vector<Vertex> by_colour(fresh);
      for (Vertex w = 0; w < n; ++w) by_colour[cy[w]] = w;
      std::vector<Vertex> map(n);
      for (Vertex v = 0; v < n; ++v) map[v] = by_colour[cx[v]];
      if (is_isomorphism(x_, y_, map)) return map;
      return std::nullopt;
    }

    for (Vertex w = 0; w < n; ++w) {
      if (cy[w] != cx[target]) continue;
      Colouring nx = cx, ny = cy;
      nx[target] = fresh;
      ny[w] = fresh;
      if (auto found = run(std::move(nx), std::move(ny))) return found;
    }
    return std::nullopt;
  }

 private:
  const Graph& x_;
  const Graph& y_;
};

void check_cap(const Graph& x, const SearchLimits& limits) {
  if (x.vertex_count() > limits.max_vertices)
    throw CapExceeded("graph with " + std::to_string(x.vertex_count()) +
                      " vertices exceeds the exact search cap of " +
                      std::to_string(limits.max_vertices));
}

}  // namespace

bool is_connected(const Graph& x) { return component_lists(x).size() == 1; }

bool is_isomorphism(const Graph& x, const Graph& y, std::span<const Vertex> map) {
  const std::size_t n = x.vertex_count();
  if (y.vertex_count() != n || map.size() != n || x.edge_count() != y.edge_count())
    return false;
  std::vector<char> used(n, 0);
  for (Vertex v : map) {
    if (v >= n || used[v]) return false;
    used[v] = 1;
  }
  for (auto [u, v] : x.edges())
    if (!y.adjacent(map[u], map[v])) return false;
  return true;
}

bool is_automorphism(const Graph& x, const Permutation& p) {
  return p.degree() == x.vertex_count() && is_isomorphism(x, x, p.images());
}

std::optional<std::vector<Vertex>> are_isomorphic(const Graph& x, const Graph& y,
                                                  const SearchLimits& limits) {
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count())
    return std::nullopt;
  check_cap(x, limits);
  const std::size_t n = x.vertex_count();
  return PairSearch(x, y).run(Colouring(n, 0), Colouring(n, 0));
}

GenSet automorphism_generators(const Graph& x, const SearchLimits& limits) {
  check_cap(x, limits);
  const std::size_t n = x.vertex_count();
  PairSearch search(x, x);
  std::vector<Permutation> gens;

  // Level i: the generators found so far (all from levels > i) generate the
  // pointwise stabilizer of 0..i. Complete the orbit of i in the stabilizer
  // of 0..i-1.
  for (std::size_t level = n; level-- > 0;) {
    const auto v = static_cast<Vertex>(level);
    Colouring prefix(n, 0);
    for (Vertex j = 0; j < v; ++j) prefix[j] = j + 1;
    Colouring cx = prefix, cy = prefix;
    refine(x, x, cx, cy);

    std::vector<char> in_orbit(n, 0);
    auto grow_orbit = [&] {
      std::fill(in_orbit.begin(), in_orbit.end(), 0);
      std::vector<Vertex> orbit{v};
      in_orbit[v] = 1;
      for (std::size_t head = 0; head < orbit.size(); ++head)
        for (const auto& g : gens) {
          Vertex w = g[orbit[head]];
          if (!in_orbit[w]) {
            in_orbit[w] = 1;
            orbit.push_back(w);
          }
        }
    };
    grow_orbit();

    for (Vertex w = 0; w < n; ++w) {
      if (w == v || cx[w] != cx[v] || in_orbit[w]) continue;
      Colouring nx = prefix, ny = prefix;
      nx[v] = v + 1;
      ny[w] = v + 1;
      if (auto found = search.run(std::move(nx), std::move(ny))) {
        gens.emplace_back(std::move(*found));
        grow_orbit();
      }
    }
  }
  return GenSet(n, std::move(gens));
}

ComponentDecomposition connected_components(const Graph& x, const SearchLimits& limits) {
  ComponentDecomposition out;
  out.components = component_lists(x);
  std::vector<Graph> graphs;
  for (const auto& c : out.components) graphs.push_back(induced_subgraph(x, c));

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    bool placed = false;
    for (auto& cls : out.iso_classes) {
      const Graph& rep = graphs[cls.representative()];
      if (rep.vertex_count() != graphs[i].vertex_count() ||
          rep.edge_count() != graphs[i].edge_count())
        continue;
      if (auto w = are_isomorphic(rep, graphs[i], limits)) {
        cls.members.push_back(i);
        cls.witnesses.push_back(std::move(*w));
        placed = true;
        break;
      }
    }
    if (!placed) {
      check_cap(graphs[i], limits);
      IsoClass cls;
      cls.members.push_back(i);
      std::vector<Vertex> id(graphs[i].vertex_count());
      for (Vertex v = 0; v < id.size(); ++v) id[v] = v;
      cls.witnesses.push_back(std::move(id));
      out.iso_classes.push_back(std::move(cls));
    }
  }
  return out;
}

BigInt aut_order_by_components(const Graph& x, const SearchLimits& limits) {
  const auto decomposition = connected_components(x, limits);
  BigInt total = 1;
  for (const auto& cls : decomposition.iso_classes) {
    const Graph rep =
        induced_subgraph(x, decomposition.components[cls.representative()]);
    const BigInt a = schreier_sims(automorphism_generators(rep, limits)).order();
    total *= factorial(cls.multiplicity()) * boost::multiprecision::pow(a, static_cast<unsigned>(cls.multiplicity()));
  }
  return total;
}

}  // namespace grouprep
