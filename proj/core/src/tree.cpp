#include "grouprep/tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "grouprep/error.hpp"

namespace grouprep {

namespace {

std::vector<Vertex> bfs_order(const RootedTree& t) {
  std::vector<Vertex> order{t.root()};
  order.reserve(t.size());
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex c : t.children(order[head])) order.push_back(c);
  return order;
}

std::vector<Vertex> children_by_code(const RootedTree& t,
                                     const std::vector<std::string>& codes, Vertex v) {
  std::vector<Vertex> kids = t.children(v);
  std::stable_sort(kids.begin(), kids.end(),
                   [&](Vertex a, Vertex b) { return codes[a] < codes[b]; });
  return kids;
}

Graph subdivide(const Graph& tree, Edge e) {
  const auto gamma = static_cast<Vertex>(tree.vertex_count());
  std::vector<Edge> edges;
  for (auto uv : tree.edges())
    if (uv != Edge{std::min(e.first, e.second), std::max(e.first, e.second)})
      edges.push_back(uv);
  edges.emplace_back(e.first, gamma);
  edges.emplace_back(gamma, e.second);
  return Graph(tree.vertex_count() + 1, edges);
}

}  // namespace

RootedTree::RootedTree(std::vector<Vertex> parent, Vertex root)
    : parent_(std::move(parent)), root_(root), children_(parent_.size()) {
  const std::size_t n = parent_.size();
  if (n == 0) throw InputError("rooted tree must have at least one vertex");
  if (root_ >= n) throw InputError("root " + std::to_string(root_) + " out of range");
  if (parent_[root_] != root_) throw InputError("the root must be its own parent");
  for (Vertex v = 0; v < n; ++v) {
    if (parent_[v] >= n)
      throw InputError("parent of vertex " + std::to_string(v) + " out of range");
    if (v != root_ && parent_[v] == v)
      throw InputError("vertex " + std::to_string(v) + " is its own parent but is not the root");
    if (v != root_) children_[parent_[v]].push_back(v);
  }
  // Every vertex must reach the root; with n-1 parent links this rules out cycles.
  std::vector<char> reached(n, 0);
  reached[root_] = 1;
  std::vector<Vertex> stack{root_};
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex c : children_[v])
      if (!reached[c]) {
        reached[c] = 1;
        ++count;
        stack.push_back(c);
      }
  }
  if (count != n) throw InputError("parent links contain a cycle or a second root");
}

RootedTree RootedTree::from_graph(const Graph& tree, Vertex root) {
  require_tree(tree);
  const std::size_t n = tree.vertex_count();
  if (root >= n) throw InputError("root " + std::to_string(root) + " out of range");
  std::vector<Vertex> parent(n, static_cast<Vertex>(n));
  parent[root] = root;
  std::vector<Vertex> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : tree.neighbors(queue[head]))
      if (parent[w] == n) {
        parent[w] = queue[head];
        queue.push_back(w);
      }
  return RootedTree(std::move(parent), root);
}

Graph RootedTree::underlying_graph() const {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < size(); ++v)
    if (v != root_) edges.emplace_back(parent_[v], v);
  return Graph(size(), edges);
}

bool is_tree(const Graph& x) {
  return x.edge_count() + 1 == x.vertex_count() && is_connected(x);
}

void require_tree(const Graph& x) {
  if (!is_tree(x))
    throw InputError("graph with " + std::to_string(x.vertex_count()) + " vertices and " +
                     std::to_string(x.edge_count()) + " edges is not a tree");
}

std::vector<std::string> ahu_codes(const RootedTree& t) {
  std::vector<std::string> codes(t.size());
  const auto order = bfs_order(t);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<const std::string*> kids;
    for (Vertex c : t.children(*it)) kids.push_back(&codes[c]);
    std::sort(kids.begin(), kids.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string code = "(";
    for (const auto* k : kids) code += *k;
    code += ')';
    codes[*it] = std::move(code);
  }
  return codes;
}

std::string ahu_code(const RootedTree& t, Vertex v) {
  if (v >= t.size()) throw InputError("vertex " + std::to_string(v) + " not in tree");
  return ahu_codes(t)[v];
}

RootedTree subtree_at(const RootedTree& t, Vertex v, std::vector<Vertex>* original) {
  std::vector<Vertex> order{v};
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex c : t.children(order[head])) order.push_back(c);
  std::vector<Vertex> local(t.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<Vertex>(i);
  std::vector<Vertex> parent(order.size(), 0);
  for (std::size_t i = 1; i < order.size(); ++i) parent[i] = local[t.parent(order[i])];
  if (original) *original = order;
  return RootedTree(std::move(parent), 0);
}

std::vector<std::pair<Vertex, Vertex>> match_subtrees(const RootedTree& t,
                                                      const std::vector<std::string>& codes,
                                                      Vertex a, Vertex b) {
  if (codes[a] != codes[b]) throw InputError("subtrees are not isomorphic");
  std::vector<std::pair<Vertex, Vertex>> out;
  std::vector<std::pair<Vertex, Vertex>> stack{{a, b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    out.emplace_back(x, y);
    const auto kx = children_by_code(t, codes, x);
    const auto ky = children_by_code(t, codes, y);
    for (std::size_t i = kx.size(); i-- > 0;) stack.emplace_back(kx[i], ky[i]);
  }
  return out;
}

std::vector<Vertex> tree_centers(const Graph& tree) {
  require_tree(tree);
  const std::size_t n = tree.vertex_count();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : tree.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string free_tree_code(const Graph& tree) {
  std::string best;
  for (Vertex c : tree_centers(tree)) {
    auto code = ahu_code(RootedTree::from_graph(tree, c), c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

GenSet tree_aut_generators(const Graph& tree) {
  const auto centers = tree_centers(tree);
  const std::size_t n = tree.vertex_count();
  if (n == 1) return GenSet(1, {});

  // A bicentral tree is anchored at a new vertex subdividing the central
  // edge; every automorphism fixes it, so it is dropped from the generators.
  const Graph anchor_graph =
      centers.size() == 1 ? tree : subdivide(tree, Edge{centers[0], centers[1]});
  const Vertex anchor = centers.size() == 1 ? centers[0] : static_cast<Vertex>(n);
  const RootedTree rt = RootedTree::from_graph(anchor_graph, anchor);
  const auto codes = ahu_codes(rt);

  std::vector<Permutation> gens;
  for (Vertex u = 0; u < rt.size(); ++u) {
    const auto kids = children_by_code(rt, codes, u);
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
      if (codes[kids[i]] != codes[kids[i + 1]]) continue;
      std::vector<Point> im(n);
      for (Vertex v = 0; v < n; ++v) im[v] = v;
      for (auto [x, y] : match_subtrees(rt, codes, kids[i], kids[i + 1])) {
        im[x] = y;
        im[y] = x;
      }
      gens.emplace_back(std::move(im));
    }
  }
  return GenSet(n, std::move(gens));
}

OrbitPartition aut_orbits(const Graph& tree) {
  OrbitPartition out;
  out.orbits = orbits(tree_aut_generators(tree));
  out.orbit_of.assign(tree.vertex_count(), 0);
  for (std::size_t i = 0; i < out.orbits.size(); ++i)
    for (Vertex v : out.orbits[i]) out.orbit_of[v] = i;
  return out;
}

Subtree orbit_subtree(const Graph& tree, std::span<const Vertex> delta) {
  std::vector<Vertex> members(delta.begin(), delta.end());
  std::sort(members.begin(), members.end());
  const auto partition = aut_orbits(tree);
  if (std::find(partition.orbits.begin(), partition.orbits.end(), members) ==
      partition.orbits.end())
    throw InputError("vertex set is not an orbit of the tree's automorphism group");

  // Root at a member; a vertex lies on some member-to-member path iff its
  // subtree contains a member.
  const RootedTree rt = RootedTree::from_graph(tree, members.front());
  std::vector<std::size_t> below(tree.vertex_count(), 0);
  for (Vertex m : members) below[m] = 1;
  const auto order = bfs_order(rt);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (*it != rt.root()) below[rt.parent(*it)] += below[*it];
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < tree.vertex_count(); ++v)
    if (below[v] > 0) kept.push_back(v);
  return Subtree{induced_subgraph(tree, kept), std::move(kept)};
}

RootingResult root_tree(const Graph& tree) {
  require_tree(tree);
  const auto partition = aut_orbits(tree);
  for (const auto& orbit : partition.orbits)
    if (orbit.size() == 1)
      return RootingResult{RootedTree::from_graph(tree, orbit[0]), RootingKind::fixed_vertex,
                           std::nullopt};
  for (const auto& orbit : partition.orbits)
    if (orbit.size() == 2 && tree.adjacent(orbit[0], orbit[1])) {
      const Edge e{orbit[0], orbit[1]};
      const Graph sub = subdivide(tree, e);
      return RootingResult{RootedTree::from_graph(sub, static_cast<Vertex>(tree.vertex_count())),
                           RootingKind::dummy_edge_root, e};
    }
  throw std::logic_error("tree has neither a fixed vertex nor a fixed edge");
}

BigInt ChildClass::aut_order() const { return wreath_aut_order(representative); }

WreathDecomposition child_partition(const RootedTree& t) {
  const auto codes = ahu_codes(t);
  std::map<std::string, std::vector<Vertex>> groups;
  for (Vertex c : t.children(t.root())) groups[codes[c]].push_back(c);
  WreathDecomposition out;
  for (auto& [code, members] : groups) {
    RootedTree rep = subtree_at(t, members.front());
    out.classes.push_back(ChildClass{members.size(), code, members, std::move(rep)});
  }
  return out;
}

BigInt wreath_aut_order(const RootedTree& t) {
  const auto codes = ahu_codes(t);
  std::vector<BigInt> order(t.size(), 1);
  const auto bfs = bfs_order(t);
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    std::map<std::string, std::pair<std::size_t, Vertex>> classes;
    for (Vertex c : t.children(*it)) {
      auto& entry = classes.try_emplace(codes[c], 0, c).first->second;
      ++entry.first;
    }
    BigInt acc = 1;
    for (const auto& [code, entry] : classes)
      acc *= factorial(entry.first) *
             boost::multiprecision::pow(order[entry.second], static_cast<unsigned>(entry.first));
    order[*it] = std::move(acc);
  }
  return order[t.root()];
}

}  // namespace grouprep
