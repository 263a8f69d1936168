#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <ostream>

#include "grouprep/corpus.hpp"
#include "grouprep/decide.hpp"
#include "grouprep/error.hpp"
#include "grouprep/io.hpp"
#include "grouprep/tree.hpp"

namespace grouprep::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr const char* kGenKinds[] = {"cyclic",      "dihedral",   "symmetric", "alternating",
                                     "quaternion",  "star",       "path",      "complete"};

GroupInput load_group(const std::string& path) {
  auto parsed = parse_file(path);
  if (auto* t = std::get_if<TableGroup>(&parsed)) return std::move(*t);
  if (auto* g = std::get_if<GenSet>(&parsed)) return std::move(*g);
  throw InputError(path + ": expected a `table` or `perm` file");
}

Graph load_graph(const std::string& path) {
  auto parsed = parse_file(path);
  if (auto* x = std::get_if<Graph>(&parsed)) return std::move(*x);
  throw InputError(path + ": expected a `graph` file");
}

Graph load_tree(const std::string& path) {
  auto parsed = parse_file(path);
  if (auto* x = std::get_if<Graph>(&parsed)) return std::move(*x);
  if (auto* t = std::get_if<RootedTree>(&parsed)) return t->underlying_graph();
  throw InputError(path + ": expected a `graph` or `rtree` file");
}

json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return to_string(v);
}

json perm_json(const Permutation& p) { return json(p.images()); }

class Reporter {
 public:
  Reporter(bool as_json, std::ostream& out) : as_json_(as_json), out_(out), start_(Clock::now()) {}

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

  void verdict(const Verdict& v, bool with_recursion) {
    const char* word = v.representable ? "REPRESENTABLE" : "NOT_REPRESENTABLE";
    if (as_json_) {
      json j{{"verdict", word}, {"method", std::string(to_string(v.method))}};
      if (v.witness) j["witness"] = witness_json(*v.witness);
      j["stats"] = {{"elapsed_ms", elapsed_ms()}};
      if (with_recursion) j["stats"]["recursive_calls"] = v.stats.recursive_calls;
      out_ << j.dump() << '\n';
      return;
    }
    out_ << word << '\n' << "method " << to_string(v.method) << '\n';
    if (v.witness) {
      out_ << "witness\n";
      for (std::size_t i = 0; i < v.witness->generators.size(); ++i)
        out_ << "generator " << v.witness->generators[i] << " -> "
             << to_string(v.witness->images[i]) << '\n';
    }
  }

  void emit(const json& j, const std::string& text) {
    if (as_json_) {
      json full = j;
      full["stats"] = {{"elapsed_ms", elapsed_ms()}};
      out_ << full.dump() << '\n';
    } else {
      out_ << text;
    }
  }

 private:
  static json witness_json(const HomWitness& w) {
    json arr = json::array();
    for (std::size_t i = 0; i < w.generators.size(); ++i)
      arr.push_back({{"generator", w.generators[i]}, {"image", perm_json(w.images[i])}});
    return arr;
  }

  bool as_json_;
  std::ostream& out_;
  Clock::time_point start_;
};

void cmd_aut(Reporter& r, const std::string& path) {
  const Graph x = load_graph(path);
  const GenSet gens = automorphism_generators(x);
  const BigInt order = schreier_sims(gens).order();
  json j{{"order", big_to_json(order)}, {"generators", json::array()}};
  std::string text = "order " + to_string(order) + "\ngenerators " +
                     std::to_string(gens.gens().size()) + '\n';
  for (const auto& g : gens.gens()) {
    j["generators"].push_back(perm_json(g));
    text += to_string(g) + '\n';
  }
  r.emit(j, text);
}

void cmd_iso(Reporter& r, const std::string& a, const std::string& b) {
  const Graph x = load_graph(a);
  const Graph y = load_graph(b);
  const auto iso = are_isomorphic(x, y);
  const char* word = iso ? "ISOMORPHIC" : "NOT_ISOMORPHIC";
  json j{{"verdict", word}};
  std::string text = std::string(word) + '\n';
  if (iso) {
    j["witness"] = *iso;
    text += "witness";
    for (Vertex v : *iso) text += ' ' + std::to_string(v);
    text += '\n';
  }
  r.emit(j, text);
}

void cmd_reduce(Reporter& r, std::ostream& err, const std::string& a, const std::string& b,
                const std::string& out, const std::string& out_group, std::string out_prov) {
  const Graph x = load_graph(a);
  const Graph y = load_graph(b);
  const auto result = reduce_gi_to_abelian(x, y);
  if (const auto* sc = std::get_if<ShortCircuit>(&result)) {
    const char* word = sc->isomorphic ? "ISOMORPHIC" : "NOT_ISOMORPHIC";
    err << "reduction short-circuited: " << sc->reason << "; no files written\n";
    r.emit(json{{"verdict", word}, {"short_circuit", sc->reason}}, std::string(word) + '\n');
    return;
  }
  const auto& ro = std::get<ReductionOutput>(result);
  if (out_prov.empty()) out_prov = out + ".provenance";
  write_file(out, format_graph(ro.z));
  write_file(out_group, format_table(ro.group));
  write_file(out_prov, format_provenance(ro));
  json j{{"p", ro.p},
         {"n", ro.n},
         {"complemented", ro.complemented},
         {"vertices", ro.z.vertex_count()},
         {"out", out},
         {"out_group", out_group},
         {"out_provenance", out_prov}};
  r.emit(j, "p " + std::to_string(ro.p) + '\n');
}

void cmd_root_tree(Reporter& r, const std::string& path, const std::string& out) {
  const Graph tree = load_tree(path);
  const RootingResult rooting = root_tree(tree);
  write_file(out, format_rtree(rooting.tree));
  const bool dummy = rooting.kind == RootingKind::dummy_edge_root;
  json j{{"kind", dummy ? "dummy_edge_root" : "fixed_vertex"}, {"root", rooting.tree.root()}};
  std::string text = std::string(dummy ? "dummy_edge_root" : "fixed_vertex") + " root " +
                     std::to_string(rooting.tree.root());
  if (rooting.subdivided_edge) {
    const auto [u, v] = *rooting.subdivided_edge;
    j["edge"] = {u, v};
    text += " edge " + std::to_string(u) + ' ' + std::to_string(v);
  }
  r.emit(j, text + '\n');
}

void cmd_gen(std::ostream& err, const std::string& kind, std::size_t n, const std::string& out) {
  std::string content;
  if (kind == "star") {
    content = format_graph(star_tree(n));
  } else if (kind == "path") {
    if (n == 0) throw InputError("path needs at least one vertex");
    content = format_graph(path_graph(n));
  } else if (kind == "complete") {
    if (n == 0) throw InputError("complete graph needs at least one vertex");
    content = format_graph(complete_graph(n));
  } else {
    content = format_table(make_standard(parse_standard_kind(kind), n));
  }
  write_file(out, content);
  err << "wrote " << out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group representability on graphs and trees"};
  app.name("grouprep");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a machine-readable JSON report");

  std::string g1, g2, grp, out_path, out_group, out_prov, gen_kind;
  std::size_t n = 0;
  std::function<void(Reporter&)> action;

  auto* aut = app.add_subcommand("aut", "Automorphism group order and generators of a graph");
  aut->add_option("graph", g1, "Graph file")->required();
  aut->callback([&] { action = [&](Reporter& r) { cmd_aut(r, g1); }; });

  auto* iso = app.add_subcommand("iso", "Decide whether two graphs are isomorphic");
  iso->add_option("x", g1, "First graph file")->required();
  iso->add_option("y", g2, "Second graph file")->required();
  iso->callback([&] { action = [&](Reporter& r) { cmd_iso(r, g1, g2); }; });

  auto* reduce = app.add_subcommand("reduce", "Reductions between problems");
  reduce->require_subcommand(1);
  auto* gi = reduce->add_subcommand(
      "gi-to-abelian", "Reduce isomorphism of X and Y to representability of Z/pZ on Z");
  gi->add_option("x", g1, "First graph file")->required();
  gi->add_option("y", g2, "Second graph file")->required();
  gi->add_option("--out", out_path, "Output graph file for Z")->required();
  gi->add_option("--out-group", out_group, "Output table file for Z/pZ")->required();
  gi->add_option("--out-provenance", out_prov, "Output provenance file (default <out>.provenance)");
  gi->callback([&] {
    action = [&](Reporter& r) { cmd_reduce(r, err, g1, g2, out_path, out_group, out_prov); };
  });

  auto* decide = app.add_subcommand("decide", "Representability decisions");
  decide->require_subcommand(1);
  auto* solv = decide->add_subcommand(
      "solvable-rep", "Representability of a solvable group on a graph (prime-factor test)");
  solv->add_option("group", grp, "Group file (table or perm)")->required();
  solv->add_option("graph", g1, "Graph file")->required();
  solv->callback([&] {
    action = [&](Reporter& r) { r.verdict(decide_solvable_rep(load_group(grp), load_graph(g1)), false); };
  });
  auto* tree = decide->add_subcommand("tree-rep", "Representability of a group on a tree");
  tree->add_option("group", grp, "Group file (table or perm)")->required();
  tree->add_option("tree", g1, "Tree file (graph or rtree)")->required();
  tree->callback([&] {
    action = [&](Reporter& r) { r.verdict(decide_tree_rep(load_group(grp), load_tree(g1)), true); };
  });
  auto* permrep = decide->add_subcommand(
      "perm-rep", "Whether a nontrivial homomorphism from the group to S_n exists");
  permrep->add_option("group", grp, "Group file (table or perm)")->required();
  permrep->add_option("n", n, "Degree of the symmetric group")->required();
  permrep->callback([&] {
    action = [&](Reporter& r) { r.verdict(decide_perm_rep(load_group(grp), n), false); };
  });

  auto* root = app.add_subcommand("root-tree", "Root a tree at a vertex or edge fixed by Aut");
  root->add_option("tree", g1, "Tree graph file")->required();
  root->add_option("--out", out_path, "Output rtree file")->required();
  root->callback([&] { action = [&](Reporter& r) { cmd_root_tree(r, g1, out_path); }; });

  auto* oracle = app.add_subcommand("oracle", "Exhaustive ground-truth searches");
  oracle->require_subcommand(1);
  auto* orep = oracle->add_subcommand("rep", "Representability of a group on a small graph by exhaustive search");
  orep->add_option("group", grp, "Group file (table or perm)")->required();
  orep->add_option("graph", g1, "Graph file")->required();
  orep->callback([&] {
    action = [&](Reporter& r) { r.verdict(oracle_representable(load_group(grp), load_graph(g1)), false); };
  });

  auto* gen = app.add_subcommand("gen", "Write a standard group table or graph");
  gen->add_option("kind", gen_kind, "cyclic|dihedral|symmetric|alternating|quaternion|star|path|complete")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kGenKinds), std::end(kGenKinds))));
  gen->add_option("n", n, "Size parameter")->required();
  gen->add_option("--out", out_path, "Output file")->required();
  gen->callback([&] { action = [&](Reporter&) { cmd_gen(err, gen_kind, n, out_path); }; });

  for (auto* sub : {aut, iso, reduce, gi, decide, solv, tree, permrep, root, oracle, orep, gen})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    Reporter reporter(as_json, out);
    action(reporter);
    return kExitOk;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace grouprep::cli
