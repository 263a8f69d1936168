#include "grouprep/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "grouprep/error.hpp"

namespace grouprep {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

class TokenStream {
 public:
  explicit TokenStream(std::string_view text) {
    std::size_t line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      ++line;
      std::string_view row = text.substr(pos, end - pos);
      const std::size_t first = row.find_first_not_of(" \t\r");
      if (first != std::string_view::npos && row[first] != '#') {
        std::size_t i = first;
        while (i < row.size()) {
          while (i < row.size() && (row[i] == ' ' || row[i] == '\t' || row[i] == '\r')) ++i;
          std::size_t j = i;
          while (j < row.size() && row[j] != ' ' && row[j] != '\t' && row[j] != '\r') ++j;
          if (j > i) tokens_.push_back(Token{std::string(row.substr(i, j - i)), line});
          i = j;
        }
        last_line_ = line;
      }
      if (end == text.size()) break;
      pos = end + 1;
    }
  }

  bool done() const { return next_ == tokens_.size(); }

  const Token& word(std::string_view what) {
    if (done()) fail(last_line_, "unexpected end of input, expected " + std::string(what));
    return tokens_[next_++];
  }

  std::size_t number(std::string_view what) {
    const Token& t = word(what);
    std::size_t value = 0;
    const char* begin = t.text.data();
    const char* end = begin + t.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
      fail(t.line, "expected " + std::string(what) + ", found '" + t.text + "'");
    return value;
  }

  std::size_t line() const { return done() ? last_line_ : tokens_[next_].line; }
  std::size_t previous_line() const { return next_ == 0 ? 1 : tokens_[next_ - 1].line; }

  void finish() {
    if (!done()) fail(tokens_[next_].line, "unexpected trailing token '" + tokens_[next_].text + "'");
  }

  [[noreturn]] static void fail(std::size_t line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 1;
};

template <typename F>
auto at_line(std::size_t line, F&& build) {
  try {
    return build();
  } catch (const InputError& e) {
    TokenStream::fail(line, e.what());
  }
}

Graph parse_graph(TokenStream& in) {
  const std::size_t header = in.line();
  const std::size_t n = in.number("vertex count");
  const std::size_t m = in.number("edge count");
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t line = in.line();
    const auto u = in.number("edge endpoint");
    const auto v = in.number("edge endpoint");
    if (u >= n || v >= n)
      TokenStream::fail(line, "edge endpoint out of range for " + std::to_string(n) + " vertices");
    if (u == v) TokenStream::fail(line, "self-loop at vertex " + std::to_string(u));
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (std::minmax<std::size_t>(edges[j].first, edges[j].second) == std::minmax(u, v))
        TokenStream::fail(line, "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    "), first given on line " + std::to_string(lines[j]));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    lines.push_back(line);
  }
  in.finish();
  return at_line(header, [&] { return Graph(n, edges); });
}

RootedTree parse_rtree(TokenStream& in) {
  const std::size_t header = in.line();
  const std::size_t n = in.number("vertex count");
  const std::size_t root = in.number("root");
  if (n == 0) TokenStream::fail(header, "rooted tree must have at least one vertex");
  if (root >= n) TokenStream::fail(header, "root out of range");
  std::vector<Vertex> parent(n, static_cast<Vertex>(n));
  parent[root] = static_cast<Vertex>(root);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t line = in.line();
    const auto child = in.number("child");
    const auto par = in.number("parent");
    if (child >= n || par >= n) TokenStream::fail(line, "vertex out of range");
    if (child == root) TokenStream::fail(line, "the root cannot have a parent");
    if (parent[child] != n)
      TokenStream::fail(line, "vertex " + std::to_string(child) + " already has a parent");
    parent[child] = static_cast<Vertex>(par);
  }
  in.finish();
  return at_line(header, [&] { return RootedTree(std::move(parent), static_cast<Vertex>(root)); });
}

TableGroup parse_table(TokenStream& in) {
  const std::size_t header = in.line();
  const std::size_t n = in.number("group order");
  if (n == 0) TokenStream::fail(header, "group order must be positive");
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t line = in.line();
      const auto v = in.number("table entry");
      if (v >= n) TokenStream::fail(line, "table entry " + std::to_string(v) + " out of range");
      rows[i][j] = static_cast<Element>(v);
    }
  in.finish();
  return at_line(header, [&] { return validate_table(rows); });
}

GenSet parse_perm(TokenStream& in) {
  const std::size_t header = in.line();
  const std::size_t n = in.number("degree");
  const std::size_t g = in.number("generator count");
  if (n == 0) TokenStream::fail(header, "degree must be positive");
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t line = in.line();
    std::vector<Point> images(n);
    for (auto& p : images) {
      const auto v = in.number("image");
      if (v >= n) TokenStream::fail(in.previous_line(), "image out of range");
      p = static_cast<Point>(v);
    }
    gens.push_back(at_line(line, [&] { return Permutation(std::move(images)); }));
  }
  in.finish();
  return at_line(header, [&] { return GenSet(n, std::move(gens)); });
}

}  // namespace

ParsedInput parse_text(std::string_view text) {
  TokenStream in(text);
  const Token& head = in.word("header");
  if (head.text == "graph") return parse_graph(in);
  if (head.text == "rtree") return parse_rtree(in);
  if (head.text == "table") return parse_table(in);
  if (head.text == "perm") return parse_perm(in);
  TokenStream::fail(head.line, "unknown header '" + head.text + "'");
}

ParsedInput parse_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << file.rdbuf();
  try {
    return parse_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_graph(const Graph& x) {
  std::string out = "graph\n" + std::to_string(x.vertex_count()) + ' ' +
                    std::to_string(x.edge_count()) + '\n';
  for (auto [u, v] : x.edges()) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return out;
}

std::string format_rtree(const RootedTree& t) {
  std::string out = "rtree\n" + std::to_string(t.size()) + ' ' + std::to_string(t.root()) + '\n';
  for (Vertex v = 0; v < t.size(); ++v)
    if (v != t.root()) out += std::to_string(v) + ' ' + std::to_string(t.parent(v)) + '\n';
  return out;
}

std::string format_table(const TableGroup& g) {
  std::string out = "table\n" + std::to_string(g.order()) + '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(g.product(a, b));
    }
    out += '\n';
  }
  return out;
}

std::string format_perm(const GenSet& g) {
  std::string out = "perm\n" + std::to_string(g.degree()) + ' ' +
                    std::to_string(g.gens().size()) + '\n';
  for (const auto& p : g.gens()) out += to_string(p) + '\n';
  return out;
}

std::string format_provenance(const ReductionOutput& out) {
  std::string s = "p " + std::to_string(out.p) + "\nn " + std::to_string(out.n) +
                  "\ncomplemented " + (out.complemented ? "1" : "0") + '\n';
  for (std::size_t i = 0; i < out.components.size(); ++i)
    s += "component " + std::to_string(i) + ' ' + out.components[i].source + ' ' +
         std::to_string(out.components[i].offset) + '\n';
  return s;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write " + path.string());
  file << content;
  if (!file) throw InputError("failed writing " + path.string());
}

}  // namespace grouprep
