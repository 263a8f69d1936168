#pragma once

/**
 * @file io.hpp
 * @brief Text formats for graphs, rooted trees, group tables and
 * permutation generator sets.
 *
 * Every file starts with a header token (`graph`, `rtree`, `table`, `perm`)
 * followed by whitespace-separated integers. Lines whose first non-blank
 * character is `#` are comments.
 */

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "grouprep/decide.hpp"
#include "grouprep/graph.hpp"
#include "grouprep/perm.hpp"
#include "grouprep/table_group.hpp"
#include "grouprep/tree.hpp"

namespace grouprep {

using ParsedInput = std::variant<Graph, RootedTree, TableGroup, GenSet>;

/// Throws InputError ("line N: ...") on malformed or invalid content.
ParsedInput parse_text(std::string_view text);

/// Throws InputError if the file cannot be read.
ParsedInput parse_file(const std::filesystem::path& path);

std::string format_graph(const Graph& x);
std::string format_rtree(const RootedTree& t);
std::string format_table(const TableGroup& g);
std::string format_perm(const GenSet& g);

/// `p`, `n` and `complemented` lines, then `component <i> <X|Y> <offset>`.
std::string format_provenance(const ReductionOutput& out);

/// Throws InputError if the file cannot be written.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace grouprep
