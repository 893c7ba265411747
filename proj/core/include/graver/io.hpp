#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graver/classify.hpp"
#include "graver/enumerate.hpp"
#include "graver/graph.hpp"
#include "graver/oracle.hpp"

namespace graver {

enum class Format { Human, Json, Csv };

/// "human", "json" or "csv". Throws std::invalid_argument.
Format parse_format(std::string_view name);

/// Edge-list text: a `vertices N` header, then one `u v [label]` line per
/// edge. Blank lines and `#` comments are skipped. Throws ParseError with
/// the line number, or GraphError for loops and repeated edges.
Graph parse_graph_text(std::istream& in);

/// {"vertices": N, "edges": [[u, v], ...], "labels": [...]}; labels optional.
Graph parse_graph_json(std::string_view text);

/// Dispatches on content: a leading '{' means JSON.
Graph parse_graph(std::istream& in);
Graph load_graph(const std::filesystem::path& path);

std::string graph_to_text(const Graph& g);
std::string graph_to_json(const Graph& g);

std::uint64_t fnv1a64(std::string_view bytes);
/// 16 hex digits of fnv1a64(graph_to_text(g)).
std::string graph_digest(const Graph& g);

struct RunInfo {
  std::string command;
  std::string input;
  std::string digest;
};

/// Rows are indices into table.rows; records are labelled B<index+1>.
std::string table_json(const Graph& g, const GraverTable& table, std::span<const std::size_t> rows, const RunInfo& info);
std::string table_csv(const Graph& g, const GraverTable& table, std::span<const std::size_t> rows);
std::string table_human(const Graph& g, const GraverTable& table, std::span<const std::size_t> rows,
                        const RunInfo& info);

/// Canonical binomials of the records in a table_json document.
/// Throws ParseError.
std::vector<Binomial> parse_table_json(std::string_view text);

std::string report_json(const Graph& g, const ClosedWalk& w, const ClassificationReport& r, const RunInfo& info);
std::string report_human(const Graph& g, const ClosedWalk& w, const ClassificationReport& r);
/// Step-by-step account of which condition decides each flag.
std::string explain_human(const Graph& g, const ClosedWalk& w, const ClassificationReport& r);

std::string generation_json(const MinimalGeneration& mg, const RunInfo& info);
std::string generation_human(const MinimalGeneration& mg);

}  // namespace graver
