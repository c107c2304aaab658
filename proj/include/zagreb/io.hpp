#pragma once

#include "zagreb/digraph.hpp"
#include "zagreb/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zagreb {

// Text formats.
//
// Edge list: first line n, then one "u v" line per edge (0-based, any
// order). Digraph: first line n, then one "u > v" line per arc. Blank lines
// and lines starting with '#' are ignored. Several documents may share one
// stream, separated by lines consisting of "---".

/// Throws ParseError on malformed text and on invalid graphs (loops,
/// repeated edges, endpoints out of range).
Graph parse_edge_list(std::string_view text);
Digraph parse_digraph(std::string_view text);

/// Canonical storage order: edges sorted, one per line, trailing newline.
std::string format_edge_list(const Graph &g);
std::string format_digraph(const Digraph &d);

/// Splits a stream at "---" lines. Empty documents are dropped.
std::vector<std::string> split_documents(std::string_view text);

/// Joins documents with "---" lines.
std::string join_documents(const std::vector<std::string> &docs);

/// Reads a whole file, or standard input when path is "-". Throws
/// ParseError when the file cannot be opened.
std::string read_source(const std::string &path);

} // namespace zagreb
