#pragma once

#include "zagreb/digraph.hpp"
#include "zagreb/graph.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace zagreb {

/// Isomorphism-invariant key for a graph or digraph.
///
/// Layout: one kind byte (0 graph, 1 digraph), one byte n, then the
/// adjacency bits packed most-significant-bit first. Graphs contribute the
/// upper triangle row by row, digraphs every off-diagonal entry row by row.
/// The bits are the lexicographically smallest matrix among all labelings
/// that respect the equitable partition refinement described in
/// canonical.cpp.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string to_hex() const;

  friend auto operator<=>(const CanonicalCode &, const CanonicalCode &) = default;
};

struct CanonicalForm {
  CanonicalCode code;
  /// labeling[v] is the position of vertex v in the canonical ordering.
  std::vector<int> labeling;
};

/// Throw SizeLimitError when n exceeds max_vertices().
CanonicalForm canonical_form(const Graph &g);
CanonicalForm canonical_form(const Digraph &d);

CanonicalCode canonical_code(const Graph &g);
CanonicalCode canonical_code_digraph(const Digraph &d);

/// g relabeled by its canonical labeling. Isomorphic inputs give identical
/// outputs.
Graph canonical_graph(const Graph &g);
Digraph canonical_digraph(const Digraph &d);

} // namespace zagreb
