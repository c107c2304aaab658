#pragma once

#include "zagreb/graph.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zagreb {

struct Arc {
  int tail = 0;
  int head = 0;

  friend auto operator<=>(const Arc &, const Arc &) = default;
};

/// Loopless digraph on vertices 0..n-1 with arcs sorted by (tail, head).
class Digraph {
public:
  Digraph() = default;

  /// Rejects loops, repeated arcs and out-of-range endpoints.
  static Digraph from_arcs(int n, std::span<const Arc> arcs);

  int order() const { return n_; }
  int size() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc> &arcs() const { return arcs_; }

  int out_degree(int v) const;
  int in_degree(int v) const;
  VertexMask out_neighbors(int v) const { return out_[static_cast<std::size_t>(v)]; }
  VertexMask in_neighbors(int v) const { return in_[static_cast<std::size_t>(v)]; }
  bool has_arc(int tail, int head) const { return (out_neighbors(tail) >> head) & 1U; }

  /// True when no pair u, v carries both u->v and v->u.
  bool is_oriented() const;

  /// Underlying simple graph. Throws InvalidGraphError for digraphs that
  /// are not oriented graphs.
  Graph underlying() const;

  Digraph permuted(std::span<const int> perm) const;

  friend bool operator==(const Digraph &a, const Digraph &b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<VertexMask> out_;
  std::vector<VertexMask> in_;
};

/// A graph plus one direction bit per edge, indexed by the graph's sorted
/// edge order. Bit i clear sends stored edge (u, v) as u->v, set as v->u.
class Orientation {
public:
  /// Throws SizeLimitError when the graph has more than 30 edges and
  /// RangeError when bits has a set bit at or beyond |E|.
  Orientation(Graph base, std::uint32_t bits);

  /// Recovers the bits of an orientation of base. Throws InvalidGraphError
  /// if d is not an orientation of base.
  static Orientation of(Graph base, const Digraph &d);

  const Graph &base() const { return base_; }
  std::uint32_t bits() const { return bits_; }
  Digraph to_digraph() const;

  /// Lower-case hex of the bit-vector, at least one digit.
  std::string to_hex() const;
  static Orientation from_hex(Graph base, const std::string &hex);

private:
  Graph base_;
  std::uint32_t bits_ = 0;
};

/// The two halves of the first Zagreb index of a digraph, doubled so both
/// are integers: the arc sum of d+(tail) + d-(head), and the vertex sum of
/// d+(v)^2 + d-(v)^2. They are equal for every digraph.
std::int64_t m1_arc_sum_doubled(const Digraph &d);
std::int64_t m1_vertex_sum_doubled(const Digraph &d);

/// First Zagreb index of a digraph. Computes both sums, throws
/// InternalInconsistencyError if they differ or are odd, and
/// IsolatedVertexError when n > 1 and a vertex has no arcs.
std::int64_t m1_digraph(const Digraph &d);

/// Every vertex is a sink or a source.
bool is_sink_source(const Digraph &d);

/// For a connected bipartite graph, the orientation sending every edge
/// from color class 0 to class 1, followed by its reverse.
std::pair<Digraph, Digraph> sink_source_orientations(const Graph &g);

Digraph reverse(const Digraph &d);

} // namespace zagreb
