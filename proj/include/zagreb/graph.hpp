#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zagreb {

using VertexMask = std::uint32_t;

/// Widest graph the bitmask adjacency can hold.
inline constexpr int kMaxGraphVertices = 32;

/// Unordered edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept strictly increasing in (u, v) order with u < v. That order
/// is what orientation bit-vectors index into, so every constructor
/// normalizes to it.
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Accepts edges in any order and either endpoint order. Rejects loops,
  /// out-of-range endpoints and repeated edges with InvalidGraphError.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge> &edges() const { return edges_; }

  int degree(int v) const;
  std::vector<int> degrees() const;
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const;

  /// Position of edge {u, v} in edges(), or -1.
  int edge_index(int u, int v) const;

  Graph with_edge(int u, int v) const;

  /// Relabels vertex v as perm[v]. perm must be a permutation of 0..n-1.
  Graph permuted(std::span<const int> perm) const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
};

/// Set of pairwise vertex-disjoint edges of some graph.
class Matching {
public:
  Matching() = default;

  /// Throws InvalidGraphError if two edges share a vertex or an edge is
  /// not in g.
  Matching(const Graph &g, std::vector<Edge> edges);

  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge> &edges() const { return edges_; }
  bool saturates(int v) const { return (covered_ >> v) & 1U; }

private:
  std::vector<Edge> edges_;
  VertexMask covered_ = 0;
};

/// First Zagreb index: sum over edges of d(u) + d(v). Throws
/// IsolatedVertexError when n > 1 and some vertex has degree 0.
std::int64_t m1_undirected(const Graph &g);

bool is_connected(const Graph &g);
bool is_tree(const Graph &g);
/// Connected with exactly n edges.
bool is_unicyclic(const Graph &g);

/// Proper 2-coloring (values 0/1, the lowest vertex of every component gets
/// 0) or nullopt when g has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph &g);
bool is_bipartite(const Graph &g);

/// Maximum matching by augmenting-path search with blossom contraction.
Matching maximum_matching(const Graph &g);
int matching_number(const Graph &g);

/// Size of a largest matching by exhaustive recursion over vertex subsets.
/// Exponential; intended as an oracle for n <= 12.
int matching_number_exhaustive(const Graph &g);

/// Every maximum matching of g, found by exhaustive search over edge
/// subsets. Requires |E| <= 30.
std::vector<Matching> all_maximum_matchings(const Graph &g);

/// One longest path of a tree, found by two breadth-first sweeps. Its ends
/// are the vertex farthest from 0 and the vertex farthest from that one.
/// Throws NotATreeError.
std::vector<int> diametrical_path(const Graph &g);

/// All-pairs shortest-path distances by BFS (-1 when unreachable).
std::vector<std::vector<int>> distance_matrix(const Graph &g);

} // namespace zagreb
