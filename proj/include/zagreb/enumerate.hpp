#pragma once

#include "zagreb/digraph.hpp"
#include "zagreb/graph.hpp"

#include <cstdint>
#include <iterator>
#include <vector>

namespace zagreb {

enum class GraphKind { tree, unicyclic };

/// Class of trees T(n, m) or unicyclic graphs U(n, m) on n vertices with
/// matching number m.
struct GraphClassSpec {
  GraphKind kind = GraphKind::tree;
  int n = 0;
  int m = 0;

  /// Throws RangeError outside 1 <= m <= n/2 (trees) or 2 <= m <= n/2
  /// (unicyclic graphs).
  void validate() const;
};

/// One tree per isomorphism class, in canonical labeling, sorted by
/// canonical code. Grown leaf by leaf from the trees on n-1 vertices.
/// Requires 1 <= n <= max_vertices().
std::vector<Graph> all_trees(int n);

/// Same classes, obtained by decoding every Pruefer sequence and
/// deduplicating. Exponential (n^(n-2) sequences); a cross-check for n <= 8.
std::vector<Graph> all_trees_by_pruefer(int n);

/// One connected graph with |E| = n per isomorphism class, made by adding a
/// non-edge to every tree and deduplicating. Requires 3 <= n <= max_vertices().
std::vector<Graph> all_unicyclic(int n);

/// Every connected graph on n vertices up to isomorphism, grown by adding a
/// vertex with a non-empty neighbourhood to the connected graphs on n-1
/// vertices. Practical for n <= 8.
std::vector<Graph> all_connected(int n);

/// The members of the class in canonical-code order. An empty class is an
/// empty vector.
std::vector<Graph> graphs_in_class(const GraphClassSpec &spec);

/// The 2^|E| orientations of a graph, addressed by bit-vector index.
///
/// Index i orients stored edge k as v->u when bit k of i is set. Any
/// sub-range [first, last) of indices can be walked independently.
class OrientationRange {
public:
  /// Throws SizeLimitError when |E| > 30.
  explicit OrientationRange(Graph g);

  std::uint64_t size() const { return std::uint64_t{1} << graph_.size(); }
  Digraph at(std::uint64_t index) const;
  const Graph &graph() const { return graph_; }

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Digraph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const OrientationRange *range, std::uint64_t index)
        : range_(range), index_(index) {}

    Digraph operator*() const { return range_->at(index_); }
    iterator &operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator &a, const iterator &b) {
      return a.index_ == b.index_;
    }

  private:
    const OrientationRange *range_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

private:
  Graph graph_;
};

OrientationRange orientations(const Graph &g);

/// Degree data of one orientation as seen by a sweep.
struct OrientationStats {
  std::uint32_t bits = 0;
  /// Sum over vertices of d+(v)^2 + d-(v)^2, i.e. twice M1(D).
  std::int64_t doubled_m1 = 0;
  /// Number of vertices that are neither sinks nor sources.
  int mixed_vertices = 0;
};

enum class IdentityCheck {
  /// Recompute the arc-sum form on every orientation.
  every,
  /// Recompute it on one orientation in 4096 (and the first).
  sampled,
};

/// Visits the orientations whose Gray-code rank lies in [first, last).
///
/// Orientation k of the sweep has bits k ^ (k >> 1), so consecutive visits
/// differ in one edge and the degree data updates in O(1). The union of
/// disjoint rank ranges covering [0, 2^|E|) is every orientation exactly
/// once. The arc-sum form of M1 is checked against the incremental vertex
/// sum per `check`; a mismatch throws InternalInconsistencyError.
/// Returns the number of arc-sum evaluations performed.
template <class Visitor>
std::uint64_t sweep_orientations(const Graph &g, std::uint64_t first,
                                 std::uint64_t last, Visitor &&visit,
                                 IdentityCheck check = IdentityCheck::every);

/// Arc-sum evaluations performed by all sweeps in this process so far.
inline std::uint64_t identity_checks_total();

} // namespace zagreb

#include "zagreb/detail/sweep.hpp"
