#pragma once

#include "zagreb/digraph.hpp"
#include "zagreb/graph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace zagreb {

/// Cycle 0-1-...-(k-1)-0. Requires k >= 3.
Graph cycle_graph(int k);

/// Star K_{1,k}: hub 0, leaves 1..k. Requires k >= 1.
Graph star_graph(int k);

/// Triangle 0-1-2 with pendent 3+i on vertex i.
Graph g1_graph();

/// Four-cycle 0-1-2-3-0 with pendent 4 on 0 and pendent 5 on 1.
Graph c4_two_pendants_graph();

/// Graph by family name: "cycle" and "star" take `param` (cycle length,
/// leaf count); "g1", "u42", "c4-two-pendants" ignore it. Throws RangeError
/// for unknown names or bad parameters.
Graph make_named(const std::string &name, int param = 0);

/// Star K_{1,n-m} (hub 0, leaves 1..n-m) with a pendent n-m+i hung on leaf
/// i for i = 1..m-1. Requires 1 <= m <= n/2.
Graph t_nm(int n, int m);

/// Triangle 0-1-2 whose vertex 0 also carries n-2m+1 pendents (numbered
/// 3 onward) and m-2 paths of length two (a_i adjacent to 0, b_i adjacent
/// to a_i, numbered after the pendents as a_1, b_1, a_2, b_2, ...).
/// Requires 2 <= m <= n/2.
Graph u_nm(int n, int m);

/// The four extremal orientations of u_nm(n, m), in order:
///   hub source with 1->2, hub source with 2->1,
///   hub sink with 1->2,   hub sink with 2->1.
/// With the hub a source, pendents are sinks, each a_i is a sink and each
/// b_i a source; the hub-sink pair mirrors this.
std::array<Digraph, 4> u_extremal_orientations(int n, int m);

/// U*_{n,m}: the four orientations above, plus the two sink-source
/// orientations of C4 when (n, m) = (4, 2) and of c4_two_pendants_graph()
/// when (n, m) = (6, 3).
std::vector<Digraph> extremal_set(int n, int m);

/// Closed-form bound carried with its parameters.
struct ExtremalBound {
  int n = 0;
  int m = 0;
  std::int64_t value = 0;
};

/// (n^2 + (3-2m)n + m^2 + m - 2) / 2 for 2 <= m <= n/2.
std::int64_t bound_unicyclic(int n, int m);
ExtremalBound unicyclic_bound(int n, int m);

/// (m^2 + 7m - 2) / 2 for m >= 2.
std::int64_t bound_unicyclic_perfect(int m);

/// m^2 + 5m - 4 for m >= 1.
std::int64_t bound_tree(int m);

/// (m^2 + 5m - 4) / 2 for m >= 1.
std::int64_t bound_tree_oriented(int m);

} // namespace zagreb
