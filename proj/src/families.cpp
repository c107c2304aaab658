#include "zagreb/families.hpp"

#include "zagreb/error.hpp"

#include <string>

namespace zagreb {

namespace {

void require_unicyclic_range(int n, int m, const char *what) {
  if (m < 2 || 2 * m > n)
    throw RangeError(std::string(what) + ": need 2 <= m <= floor(n/2), got n = " +
                     std::to_string(n) + ", m = " + std::to_string(m));
}

std::int64_t halve(std::int64_t twice, const char *what) {
  if (twice % 2 != 0)
    throw NonIntegralError(std::string(what) + ": numerator " + std::to_string(twice) +
                           " is odd");
  return twice / 2;
}

} // namespace

Graph cycle_graph(int k) {
  if (k < 3)
    throw RangeError("cycle needs at least 3 vertices, got " + std::to_string(k));
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i)
    es.push_back({i, (i + 1) % k});
  return Graph::from_edges(k, es);
}

Graph star_graph(int k) {
  if (k < 1)
    throw RangeError("star needs at least one leaf, got " + std::to_string(k));
  std::vector<Edge> es;
  for (int i = 1; i <= k; ++i)
    es.push_back({0, i});
  return Graph::from_edges(k + 1, es);
}

Graph g1_graph() {
  const std::vector<Edge> es{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}};
  return Graph::from_edges(6, es);
}

Graph c4_two_pendants_graph() {
  const std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}};
  return Graph::from_edges(6, es);
}

Graph make_named(const std::string &name, int param) {
  if (name == "cycle")
    return cycle_graph(param);
  if (name == "star")
    return star_graph(param);
  if (name == "g1")
    return g1_graph();
  if (name == "u42")
    return u_nm(4, 2);
  if (name == "c4-two-pendants" || name == "c4_two_pendants")
    return c4_two_pendants_graph();
  throw RangeError("unknown graph family '" + name + "'");
}

Graph t_nm(int n, int m) {
  if (m < 1 || 2 * m > n)
    throw RangeError("t_nm: need 1 <= m <= floor(n/2), got n = " + std::to_string(n) +
                     ", m = " + std::to_string(m));
  std::vector<Edge> es;
  for (int leaf = 1; leaf <= n - m; ++leaf)
    es.push_back({0, leaf});
  for (int i = 1; i <= m - 1; ++i)
    es.push_back({i, n - m + i});
  return Graph::from_edges(n, es);
}

Graph u_nm(int n, int m) {
  require_unicyclic_range(n, m, "u_nm");
  std::vector<Edge> es{{0, 1}, {0, 2}, {1, 2}};
  int next = 3;
  for (int i = 0; i < n - 2 * m + 1; ++i)
    es.push_back({0, next++});
  for (int i = 0; i < m - 2; ++i) {
    es.push_back({0, next});
    es.push_back({next, next + 1});
    next += 2;
  }
  return Graph::from_edges(n, es);
}

std::array<Digraph, 4> u_extremal_orientations(int n, int m) {
  require_unicyclic_range(n, m, "u_extremal_orientations");
  auto build = [n, m](bool hub_source, bool one_to_two) {
    std::vector<Arc> as;
    auto hub_arc = [&](int other) {
      as.push_back(hub_source ? Arc{0, other} : Arc{other, 0});
    };
    hub_arc(1);
    hub_arc(2);
    as.push_back(one_to_two ? Arc{1, 2} : Arc{2, 1});
    int next = 3;
    for (int i = 0; i < n - 2 * m + 1; ++i)
      hub_arc(next++);
    for (int i = 0; i < m - 2; ++i) {
      const int a = next, b = next + 1;
      hub_arc(a);
      // a is a sink when the hub is a source, a source otherwise.
      as.push_back(hub_source ? Arc{b, a} : Arc{a, b});
      next += 2;
    }
    return Digraph::from_arcs(n, as);
  };
  return {build(true, true), build(true, false), build(false, true),
          build(false, false)};
}

std::vector<Digraph> extremal_set(int n, int m) {
  require_unicyclic_range(n, m, "extremal_set");
  const auto four = u_extremal_orientations(n, m);
  std::vector<Digraph> out(four.begin(), four.end());
  if ((n == 4 && m == 2) || (n == 6 && m == 3)) {
    const Graph base = n == 4 ? cycle_graph(4) : c4_two_pendants_graph();
    auto [a, b] = sink_source_orientations(base);
    out.push_back(std::move(a));
    out.push_back(std::move(b));
  }
  return out;
}

std::int64_t bound_unicyclic(int n, int m) {
  require_unicyclic_range(n, m, "bound_unicyclic");
  const std::int64_t nn = n, mm = m;
  return halve(nn * nn + (3 - 2 * mm) * nn + mm * mm + mm - 2, "bound_unicyclic");
}

ExtremalBound unicyclic_bound(int n, int m) {
  return ExtremalBound{n, m, bound_unicyclic(n, m)};
}

std::int64_t bound_unicyclic_perfect(int m) {
  if (m < 2)
    throw RangeError("bound_unicyclic_perfect: need m >= 2, got " + std::to_string(m));
  const std::int64_t mm = m;
  return halve(mm * mm + 7 * mm - 2, "bound_unicyclic_perfect");
}

std::int64_t bound_tree(int m) {
  if (m < 1)
    throw RangeError("bound_tree: need m >= 1, got " + std::to_string(m));
  const std::int64_t mm = m;
  return mm * mm + 5 * mm - 4;
}

std::int64_t bound_tree_oriented(int m) {
  return halve(bound_tree(m), "bound_tree_oriented");
}

} // namespace zagreb
