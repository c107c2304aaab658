#include <doctest.h>

#include "zagreb/canonical.hpp"
#include "zagreb/error.hpp"
#include "zagreb/families.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace zagreb;

namespace {

std::vector<int> sorted_degrees(const Graph &g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

int pendents_at(const Graph &g, int v) {
  int k = 0;
  for (int u = 0; u < g.order(); ++u)
    k += g.adjacent(u, v) && g.degree(u) == 1;
  return k;
}

} // namespace

TEST_CASE("named graphs") {
  CHECK(sorted_degrees(cycle_graph(4)) == std::vector<int>{2, 2, 2, 2});
  CHECK(sorted_degrees(star_graph(3)) == std::vector<int>{3, 1, 1, 1});
  CHECK(sorted_degrees(g1_graph()) == std::vector<int>{3, 3, 3, 1, 1, 1});
  const Graph c = c4_two_pendants_graph();
  CHECK(sorted_degrees(c) == std::vector<int>{3, 3, 2, 2, 1, 1});
  CHECK(is_bipartite(c));
  CHECK(is_unicyclic(c));
  CHECK(matching_number(c) == 3);
  CHECK(make_named("cycle", 5) == cycle_graph(5));
  CHECK(make_named("g1") == g1_graph());
  CHECK(make_named("c4_two_pendants") == c);
  CHECK_THROWS_AS(make_named("petersen"), RangeError);
  CHECK_THROWS_AS(cycle_graph(2), RangeError);
  CHECK_THROWS_AS(star_graph(0), RangeError);
}

TEST_CASE("U(n, m) representatives") {
  const Graph u42 = u_nm(4, 2);
  CHECK(u42.size() == 4);
  CHECK(u42.adjacent(0, 1));
  CHECK(u42.adjacent(0, 2));
  CHECK(u42.adjacent(1, 2));
  CHECK(pendents_at(u42, 0) == 1);

  const Graph u63 = u_nm(6, 3);
  CHECK(pendents_at(u63, 0) == 1);
  CHECK(sorted_degrees(u63) == std::vector<int>{4, 2, 2, 2, 1, 1});

  for (int n = 4; n <= 12; ++n)
    for (int m = 2; 2 * m <= n; ++m) {
      const Graph u = u_nm(n, m);
      CHECK(u.order() == n);
      CHECK(is_unicyclic(u));
      CHECK(matching_number(u) == m);
      CHECK(pendents_at(u, 0) == n - 2 * m + 1);
      CHECK(u.degree(0) == n - m + 1);
    }
  CHECK_THROWS_AS(u_nm(5, 3), RangeError);
  CHECK_THROWS_AS(u_nm(5, 1), RangeError);
}

TEST_CASE("T(n, m) representatives") {
  for (int n = 2; n <= 12; ++n)
    for (int m = 1; 2 * m <= n; ++m) {
      const Graph t = t_nm(n, m);
      CHECK(is_tree(t));
      CHECK(matching_number(t) == m);
      CHECK(t.degree(0) == n - m);
    }
  // T(4, 2) is the path on four vertices.
  CHECK(sorted_degrees(t_nm(4, 2)) == std::vector<int>{2, 2, 1, 1});
  for (int m = 1; m <= 6; ++m)
    CHECK(m1_undirected(t_nm(2 * m, m)) == bound_tree(m));
}

TEST_CASE("bounds") {
  CHECK(bound_unicyclic(4, 2) == 8);
  CHECK(bound_unicyclic(6, 3) == 14);
  CHECK(bound_unicyclic(5, 2) == 12);
  const std::int64_t perfect[] = {0, 0, 8, 14, 21, 29};
  for (int m = 2; m <= 5; ++m) {
    CHECK(bound_unicyclic_perfect(m) == perfect[m]);
    CHECK(bound_unicyclic(2 * m, m) == perfect[m]);
  }
  CHECK(bound_tree(2) == 10);
  CHECK(bound_tree(3) == 20);
  CHECK(bound_tree_oriented(2) == 5);
  CHECK(bound_tree_oriented(3) == 10);
  CHECK(unicyclic_bound(7, 3).value == 19);
  CHECK_THROWS_AS(bound_unicyclic(5, 3), RangeError);
  CHECK_THROWS_AS(bound_unicyclic_perfect(1), RangeError);
  CHECK_THROWS_AS(bound_tree(0), RangeError);
}

TEST_CASE("the four extremal orientations attain the bound") {
  for (int n = 4; n <= 12; ++n)
    for (int m = 2; 2 * m <= n; ++m) {
      const auto four = u_extremal_orientations(n, m);
      const Graph base = u_nm(n, m);
      for (const Digraph &d : four) {
        CHECK(d.underlying() == base);
        CHECK(m1_digraph(d) == bound_unicyclic(n, m));
      }
      // Hub is a source in the first two, a sink in the last two.
      CHECK(four[0].in_degree(0) == 0);
      CHECK(four[1].in_degree(0) == 0);
      CHECK(four[2].out_degree(0) == 0);
      CHECK(four[3].out_degree(0) == 0);
      CHECK(four[0].has_arc(1, 2));
      CHECK(four[1].has_arc(2, 1));
      CHECK(four[2].has_arc(1, 2));
      CHECK(four[3].has_arc(2, 1));
    }
}

TEST_CASE("extremal sets") {
  CHECK(extremal_set(4, 2).size() == 6);
  CHECK(extremal_set(6, 3).size() == 6);
  CHECK(extremal_set(5, 2).size() == 4);
  CHECK(extremal_set(8, 4).size() == 4);
  for (const Digraph &d : extremal_set(6, 3))
    CHECK(m1_digraph(d) == 14);
  // Swapping the two triangle vertices carries 1->2 to 2->1, so the four
  // orientations form two classes; the C4 pair is a third.
  std::set<CanonicalCode> codes;
  for (const Digraph &d : extremal_set(4, 2))
    codes.insert(canonical_code_digraph(d));
  CHECK(codes.size() == 3);
}
