#include <doctest.h>

#include "zagreb/canonical.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/error.hpp"
#include "zagreb/families.hpp"
#include "zagreb/limits.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

using namespace zagreb;

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

std::uint64_t binom(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// |Aut(g)| by trying every permutation.
std::uint64_t automorphisms(const Graph &g) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t k = 0;
  do {
    k += g.permuted(p) == g;
  } while (std::next_permutation(p.begin(), p.end()));
  return k;
}

// Number of labeled graphs represented by a list of class representatives.
std::uint64_t labeled_total(const std::vector<Graph> &classes, int n) {
  std::uint64_t s = 0;
  for (const Graph &g : classes)
    s += factorial(n) / automorphisms(g);
  return s;
}

// Labeled connected unicyclic graphs: choose the k cycle vertices, a cyclic
// order on them, then a rooted forest on the rest hanging off the cycle.
std::uint64_t labeled_unicyclic(int n) {
  std::uint64_t s = 0;
  for (int k = 3; k <= n; ++k) {
    const std::uint64_t cycles = binom(n, k) * factorial(k - 1) / 2;
    const std::uint64_t forests =
        k == n ? 1 : static_cast<std::uint64_t>(k) * ipow(static_cast<std::uint64_t>(n), n - k - 1);
    s += cycles * forests;
  }
  return s;
}

bool pairwise_non_isomorphic(const std::vector<Graph> &gs) {
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      std::vector<int> p(static_cast<std::size_t>(gs[i].order()));
      std::iota(p.begin(), p.end(), 0);
      do {
        if (gs[i].permuted(p) == gs[j])
          return false;
      } while (std::next_permutation(p.begin(), p.end()));
    }
  return true;
}

bool canonical_and_sorted(const std::vector<Graph> &gs) {
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (!(canonical_graph(gs[i]) == gs[i]))
      return false;
    if (i > 0 && !(canonical_code(gs[i - 1]) < canonical_code(gs[i])))
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("tree counts") {
  const std::size_t known[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n)
    CHECK(all_trees(n).size() == known[n]);
}

TEST_CASE("trees cover every labeled tree exactly once") {
  for (int n = 1; n <= 8; ++n) {
    const auto trees = all_trees(n);
    for (const Graph &t : trees)
      CHECK(is_tree(t));
    const std::uint64_t cayley = n == 1 ? 1 : ipow(static_cast<std::uint64_t>(n), n - 2);
    CHECK(labeled_total(trees, n) == cayley);
  }
  CHECK(pairwise_non_isomorphic(all_trees(7)));
}

TEST_CASE("leaf growth and Pruefer decoding agree") {
  for (int n = 1; n <= 8; ++n)
    CHECK(all_trees(n) == all_trees_by_pruefer(n));
}

TEST_CASE("trees on four vertices are the path and the star") {
  const auto trees = all_trees(4);
  REQUIRE(trees.size() == 2);
  std::vector<std::vector<int>> degs;
  for (const Graph &t : trees) {
    auto d = t.degrees();
    std::sort(d.begin(), d.end());
    degs.push_back(d);
  }
  std::sort(degs.begin(), degs.end());
  CHECK(degs[0] == std::vector<int>{1, 1, 1, 3});
  CHECK(degs[1] == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("unicyclic counts") {
  const std::size_t known[] = {0, 0, 0, 1, 2, 5, 13, 33, 89, 240, 657};
  for (int n = 3; n <= 10; ++n)
    CHECK(all_unicyclic(n).size() == known[n]);
}

TEST_CASE("unicyclic graphs cover every labeled unicyclic graph exactly once") {
  CHECK(labeled_unicyclic(3) == 1);
  CHECK(labeled_unicyclic(4) == 15);
  for (int n = 3; n <= 8; ++n) {
    const auto us = all_unicyclic(n);
    for (const Graph &u : us)
      CHECK(is_unicyclic(u));
    CHECK(labeled_total(us, n) == labeled_unicyclic(n));
  }
  CHECK(pairwise_non_isomorphic(all_unicyclic(7)));
}

TEST_CASE("unicyclic graphs on five vertices by brute force over edge sets") {
  // Every 5-edge graph on 5 vertices that is connected, deduped by the
  // permutation oracle.
  std::vector<Edge> pairs;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      pairs.push_back({u, v});
  std::vector<Graph> reps;
  for (std::uint32_t mask = 0; mask < (1U << 10); ++mask) {
    if (std::popcount(mask) != 5)
      continue;
    std::vector<Edge> es;
    for (int i = 0; i < 10; ++i)
      if ((mask >> i) & 1U)
        es.push_back(pairs[static_cast<std::size_t>(i)]);
    const Graph g = Graph::from_edges(5, es);
    if (!is_connected(g))
      continue;
    reps.push_back(g);
    if (!pairwise_non_isomorphic(reps))
      reps.pop_back();
  }
  CHECK(reps.size() == 5);
  CHECK(all_unicyclic(5).size() == 5);
}

TEST_CASE("connected graph counts") {
  const std::size_t known[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto cs = all_connected(n);
    CHECK(cs.size() == known[n]);
    for (const Graph &g : cs)
      CHECK(is_connected(g));
  }
  CHECK(pairwise_non_isomorphic(all_connected(5)));
}

TEST_CASE("enumerated graphs are canonical and sorted by code") {
  CHECK(canonical_and_sorted(all_trees(9)));
  CHECK(canonical_and_sorted(all_unicyclic(8)));
  CHECK(canonical_and_sorted(all_connected(6)));
}

TEST_CASE("graphs in a class") {
  const auto u42 = graphs_in_class({GraphKind::unicyclic, 4, 2});
  REQUIRE(u42.size() == 2);
  std::vector<CanonicalCode> want{canonical_code(cycle_graph(4)), canonical_code(u_nm(4, 2))};
  std::sort(want.begin(), want.end());
  CHECK(canonical_code(u42[0]) == want[0]);
  CHECK(canonical_code(u42[1]) == want[1]);

  const auto t42 = graphs_in_class({GraphKind::tree, 4, 2});
  REQUIRE(t42.size() == 1);
  CHECK(t42[0].degree(0) + t42[0].degree(1) + t42[0].degree(2) + t42[0].degree(3) == 6);
  CHECK(std::ranges::max(t42[0].degrees()) == 2);

  // The class sizes split the whole family.
  for (int n = 4; n <= 9; ++n) {
    std::size_t total = 0;
    for (int m = 2; 2 * m <= n; ++m)
      total += graphs_in_class({GraphKind::unicyclic, n, m}).size();
    // Only C3 has matching number 1 among unicyclic graphs, and n >= 4.
    CHECK(total == all_unicyclic(n).size());
  }
  for (int n = 2; n <= 10; ++n) {
    std::size_t total = 0;
    for (int m = 1; 2 * m <= n; ++m)
      total += graphs_in_class({GraphKind::tree, n, m}).size();
    CHECK(total == all_trees(n).size());
  }
}

TEST_CASE("class specs are validated") {
  CHECK_THROWS_AS(graphs_in_class({GraphKind::unicyclic, 5, 1}), RangeError);
  CHECK_THROWS_AS(graphs_in_class({GraphKind::unicyclic, 5, 3}), RangeError);
  CHECK_THROWS_AS(graphs_in_class({GraphKind::tree, 4, 0}), RangeError);
  CHECK_THROWS_AS(all_trees(0), RangeError);
  CHECK_THROWS_AS(all_unicyclic(2), RangeError);
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(all_trees(max_vertices() + 1), SizeLimitError);
  CHECK_THROWS_AS(all_unicyclic(max_vertices() + 1), SizeLimitError);
}
