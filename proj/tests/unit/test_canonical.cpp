#include <doctest.h>

#include "zagreb/canonical.hpp"
#include "zagreb/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using namespace zagreb;

namespace {

std::vector<int> identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Isomorphism by trying every bijection.
template <class G>
bool isomorphic_oracle(const G &a, const G &b) {
  if (a.order() != b.order() || a.size() != b.size())
    return false;
  auto p = identity(a.order());
  do {
    if (a.permuted(p) == b)
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> es;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U)
        es.push_back({u, v});
  return Graph::from_edges(n, es);
}

// Each unordered pair gets absent, u->v or v->u.
Digraph oriented_from_ternary(int n, int code) {
  std::vector<Arc> as;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int t = code % 3;
      code /= 3;
      if (t == 1)
        as.push_back({u, v});
      else if (t == 2)
        as.push_back({v, u});
    }
  return Digraph::from_arcs(n, as);
}

Graph decode_pruefer(const std::vector<int> &seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq)
    ++degree[static_cast<std::size_t>(x)];
  std::vector<Edge> es;
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        es.push_back({std::min(leaf, x), std::max(leaf, x)});
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        es.push_back({a, v});
        break;
      }
    }
  }
  return Graph::from_edges(n, es);
}

std::vector<int> random_perm(std::mt19937 &rng, int n) {
  auto p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

} // namespace

TEST_CASE("relabeled paths share a code") {
  const Graph a = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const Graph b = Graph::from_edges(3, std::vector<Edge>{{0, 2}, {2, 1}});
  CHECK(canonical_code(a) == canonical_code(b));
}

TEST_CASE("path and star on four vertices differ") {
  const Graph path = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(canonical_code(path) != canonical_code(star_graph(3)));
}

TEST_CASE("labeled trees on five vertices fall into three classes") {
  std::set<CanonicalCode> codes;
  int labeled = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) {
        codes.insert(canonical_code(decode_pruefer({a, b, c})));
        ++labeled;
      }
  CHECK(labeled == 125);
  CHECK(codes.size() == 3);
}

TEST_CASE("class counts over all labeled graphs") {
  // Graphs on n vertices up to isomorphism: 4 -> 11, 5 -> 34, 6 -> 156.
  const std::size_t known[] = {0, 0, 0, 0, 11, 34, 156};
  for (int n = 4; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::set<CanonicalCode> codes;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask)
      codes.insert(canonical_code(graph_from_mask(n, mask)));
    CHECK(codes.size() == known[n]);
    if (n > 5)
      continue;
    // One representative per oracle class.
    std::vector<Graph> reps;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      if (std::none_of(reps.begin(), reps.end(),
                       [&](const Graph &r) { return isomorphic_oracle(r, g); }))
        reps.push_back(g);
    }
    CHECK(codes.size() == reps.size());
  }
}

TEST_CASE("codes agree with the permutation oracle on random pairs") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::uint32_t> any(0, (1U << 15) - 1);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph a = graph_from_mask(6, any(rng));
    Graph b = graph_from_mask(6, any(rng));
    if (trial % 2 == 0)
      b = a.permuted(random_perm(rng, 6));
    CHECK((canonical_code(a) == canonical_code(b)) == isomorphic_oracle(a, b));
  }
}

TEST_CASE("codes are invariant under random relabeling") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 10;
    std::bernoulli_distribution coin(0.4);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng))
          es.push_back({u, v});
    const Graph g = Graph::from_edges(n, es);
    const Graph h = g.permuted(random_perm(rng, n));
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(canonical_graph(g) == canonical_graph(h));
    const CanonicalForm f = canonical_form(g);
    CHECK(g.permuted(f.labeling) == canonical_graph(g));
  }
}

TEST_CASE("highly symmetric graphs") {
  const std::vector<int> perm{5, 3, 1, 11, 9, 7, 0, 2, 4, 6, 8, 10};
  CHECK(canonical_code(cycle_graph(12)) == canonical_code(cycle_graph(12).permuted(perm)));
  std::vector<Edge> k;
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v)
      k.push_back({u, v});
  const Graph k12 = Graph::from_edges(12, k);
  CHECK(canonical_code(k12).bytes.size() == 2 + (66 + 7) / 8);
  CHECK(canonical_code(star_graph(11)) != canonical_code(cycle_graph(12)));
}

TEST_CASE("directed paths") {
  const Digraph a = Digraph::from_arcs(3, std::vector<Arc>{{0, 1}, {1, 2}});
  const Digraph b = Digraph::from_arcs(3, std::vector<Arc>{{2, 0}, {0, 1}});
  const Digraph in_star = Digraph::from_arcs(3, std::vector<Arc>{{0, 1}, {2, 1}});
  CHECK(canonical_code_digraph(a) == canonical_code_digraph(b));
  CHECK(canonical_code_digraph(a) != canonical_code_digraph(in_star));
  const Graph path = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(canonical_code_digraph(a) != canonical_code(path));
}

TEST_CASE("oriented graphs on four vertices: 42 classes") {
  std::set<CanonicalCode> codes;
  std::vector<Digraph> reps;
  for (int code = 0; code < 729; ++code) {
    const Digraph d = oriented_from_ternary(4, code);
    codes.insert(canonical_code_digraph(d));
    if (std::none_of(reps.begin(), reps.end(),
                     [&](const Digraph &r) { return isomorphic_oracle(r, d); }))
      reps.push_back(d);
  }
  CHECK(reps.size() == 42);
  CHECK(codes.size() == 42);
}

TEST_CASE("digraph codes agree with the permutation oracle") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> any(0, 59048); // 3^10 - 1
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph a = oriented_from_ternary(5, any(rng));
    Digraph b = oriented_from_ternary(5, any(rng));
    if (trial % 2 == 0)
      b = a.permuted(random_perm(rng, 5));
    CHECK((canonical_code_digraph(a) == canonical_code_digraph(b)) == isomorphic_oracle(a, b));
    CHECK(canonical_digraph(a) == canonical_digraph(a.permuted(random_perm(rng, 5))));
  }
}
