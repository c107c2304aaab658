#include "zagreb/graph.hpp"

#include "zagreb/error.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace zagreb {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxGraphVertices)
    throw SizeLimitError("graph order " + std::to_string(n) +
                         " outside 0.." + std::to_string(kMaxGraphVertices));
}

std::string edge_text(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

} // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  g.edges_.reserve(edges.size());
  for (const Edge &e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InvalidGraphError("edge " + edge_text(e.u, e.v) +
                              " has an endpoint outside 0.." +
                              std::to_string(n - 1));
    if (e.u == e.v)
      throw InvalidGraphError("loop at vertex " + std::to_string(e.u));
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw InvalidGraphError("repeated edge " + edge_text(dup->u, dup->v));
  for (const Edge &e : g.edges_) {
    g.adj_[static_cast<std::size_t>(e.u)] |= VertexMask{1} << e.v;
    g.adj_[static_cast<std::size_t>(e.v)] |= VertexMask{1} << e.u;
  }
  return g;
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v)
    out[static_cast<std::size_t>(v)] = degree(v);
  return out;
}

bool Graph::adjacent(int u, int v) const { return (neighbors(u) >> v) & 1U; }

int Graph::edge_index(int u, int v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key)
    return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::with_edge(int u, int v) const {
  std::vector<Edge> es = edges_;
  es.push_back({u, v});
  return from_edges(n_, es);
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw InvalidGraphError("permutation length does not match graph order");
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const Edge &e : edges_)
    es.push_back({perm[static_cast<std::size_t>(e.u)],
                  perm[static_cast<std::size_t>(e.v)]});
  return from_edges(n_, es);
}

Matching::Matching(const Graph &g, std::vector<Edge> edges)
    : edges_(std::move(edges)) {
  for (Edge &e : edges_) {
    if (e.u > e.v)
      std::swap(e.u, e.v);
    if (g.edge_index(e.u, e.v) < 0)
      throw InvalidGraphError("matching edge " + edge_text(e.u, e.v) +
                              " is not an edge of the graph");
    const VertexMask ends = (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
    if (covered_ & ends)
      throw InvalidGraphError("matching edges share a vertex at " +
                              edge_text(e.u, e.v));
    covered_ |= ends;
  }
  std::sort(edges_.begin(), edges_.end());
}

std::int64_t m1_undirected(const Graph &g) {
  const int n = g.order();
  std::int64_t total = 0;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == 0 && n > 1)
      throw IsolatedVertexError("vertex " + std::to_string(v) +
                                " is isolated");
  }
  for (const Edge &e : g.edges())
    total += g.degree(e.u) + g.degree(e.v);
  return total;
}

bool is_connected(const Graph &g) {
  const int n = g.order();
  if (n == 0)
    return true;
  const VertexMask all = n == 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  VertexMask seen = 1, frontier = 1;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1)
      next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

bool is_tree(const Graph &g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_unicyclic(const Graph &g) {
  return g.order() >= 3 && g.size() == g.order() && is_connected(g);
}

std::optional<std::vector<int>> two_coloring(const Graph &g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (color[static_cast<std::size_t>(root)] >= 0)
      continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (VertexMask nb = g.neighbors(x); nb; nb &= nb - 1) {
        const int y = std::countr_zero(nb);
        auto &cy = color[static_cast<std::size_t>(y)];
        const int want = 1 - color[static_cast<std::size_t>(x)];
        if (cy < 0) {
          cy = want;
          q.push(y);
        } else if (cy != want) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph &g) { return two_coloring(g).has_value(); }

namespace {

// Edmonds' blossom algorithm, one BFS per free vertex.
class BlossomMatcher {
public:
  explicit BlossomMatcher(const Graph &g)
      : g_(g), n_(g.order()), mate_(idx(n_), -1), parent_(idx(n_)),
        base_(idx(n_)), used_(idx(n_)), blossom_(idx(n_)) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[idx(v)] >= 0)
        continue;
      const int end = find_path(v);
      augment(end);
    }
    return mate_;
  }

private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  int lca(int a, int b) const {
    std::vector<char> on_path(idx(n_), 0);
    for (;;) {
      a = base_[idx(a)];
      on_path[idx(a)] = 1;
      if (mate_[idx(a)] < 0)
        break;
      a = parent_[idx(mate_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (on_path[idx(b)])
        return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[idx(v)] != b) {
      blossom_[idx(base_[idx(v)])] = 1;
      blossom_[idx(base_[idx(mate_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i)
      base_[idx(i)] = i;
    used_[idx(root)] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (VertexMask nb = g_.neighbors(v); nb; nb &= nb - 1) {
        const int to = std::countr_zero(nb);
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to)
          continue;
        if (to == root ||
            (mate_[idx(to)] >= 0 && parent_[idx(mate_[idx(to)])] >= 0)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!blossom_[idx(base_[idx(i)])])
              continue;
            base_[idx(i)] = cur;
            if (!used_[idx(i)]) {
              used_[idx(i)] = 1;
              q.push(i);
            }
          }
        } else if (parent_[idx(to)] < 0) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] < 0)
            return to;
          used_[idx(mate_[idx(to)])] = 1;
          q.push(mate_[idx(to)]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v >= 0) {
      const int pv = parent_[idx(v)];
      const int ppv = mate_[idx(pv)];
      mate_[idx(v)] = pv;
      mate_[idx(pv)] = v;
      v = ppv;
    }
  }

  const Graph &g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

int exhaustive_matching(const Graph &g, VertexMask remaining) {
  // Lowest remaining vertex is either left unmatched or matched to a
  // remaining neighbour.
  while (remaining && (g.neighbors(std::countr_zero(remaining)) & remaining) == 0)
    remaining &= remaining - 1;
  if (!remaining)
    return 0;
  const int v = std::countr_zero(remaining);
  const VertexMask rest = remaining & ~(VertexMask{1} << v);
  int best = exhaustive_matching(g, rest);
  for (VertexMask nb = g.neighbors(v) & rest; nb; nb &= nb - 1) {
    const int u = std::countr_zero(nb);
    best = std::max(best, 1 + exhaustive_matching(g, rest & ~(VertexMask{1} << u)));
  }
  return best;
}

} // namespace

Matching maximum_matching(const Graph &g) {
  const std::vector<int> mate = BlossomMatcher(g).run();
  std::vector<Edge> es;
  for (int v = 0; v < g.order(); ++v) {
    const int u = mate[static_cast<std::size_t>(v)];
    if (u > v)
      es.push_back({v, u});
  }
  return Matching(g, std::move(es));
}

int matching_number(const Graph &g) { return maximum_matching(g).size(); }

int matching_number_exhaustive(const Graph &g) {
  const int n = g.order();
  const VertexMask all = n == 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  return exhaustive_matching(g, all);
}

std::vector<Matching> all_maximum_matchings(const Graph &g) {
  const int m = g.size();
  if (m > 30)
    throw SizeLimitError("all_maximum_matchings: more than 30 edges");
  const auto &es = g.edges();
  int best = 0;
  std::vector<std::uint32_t> winners;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << m); ++subset) {
    const int k = std::popcount(subset);
    if (k < best)
      continue;
    VertexMask covered = 0;
    bool ok = true;
    for (std::uint32_t s = subset; s && ok; s &= s - 1) {
      const Edge &e = es[static_cast<std::size_t>(std::countr_zero(s))];
      const VertexMask ends = (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
      ok = (covered & ends) == 0;
      covered |= ends;
    }
    if (!ok)
      continue;
    if (k > best) {
      best = k;
      winners.clear();
    }
    winners.push_back(subset);
  }
  std::vector<Matching> out;
  out.reserve(winners.size());
  for (std::uint32_t subset : winners) {
    std::vector<Edge> chosen;
    for (std::uint32_t s = subset; s; s &= s - 1)
      chosen.push_back(es[static_cast<std::size_t>(std::countr_zero(s))]);
    out.emplace_back(g, std::move(chosen));
  }
  return out;
}

namespace {

std::vector<int> bfs_distances(const Graph &g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (VertexMask nb = g.neighbors(x); nb; nb &= nb - 1) {
      const int y = std::countr_zero(nb);
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

int farthest(const std::vector<int> &dist) {
  return static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

} // namespace

std::vector<std::vector<int>> distance_matrix(const Graph &g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v)
    out.push_back(bfs_distances(g, v));
  return out;
}

std::vector<int> diametrical_path(const Graph &g) {
  if (!is_tree(g))
    throw NotATreeError("diametrical_path: graph is not a tree");
  const int a = farthest(bfs_distances(g, 0));
  const std::vector<int> from_a = bfs_distances(g, a);
  int cur = farthest(from_a);
  std::vector<int> path{cur};
  while (cur != a) {
    for (VertexMask nb = g.neighbors(cur); nb; nb &= nb - 1) {
      const int y = std::countr_zero(nb);
      if (from_a[static_cast<std::size_t>(y)] ==
          from_a[static_cast<std::size_t>(cur)] - 1) {
        cur = y;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

} // namespace zagreb
