#include "zagreb/enumerate.hpp"

#include "zagreb/canonical.hpp"
#include "zagreb/error.hpp"
#include "zagreb/limits.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <string>

namespace zagreb {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

using ClassMap = std::map<CanonicalCode, Graph>;

void insert_class(ClassMap &classes, const Graph &g) {
  CanonicalForm form = canonical_form(g);
  if (classes.contains(form.code))
    return;
  classes.emplace(std::move(form.code), g.permuted(form.labeling));
}

std::vector<Graph> values(const ClassMap &classes) {
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (const auto &[code, g] : classes)
    out.push_back(g);
  return out;
}

// Generation results are pure functions of n; memoize them per process.
class Memo {
public:
  template <class Build>
  std::vector<Graph> get(int n, Build &&build) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(n); it != cache_.end())
        return it->second;
    }
    std::vector<Graph> result = build();
    std::lock_guard lock(mutex_);
    return cache_.emplace(n, std::move(result)).first->second;
  }

private:
  std::mutex mutex_;
  std::map<int, std::vector<Graph>> cache_;
};

Memo &tree_memo() {
  static Memo memo;
  return memo;
}

Memo &unicyclic_memo() {
  static Memo memo;
  return memo;
}

Memo &connected_memo() {
  static Memo memo;
  return memo;
}

Graph add_vertex(const Graph &g, VertexMask neighbourhood) {
  std::vector<Edge> es = g.edges();
  const int fresh = g.order();
  for (VertexMask s = neighbourhood; s; s &= s - 1)
    es.push_back({std::countr_zero(s), fresh});
  return Graph::from_edges(fresh + 1, es);
}

Graph decode_pruefer(int n, const std::vector<int> &seq) {
  std::vector<int> degree(idx(n), 1);
  for (int x : seq)
    ++degree[idx(x)];
  std::vector<Edge> es;
  es.reserve(idx(n - 1));
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[idx(v)] == 1)
      leaves.insert(v);
  for (int x : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    es.push_back({leaf, x});
    if (--degree[idx(x)] == 1)
      leaves.insert(x);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  es.push_back({a, b});
  return Graph::from_edges(n, es);
}

} // namespace

void GraphClassSpec::validate() const {
  const int lo = kind == GraphKind::tree ? 1 : 2;
  if (m < lo || 2 * m > n)
    throw RangeError(std::string(kind == GraphKind::tree ? "tree" : "unicyclic") +
                     " class needs " + std::to_string(lo) +
                     " <= m <= floor(n/2), got n = " + std::to_string(n) +
                     ", m = " + std::to_string(m));
}

std::vector<Graph> all_trees(int n) {
  if (n < 1)
    throw RangeError("all_trees: n must be at least 1");
  check_vertex_limit(n, "all_trees");
  return tree_memo().get(n, [n] {
    if (n == 1)
      return std::vector<Graph>{Graph(1)};
    ClassMap classes;
    for (const Graph &t : all_trees(n - 1))
      for (int v = 0; v < n - 1; ++v)
        insert_class(classes, add_vertex(t, VertexMask{1} << v));
    return values(classes);
  });
}

std::vector<Graph> all_trees_by_pruefer(int n) {
  if (n < 1)
    throw RangeError("all_trees_by_pruefer: n must be at least 1");
  check_vertex_limit(n, "all_trees_by_pruefer");
  if (n <= 2) {
    ClassMap classes;
    insert_class(classes, n == 1 ? Graph(1) : Graph::from_edges(2, std::vector<Edge>{{0, 1}}));
    return values(classes);
  }
  ClassMap classes;
  std::vector<int> seq(idx(n - 2), 0);
  for (;;) {
    insert_class(classes, decode_pruefer(n, seq));
    int pos = n - 3;
    while (pos >= 0 && seq[idx(pos)] == n - 1)
      seq[idx(pos--)] = 0;
    if (pos < 0)
      break;
    ++seq[idx(pos)];
  }
  return values(classes);
}

std::vector<Graph> all_unicyclic(int n) {
  if (n < 3)
    throw RangeError("all_unicyclic: n must be at least 3");
  check_vertex_limit(n, "all_unicyclic");
  return unicyclic_memo().get(n, [n] {
    ClassMap classes;
    for (const Graph &t : all_trees(n))
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!t.adjacent(u, v))
            insert_class(classes, t.with_edge(u, v));
    return values(classes);
  });
}

std::vector<Graph> all_connected(int n) {
  if (n < 1)
    throw RangeError("all_connected: n must be at least 1");
  check_vertex_limit(n, "all_connected");
  return connected_memo().get(n, [n] {
    if (n == 1)
      return std::vector<Graph>{Graph(1)};
    ClassMap classes;
    const VertexMask subsets = VertexMask{1} << (n - 1);
    for (const Graph &g : all_connected(n - 1))
      for (VertexMask s = 1; s < subsets; ++s)
        insert_class(classes, add_vertex(g, s));
    return values(classes);
  });
}

std::vector<Graph> graphs_in_class(const GraphClassSpec &spec) {
  spec.validate();
  const std::vector<Graph> pool =
      spec.kind == GraphKind::tree ? all_trees(spec.n) : all_unicyclic(spec.n);
  std::vector<Graph> out;
  for (const Graph &g : pool)
    if (matching_number(g) == spec.m)
      out.push_back(g);
  return out;
}

OrientationRange::OrientationRange(Graph g) : graph_(std::move(g)) {
  if (graph_.size() > kMaxOrientationEdges)
    throw SizeLimitError("orientations: graph has " + std::to_string(graph_.size()) +
                         " edges, limit is " + std::to_string(kMaxOrientationEdges));
}

Digraph OrientationRange::at(std::uint64_t index) const {
  if (index >= size())
    throw RangeError("orientation index " + std::to_string(index) + " out of range");
  return Orientation(graph_, static_cast<std::uint32_t>(index)).to_digraph();
}

OrientationRange orientations(const Graph &g) { return OrientationRange(g); }

} // namespace zagreb
