#include "zagreb/digraph.hpp"

#include "zagreb/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace zagreb {

namespace {

std::string arc_text(int t, int h) {
  return std::to_string(t) + " > " + std::to_string(h);
}

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

} // namespace

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
  if (n < 0 || n > kMaxGraphVertices)
    throw SizeLimitError("digraph order " + std::to_string(n) +
                         " outside 0.." + std::to_string(kMaxGraphVertices));
  Digraph d;
  d.n_ = n;
  d.out_.assign(idx(n), 0);
  d.in_.assign(idx(n), 0);
  d.arcs_.assign(arcs.begin(), arcs.end());
  for (const Arc &a : d.arcs_) {
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n)
      throw InvalidGraphError("arc " + arc_text(a.tail, a.head) +
                              " has an endpoint outside 0.." +
                              std::to_string(n - 1));
    if (a.tail == a.head)
      throw InvalidGraphError("loop at vertex " + std::to_string(a.tail));
  }
  std::sort(d.arcs_.begin(), d.arcs_.end());
  auto dup = std::adjacent_find(d.arcs_.begin(), d.arcs_.end());
  if (dup != d.arcs_.end())
    throw InvalidGraphError("repeated arc " + arc_text(dup->tail, dup->head));
  for (const Arc &a : d.arcs_) {
    d.out_[idx(a.tail)] |= VertexMask{1} << a.head;
    d.in_[idx(a.head)] |= VertexMask{1} << a.tail;
  }
  return d;
}

int Digraph::out_degree(int v) const { return std::popcount(out_neighbors(v)); }
int Digraph::in_degree(int v) const { return std::popcount(in_neighbors(v)); }

bool Digraph::is_oriented() const {
  for (int v = 0; v < n_; ++v)
    if (out_[idx(v)] & in_[idx(v)])
      return false;
  return true;
}

Graph Digraph::underlying() const {
  if (!is_oriented())
    throw InvalidGraphError("digraph has an antiparallel pair of arcs");
  std::vector<Edge> es;
  es.reserve(arcs_.size());
  for (const Arc &a : arcs_)
    es.push_back({a.tail, a.head});
  return Graph::from_edges(n_, es);
}

Digraph Digraph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw InvalidGraphError("permutation length does not match digraph order");
  std::vector<Arc> as;
  as.reserve(arcs_.size());
  for (const Arc &a : arcs_)
    as.push_back({perm[idx(a.tail)], perm[idx(a.head)]});
  return from_arcs(n_, as);
}

Orientation::Orientation(Graph base, std::uint32_t bits)
    : base_(std::move(base)), bits_(bits) {
  const int m = base_.size();
  if (m > 30)
    throw SizeLimitError("orientation bit-vector limited to 30 edges, graph has " +
                         std::to_string(m));
  if ((bits_ >> m) != 0)
    throw RangeError("orientation bits exceed the edge count " + std::to_string(m));
}

Orientation Orientation::of(Graph base, const Digraph &d) {
  if (d.order() != base.order() || d.size() != base.size())
    throw InvalidGraphError("digraph is not an orientation of the base graph");
  std::uint32_t bits = 0;
  const auto &es = base.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Edge &e = es[i];
    if (d.has_arc(e.u, e.v) && !d.has_arc(e.v, e.u))
      continue;
    if (d.has_arc(e.v, e.u) && !d.has_arc(e.u, e.v)) {
      bits |= std::uint32_t{1} << i;
      continue;
    }
    throw InvalidGraphError("digraph is not an orientation of the base graph");
  }
  return Orientation(std::move(base), bits);
}

Digraph Orientation::to_digraph() const {
  std::vector<Arc> as;
  const auto &es = base_.edges();
  as.reserve(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Edge &e = es[i];
    if ((bits_ >> i) & 1U)
      as.push_back({e.v, e.u});
    else
      as.push_back({e.u, e.v});
  }
  return Digraph::from_arcs(base_.order(), as);
}

std::string Orientation::to_hex() const {
  char buf[16];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, bits_, 16);
  return std::string(buf, end);
}

Orientation Orientation::from_hex(Graph base, const std::string &hex) {
  std::string_view text(hex);
  if (text.starts_with("0x") || text.starts_with("0X"))
    text.remove_prefix(2);
  std::uint32_t bits = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), bits, 16);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("malformed orientation hex string '" + hex + "'");
  return Orientation(std::move(base), bits);
}

std::int64_t m1_arc_sum_doubled(const Digraph &d) {
  std::int64_t total = 0;
  for (const Arc &a : d.arcs())
    total += d.out_degree(a.tail) + d.in_degree(a.head);
  return total;
}

std::int64_t m1_vertex_sum_doubled(const Digraph &d) {
  std::int64_t total = 0;
  for (int v = 0; v < d.order(); ++v) {
    const std::int64_t out = d.out_degree(v);
    const std::int64_t in = d.in_degree(v);
    total += out * out + in * in;
  }
  return total;
}

std::int64_t m1_digraph(const Digraph &d) {
  if (d.order() > 1)
    for (int v = 0; v < d.order(); ++v)
      if (d.out_degree(v) + d.in_degree(v) == 0)
        throw IsolatedVertexError("vertex " + std::to_string(v) + " is isolated");
  const std::int64_t arc_sum = m1_arc_sum_doubled(d);
  const std::int64_t vertex_sum = m1_vertex_sum_doubled(d);
  if (arc_sum != vertex_sum)
    throw InternalInconsistencyError("arc sum " + std::to_string(arc_sum) +
                                     " != vertex sum " + std::to_string(vertex_sum));
  if (arc_sum % 2 != 0)
    throw InternalInconsistencyError("odd doubled Zagreb sum " + std::to_string(arc_sum));
  return arc_sum / 2;
}

bool is_sink_source(const Digraph &d) {
  for (int v = 0; v < d.order(); ++v)
    if (d.out_degree(v) > 0 && d.in_degree(v) > 0)
      return false;
  return true;
}

std::pair<Digraph, Digraph> sink_source_orientations(const Graph &g) {
  if (!is_connected(g))
    throw NotConnectedError("sink_source_orientations: graph is not connected");
  const auto coloring = two_coloring(g);
  if (!coloring)
    throw NotBipartiteError("sink_source_orientations: graph has an odd cycle");
  std::vector<Arc> forward;
  forward.reserve(g.edges().size());
  for (const Edge &e : g.edges()) {
    if ((*coloring)[idx(e.u)] == 0)
      forward.push_back({e.u, e.v});
    else
      forward.push_back({e.v, e.u});
  }
  Digraph d = Digraph::from_arcs(g.order(), forward);
  Digraph r = reverse(d);
  return {std::move(d), std::move(r)};
}

Digraph reverse(const Digraph &d) {
  std::vector<Arc> as;
  as.reserve(d.arcs().size());
  for (const Arc &a : d.arcs())
    as.push_back({a.head, a.tail});
  return Digraph::from_arcs(d.order(), as);
}

} // namespace zagreb
