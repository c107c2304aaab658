#include "zagreb/canonical.hpp"

#include "zagreb/error.hpp"
#include "zagreb/limits.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

// Canonical labeling by individualization and refinement.
//
// The vertex set is kept as an ordered partition (a color per vertex, colors
// 0..k-1 with cell order given by color). Refinement replaces each color by
// the pair (color, counts of out- and in-neighbours per color) and renumbers
// by sorting those signatures, which keeps the cell order and is invariant
// under relabeling. When refinement stalls, the first non-singleton cell is
// split by individualizing each of its vertices in turn. Every discrete
// partition is a labeling; the smallest adjacency bit string over all
// leaves is the code.
//
// Two candidates u, v of the same cell whose transposition is an
// automorphism lead to identical subtrees, so only the first is explored.
// That collapses twins (leaves on a common vertex, vertices of a clique)
// and keeps stars and complete graphs linear.

namespace zagreb {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

struct Structure {
  int n = 0;
  bool directed = false;
  std::vector<VertexMask> out;
  std::vector<VertexMask> in;
};

class Canonicalizer {
public:
  explicit Canonicalizer(Structure s) : s_(std::move(s)) {}

  CanonicalForm run() {
    std::vector<int> colors(idx(s_.n), 0);
    search(colors);
    CanonicalForm form;
    form.code = std::move(*best_code_);
    form.labeling = std::move(best_labeling_);
    return form;
  }

private:
  int refine(std::vector<int> &colors) const {
    const int n = s_.n;
    int cells = n == 0 ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<std::vector<int>> sig(idx(n));
    std::vector<int> order(idx(n));
    for (;;) {
      const int width = s_.directed ? 2 * cells : cells;
      for (int v = 0; v < n; ++v) {
        auto &row = sig[idx(v)];
        row.assign(idx(1 + width), 0);
        row[0] = colors[idx(v)];
        for (VertexMask m = s_.out[idx(v)]; m; m &= m - 1)
          ++row[idx(1 + colors[idx(std::countr_zero(m))])];
        if (s_.directed)
          for (VertexMask m = s_.in[idx(v)]; m; m &= m - 1)
            ++row[idx(1 + cells + colors[idx(std::countr_zero(m))])];
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sig[idx(a)] < sig[idx(b)]; });
      int next = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[idx(order[idx(i)])] != sig[idx(order[idx(i - 1)])])
          ++next;
        colors[idx(order[idx(i)])] = next;
      }
      const int refined = n == 0 ? 0 : next + 1;
      if (refined == cells)
        return cells;
      cells = refined;
    }
  }

  bool transposition_is_automorphism(int u, int v) const {
    const VertexMask bu = VertexMask{1} << u;
    const VertexMask bv = VertexMask{1} << v;
    const VertexMask keep = ~(bu | bv);
    if ((s_.out[idx(u)] & keep) != (s_.out[idx(v)] & keep))
      return false;
    if ((s_.in[idx(u)] & keep) != (s_.in[idx(v)] & keep))
      return false;
    const bool uv = (s_.out[idx(u)] & bv) != 0;
    const bool vu = (s_.out[idx(v)] & bu) != 0;
    return uv == vu;
  }

  CanonicalCode encode(const std::vector<int> &position) const {
    const int n = s_.n;
    std::vector<int> vertex_at(idx(n));
    for (int v = 0; v < n; ++v)
      vertex_at[idx(position[idx(v)])] = v;
    CanonicalCode code;
    code.bytes.push_back(s_.directed ? 1 : 0);
    code.bytes.push_back(static_cast<std::uint8_t>(n));
    std::uint8_t acc = 0;
    int filled = 0;
    auto push_bit = [&](bool bit) {
      acc = static_cast<std::uint8_t>((acc << 1) | (bit ? 1 : 0));
      if (++filled == 8) {
        code.bytes.push_back(acc);
        acc = 0;
        filled = 0;
      }
    };
    for (int i = 0; i < n; ++i) {
      const VertexMask row = s_.out[idx(vertex_at[idx(i)])];
      for (int j = s_.directed ? 0 : i + 1; j < n; ++j) {
        if (j == i)
          continue;
        push_bit((row >> vertex_at[idx(j)]) & 1U);
      }
    }
    if (filled > 0)
      code.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    return code;
  }

  void search(std::vector<int> colors) {
    const int cells = refine(colors);
    if (cells == s_.n) {
      CanonicalCode code = encode(colors);
      if (!best_code_ || code < *best_code_) {
        best_code_ = std::move(code);
        best_labeling_ = colors;
      }
      return;
    }
    std::vector<int> cell_size(idx(cells), 0);
    for (int c : colors)
      ++cell_size[idx(c)];
    int target = 0;
    while (cell_size[idx(target)] == 1)
      ++target;
    std::vector<int> tried;
    for (int v = 0; v < s_.n; ++v) {
      if (colors[idx(v)] != target)
        continue;
      const bool redundant = std::any_of(tried.begin(), tried.end(), [&](int u) {
        return transposition_is_automorphism(u, v);
      });
      if (redundant)
        continue;
      tried.push_back(v);
      std::vector<int> child = colors;
      for (int w = 0; w < s_.n; ++w)
        if (child[idx(w)] > target || (child[idx(w)] == target && w != v))
          ++child[idx(w)];
      search(std::move(child));
    }
  }

  Structure s_;
  std::optional<CanonicalCode> best_code_;
  std::vector<int> best_labeling_;
};

} // namespace

std::string CanonicalCode::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

CanonicalForm canonical_form(const Graph &g) {
  check_vertex_limit(g.order(), "canonical_code");
  Structure s;
  s.n = g.order();
  s.directed = false;
  for (int v = 0; v < s.n; ++v)
    s.out.push_back(g.neighbors(v));
  s.in = s.out;
  if (s.n == 0) {
    CanonicalForm form;
    form.code.bytes = {0, 0};
    return form;
  }
  return Canonicalizer(std::move(s)).run();
}

CanonicalForm canonical_form(const Digraph &d) {
  check_vertex_limit(d.order(), "canonical_code_digraph");
  Structure s;
  s.n = d.order();
  s.directed = true;
  for (int v = 0; v < s.n; ++v) {
    s.out.push_back(d.out_neighbors(v));
    s.in.push_back(d.in_neighbors(v));
  }
  if (s.n == 0) {
    CanonicalForm form;
    form.code.bytes = {1, 0};
    return form;
  }
  return Canonicalizer(std::move(s)).run();
}

CanonicalCode canonical_code(const Graph &g) { return canonical_form(g).code; }

CanonicalCode canonical_code_digraph(const Digraph &d) {
  return canonical_form(d).code;
}

Graph canonical_graph(const Graph &g) {
  return g.permuted(canonical_form(g).labeling);
}

Digraph canonical_digraph(const Digraph &d) {
  return d.permuted(canonical_form(d).labeling);
}

} // namespace zagreb
