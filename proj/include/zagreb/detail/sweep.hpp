#pragma once

#include "zagreb/error.hpp"
#include "zagreb/limits.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <string>

namespace zagreb {

namespace detail {

inline std::atomic<std::uint64_t> identity_checks{0};

struct SweepState {
  std::array<int, kMaxGraphVertices> out{};
  std::array<int, kMaxGraphVertices> in{};
  std::int64_t doubled = 0;
  int mixed = 0;

  static int square(int x) { return x * x; }
  bool is_mixed(int v) const { return out[v] > 0 && in[v] > 0; }

  void leave(int v) {
    doubled -= square(out[v]) + square(in[v]);
    mixed -= is_mixed(v);
  }
  void enter(int v) {
    doubled += square(out[v]) + square(in[v]);
    mixed += is_mixed(v);
  }
};

} // namespace detail

inline std::uint64_t identity_checks_total() {
  return detail::identity_checks.load(std::memory_order_relaxed);
}

template <class Visitor>
std::uint64_t sweep_orientations(const Graph &g, std::uint64_t first,
                                 std::uint64_t last, Visitor &&visit,
                                 IdentityCheck check) {
  const int m = g.size();
  if (m > kMaxOrientationEdges)
    throw SizeLimitError("orientation sweep limited to " +
                         std::to_string(kMaxOrientationEdges) + " edges, graph has " +
                         std::to_string(m));
  const std::uint64_t total = std::uint64_t{1} << m;
  if (last > total)
    last = total;
  if (first >= last)
    return 0;

  std::array<int, kMaxOrientationEdges> tail_of{};
  std::array<int, kMaxOrientationEdges> head_of{};
  for (int i = 0; i < m; ++i) {
    tail_of[static_cast<std::size_t>(i)] = g.edges()[static_cast<std::size_t>(i)].u;
    head_of[static_cast<std::size_t>(i)] = g.edges()[static_cast<std::size_t>(i)].v;
  }

  detail::SweepState st;
  auto bits = static_cast<std::uint32_t>(first ^ (first >> 1));
  for (int i = 0; i < m; ++i) {
    const bool flipped = (bits >> i) & 1U;
    const int t = flipped ? head_of[static_cast<std::size_t>(i)] : tail_of[static_cast<std::size_t>(i)];
    const int h = flipped ? tail_of[static_cast<std::size_t>(i)] : head_of[static_cast<std::size_t>(i)];
    ++st.out[static_cast<std::size_t>(t)];
    ++st.in[static_cast<std::size_t>(h)];
  }
  for (int v = 0; v < g.order(); ++v)
    st.enter(v);

  std::uint64_t checks = 0;
  auto arc_sum = [&]() {
    std::int64_t s = 0;
    for (int i = 0; i < m; ++i) {
      const bool flipped = (bits >> i) & 1U;
      const int t = flipped ? head_of[static_cast<std::size_t>(i)] : tail_of[static_cast<std::size_t>(i)];
      const int h = flipped ? tail_of[static_cast<std::size_t>(i)] : head_of[static_cast<std::size_t>(i)];
      s += st.out[static_cast<std::size_t>(t)] + st.in[static_cast<std::size_t>(h)];
    }
    return s;
  };

  for (std::uint64_t rank = first;;) {
    if (check == IdentityCheck::every || rank == first || (rank & 0xFFF) == 0) {
      const std::int64_t s = arc_sum();
      ++checks;
      if (s != st.doubled)
        throw InternalInconsistencyError(
            "arc sum " + std::to_string(s) + " != vertex sum " +
            std::to_string(st.doubled) + " at orientation bits " + std::to_string(bits));
    }
    visit(OrientationStats{bits, st.doubled, st.mixed});
    if (++rank == last)
      break;
    const int e = std::countr_zero(rank);
    const int u = tail_of[static_cast<std::size_t>(e)];
    const int v = head_of[static_cast<std::size_t>(e)];
    st.leave(u);
    st.leave(v);
    if ((bits >> e) & 1U) {
      // v->u becomes u->v
      --st.out[static_cast<std::size_t>(v)];
      --st.in[static_cast<std::size_t>(u)];
      ++st.out[static_cast<std::size_t>(u)];
      ++st.in[static_cast<std::size_t>(v)];
    } else {
      --st.out[static_cast<std::size_t>(u)];
      --st.in[static_cast<std::size_t>(v)];
      ++st.out[static_cast<std::size_t>(v)];
      ++st.in[static_cast<std::size_t>(u)];
    }
    st.enter(u);
    st.enter(v);
    bits ^= std::uint32_t{1} << e;
  }
  detail::identity_checks.fetch_add(checks, std::memory_order_relaxed);
  return checks;
}

} // namespace zagreb
