#include "zagreb/verify.hpp"

#include "zagreb/enumerate.hpp"
#include "zagreb/error.hpp"
#include "zagreb/families.hpp"
#include "zagreb/io.hpp"
#include "zagreb/limits.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <thread>

namespace zagreb {

namespace {

// Runs task(i) for i in [0, count) on up to `threads` workers and returns
// the results in index order, so the caller's reduction is deterministic.
template <class Result, class Task>
std::vector<Result> map_indexed(std::size_t count, int threads, Task task) {
  std::vector<Result> results(count);
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      results[i] = task(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w)
    pool.emplace_back(worker);
  pool.clear();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return results;
}

std::vector<CanonicalCode> class_codes(const std::vector<Digraph> &ds) {
  std::set<CanonicalCode> codes;
  for (const Digraph &d : ds)
    codes.insert(canonical_code_digraph(d));
  return {codes.begin(), codes.end()};
}

void check_no_isolated(const Graph &g) {
  if (g.order() > 1)
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) == 0)
        throw IsolatedVertexError("vertex " + std::to_string(v) + " is isolated");
}

// On FAIL, the first achiever whose class is not expected (or, failing
// that, the first expected construction that was never attained).
void attach_digraph_counterexample(Certificate &c, const std::vector<Digraph> &achievers,
                                   const std::vector<Digraph> &expected) {
  if (c.status == Status::pass)
    return;
  const std::set<CanonicalCode> want(c.expected_codes.begin(), c.expected_codes.end());
  for (const Digraph &d : achievers)
    if (c.observed_max > c.expected_bound || !want.contains(canonical_code_digraph(d))) {
      c.counterexample = format_digraph(d);
      return;
    }
  const std::set<CanonicalCode> got(c.achiever_codes.begin(), c.achiever_codes.end());
  for (const Digraph &d : expected)
    if (!got.contains(canonical_code_digraph(d))) {
      c.counterexample = format_digraph(d);
      return;
    }
}

struct ClassSweep {
  std::int64_t best = -1;
  std::vector<Digraph> achievers;
  std::uint64_t graphs = 0;
  std::uint64_t orientations = 0;
};

// Max of M1 over all orientations of all graphs, keeping every labeled
// achiever of the global maximum.
ClassSweep sweep_class(const std::vector<Graph> &graphs, const VerifyOptions &opts) {
  auto per_graph = map_indexed<OrientationMaximum>(
      graphs.size(), opts.threads, [&](std::size_t i) { return max_over_orientations(graphs[i]); });
  ClassSweep out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ++out.graphs;
    out.orientations += std::uint64_t{1} << graphs[i].size();
    OrientationMaximum &r = per_graph[i];
    if (r.value > out.best) {
      out.best = r.value;
      out.achievers.clear();
    }
    if (r.value == out.best)
      std::move(r.achievers.begin(), r.achievers.end(), std::back_inserter(out.achievers));
  }
  return out;
}

Certificate extremal_certificate(std::string claim, std::vector<Param> params,
                                 std::int64_t bound, const ClassSweep &sweep,
                                 const std::vector<Digraph> &expected) {
  Certificate c;
  c.claim_id = std::move(claim);
  c.params = std::move(params);
  c.expected_bound = bound;
  c.observed_max = sweep.best;
  c.graphs_examined = sweep.graphs;
  c.orientations_examined = sweep.orientations;
  c.labeled_achievers = sweep.achievers.size();
  c.achiever_codes = class_codes(sweep.achievers);
  c.expected_codes = class_codes(expected);
  c.finalize();
  attach_digraph_counterexample(c, sweep.achievers, expected);
  return c;
}

Certificate property_certificate(std::string claim, std::vector<Param> params) {
  Certificate c;
  c.claim_id = std::move(claim);
  c.params = std::move(params);
  c.expected_bound = 0;
  return c;
}

void record_violation(Certificate &c, const Graph &g) {
  ++c.observed_max;
  c.achiever_codes.push_back(canonical_code(g));
  if (!c.counterexample)
    c.counterexample = format_edge_list(g);
}

void record_violation(Certificate &c, const Digraph &d) {
  ++c.observed_max;
  c.achiever_codes.push_back(canonical_code_digraph(d));
  if (!c.counterexample)
    c.counterexample = format_digraph(d);
}

IdentityCheck identity_policy(const Graph &g) {
  // Graphs on 8 vertices reach 2^28 orientations; the arc-sum
  // recomputation is sampled there.
  return g.order() <= 7 ? IdentityCheck::every : IdentityCheck::sampled;
}

struct OrientationAudit {
  std::uint64_t orientations = 0;
  std::uint64_t sink_source = 0;
  std::optional<std::uint32_t> half_bound_violation;
};

OrientationAudit audit_orientations(const Graph &g) {
  const std::int64_t m1g = m1_undirected(g);
  OrientationAudit a;
  sweep_orientations(
      g, 0, std::uint64_t{1} << g.size(),
      [&](const OrientationStats &s) {
        ++a.orientations;
        const bool ss = s.mixed_vertices == 0;
        a.sink_source += ss;
        // 2*M1(D) <= M1(G), equality exactly for sink-source orientations.
        const bool ok = s.doubled_m1 < m1g || (s.doubled_m1 == m1g && ss);
        const bool eq_ok = !ss || s.doubled_m1 == m1g;
        if ((!ok || !eq_ok) && !a.half_bound_violation)
          a.half_bound_violation = s.bits;
      },
      identity_policy(g));
  return a;
}

std::vector<Graph> connected_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 2; n <= n_max; ++n) {
    auto layer = all_connected(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

} // namespace

void Certificate::finalize() {
  auto normalize = [](std::vector<CanonicalCode> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  normalize(achiever_codes);
  normalize(expected_codes);
  status = observed_max == expected_bound && achiever_codes == expected_codes
               ? Status::pass
               : Status::fail;
}

OrientationMaximum max_over_orientations(const Graph &g) {
  check_no_isolated(g);
  if (g.size() > kMaxOrientationEdges)
    throw SizeLimitError("max_over_orientations: more than 30 edges");
  std::int64_t best = -1;
  std::vector<std::uint32_t> winners;
  sweep_orientations(g, 0, std::uint64_t{1} << g.size(), [&](const OrientationStats &s) {
    if (s.doubled_m1 > best) {
      best = s.doubled_m1;
      winners.clear();
    }
    if (s.doubled_m1 == best)
      winners.push_back(s.bits);
  });
  std::sort(winners.begin(), winners.end());
  OrientationMaximum out;
  out.value = best / 2;
  out.achiever_bits = winners;
  for (std::uint32_t bits : winners) {
    Digraph d = Orientation(g, bits).to_digraph();
    if (2 * m1_digraph(d) != best)
      throw InternalInconsistencyError("sweep and direct M1 disagree");
    out.achievers.push_back(std::move(d));
  }
  return out;
}

std::map<std::int64_t, std::uint64_t> distribution(const Graph &g) {
  check_no_isolated(g);
  if (g.size() > kMaxDistributionEdges)
    throw SizeLimitError("distribution: more than 24 edges");
  std::map<std::int64_t, std::uint64_t> hist;
  sweep_orientations(g, 0, std::uint64_t{1} << g.size(),
                     [&](const OrientationStats &s) { ++hist[s.doubled_m1 / 2]; });
  return hist;
}

Certificate verify_theorem1(int n, int m, const VerifyOptions &opts) {
  const std::int64_t bound = bound_unicyclic(n, m);
  const std::vector<Graph> graphs = graphs_in_class({GraphKind::unicyclic, n, m});
  const ClassSweep sweep = sweep_class(graphs, opts);
  for (const Digraph &d : sweep.achievers) {
    const Graph under = d.underlying();
    if (!is_unicyclic(under) || matching_number(under) != m)
      throw InternalInconsistencyError("achiever outside U(n, m)");
  }
  return extremal_certificate("theorem1", {{"n", n}, {"m", m}}, bound, sweep,
                              extremal_set(n, m));
}

Certificate verify_theorem2(int m, const VerifyOptions &opts) {
  const std::int64_t bound = bound_unicyclic_perfect(m);
  if (bound != bound_unicyclic(2 * m, m))
    throw InternalInconsistencyError("perfect-matching bound differs from general bound");
  Certificate c = verify_theorem1(2 * m, m, opts);
  c.claim_id = "theorem2";
  c.params = {{"m", m}};
  c.expected_bound = bound;
  c.finalize();
  return c;
}

std::vector<Certificate> verify_tree_lemmas(int m, const VerifyOptions &opts) {
  if (m < 1 || m > 6)
    throw RangeError("verify_tree_lemmas: need 1 <= m <= 6, got " + std::to_string(m));
  const std::vector<Graph> trees = graphs_in_class({GraphKind::tree, 2 * m, m});
  const Graph extremal_tree = t_nm(2 * m, m);

  Certificate plain;
  plain.claim_id = "tree-undirected";
  plain.params = {{"m", m}};
  plain.expected_bound = bound_tree(m);
  plain.observed_max = -1;
  std::vector<const Graph *> best;
  for (const Graph &t : trees) {
    ++plain.graphs_examined;
    const std::int64_t v = m1_undirected(t);
    if (v > plain.observed_max) {
      plain.observed_max = v;
      best.clear();
    }
    if (v == plain.observed_max)
      best.push_back(&t);
  }
  plain.labeled_achievers = best.size();
  for (const Graph *t : best)
    plain.achiever_codes.push_back(canonical_code(*t));
  plain.expected_codes = {canonical_code(extremal_tree)};
  plain.finalize();
  if (plain.status == Status::fail)
    plain.counterexample = format_edge_list(best.empty() ? extremal_tree : *best.front());

  const ClassSweep sweep = sweep_class(trees, opts);
  auto [a, b] = sink_source_orientations(extremal_tree);
  Certificate oriented = extremal_certificate("tree-oriented", {{"m", m}},
                                              bound_tree_oriented(m), sweep, {a, b});
  return {std::move(plain), std::move(oriented)};
}

Certificate verify_u42_lemma() {
  const Graph g = u_nm(4, 2);
  OrientationMaximum r = max_over_orientations(g);
  ClassSweep sweep;
  sweep.best = r.value;
  sweep.achievers = std::move(r.achievers);
  sweep.graphs = 1;
  sweep.orientations = std::uint64_t{1} << g.size();
  const auto four = u_extremal_orientations(4, 2);
  return extremal_certificate("u42", {{"n", 4}, {"m", 2}}, 8, sweep, {four.begin(), four.end()});
}

Certificate verify_g1_lemma() {
  const Graph g = g1_graph();
  OrientationMaximum r = max_over_orientations(g);
  ClassSweep sweep;
  sweep.best = r.value;
  sweep.achievers = std::move(r.achievers);
  sweep.graphs = 1;
  sweep.orientations = std::uint64_t{1} << g.size();
  // Two of the triangle vertices 0, 1, 2 are pure (all three arcs out or
  // all three in); the third is mixed.
  std::vector<Digraph> expected;
  for (const Digraph &d : orientations(g)) {
    int pure = 0;
    for (int v = 0; v < 3; ++v)
      pure += d.out_degree(v) == 3 || d.in_degree(v) == 3;
    if (pure == 2)
      expected.push_back(d);
  }
  return extremal_certificate("g1", {}, 13, sweep, expected);
}

namespace {

struct ConnectedAudit {
  std::vector<Graph> graphs;
  std::vector<OrientationAudit> audits;
};

ConnectedAudit audit_connected(int n_max, const VerifyOptions &opts) {
  ConnectedAudit a;
  a.graphs = connected_up_to(n_max);
  a.audits = map_indexed<OrientationAudit>(a.graphs.size(), opts.threads, [&](std::size_t i) {
    return audit_orientations(a.graphs[i]);
  });
  return a;
}

Certificate half_bound_certificate(const ConnectedAudit &a, int n_max) {
  Certificate c = property_certificate("half-bound", {{"n_max", n_max}});
  for (std::size_t i = 0; i < a.graphs.size(); ++i) {
    ++c.graphs_examined;
    c.orientations_examined += a.audits[i].orientations;
    if (a.audits[i].half_bound_violation)
      record_violation(c, Orientation(a.graphs[i], *a.audits[i].half_bound_violation).to_digraph());
  }
  c.finalize();
  return c;
}

Certificate sink_source_certificate(const ConnectedAudit &a, int n_max) {
  Certificate c = property_certificate("sink-source-count", {{"n_max", n_max}});
  for (std::size_t i = 0; i < a.graphs.size(); ++i) {
    ++c.graphs_examined;
    c.orientations_examined += a.audits[i].orientations;
    const std::uint64_t want = is_bipartite(a.graphs[i]) ? 2 : 0;
    if (a.audits[i].sink_source != want)
      record_violation(c, a.graphs[i]);
  }
  c.finalize();
  return c;
}

} // namespace

Certificate check_half_bound(int n_max, const VerifyOptions &opts) {
  return half_bound_certificate(audit_connected(n_max, opts), n_max);
}

Certificate check_sink_source_count(int n_max, const VerifyOptions &opts) {
  return sink_source_certificate(audit_connected(n_max, opts), n_max);
}

Certificate check_pendent_unsaturated(int n_max) {
  Certificate c = property_certificate("pendent-unsaturated", {{"n_max", n_max}});
  for (int n = 5; n <= n_max; ++n) {
    for (int m = 2; 2 * m < n; ++m) {
      for (const Graph &g : graphs_in_class({GraphKind::unicyclic, n, m})) {
        const bool is_cycle = std::ranges::all_of(
            g.degrees(), [](int d) { return d == 2; });
        if (is_cycle)
          continue;
        ++c.graphs_examined;
        bool witnessed = false;
        for (const Matching &mm : all_maximum_matchings(g)) {
          for (int u = 0; u < n && !witnessed; ++u)
            witnessed = g.degree(u) == 1 && !mm.saturates(u);
          if (witnessed)
            break;
        }
        if (!witnessed)
          record_violation(c, g);
      }
    }
  }
  c.finalize();
  return c;
}

Certificate check_gap(int n_limit) {
  Certificate c = property_certificate("gap", {{"n_limit", n_limit}});
  for (int n = 5; n <= n_limit; ++n) {
    for (int m = 2; 2 * m < n; ++m) {
      ++c.graphs_examined;
      if (bound_unicyclic(n, m) <= 2 * static_cast<std::int64_t>(n)) {
        ++c.observed_max;
        if (!c.counterexample)
          c.counterexample = "n=" + std::to_string(n) + " m=" + std::to_string(m) + "\n";
      }
    }
  }
  c.finalize();
  return c;
}

Certificate check_diametrical_paths(int n_max) {
  Certificate c = property_certificate("diametrical-path", {{"n_max", n_max}});
  for (int n = 4; n <= n_max; n += 2) {
    for (const Graph &t : graphs_in_class({GraphKind::tree, n, n / 2})) {
      ++c.graphs_examined;
      const auto dist = distance_matrix(t);
      int diameter = 0;
      for (const auto &row : dist)
        diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        const auto &row = dist[static_cast<std::size_t>(u)];
        if (*std::max_element(row.begin(), row.end()) != diameter)
          continue;
        // u ends a diametrical path, so it is a leaf.
        const int neighbour = std::countr_zero(t.neighbors(u));
        ok = t.degree(u) == 1 && t.degree(neighbour) == 2;
      }
      const auto path = diametrical_path(t);
      ok = ok && static_cast<int>(path.size()) == diameter + 1 &&
           t.degree(path[1]) == 2 && t.degree(path[path.size() - 2]) == 2;
      if (!ok)
        record_violation(c, t);
    }
  }
  c.finalize();
  return c;
}

std::vector<Certificate> property_suite(int n_max, const VerifyOptions &opts) {
  const int dense_cap = std::min(n_max, 8);
  std::vector<Certificate> out;
  const ConnectedAudit audit = audit_connected(dense_cap, opts);
  out.push_back(half_bound_certificate(audit, dense_cap));
  out.push_back(sink_source_certificate(audit, dense_cap));
  out.push_back(check_pendent_unsaturated(n_max));
  out.push_back(check_gap(200));
  out.push_back(check_diametrical_paths(n_max));
  return out;
}

std::vector<Certificate> verify_all(int n_max, const VerifyOptions &opts) {
  std::vector<Certificate> out;
  for (int n = 4; n <= n_max; ++n)
    for (int m = 2; 2 * m <= n; ++m)
      out.push_back(verify_theorem1(n, m, opts));
  for (int m = 2; 2 * m <= n_max; ++m)
    out.push_back(verify_theorem2(m, opts));
  for (int m = 1; 2 * m <= n_max && m <= 6; ++m)
    for (Certificate &c : verify_tree_lemmas(m, opts))
      out.push_back(std::move(c));
  out.push_back(verify_u42_lemma());
  out.push_back(verify_g1_lemma());
  for (Certificate &c : property_suite(n_max, opts))
    out.push_back(std::move(c));
  return out;
}

Certificate summarize(const std::vector<Certificate> &certs, int n_max) {
  Certificate s;
  s.claim_id = "all";
  s.params = {{"n_max", n_max}};
  s.expected_bound = 0;
  for (const Certificate &c : certs) {
    s.graphs_examined += c.graphs_examined;
    s.orientations_examined += c.orientations_examined;
    if (c.status == Status::fail) {
      ++s.observed_max;
      if (!s.counterexample)
        s.counterexample = c.claim_id + "\n" + c.counterexample.value_or("");
    }
  }
  s.finalize();
  return s;
}

} // namespace zagreb
