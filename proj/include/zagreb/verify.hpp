#pragma once

#include "zagreb/canonical.hpp"
#include "zagreb/digraph.hpp"
#include "zagreb/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zagreb {

enum class Status { pass, fail };

struct Param {
  std::string name;
  std::int64_t value = 0;

  friend bool operator==(const Param &, const Param &) = default;
};

/// Record of one checked claim.
///
/// For extremal claims `expected_bound` is the closed form and
/// `observed_max` the exhaustive maximum; the code lists are the digraph
/// (or graph) isomorphism classes that attain it, found vs. constructed.
/// For property checks the bound is 0 and `observed_max` counts
/// violations, whose graphs land in `achiever_codes`.
struct Certificate {
  std::string claim_id;
  std::vector<Param> params;
  std::int64_t expected_bound = 0;
  std::int64_t observed_max = 0;
  Status status = Status::fail;
  std::uint64_t graphs_examined = 0;
  std::uint64_t orientations_examined = 0;
  /// Labeled objects (not classes) attaining observed_max.
  std::uint64_t labeled_achievers = 0;
  std::vector<CanonicalCode> achiever_codes;
  std::vector<CanonicalCode> expected_codes;
  /// Edge-list or digraph text of an offending object, set on FAIL.
  std::optional<std::string> counterexample;

  /// Sorts and dedupes both code lists and sets status: PASS exactly when
  /// observed_max == expected_bound and the code sets are equal.
  void finalize();
};

struct VerifyOptions {
  /// Worker threads for graph-level work units. Output does not depend on
  /// it.
  int threads = 1;
};

struct OrientationMaximum {
  std::int64_t value = 0;
  /// Every labeled orientation attaining value, ordered by bit-vector.
  std::vector<Digraph> achievers;
  std::vector<std::uint32_t> achiever_bits;
};

/// Exact maximum of M1 over all 2^|E| orientations. Requires |E| <= 30 and
/// no isolated vertices.
OrientationMaximum max_over_orientations(const Graph &g);

/// M1 value -> number of orientations attaining it. Requires |E| <= 24.
std::map<std::int64_t, std::uint64_t> distribution(const Graph &g);

/// Maximum of M1 over orientations of every graph in U(n, m), compared to
/// the closed-form bound and to the classes of extremal_set(n, m).
Certificate verify_theorem1(int n, int m, const VerifyOptions &opts = {});

/// verify_theorem1(2m, m) against the perfect-matching bound.
Certificate verify_theorem2(int m, const VerifyOptions &opts = {});

/// Two certificates over T(2m, m), 1 <= m <= 6: "tree-undirected" (max of
/// M1(T), unique extremal tree T_{2m,m}) and "tree-oriented" (max over
/// orientations, attained by the sink-source orientations of T_{2m,m}).
std::vector<Certificate> verify_tree_lemmas(int m, const VerifyOptions &opts = {});

/// Orientations of U_{4,2}: max 8, attained by u_extremal_orientations(4, 2).
Certificate verify_u42_lemma();

/// Orientations of G1: max 13, attained exactly by the orientations in
/// which two triangle vertices are pure sources or sinks.
Certificate verify_g1_lemma();

/// Half-bound M1(D) <= M1(G)/2 with equality iff sink-source, over every
/// orientation of every connected graph on 2..n_max vertices.
Certificate check_half_bound(int n_max, const VerifyOptions &opts = {});

/// A connected graph has exactly 2 sink-source orientations when bipartite
/// and none otherwise, for every connected graph on 2..n_max vertices.
Certificate check_sink_source_count(int n_max, const VerifyOptions &opts = {});

/// Every G in U(n, m), n > 2m, G != C_n, n <= n_max has a maximum matching
/// missing some pendent vertex.
Certificate check_pendent_unsaturated(int n_max);

/// bound_unicyclic(n, m) > 2n for 2 <= m, 2m < n <= n_limit.
Certificate check_gap(int n_limit = 200);

/// In every tree with a perfect matching on 4..n_max vertices, both ends of
/// every diametrical path hang on a vertex of degree two.
Certificate check_diametrical_paths(int n_max);

/// The property sub-suites: half-bound and sink-source count over connected
/// graphs with n <= min(n_max, 8), pendent-unsaturated up to n_max, the
/// gap inequality up to n = 200 and diametrical paths up to n_max.
std::vector<Certificate> property_suite(int n_max, const VerifyOptions &opts = {});

/// Every claim for 4 <= n <= n_max, in a fixed order: theorem1 for each
/// (n, m), theorem2 for 2m <= n_max, tree lemmas for 2m <= n_max (m <= 6),
/// the U_{4,2} and G1 lemmas, then property_suite(n_max).
std::vector<Certificate> verify_all(int n_max, const VerifyOptions &opts = {});

/// Roll-up certificate "all": PASS iff every input passed; counts summed;
/// observed_max is the number of failing certificates.
Certificate summarize(const std::vector<Certificate> &certs, int n_max);

} // namespace zagreb
