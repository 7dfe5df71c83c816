#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/pieri.hpp"
#include "schubert/schubert_schur.hpp"

namespace schubert {

/// Schubert expansion of h_{m_second} h_{m_first} S_w in k variables: the
/// coefficient of v counts the u reachable from w by an m_first chain from
/// which v is reachable by an m_second chain.
SchubertExpansion product_h_h(const Permutation &w, int k, int m_first, int m_second);

/// Two-row shape (m1, m2). Throws BadShape for more than two rows.
struct TwoRow {
  int m1 = 0;
  int m2 = 0;
  static TwoRow from(const Partition &lambda);
  Partition partition() const { return Partition({m1, m2}); }
  friend bool operator==(const TwoRow &, const TwoRow &) = default;
  friend auto operator<=>(const TwoRow &, const TwoRow &) = default;
};

/// S_w s_lambda(x_1..x_k) = h_{m1} h_{m2} S_w - h_{m1+1} h_{m2-1} S_w, the
/// h_{m2} factor applied first. Throws KTooSmall when m2 >= 1 and k < 2,
/// NegativeCoefficient if the difference is ever negative.
SchubertExpansion lr_two_row(const Permutation &w, int k, const Partition &lambda);

/// Case signatures of every intermediate u with u in pieri_expand(w, m2, k)
/// and v in pieri_expand(u, m1, k). n2 defaults to max(|w|, k).
std::vector<CaseSignature> case_census(const Permutation &w, int k, const Partition &lambda,
                                       const Permutation &v, std::optional<int> n2 = {});

/// Chain-level witness for the coefficient of v: one line per intermediate
/// u, "<chain w->u> | <chain u->v>".
std::vector<std::string> witness_chains(const Permutation &w, int k, const Partition &lambda,
                                        const Permutation &v);

/// w(k+1) > w(k+2) > ... > w(n2), with w embedded in S_{n2}.
bool has_antidominant_tail(const Permutation &w, int k, int n2);

enum class WFilter { all, antidominant_tail };
std::string_view to_string(WFilter filter);
WFilter parse_filter(std::string_view text);

/// 2^{n2-k} (n2-k)!, or 2^{n2-k} for an antidominant tail.
Coefficient theorem_2_bound(int n2, int k, WFilter filter);
/// 1 for k in {n2, n2-1}, 2 for k = n2-2.
Coefficient theorem_1_bound(int n2, int k);
/// max(1, n2 - k).
Coefficient conjecture_bound(int n2, int k);

struct ScanConfig {
  std::string kind; // conjecture | theorem1 | theorem2 | cell
  int n2_min = 0;
  int n2_max = 0;
  std::optional<std::pair<int, int>> k_range; // unset: every valid k
  std::vector<int> k_offsets;                 // allowed n2 - k; empty: any
  int m1_max = 0;
  WFilter filter = WFilter::all;
  std::vector<int> w;     // cell scans only
  std::vector<int> lambda; // cell scans only
  friend bool operator==(const ScanConfig &, const ScanConfig &) = default;
};

struct CellResult {
  Permutation w;
  int n2 = 0;
  int k = 0;
  TwoRow lambda;
  std::size_t num_terms = 0;
  Coefficient max_coeff = 0;
  Coefficient bound = 0;
  std::vector<Permutation> argmax;
  friend bool operator==(const CellResult &, const CellResult &) = default;
};

struct Violation {
  Permutation w;
  int n2 = 0;
  int k = 0;
  TwoRow lambda;
  Permutation v;
  Coefficient coeff = 0;
  Coefficient bound = 0;
  std::vector<std::string> witness;
  friend bool operator==(const Violation &, const Violation &) = default;
};

struct ScanReport {
  ScanConfig config;
  std::vector<CellResult> cells;
  std::vector<Violation> violations;
  Coefficient global_max = 0;
  /// Set when a k = n2 cell was checked against 1 rather than n2 - k = 0.
  bool k_equals_n2_bound_relaxed = false;
  /// Wall-clock seconds; excluded from equality and determinism.
  double seconds = 0.0;

  bool ok() const { return violations.empty(); }
  friend bool operator==(const ScanReport &lhs, const ScanReport &rhs) {
    return lhs.config == rhs.config && lhs.cells == rhs.cells &&
           lhs.violations == rhs.violations && lhs.global_max == rhs.global_max &&
           lhs.k_equals_n2_bound_relaxed == rhs.k_equals_n2_bound_relaxed;
  }
};

struct ScanOptions {
  unsigned workers = 0; // 0: hardware concurrency
  /// Called after each finished cell with (done, total); may be called from
  /// worker threads, one call at a time.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// All w in S_{n2} for n2_min <= n2 <= n2_max, k in {n2, n2-1, n2-2} with
/// k >= 2, 0 <= m2 <= m1 <= m1_max with m1 >= 1.
ScanReport verify_theorem_1(int n2_max, int m1_max, const ScanOptions &options = {},
                            int n2_min = 2);

/// One (n2, k, lambda) cell over every w in S_{n2} passing the filter.
/// Throws HypothesisNotMet unless n2 - k < m2.
ScanReport verify_theorem_2(int n2, int k, const Partition &lambda, WFilter filter,
                            const ScanOptions &options = {});

/// Every (n2, k, lambda) with n2_min <= n2 <= n2_max, 2 <= k <= n2,
/// 1 <= m2 <= m1 <= m1_max and n2 - k < m2.
ScanReport verify_theorem_2_grid(int n2_max, int m1_max, WFilter filter,
                                 const ScanOptions &options = {}, int n2_min = 2);

/// Cells n2 in [n2_min, n2_max], k in k_range (clamped to [2, n2]) or all of
/// [2, n2], 0 <= m2 <= m1 <= m1_max with m1 >= 1, all w in S_{n2} passing
/// the filter. Checked bound: max(1, n2 - k).
ScanReport scan_conjecture(int n2_min, int n2_max, std::optional<std::pair<int, int>> k_range,
                           int m1_max, WFilter filter, const ScanOptions &options = {});

/// A single (w, k, lambda) cell with n2 = max(|w|, k) and the conjecture
/// bound.
ScanReport scan_cell(const Permutation &w, int k, const Partition &lambda);

/// JSON for reports and expansions. Terms sorted by v; timing isolated in a
/// "timing" object.
std::string to_json(const ScanReport &report, int indent = 2);
ScanReport scan_report_from_json(std::string_view text);
std::string expansion_to_json(const Permutation &w, int k, const Partition &lambda,
                              const SchubertExpansion &expansion, int indent = 2);

} // namespace schubert
