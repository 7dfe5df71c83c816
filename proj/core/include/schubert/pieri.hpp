#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

/// The transposition t_{ab} applied on the right, a <= k < b.
struct PieriStep {
  int a = 0;
  int b = 0;
  friend bool operator==(const PieriStep &, const PieriStep &) = default;
  friend auto operator<=>(const PieriStep &, const PieriStep &) = default;
};

/// w(a) < w(b) with no a < i < b satisfying w(a) < w(i) < w(b); equivalently
/// l(w t_{ab}) = l(w) + 1. Throws StepOutOfBounds unless a <= k < b.
bool is_pieri_step(const Permutation &w, int a, int b, int k);

/// base * t_{a1 b1} * ... * t_{am bm} where every prefix raises the length
/// by one, a_i <= k < b_i, and the b_i are distinct. Steps need not have
/// weakly increasing a; enumerate_chains() only produces ones that do.
class PieriChain {
public:
  /// Validates every condition above; throws MalformedChain.
  PieriChain(Permutation base, int k, std::vector<PieriStep> steps);

  const Permutation &base() const { return base_; }
  int k() const { return k_; }
  std::span<const PieriStep> steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }
  const Permutation &endpoint() const { return endpoint_; }

  /// a-values weakly increasing.
  bool is_canonical() const;

  /// "w=1,4,3,2 k=3 steps=(3,5)(3,6)"
  std::string to_string() const;

  friend bool operator==(const PieriChain &lhs, const PieriChain &rhs) {
    return lhs.base_ == rhs.base_ && lhs.k_ == rhs.k_ && lhs.steps_ == rhs.steps_;
  }

private:
  Permutation base_;
  int k_;
  std::vector<PieriStep> steps_;
  Permutation endpoint_;
};

/// "(1,3)(2,4)(2,5)" -> steps. Throws MalformedChain.
std::vector<PieriStep> parse_steps(std::string_view text);

/// Inverse of PieriChain::to_string. Throws MalformedChain (or
/// MalformedPermutation for a bad base).
PieriChain parse_chain(std::string_view text);

namespace detail {

struct ChainWalker {
  std::vector<int> word;  // one-line notation padded with fixed points
  std::vector<char> used; // used[b] for b already taken
  std::vector<PieriStep> steps;
  int k = 0;
  int m = 0;

  static bool step_ok(const std::vector<int> &word, int a, int b) {
    const int lo = word[static_cast<std::size_t>(a - 1)];
    const int hi = word[static_cast<std::size_t>(b - 1)];
    if (lo > hi)
      return false;
    for (int i = a; i < b - 1; ++i) {
      const int v = word[static_cast<std::size_t>(i)];
      if (v > lo && v < hi)
        return false;
    }
    return true;
  }

  template <typename Visit> void walk(int min_a, int extent, Visit &visit) {
    if (static_cast<int>(steps.size()) == m) {
      visit(std::span<const PieriStep>(steps), std::span<const int>(word.data(), static_cast<std::size_t>(extent)));
      return;
    }
    for (int a = min_a; a <= k; ++a) {
      for (int b = k + 1; b <= extent + 1; ++b) {
        if (used[static_cast<std::size_t>(b)] || !step_ok(word, a, b))
          continue;
        std::swap(word[static_cast<std::size_t>(a - 1)], word[static_cast<std::size_t>(b - 1)]);
        used[static_cast<std::size_t>(b)] = 1;
        steps.push_back({a, b});
        walk(a, std::max(extent, b), visit);
        steps.pop_back();
        used[static_cast<std::size_t>(b)] = 0;
        std::swap(word[static_cast<std::size_t>(a - 1)], word[static_cast<std::size_t>(b - 1)]);
      }
    }
  }
};

} // namespace detail

/// Streams every canonical chain of length m from w: depth first, a
/// ascending then b ascending at each depth. visit(steps, word) receives the
/// steps and the endpoint's one-line word (possibly with trailing fixed
/// points); both views are only valid during the call.
template <typename Visit>
void for_each_chain(const Permutation &w, int m, int k, Visit &&visit) {
  if (k < 1)
    throw StepOutOfBounds("k must be positive");
  if (m < 0)
    return;
  detail::ChainWalker walker;
  const int extent = std::max(w.size(), k);
  walker.word = w.padded(extent + m + 1);
  walker.used.assign(walker.word.size() + 1, 0);
  walker.k = k;
  walker.m = m;
  walker.steps.reserve(static_cast<std::size_t>(m));
  walker.walk(1, extent, visit);
}

/// Every canonical chain of length m from w, in enumeration order.
std::vector<PieriChain> enumerate_chains(const Permutation &w, int m, int k);

/// Sorted distinct chain endpoints: the Schubert support of h_m(x_1..x_k) S_w,
/// every coefficient being 1.
std::vector<Permutation> pieri_expand(const Permutation &w, int m, int k);

/// The same chain regrouped by column: each column's targets in chain order,
/// columns in order of first appearance.
struct ColumnBlock {
  int column = 0;
  std::vector<int> targets;
};
std::vector<ColumnBlock> column_blocks(const PieriChain &chain);

/// Whether some valid regrouping of each chain yields identical target
/// sequences with identical block boundaries. Throws MismatchedChains if the
/// chains differ in base, k or length.
bool chains_equivalent(const PieriChain &lhs, const PieriChain &rhs);

/// (i, j, I1, I2): j steps land in {k+1..n2} at targets y_1..y_j (in order),
/// i of them come from columns other than the final column, whose block
/// sizes form the multiset I1.
struct CaseSignature {
  int i = 0;
  int j = 0;
  std::vector<int> multiplicities; // I1, sorted ascending
  std::vector<int> targets;        // y_1..y_j; I2 = {(1,y_1), ..., (j,y_j)}

  /// "(1,1,{1},[(1,3)])"
  std::string to_string() const;

  friend bool operator==(const CaseSignature &, const CaseSignature &) = default;
  friend auto operator<=>(const CaseSignature &, const CaseSignature &) = default;
};

/// Classifies the chain's endpoint for a base in S_{n2}. Searches every
/// ordering of the chain's column blocks that is itself a valid chain and has
/// shape: non-final blocks target only {k+1..n2}; the final block targets
/// some of {k+1..n2} then n2+1, n2+2, ... in order. Among the signatures
/// realized, the least is returned, so the result depends only on the
/// endpoint and not on the order the steps were given in. Throws
/// NotClassifiable if no such ordering exists.
CaseSignature classify_chain(const PieriChain &chain, int n2);

/// Every (i, j, I1, I2) with 0 <= i <= j <= n2 - k, I1 a multiset of
/// positive integers with sum i and at most j entries, and y_1..y_j
/// distinct in {k+1..n2}. Sorted.
std::vector<CaseSignature> enumerate_case_signatures(int n2, int k);

/// Splits signatures into those with no other signature in the input whose
/// j is at least two smaller (less minimal), and the rest.
std::pair<std::vector<CaseSignature>, std::vector<CaseSignature>>
less_minimal_partition(const std::vector<CaseSignature> &signatures);

} // namespace schubert
