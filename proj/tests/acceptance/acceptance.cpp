// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iterator>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "schubert/pieri.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/schubert_schur.hpp"
#include "schubert/structure_constants.hpp"

namespace schubert {

namespace {

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string &what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char *name, double limit_seconds, const std::function<Outcome()> &body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception &e) {
    outcome.ok = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (outcome.ok && seconds >= limit_seconds) {
    outcome.ok = false;
    outcome.detail = "exceeded time limit";
  }
  failures += !outcome.ok;
  std::printf("%s  %d. %s  (%.2f s, limit %.0f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", id, name,
              seconds, limit_seconds, outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
  std::fflush(stdout);
}

// Exact time limits from the acceptance criteria.
constexpr double kExampleLimit = 1.0;
constexpr double kOracleSweepLimit = 60.0;
constexpr double kTheoremLimit = 300.0;
constexpr double kConjectureLimit = 600.0;
constexpr double kLargeCellLimit = 1800.0;
constexpr double kPropertyLimit = 600.0;

constexpr unsigned kSeed = 20240611;
constexpr int kBraidCases = 200;

Outcome example_pieri() {
  Outcome o;
  const auto w = P({1, 4, 3, 2});
  const SchubertExpansion expected{{P({1, 4, 6, 2, 3, 5}), 1},
                                   {P({1, 6, 3, 2, 4, 5}), 1},
                                   {P({2, 4, 5, 1, 3}), 1},
                                   {P({2, 5, 3, 1, 4}), 1}};
  SchubertExpansion pieri;
  for (const auto &v : pieri_expand(w, 2, 3))
    pieri.add(v, 1);
  o.require(pieri == expected, "Pieri path gave " + pieri.to_string());
  const auto oracle = expand_in_schubert_basis(complete_homogeneous(2, 3) * schubert(w));
  o.require(oracle == expected, "polynomial path gave " + oracle.to_string());
  return o;
}

Outcome example_two_row() {
  Outcome o;
  const SchubertExpansion expected{{P({1, 2, 3, 6, 9, 4, 5, 7, 8}), 1},
                                   {P({1, 2, 3, 7, 8, 4, 5, 6}), 1},
                                   {P({1, 2, 4, 5, 9, 3, 6, 7, 8}), 1},
                                   {P({1, 2, 4, 6, 8, 3, 5, 7}), 2},
                                   {P({1, 2, 5, 6, 7, 3, 4}), 1},
                                   {P({1, 3, 4, 5, 8, 2, 6, 7}), 1},
                                   {P({1, 3, 4, 6, 7, 2, 5}), 1}};
  const auto got = lr_two_row(P({1, 2, 3, 5, 7, 4, 6}), 5, Partition({2, 1}));
  o.require(got == expected, "got " + got.to_string());
  return o;
}

Outcome example_identities() {
  Outcome o;
  o.require(schubert(P({2, 3, 4, 1, 5})) == elementary(3, 3), "S_23415 != e3");
  o.require(schubert(P({1, 2, 5, 3, 4})) == complete_homogeneous(2, 3), "S_12534 != h2");
  return o;
}

Outcome oracle_sweep() {
  Outcome o;
  int cells = 0;
  for (const auto &w : oracle::all_permutations(4))
    for (int k = 2; k <= 4; ++k)
      for (int m1 = 0; m1 <= 3; ++m1)
        for (int m2 = 0; m2 <= m1; ++m2) {
          const Partition lambda({m1, m2});
          const auto want = expand_in_schubert_basis(schur_ssyt(lambda, k) * schubert(w));
          const auto got = lr_two_row(w, k, lambda);
          o.require(got == want, "mismatch at w=" + w.to_string() + " k=" + std::to_string(k) +
                                     " lambda=" + lambda.to_string());
          ++cells;
        }
  o.detail = o.ok ? std::to_string(cells) + " cells" : o.detail;
  return o;
}

std::string scan_summary(const ScanReport &r) {
  return std::to_string(r.cells.size()) + " cells, global max " + std::to_string(r.global_max);
}

Outcome theorem_1() {
  Outcome o;
  const auto report = verify_theorem_1(5, 4);
  o.require(report.ok(), std::to_string(report.violations.size()) + " violations");
  std::set<int> offsets;
  for (const auto &cell : report.cells) {
    const int d = cell.n2 - cell.k;
    offsets.insert(d);
    o.require(cell.k >= 2 && d >= 0 && d <= 2, "cell outside the grid");
    o.require(cell.max_coeff >= 0 && cell.max_coeff <= (d == 2 ? 2 : 1),
              "coefficient " + std::to_string(cell.max_coeff) + " at w=" + cell.w.to_string());
  }
  o.require(offsets == std::set<int>{0, 1, 2}, "grid misses some k");
  std::size_t expected_cells = 0;
  for (int n2 = 2, factorial = 2; n2 <= 5; ++n2, factorial *= n2)
    expected_cells += static_cast<std::size_t>(std::min(3, n2 - 1) * factorial * 14);
  o.require(report.cells.size() == expected_cells,
            "unexpected cell count " + std::to_string(report.cells.size()));
  if (o.ok)
    o.detail = scan_summary(report);
  return o;
}

Outcome theorem_2() {
  Outcome o;
  std::string detail;
  for (const auto filter : {WFilter::all, WFilter::antidominant_tail}) {
    const auto report = verify_theorem_2_grid(5, 4, filter);
    o.require(report.ok(), std::to_string(report.violations.size()) + " violations");
    o.require(!report.cells.empty(), "empty grid");
    for (const auto &cell : report.cells) {
      const int d = cell.n2 - cell.k;
      o.require(d < cell.lambda.m2, "hypothesis not met in a scanned cell");
      Coefficient bound = 1;
      for (int i = 1; i <= d; ++i)
        bound *= filter == WFilter::all ? 2 * i : 2;
      o.require(cell.bound == bound && cell.max_coeff <= bound,
                "bound exceeded at w=" + cell.w.to_string());
    }
    detail += std::string(detail.empty() ? "" : "; ") + std::string(to_string(filter)) + ": " +
              scan_summary(report);
  }
  if (o.ok)
    o.detail = detail;
  return o;
}

Outcome conjecture() {
  Outcome o;
  const auto report = scan_conjecture(2, 5, std::nullopt, 4, WFilter::all);
  o.require(report.ok(), std::to_string(report.violations.size()) + " violations");
  Coefficient realized = 0;
  for (const auto &cell : report.cells) {
    o.require(cell.max_coeff <= std::max(1, cell.n2 - cell.k), "bound exceeded");
    realized = std::max(realized, cell.max_coeff);
  }
  o.require(report.global_max == realized, "global max not recorded");
  o.require(report.k_equals_n2_bound_relaxed, "k = n2 flag missing");
  if (o.ok)
    o.detail = scan_summary(report);
  return o;
}

Outcome large_cell() {
  Outcome o;
  const auto report = scan_cell(P({6, 5, 4, 3, 2, 1, 11, 10, 9, 8, 7}), 6, Partition({4, 3}));
  o.require(report.cells.size() == 1, "no cell");
  if (!o.ok)
    return o;
  const auto &cell = report.cells.front();
  o.require(cell.num_terms == 38194, "terms " + std::to_string(cell.num_terms));
  o.require(cell.max_coeff == 5, "max " + std::to_string(cell.max_coeff));
  if (o.ok)
    o.detail = "38194 terms, max 5";
  return o;
}

Outcome properties() {
  Outcome o;

  std::mt19937 rng(kSeed);
  int braid = 0;
  while (braid < kBraidCases) {
    const auto f = oracle::random_polynomial(rng, 4, 6, 8);
    for (int i = 1; i <= 3; ++i, ++braid) {
      o.require(divided_difference(divided_difference(f, i), i).is_zero(), "nilpotence");
      o.require(divided_difference(divided_difference(divided_difference(f, i), i + 1), i) ==
                    divided_difference(divided_difference(divided_difference(f, i + 1), i), i + 1),
                "braid relation");
      o.require(divided_difference(f, i) == oracle::naive_divided_difference(f, i),
                "divided difference vs long division");
    }
  }

  for (const auto &w : oracle::all_permutations(5))
    o.require(leading_monomial(schubert(w)) == Monomial(oracle::code_by_count(oracle::padded(w, 5))),
              "leading monomial of S_" + w.to_string());

  int pairs = 0;
  for (const auto &w : oracle::all_permutations(4))
    for (int k = 1; k <= 4; ++k)
      for (int m2 = 1; m2 <= 2; ++m2) {
        const auto chains = enumerate_chains(w, m2, k);
        for (std::size_t p = 0; p < chains.size(); ++p)
          for (std::size_t q = p + 1; q < chains.size(); ++q) {
            if (!oracle::equivalent_by_definition(w, k, m2, chains[p].endpoint(),
                                                  chains[q].endpoint()))
              continue;
            for (int m1 = 1; m1 <= 2; ++m1) {
              const auto a = pieri_expand(chains[p].endpoint(), m1, k);
              const auto b = pieri_expand(chains[q].endpoint(), m1, k);
              std::vector<Permutation> common;
              std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                    std::back_inserter(common));
              o.require(common.empty(), "equivalent chains share a successor from w=" + w.to_string());
              ++pairs;
            }
          }
      }
  o.require(pairs > 0, "no equivalent pairs found");

  o.require(enumerate_case_signatures(5, 5).size() == 1, "|M| for n2 = k");
  o.require(enumerate_case_signatures(5, 4).size() == 3, "|M| for n2 - k = 1");
  o.require(enumerate_case_signatures(5, 3).size() == 13, "|M| for n2 - k = 2");
  for (int n2 = 1; n2 <= 5; ++n2)
    for (int k = std::max(1, n2 - 2); k <= n2; ++k) {
      const auto all = enumerate_case_signatures(n2, k);
      const std::set<CaseSignature> allowed(all.begin(), all.end());
      std::set<CaseSignature> realized;
      for (const auto &w : oracle::all_permutations(n2))
        for (int m = 0; m <= 3; ++m)
          for (const auto &chain : enumerate_chains(w, m, k)) {
            const auto sig = classify_chain(chain, n2);
            o.require(allowed.count(sig) == 1, "signature outside M: " + sig.to_string());
            realized.insert(sig);
          }
      if (n2 - k <= 1 && k >= 2)
        o.require(realized == allowed, "some signature never realized");
    }

  if (o.ok)
    o.detail = std::to_string(braid) + " braid cases, " + std::to_string(pairs) +
               " equivalent-pair checks";
  return o;
}

} // namespace
} // namespace schubert

int main() {
  using namespace schubert;
  criterion(1, "h2 S_1432 expands to the four-term Pieri example", kExampleLimit, example_pieri);
  criterion(2, "two-row coefficients of S_1235746 s_(2,1)", kExampleLimit, example_two_row);
  criterion(3, "S_23415 = e3 and S_12534 = h2", kExampleLimit, example_identities);
  criterion(4, "Pieri two-row coefficients equal polynomial oracle on S_4", kOracleSweepLimit,
            oracle_sweep);
  criterion(5, "coefficients in {0,1} or {0,1,2} for n2 - k <= 2, n2 <= 5", kTheoremLimit, theorem_1);
  criterion(6, "factorial and antidominant-tail bounds when n2 - k < m2, n2 <= 5", kTheoremLimit, theorem_2);
  criterion(7, "max(1, n2 - k) bound on every k, n2 <= 5", kConjectureLimit, conjecture);
  criterion(8, "n2 = 11 cell: 38194 terms, max 5", kLargeCellLimit, large_cell);
  criterion(9, "property suites", kPropertyLimit, properties);
  return failures;
}
