#include "schubert/structure_constants.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

using Counts = std::unordered_map<Permutation, Coefficient, PermutationHash>;

Permutation to_permutation(std::span<const int> word) {
  return from_trusted_word(std::vector<int>(word.begin(), word.end()));
}

void accumulate_h_h(const Permutation &w, int k, int m_first, int m_second, Coefficient sign,
                    Counts &counts) {
  for_each_chain(w, m_first, k, [&](std::span<const PieriStep>, std::span<const int> u_word) {
    const Permutation u = to_permutation(u_word);
    for_each_chain(u, m_second, k, [&](std::span<const PieriStep>, std::span<const int> v_word) {
      auto &c = counts[to_permutation(v_word)];
      c = checked_add(c, sign);
    });
  });
}

SchubertExpansion to_expansion(const Counts &counts) {
  SchubertExpansion out;
  for (const auto &[v, c] : counts)
    out.add(v, c);
  return out;
}

} // namespace

SchubertExpansion product_h_h(const Permutation &w, int k, int m_first, int m_second) {
  Counts counts;
  accumulate_h_h(w, k, m_first, m_second, 1, counts);
  return to_expansion(counts);
}

TwoRow TwoRow::from(const Partition &lambda) {
  if (lambda.rows() > 2)
    throw BadShape("expected at most two rows, got " + lambda.to_string());
  return {lambda[0], lambda[1]};
}

SchubertExpansion lr_two_row(const Permutation &w, int k, const Partition &lambda) {
  const auto shape = TwoRow::from(lambda);
  if (shape.m2 >= 1 && k < 2)
    throw KTooSmall("two-row shapes need k >= 2, got " + std::to_string(k));
  if (k < 1)
    throw KTooSmall("k must be positive");
  Counts counts;
  accumulate_h_h(w, k, shape.m2, shape.m1, 1, counts);
  if (shape.m2 >= 1)
    accumulate_h_h(w, k, shape.m2 - 1, shape.m1 + 1, -1, counts);
  for (const auto &[v, c] : counts)
    if (c < 0)
      throw NegativeCoefficient("coefficient " + std::to_string(c) + " at " + v.to_string() +
                                " for w=" + w.to_string() + " k=" + std::to_string(k) +
                                " lambda=" + lambda.to_string());
  return to_expansion(counts);
}

std::vector<CaseSignature> case_census(const Permutation &w, int k, const Partition &lambda,
                                       const Permutation &v, std::optional<int> n2) {
  const auto shape = TwoRow::from(lambda);
  const int n = n2.value_or(std::max(w.size(), k));
  std::vector<CaseSignature> out;
  for (const auto &chain : enumerate_chains(w, shape.m2, k)) {
    const auto reachable = pieri_expand(chain.endpoint(), shape.m1, k);
    if (std::binary_search(reachable.begin(), reachable.end(), v))
      out.push_back(classify_chain(chain, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> witness_chains(const Permutation &w, int k, const Partition &lambda,
                                        const Permutation &v) {
  const auto shape = TwoRow::from(lambda);
  std::vector<std::string> out;
  auto collect = [&](int first, int second, const char *tag) {
    if (first < 0)
      return;
    for (const auto &chain : enumerate_chains(w, first, k))
      for (const auto &next : enumerate_chains(chain.endpoint(), second, k))
        if (next.endpoint() == v)
          out.push_back(std::string(tag) + chain.to_string() + " | " + next.to_string());
  };
  collect(shape.m2, shape.m1, "+ ");
  collect(shape.m2 - 1, shape.m1 + 1, "- ");
  return out;
}

bool has_antidominant_tail(const Permutation &w, int k, int n2) {
  for (int p = k + 1; p < n2; ++p)
    if (w(p) < w(p + 1))
      return false;
  return true;
}

std::string_view to_string(WFilter filter) {
  return filter == WFilter::all ? "all" : "antidominant_tail";
}

WFilter parse_filter(std::string_view text) {
  if (text == "all")
    return WFilter::all;
  if (text == "antidominant_tail" || text == "antidominant")
    return WFilter::antidominant_tail;
  throw std::invalid_argument("unknown filter '" + std::string(text) + "'");
}

Coefficient theorem_2_bound(int n2, int k, WFilter filter) {
  const int d = n2 - k;
  Coefficient bound = Coefficient{1} << d;
  if (filter == WFilter::all)
    for (int f = 2; f <= d; ++f)
      bound = checked_mul(bound, f);
  return bound;
}

Coefficient theorem_1_bound(int n2, int k) {
  const int d = n2 - k;
  if (d < 0 || d > 2)
    throw std::invalid_argument("theorem_1_bound needs k in {n2, n2-1, n2-2}");
  return d == 2 ? 2 : 1;
}

Coefficient conjecture_bound(int n2, int k) { return std::max(1, n2 - k); }

namespace {

struct CellSpec {
  Permutation w;
  int n2;
  int k;
  TwoRow lambda;
  Coefficient bound;
};

std::vector<TwoRow> shapes(int m1_max, int m2_min) {
  std::vector<TwoRow> out;
  for (int m1 = 1; m1 <= m1_max; ++m1)
    for (int m2 = m2_min; m2 <= m1; ++m2)
      out.push_back({m1, m2});
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(from_trusted_word(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

void add_cells(std::vector<CellSpec> &cells, int n2, int k, TwoRow shape, WFilter filter,
               Coefficient bound) {
  for (auto &w : all_permutations(n2))
    if (filter == WFilter::all || has_antidominant_tail(w, k, n2))
      cells.push_back({std::move(w), n2, k, shape, bound});
}

ScanReport run_cells(ScanConfig config, const std::vector<CellSpec> &cells,
                     const ScanOptions &options) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.config = std::move(config);
  report.cells.resize(cells.size());
  std::vector<std::vector<Violation>> violations(cells.size());

  std::atomic<std::size_t> next{0}, done{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  auto work = [&] {
    try {
      for (std::size_t idx = next++; idx < cells.size(); idx = next++) {
        const auto &spec = cells[idx];
        const auto lambda = spec.lambda.partition();
        const auto expansion = lr_two_row(spec.w, spec.k, lambda);
        auto &cell = report.cells[idx];
        cell = {spec.w, spec.n2, spec.k, spec.lambda, expansion.size(), expansion.max_coefficient(),
                spec.bound, {}};
        for (const auto &[v, c] : expansion.terms()) {
          if (c == cell.max_coeff)
            cell.argmax.push_back(v);
          if (c > spec.bound)
            violations[idx].push_back({spec.w, spec.n2, spec.k, spec.lambda, v, c, spec.bound,
                                       witness_chains(spec.w, spec.k, lambda, v)});
        }
        const auto finished = ++done;
        if (options.progress) {
          std::lock_guard lock(progress_mutex);
          options.progress(finished, cells.size());
        }
      }
    } catch (...) {
      std::lock_guard lock(progress_mutex);
      if (!failure)
        failure = std::current_exception();
      next = cells.size();
    }
  };

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1))));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back(work);
  }
  if (failure)
    std::rethrow_exception(failure);

  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    report.global_max = std::max(report.global_max, report.cells[idx].max_coeff);
    for (auto &v : violations[idx])
      report.violations.push_back(std::move(v));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace

ScanReport verify_theorem_1(int n2_max, int m1_max, const ScanOptions &options, int n2_min) {
  n2_min = std::max(2, n2_min);
  ScanConfig config{"theorem1", n2_min, n2_max, std::nullopt, {0, 1, 2}, m1_max, WFilter::all, {}, {}};
  std::vector<CellSpec> cells;
  for (int n2 = n2_min; n2 <= n2_max; ++n2)
    for (int k = n2; k >= std::max(2, n2 - 2); --k)
      for (const auto shape : shapes(m1_max, 0))
        add_cells(cells, n2, k, shape, WFilter::all, theorem_1_bound(n2, k));
  return run_cells(std::move(config), cells, options);
}

ScanReport verify_theorem_2(int n2, int k, const Partition &lambda, WFilter filter,
                            const ScanOptions &options) {
  const auto shape = TwoRow::from(lambda);
  if (n2 - k >= shape.m2)
    throw HypothesisNotMet("need n2 - k < m2, got n2=" + std::to_string(n2) +
                           " k=" + std::to_string(k) + " m2=" + std::to_string(shape.m2));
  ScanConfig config{"theorem2", n2, n2, std::pair{k, k}, {}, shape.m1, filter, {}, {shape.m1, shape.m2}};
  std::vector<CellSpec> cells;
  add_cells(cells, n2, k, shape, filter, theorem_2_bound(n2, k, filter));
  return run_cells(std::move(config), cells, options);
}

ScanReport verify_theorem_2_grid(int n2_max, int m1_max, WFilter filter,
                                 const ScanOptions &options, int n2_min) {
  n2_min = std::max(2, n2_min);
  ScanConfig config{"theorem2", n2_min, n2_max, std::nullopt, {}, m1_max, filter, {}, {}};
  std::vector<CellSpec> cells;
  for (int n2 = n2_min; n2 <= n2_max; ++n2)
    for (int k = n2; k >= 2; --k)
      for (const auto shape : shapes(m1_max, 1))
        if (n2 - k < shape.m2)
          add_cells(cells, n2, k, shape, filter, theorem_2_bound(n2, k, filter));
  return run_cells(std::move(config), cells, options);
}

ScanReport scan_conjecture(int n2_min, int n2_max, std::optional<std::pair<int, int>> k_range,
                           int m1_max, WFilter filter, const ScanOptions &options) {
  n2_min = std::max(2, n2_min);
  ScanConfig config{"conjecture", n2_min, n2_max, k_range, {}, m1_max, filter, {}, {}};
  std::vector<CellSpec> cells;
  bool relaxed = false;
  for (int n2 = n2_min; n2 <= n2_max; ++n2) {
    const int k_lo = std::max(2, k_range ? k_range->first : 2);
    const int k_hi = std::min(n2, k_range ? k_range->second : n2);
    for (int k = k_hi; k >= k_lo; --k) {
      relaxed = relaxed || k == n2;
      for (const auto shape : shapes(m1_max, 0))
        add_cells(cells, n2, k, shape, filter, conjecture_bound(n2, k));
    }
  }
  auto report = run_cells(std::move(config), cells, options);
  report.k_equals_n2_bound_relaxed = relaxed;
  return report;
}

ScanReport scan_cell(const Permutation &w, int k, const Partition &lambda) {
  const auto shape = TwoRow::from(lambda);
  const int n2 = std::max(w.size(), k);
  ScanConfig config{"cell", n2, n2, std::pair{k, k}, {}, shape.m1, WFilter::all,
                    std::vector<int>(w.word().begin(), w.word().end()), {shape.m1, shape.m2}};
  std::vector<CellSpec> cells{{w, n2, k, shape, conjecture_bound(n2, k)}};
  auto report = run_cells(std::move(config), cells, ScanOptions{1, {}});
  report.k_equals_n2_bound_relaxed = k == n2;
  return report;
}

} // namespace schubert
