#include "schubert/pieri.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "schubert/errors.hpp"
#include "text.hpp"

namespace schubert {

namespace {

bool step_ok(const Permutation &w, int a, int b) {
  const int lo = w(a), hi = w(b);
  if (lo > hi)
    return false;
  for (int i = a + 1; i < b; ++i)
    if (w(i) > lo && w(i) < hi)
      return false;
  return true;
}

// Runs the steps from base; nullopt if some step fails to raise the length.
std::optional<Permutation> run_steps(const Permutation &base, std::span<const PieriStep> steps) {
  Permutation current = base;
  for (const auto &s : steps) {
    if (!step_ok(current, s.a, s.b))
      return std::nullopt;
    current = current.swap_positions(s.a, s.b);
  }
  return current;
}

std::vector<PieriStep> flatten(const std::vector<ColumnBlock> &blocks,
                               std::span<const std::size_t> order) {
  std::vector<PieriStep> out;
  for (std::size_t idx : order)
    for (int b : blocks[idx].targets)
      out.push_back({blocks[idx].column, b});
  return out;
}

} // namespace

bool is_pieri_step(const Permutation &w, int a, int b, int k) {
  if (a < 1 || a > k || b <= k)
    throw StepOutOfBounds("need 1 <= a <= k < b, got a=" + std::to_string(a) +
                          " b=" + std::to_string(b) + " k=" + std::to_string(k));
  return step_ok(w, a, b);
}

PieriChain::PieriChain(Permutation base, int k, std::vector<PieriStep> steps)
    : base_(std::move(base)), k_(k), steps_(std::move(steps)) {
  if (k_ < 1)
    throw MalformedChain("k must be positive");
  std::vector<int> targets;
  for (const auto &s : steps_) {
    if (s.a < 1 || s.a > k_ || s.b <= k_)
      throw MalformedChain("step (" + std::to_string(s.a) + "," + std::to_string(s.b) +
                           ") violates a <= k < b for k=" + std::to_string(k_));
    targets.push_back(s.b);
  }
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
    throw MalformedChain("targets b must be distinct");
  auto end = run_steps(base_, steps_);
  if (!end)
    throw MalformedChain("some step does not raise the length by one");
  endpoint_ = std::move(*end);
}

bool PieriChain::is_canonical() const {
  return std::is_sorted(steps_.begin(), steps_.end(),
                        [](const PieriStep &x, const PieriStep &y) { return x.a < y.a; });
}

std::string PieriChain::to_string() const {
  std::string out = "w=" + base_.to_string() + " k=" + std::to_string(k_) + " steps=";
  for (const auto &s : steps_)
    out += '(' + std::to_string(s.a) + ',' + std::to_string(s.b) + ')';
  return out;
}

std::vector<PieriStep> parse_steps(std::string_view text) {
  std::vector<PieriStep> out;
  text = detail::trim(text);
  while (!text.empty()) {
    if (text.front() != '(')
      throw MalformedChain("expected '(' in step list");
    auto close = text.find(')');
    if (close == std::string_view::npos)
      throw MalformedChain("unterminated step");
    auto pair = detail::parse_int_list(text.substr(1, close - 1));
    if (!pair || pair->size() != 2)
      throw MalformedChain("step must be (a,b)");
    out.push_back({(*pair)[0], (*pair)[1]});
    text = detail::trim(text.substr(close + 1));
  }
  return out;
}

PieriChain parse_chain(std::string_view text) {
  std::optional<Permutation> base;
  std::optional<int> k;
  std::vector<PieriStep> steps;
  text = detail::trim(text);
  while (!text.empty()) {
    auto space = text.find(' ');
    auto field = text.substr(0, space);
    text = space == std::string_view::npos ? std::string_view{} : detail::trim(text.substr(space));
    auto eq = field.find('=');
    if (eq == std::string_view::npos)
      throw MalformedChain("expected key=value, got '" + std::string(field) + "'");
    auto key = field.substr(0, eq), value = field.substr(eq + 1);
    if (key == "w")
      base = parse_permutation(value);
    else if (key == "k")
      k = detail::parse_int(value);
    else if (key == "steps")
      steps = parse_steps(value);
    else
      throw MalformedChain("unknown field '" + std::string(key) + "'");
    if (key == "k" && !k)
      throw MalformedChain("bad k");
  }
  if (!base || !k)
    throw MalformedChain("chain needs w= and k=");
  return PieriChain(std::move(*base), *k, std::move(steps));
}

std::vector<PieriChain> enumerate_chains(const Permutation &w, int m, int k) {
  std::vector<PieriChain> out;
  for_each_chain(w, m, k, [&](std::span<const PieriStep> steps, std::span<const int>) {
    out.emplace_back(w, k, std::vector<PieriStep>(steps.begin(), steps.end()));
  });
  return out;
}

std::vector<Permutation> pieri_expand(const Permutation &w, int m, int k) {
  std::vector<Permutation> out;
  for_each_chain(w, m, k, [&](std::span<const PieriStep>, std::span<const int> word) {
    out.push_back(from_trusted_word(std::vector<int>(word.begin(), word.end())));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ColumnBlock> column_blocks(const PieriChain &chain) {
  std::vector<ColumnBlock> blocks;
  for (const auto &s : chain.steps()) {
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const ColumnBlock &blk) { return blk.column == s.a; });
    if (it == blocks.end())
      blocks.push_back({s.a, {s.b}});
    else
      it->targets.push_back(s.b);
  }
  return blocks;
}

bool chains_equivalent(const PieriChain &lhs, const PieriChain &rhs) {
  if (lhs.base() != rhs.base() || lhs.k() != rhs.k() || lhs.size() != rhs.size())
    throw MismatchedChains("chains must share base, k and length");
  const auto left = column_blocks(lhs);
  const auto right = column_blocks(rhs);
  if (left.size() != right.size())
    return false;

  // Targets are distinct, so a block on the right is identified by its
  // target list; match each left block to its partner.
  std::vector<std::size_t> partner(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    auto it = std::find_if(right.begin(), right.end(), [&](const ColumnBlock &blk) {
      return blk.targets == left[i].targets;
    });
    if (it == right.end())
      return false;
    partner[i] = static_cast<std::size_t>(it - right.begin());
  }

  std::vector<std::size_t> order(left.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (!run_steps(lhs.base(), flatten(left, order)))
      continue;
    std::vector<std::size_t> mirrored;
    for (std::size_t idx : order)
      mirrored.push_back(partner[idx]);
    if (run_steps(rhs.base(), flatten(right, mirrored)))
      return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

std::string CaseSignature::to_string() const {
  std::string out = '(' + std::to_string(i) + ',' + std::to_string(j) + ",{" +
                    detail::join(multiplicities) + "},[";
  for (std::size_t p = 0; p < targets.size(); ++p) {
    if (p > 0)
      out += ',';
    out += '(' + std::to_string(p + 1) + ',' + std::to_string(targets[p]) + ')';
  }
  return out + "])";
}

CaseSignature classify_chain(const PieriChain &chain, int n2) {
  if (chain.base().size() > n2 || n2 < chain.k())
    throw NotClassifiable("base " + chain.base().to_string() + " with k=" +
                          std::to_string(chain.k()) + " does not fit n2=" + std::to_string(n2));
  const auto blocks = column_blocks(chain);
  if (blocks.empty())
    return {};

  std::optional<CaseSignature> best;
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    // Only the final block may leave {k+1..n2}, and it does so last,
    // through n2+1, n2+2, ... in order.
    bool shaped = true;
    for (std::size_t pos = 0; pos + 1 < order.size() && shaped; ++pos)
      for (int b : blocks[order[pos]].targets)
        shaped = shaped && b <= n2;
    const auto &tail = blocks[order.back()].targets;
    int expected = n2 + 1;
    bool in_tail = false;
    for (int b : tail) {
      if (b > n2) {
        in_tail = true;
        shaped = shaped && b == expected++;
      } else {
        shaped = shaped && !in_tail;
      }
    }
    if (!shaped)
      continue;
    const auto steps = flatten(blocks, order);
    if (!run_steps(chain.base(), steps))
      continue;

    CaseSignature sig;
    for (std::size_t pos = 0; pos + 1 < order.size(); ++pos) {
      const int size = static_cast<int>(blocks[order[pos]].targets.size());
      sig.multiplicities.push_back(size);
      sig.i += size;
    }
    std::sort(sig.multiplicities.begin(), sig.multiplicities.end());
    for (const auto &s : steps)
      if (s.b <= n2)
        sig.targets.push_back(s.b);
    sig.j = static_cast<int>(sig.targets.size());
    if (!best || sig < *best)
      best = std::move(sig);
  } while (std::next_permutation(order.begin(), order.end()));

  if (!best)
    throw NotClassifiable(chain.to_string() + " has no ordering of the required shape for n2=" +
                          std::to_string(n2));
  return *best;
}

namespace {

// Partitions of total into at most max_parts positive parts, ascending.
void partitions(int total, int max_parts, int min_part, std::vector<int> &current,
                std::vector<std::vector<int>> &out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  if (static_cast<int>(current.size()) == max_parts)
    return;
  for (int part = min_part; part <= total; ++part) {
    current.push_back(part);
    partitions(total - part, max_parts, part, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<CaseSignature> enumerate_case_signatures(int n2, int k) {
  std::vector<CaseSignature> out;
  const int width = n2 - k;
  if (width < 0)
    return out;
  std::vector<int> pool(static_cast<std::size_t>(width));
  std::iota(pool.begin(), pool.end(), k + 1);

  for (int j = 0; j <= width; ++j) {
    // Ordered selections of j distinct targets.
    std::vector<std::vector<int>> selections;
    std::vector<int> mask(pool.size(), 0);
    std::fill(mask.end() - j, mask.end(), 1);
    do {
      std::vector<int> chosen;
      for (std::size_t p = 0; p < pool.size(); ++p)
        if (mask[p])
          chosen.push_back(pool[p]);
      do {
        selections.push_back(chosen);
      } while (std::next_permutation(chosen.begin(), chosen.end()));
    } while (std::next_permutation(mask.begin(), mask.end()));

    for (int i = 0; i <= j; ++i) {
      std::vector<std::vector<int>> multisets;
      std::vector<int> scratch;
      partitions(i, j, 1, scratch, multisets);
      for (const auto &targets : selections)
        for (const auto &multiplicities : multisets)
          out.push_back({i, j, multiplicities, targets});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::vector<CaseSignature>, std::vector<CaseSignature>>
less_minimal_partition(const std::vector<CaseSignature> &signatures) {
  std::pair<std::vector<CaseSignature>, std::vector<CaseSignature>> out;
  for (const auto &sig : signatures) {
    const bool dominated = std::any_of(signatures.begin(), signatures.end(),
                                       [&](const CaseSignature &other) { return sig.j - other.j >= 2; });
    (dominated ? out.second : out.first).push_back(sig);
  }
  return out;
}

} // namespace schubert
