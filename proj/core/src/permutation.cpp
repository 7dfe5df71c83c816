#include "schubert/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "schubert/errors.hpp"
#include "text.hpp"

namespace schubert {

void Permutation::strip(std::vector<int> &word) {
  while (word.size() > 1 && word.back() == static_cast<int>(word.size()))
    word.pop_back();
  if (word.empty())
    word.push_back(1);
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty())
    throw MalformedPermutation("empty word");
  const int n = size();
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v <= 0 || v > n)
      throw MalformedPermutation("value " + std::to_string(v) +
                                 " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw MalformedPermutation("repeated value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
  strip(word_);
}

Permutation::Permutation(std::vector<int> word, Trusted) : word_(std::move(word)) {
  strip(word_);
}

Permutation from_trusted_word(std::vector<int> word) {
  return Permutation(std::move(word), Permutation::Trusted{});
}

Permutation Permutation::longest(int n) {
  std::vector<int> word(static_cast<std::size_t>(std::max(n, 1)));
  std::iota(word.rbegin(), word.rend(), 1);
  return Permutation(std::move(word), Trusted{});
}

std::vector<int> Permutation::padded(int n) const {
  std::vector<int> out(word_);
  for (int p = size() + 1; p <= n; ++p)
    out.push_back(p);
  return out;
}

int Permutation::length() const {
  int inversions = 0;
  for (std::size_t p = 0; p < word_.size(); ++p)
    for (std::size_t q = p + 1; q < word_.size(); ++q)
      inversions += word_[p] > word_[q];
  return inversions;
}

Permutation Permutation::swap_positions(int a, int b) const {
  auto word = padded(std::max(a, b));
  std::swap(word[static_cast<std::size_t>(a - 1)], word[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(word), Trusted{});
}

std::vector<int> Permutation::lehmer_code() const {
  std::vector<int> code(word_.size(), 0);
  for (std::size_t p = 0; p < word_.size(); ++p)
    for (std::size_t q = p + 1; q < word_.size(); ++q)
      code[p] += word_[q] < word_[p];
  return code;
}

std::string Permutation::to_string() const { return detail::join(word_); }

std::size_t PermutationHash::operator()(const Permutation &w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int v : w.word()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ull;
  }
  return h;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw MalformedPartition("negative part " + std::to_string(parts_[i]));
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw MalformedPartition("parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0)
    parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const { return detail::join(parts_); }

Permutation parse_permutation(std::string_view text) {
  auto values = detail::parse_int_list(text);
  if (!values)
    throw MalformedPermutation("cannot parse '" + std::string(text) + "'");
  return Permutation(std::move(*values));
}

Partition parse_partition(std::string_view text) {
  auto values = detail::parse_int_list(text);
  if (!values)
    throw MalformedPartition("cannot parse '" + std::string(text) + "'");
  return Partition(std::move(*values));
}

int length(const Permutation &w) { return w.length(); }

Permutation apply_transposition(const Permutation &w, int a, int b) {
  if (a < 1 || a >= b)
    throw InvalidPositions("need 1 <= a < b, got a=" + std::to_string(a) +
                           " b=" + std::to_string(b));
  return w.swap_positions(a, b);
}

std::vector<int> lehmer_code(const Permutation &w) { return w.lehmer_code(); }

Permutation code_to_permutation(std::span<const int> code) {
  int n = static_cast<int>(code.size());
  for (std::size_t p = 0; p < code.size(); ++p) {
    if (code[p] < 0)
      throw NotACode("negative entry at position " + std::to_string(p + 1));
    n = std::max(n, static_cast<int>(p) + 1 + code[p]);
  }
  std::vector<int> unused(static_cast<std::size_t>(std::max(n, 1)));
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> word;
  word.reserve(unused.size());
  for (int p = 0; p < n; ++p) {
    const int c = p < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(p)] : 0;
    auto it = unused.begin() + c;
    word.push_back(*it);
    unused.erase(it);
  }
  return from_trusted_word(std::move(word));
}

bool is_grassmannian(const Permutation &w, int k) {
  const auto word = w.padded(std::max(k, w.size()));
  for (std::size_t p = 1; p < word.size(); ++p) {
    if (static_cast<int>(p) == k)
      continue;
    if (word[p - 1] > word[p])
      return false;
  }
  return true;
}

Partition grassmannian_to_partition(const Permutation &w, int k) {
  if (k < 1 || !is_grassmannian(w, k))
    throw NotGrassmannian(w.to_string() + " is not " + std::to_string(k) +
                          "-Grassmannian");
  std::vector<int> parts;
  for (int p = k; p >= 1; --p)
    parts.push_back(w(p) - p);
  return Partition(std::move(parts));
}

Permutation partition_to_grassmannian(const Partition &lambda, int k) {
  if (k < 1)
    throw InvalidPositions("k must be positive");
  if (lambda.rows() > k)
    throw TooManyParts(std::to_string(lambda.rows()) + " rows exceed k=" + std::to_string(k));
  const int n = k + lambda[0];
  std::vector<int> word(static_cast<std::size_t>(std::max(n, 1)), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int p = 1; p <= k; ++p) {
    const int value = lambda[k - p] + p;
    word[static_cast<std::size_t>(p - 1)] = value;
    used[static_cast<std::size_t>(value)] = true;
  }
  int next = 1;
  for (int p = k + 1; p <= n; ++p) {
    while (used[static_cast<std::size_t>(next)])
      ++next;
    word[static_cast<std::size_t>(p - 1)] = next++;
  }
  return from_trusted_word(std::move(word));
}

} // namespace schubert
