#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// A permutation of {1, 2, ...} fixing all but finitely many points, stored
/// in one-line notation with trailing fixed points stripped. Positions and
/// values are 1-indexed everywhere in the public interface; positions past
/// the stored word are fixed points, so a permutation of S_n is also a
/// permutation of every S_m with m > n.
class Permutation {
public:
  /// The identity.
  Permutation() : word_{1} {}

  /// Builds from one-line notation. Throws MalformedPermutation unless the
  /// word is a bijection on {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity() { return {}; }

  /// The longest element of S_n, (n, n-1, ..., 1).
  static Permutation longest(int n);

  /// Canonical word length: the smallest n with this permutation in S_n.
  int size() const { return static_cast<int>(word_.size()); }

  /// w(p) for any p >= 1.
  int operator()(int p) const {
    return p <= size() ? word_[static_cast<std::size_t>(p - 1)] : p;
  }

  std::span<const int> word() const { return word_; }

  /// One-line notation embedded in S_n, n >= size().
  std::vector<int> padded(int n) const;

  /// Number of inversions.
  int length() const;

  /// w * t_{ab}: the values at positions a and b exchanged.
  Permutation swap_positions(int a, int b) const;

  /// c[p] = #{q > p : w(q) < w(p)}, over the canonical word.
  std::vector<int> lehmer_code() const;

  bool is_identity() const { return word_.size() == 1; }

  /// Comma-separated one-line notation, e.g. "1,4,3,2".
  std::string to_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  /// Lexicographic on canonical words.
  friend std::strong_ordering operator<=>(const Permutation &lhs,
                                          const Permutation &rhs) {
    return lhs.word_ <=> rhs.word_;
  }

private:
  struct Trusted {};
  Permutation(std::vector<int> word, Trusted);
  static void strip(std::vector<int> &word);

  std::vector<int> word_;

  friend Permutation from_trusted_word(std::vector<int> word);
};

/// Builds a permutation from a word known to be a bijection on {1..n}.
/// Only canonicalizes; used on hot paths that never produce invalid words.
Permutation from_trusted_word(std::vector<int> word);

struct PermutationHash {
  std::size_t operator()(const Permutation &w) const noexcept;
};

/// A weakly decreasing sequence of nonnegative integers, trailing zeros
/// stripped.
class Partition {
public:
  Partition() = default;
  /// Throws MalformedPartition for negative or increasing entries.
  explicit Partition(std::vector<int> parts);

  /// Number of nonzero parts.
  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const {
    return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  int weight() const;
  std::span<const int> parts() const { return parts_; }
  std::string to_string() const;

  friend bool operator==(const Partition &, const Partition &) = default;
  friend auto operator<=>(const Partition &, const Partition &) = default;

private:
  std::vector<int> parts_;
};

/// "1,4,3,2" -> (1,4,3,2). Throws MalformedPermutation.
Permutation parse_permutation(std::string_view text);

/// "4,3" -> (4,3). Throws MalformedPartition.
Partition parse_partition(std::string_view text);

int length(const Permutation &w);

/// w * t_{ab} with 1 <= a < b. Throws InvalidPositions otherwise.
Permutation apply_transposition(const Permutation &w, int a, int b);

std::vector<int> lehmer_code(const Permutation &w);

/// Inverse of lehmer_code. Every finite nonnegative sequence is the code of
/// exactly one permutation; throws NotACode for negative entries.
Permutation code_to_permutation(std::span<const int> code);

/// w(1) < ... < w(k) and w(k+1) < w(k+2) < ...
bool is_grassmannian(const Permutation &w, int k);

/// (w(k)-k, ..., w(2)-2, w(1)-1). Throws NotGrassmannian.
Partition grassmannian_to_partition(const Permutation &w, int k);

/// The unique k-Grassmannian permutation with the given shape. Throws
/// TooManyParts if the partition has more than k rows.
Permutation partition_to_grassmannian(const Partition &lambda, int k);

} // namespace schubert
