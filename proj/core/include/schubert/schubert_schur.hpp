#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// A linear combination of Schubert polynomials, keyed by canonical
/// permutation and ordered lexicographically by one-line word. Zero
/// coefficients are never stored.
class SchubertExpansion {
public:
  using Terms = std::map<Permutation, Coefficient>;

  SchubertExpansion() = default;
  SchubertExpansion(std::initializer_list<std::pair<const Permutation, Coefficient>> terms);

  void add(const Permutation &w, Coefficient c);
  Coefficient coefficient(const Permutation &w) const;
  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Largest coefficient, 0 when empty.
  Coefficient max_coefficient() const;
  Coefficient min_coefficient() const;

  SchubertExpansion &operator-=(const SchubertExpansion &other);

  /// "{(1,4,6,2,3,5): 1, (2,5,3,1,4): 1}"
  std::string to_string() const;

  friend bool operator==(const SchubertExpansion &, const SchubertExpansion &) = default;

private:
  Terms terms_;
};

/// Concurrent get-or-compute memo for Schubert polynomials. Lookups take a
/// shared lock; computation happens outside any lock, and the first insert
/// for a key wins (all computations of the same key agree).
class SchubertTable {
public:
  /// The Schubert polynomial of w in x_1..x_n, n the canonical size of w.
  /// Descends from the staircase x_1^{n-1} ... x_{n-1} of w_0 in S_n by
  /// divided differences, always through the smallest ascent.
  std::shared_ptr<const Polynomial> get(const Permutation &w);

  std::size_t size() const;
  void clear();

  /// Versioned JSON persistence. load() returns false (and leaves the table
  /// unchanged) if the file is missing, unreadable or of another version.
  bool load(const std::filesystem::path &file);
  void save(const std::filesystem::path &file) const;

private:
  std::shared_ptr<const Polynomial> find(const Permutation &w) const;
  std::shared_ptr<const Polynomial> insert(const Permutation &w, Polynomial poly);

  mutable std::shared_mutex mutex_;
  std::unordered_map<Permutation, std::shared_ptr<const Polynomial>, PermutationHash> memo_;
};

/// Process-wide table used by schubert().
SchubertTable &default_schubert_table();

Polynomial schubert(const Permutation &w);

/// x_1^{n-1} x_2^{n-2} ... x_{n-1}.
Polynomial staircase(int n);

/// h_m(x_1..x_k); 1 for m = 0 and 0 for m < 0.
Polynomial complete_homogeneous(int m, int k);

/// e_m(x_1..x_k). Throws DegreeExceedsVariables for m > k.
Polynomial elementary(int m, int k);

/// Sum of x^T over semistandard tableaux of shape lambda with entries in
/// 1..k (rows weakly, columns strictly increasing). Throws TooManyParts.
Polynomial schur_ssyt(const Partition &lambda, int k);

/// h_{m1} h_{m2} - h_{m1+1} h_{m2-1} in k variables. Throws BadShape for
/// more than two rows and KTooSmall for k < 2.
Polynomial schur_jacobi_trudi_two_row(const Partition &lambda, int k);

/// Expands f in the Schubert basis by repeatedly cancelling the leading
/// monomial, whose exponent vector is the Lehmer code of the next basis
/// element. Throws NotSchubertSpanned if the reduction stalls.
SchubertExpansion expand_in_schubert_basis(Polynomial f, SchubertTable &table);
SchubertExpansion expand_in_schubert_basis(Polynomial f);

/// sum_w c_w S_w.
Polynomial schubert_combination(const SchubertExpansion &expansion);

} // namespace schubert
