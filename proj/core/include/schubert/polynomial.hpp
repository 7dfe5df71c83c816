#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace schubert {

using Coefficient = std::int64_t;

/// Checked 64-bit arithmetic; throws Overflow instead of wrapping.
Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

/// x_1^{e_1} x_2^{e_2} ... with trailing zero exponents stripped. The
/// ordering is the rightmost-dominant term order: at the largest variable
/// index where two monomials differ, the one with the larger exponent is
/// greater.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::vector<int>(exponents)) {}

  /// x_var, 1-indexed.
  static Monomial variable(int var, int power = 1);

  /// Exponent of x_var (1-indexed); zero past the stored range.
  int exponent(int var) const {
    return var >= 1 && var <= num_vars()
               ? exponents_[static_cast<std::size_t>(var - 1)]
               : 0;
  }
  /// Largest variable index with a nonzero exponent.
  int num_vars() const { return static_cast<int>(exponents_.size()); }
  int degree() const;
  std::span<const int> exponents() const { return exponents_; }
  bool is_one() const { return exponents_.empty(); }

  Monomial operator*(const Monomial &other) const;
  Monomial with_exponent(int var, int power) const;

  /// "x1^2*x3", or "1".
  std::string to_string() const;

  friend bool operator==(const Monomial &, const Monomial &) = default;
  friend std::strong_ordering operator<=>(const Monomial &lhs, const Monomial &rhs);

private:
  void strip();
  std::vector<int> exponents_;
};

/// Sparse multivariate polynomial with exact integer coefficients. Terms are
/// kept sorted by the term order; no stored coefficient is zero.
class Polynomial {
public:
  using Terms = std::map<Monomial, Coefficient>;

  Polynomial() = default;
  Polynomial(Coefficient constant);
  Polynomial(const Monomial &m, Coefficient c = 1);

  static Polynomial variable(int var) { return Polynomial(Monomial::variable(var)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const Terms &terms() const { return terms_; }
  Coefficient coefficient(const Monomial &m) const;

  void add_term(const Monomial &m, Coefficient c);

  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  Polynomial &operator*=(Coefficient c);
  friend Polynomial operator+(Polynomial lhs, const Polynomial &rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial &rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, Coefficient c) { return lhs *= c; }
  friend Polynomial operator*(const Polynomial &lhs, const Polynomial &rhs);
  Polynomial operator-() const;

  /// The image under x_i <-> x_{i+1}.
  Polynomial swap_variables(int i) const;

  /// Maximal monomial under the term order. Throws ZeroPolynomial.
  const Monomial &leading_monomial() const;

  /// Terms from largest to smallest, e.g. "x2 + x1" or "2*x1^2 - x2".
  std::string to_string() const;

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
  Terms terms_;
};

Polynomial add(const Polynomial &f, const Polynomial &g);
Polynomial multiply(const Polynomial &f, const Polynomial &g);

/// (f - s_i f) / (x_i - x_{i+1}), computed termwise without division.
Polynomial divided_difference(const Polynomial &f, int i);

const Monomial &leading_monomial(const Polynomial &f);

} // namespace schubert
