#include "schubert/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "schubert/errors.hpp"

namespace schubert {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_add_overflow(a, b, &out))
    throw Overflow("coefficient addition overflowed");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Overflow("coefficient multiplication overflowed");
  return out;
}

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_)
    if (e < 0)
      throw std::invalid_argument("negative exponent");
  strip();
}

void Monomial::strip() {
  while (!exponents_.empty() && exponents_.back() == 0)
    exponents_.pop_back();
}

Monomial Monomial::variable(int var, int power) {
  std::vector<int> e(static_cast<std::size_t>(var), 0);
  e.back() = power;
  return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

Monomial Monomial::operator*(const Monomial &other) const {
  Monomial out;
  const auto &longer = exponents_.size() >= other.exponents_.size() ? exponents_ : other.exponents_;
  const auto &shorter = &longer == &exponents_ ? other.exponents_ : exponents_;
  out.exponents_ = longer;
  for (std::size_t p = 0; p < shorter.size(); ++p)
    out.exponents_[p] += shorter[p];
  return out;
}

Monomial Monomial::with_exponent(int var, int power) const {
  Monomial out = *this;
  if (static_cast<int>(out.exponents_.size()) < var)
    out.exponents_.resize(static_cast<std::size_t>(var), 0);
  out.exponents_[static_cast<std::size_t>(var - 1)] = power;
  out.strip();
  return out;
}

std::string Monomial::to_string() const {
  if (is_one())
    return "1";
  std::string out;
  for (int var = 1; var <= num_vars(); ++var) {
    const int e = exponent(var);
    if (e == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += 'x' + std::to_string(var);
    if (e > 1)
      out += '^' + std::to_string(e);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial &lhs, const Monomial &rhs) {
  // Trailing zeros are stripped, so a longer vector has a nonzero exponent
  // at an index where the shorter one is zero.
  if (auto c = lhs.exponents_.size() <=> rhs.exponents_.size(); c != 0)
    return c;
  for (std::size_t p = lhs.exponents_.size(); p-- > 0;)
    if (auto c = lhs.exponents_[p] <=> rhs.exponents_[p]; c != 0)
      return c;
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(Coefficient constant) {
  if (constant != 0)
    terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial &m, Coefficient c) {
  if (c != 0)
    terms_.emplace(m, c);
}

Coefficient Polynomial::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial &m, Coefficient c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted)
    return;
  it->second = checked_add(it->second, c);
  if (it->second == 0)
    terms_.erase(it);
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
  for (const auto &[m, c] : other.terms_)
    add_term(m, checked_mul(c, -1));
  return *this;
}

Polynomial &Polynomial::operator*=(Coefficient c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, coeff] : terms_)
    coeff = checked_mul(coeff, c);
  return *this;
}

Polynomial Polynomial::operator-() const { return *this * -1; }

Polynomial operator*(const Polynomial &lhs, const Polynomial &rhs) {
  Polynomial out;
  for (const auto &[m1, c1] : lhs.terms_)
    for (const auto &[m2, c2] : rhs.terms_)
      out.add_term(m1 * m2, checked_mul(c1, c2));
  return out;
}

Polynomial Polynomial::swap_variables(int i) const {
  Polynomial out;
  for (const auto &[m, c] : terms_) {
    const int a = m.exponent(i), b = m.exponent(i + 1);
    out.add_term(m.with_exponent(i, b).with_exponent(i + 1, a), c);
  }
  return out;
}

const Monomial &Polynomial::leading_monomial() const {
  if (terms_.empty())
    throw ZeroPolynomial("leading monomial of 0");
  return terms_.rbegin()->first;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[m, c] = *it;
    Coefficient magnitude = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (m.is_one())
      out += std::to_string(magnitude);
    else if (magnitude == 1)
      out += m.to_string();
    else
      out += std::to_string(magnitude) + '*' + m.to_string();
  }
  return out;
}

Polynomial add(const Polynomial &f, const Polynomial &g) { return f + g; }

Polynomial multiply(const Polynomial &f, const Polynomial &g) { return f * g; }

Polynomial divided_difference(const Polynomial &f, int i) {
  if (i < 1)
    throw std::invalid_argument("divided difference index must be positive");
  // For m = x_i^a x_{i+1}^b * rest with a > b:
  //   d_i m = rest * sum_{p=0}^{a-b-1} x_i^{b+p} x_{i+1}^{a-1-p}
  // and d_i m = -d_i(s_i m) when a < b.
  Polynomial out;
  for (const auto &[m, c] : f.terms()) {
    const int a = m.exponent(i), b = m.exponent(i + 1);
    if (a == b)
      continue;
    const int hi = std::max(a, b), lo = std::min(a, b);
    const Coefficient sign = a > b ? c : checked_mul(c, -1);
    for (int p = 0; p < hi - lo; ++p)
      out.add_term(m.with_exponent(i, lo + p).with_exponent(i + 1, hi - 1 - p), sign);
  }
  return out;
}

const Monomial &leading_monomial(const Polynomial &f) { return f.leading_monomial(); }

} // namespace schubert
