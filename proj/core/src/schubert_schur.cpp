#include "schubert/schubert_schur.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include <nlohmann/json.hpp>

#include "schubert/errors.hpp"

namespace schubert {

SchubertExpansion::SchubertExpansion(
    std::initializer_list<std::pair<const Permutation, Coefficient>> terms) {
  for (const auto &[w, c] : terms)
    add(w, c);
}

void SchubertExpansion::add(const Permutation &w, Coefficient c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted)
    return;
  it->second = checked_add(it->second, c);
  if (it->second == 0)
    terms_.erase(it);
}

Coefficient SchubertExpansion::coefficient(const Permutation &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

Coefficient SchubertExpansion::max_coefficient() const {
  Coefficient best = 0;
  for (const auto &[w, c] : terms_)
    best = std::max(best, c);
  return best;
}

Coefficient SchubertExpansion::min_coefficient() const {
  if (terms_.empty())
    return 0;
  Coefficient best = terms_.begin()->second;
  for (const auto &[w, c] : terms_)
    best = std::min(best, c);
  return best;
}

SchubertExpansion &SchubertExpansion::operator-=(const SchubertExpansion &other) {
  for (const auto &[w, c] : other.terms_)
    add(w, checked_mul(c, -1));
  return *this;
}

std::string SchubertExpansion::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto &[w, c] : terms_) {
    if (!first)
      out += ", ";
    out += '(' + w.to_string() + "): " + std::to_string(c);
    first = false;
  }
  return out + '}';
}

Polynomial staircase(int n) {
  std::vector<int> exponents;
  for (int p = 1; p < n; ++p)
    exponents.push_back(n - p);
  return Polynomial(Monomial(std::move(exponents)));
}

std::shared_ptr<const Polynomial> SchubertTable::find(const Permutation &w) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(w);
  return it == memo_.end() ? nullptr : it->second;
}

std::shared_ptr<const Polynomial> SchubertTable::insert(const Permutation &w, Polynomial poly) {
  auto value = std::make_shared<const Polynomial>(std::move(poly));
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(w, std::move(value)).first->second;
}

std::shared_ptr<const Polynomial> SchubertTable::get(const Permutation &w) {
  if (auto hit = find(w))
    return hit;

  // Climb by the smallest ascent until a cached permutation or w_0 of S_n,
  // then come back down applying one divided difference per step.
  const int n = w.size();
  std::vector<int> word = w.padded(n);
  std::vector<int> ascents;
  std::shared_ptr<const Polynomial> top;
  while (true) {
    auto ascent = std::adjacent_find(word.begin(), word.end(), std::less<>{});
    if (ascent == word.end()) {
      top = find(Permutation::longest(n));
      if (!top)
        top = insert(Permutation::longest(n), staircase(n));
      break;
    }
    std::iter_swap(ascent, ascent + 1);
    ascents.push_back(static_cast<int>(ascent - word.begin()) + 1);
    if ((top = find(from_trusted_word(word))))
      break;
  }

  std::shared_ptr<const Polynomial> current = top;
  while (!ascents.empty()) {
    const int i = ascents.back();
    ascents.pop_back();
    std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
    current = insert(from_trusted_word(word), divided_difference(*current, i));
  }
  return current;
}

std::size_t SchubertTable::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void SchubertTable::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

namespace {
constexpr int kCacheVersion = 1;
constexpr const char *kCacheFormat = "schubert-memo";
} // namespace

bool SchubertTable::load(const std::filesystem::path &file) {
  std::ifstream in(file);
  if (!in)
    return false;
  std::vector<std::pair<Permutation, Polynomial>> entries;
  try {
    auto doc = nlohmann::json::parse(in);
    if (doc.at("format") != kCacheFormat || doc.at("version") != kCacheVersion)
      return false;
    for (const auto &entry : doc.at("entries")) {
      Polynomial poly;
      for (const auto &term : entry.at("terms"))
        poly.add_term(Monomial(term.at(0).get<std::vector<int>>()), term.at(1).get<Coefficient>());
      entries.emplace_back(Permutation(entry.at("w").get<std::vector<int>>()), std::move(poly));
    }
  } catch (const std::exception &) {
    return false;
  }
  for (auto &[w, poly] : entries)
    insert(w, std::move(poly));
  return true;
}

void SchubertTable::save(const std::filesystem::path &file) const {
  nlohmann::json entries = nlohmann::json::array();
  {
    std::shared_lock lock(mutex_);
    std::vector<const Permutation *> keys;
    for (const auto &[w, poly] : memo_)
      keys.push_back(&w);
    std::sort(keys.begin(), keys.end(), [](auto *a, auto *b) { return *a < *b; });
    for (const auto *w : keys) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto &[m, c] : memo_.at(*w)->terms())
        terms.push_back({std::vector<int>(m.exponents().begin(), m.exponents().end()), c});
      entries.push_back({{"w", std::vector<int>(w->word().begin(), w->word().end())},
                         {"terms", std::move(terms)}});
    }
  }
  nlohmann::json doc = {{"format", kCacheFormat},
                        {"version", kCacheVersion},
                        {"entries", std::move(entries)}};
  std::ofstream out(file);
  if (!out)
    throw std::runtime_error("cannot write Schubert cache to " + file.string());
  out << doc.dump() << '\n';
}

SchubertTable &default_schubert_table() {
  static SchubertTable table;
  return table;
}

Polynomial schubert(const Permutation &w) { return *default_schubert_table().get(w); }

Polynomial complete_homogeneous(int m, int k) {
  if (m < 0)
    return {};
  if (k < 1)
    return m == 0 ? Polynomial(1) : Polynomial();
  Polynomial out;
  std::vector<int> exponents(static_cast<std::size_t>(k), 0);
  // Distribute m among x_1..x_k.
  std::function<void(int, int)> place = [&](int var, int remaining) {
    if (var == k - 1) {
      exponents[static_cast<std::size_t>(var)] = remaining;
      out.add_term(Monomial(exponents), 1);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exponents[static_cast<std::size_t>(var)] = e;
      place(var + 1, remaining - e);
    }
  };
  place(0, m);
  return out;
}

Polynomial elementary(int m, int k) {
  if (m > k)
    throw DegreeExceedsVariables("e_" + std::to_string(m) + " in " + std::to_string(k) +
                                 " variables");
  if (m < 0)
    return {};
  Polynomial out;
  std::vector<int> exponents(static_cast<std::size_t>(k), 0);
  std::fill(exponents.end() - m, exponents.end(), 1);
  do {
    out.add_term(Monomial(exponents), 1);
  } while (std::next_permutation(exponents.begin(), exponents.end()));
  return out;
}

Polynomial schur_ssyt(const Partition &lambda, int k) {
  if (lambda.rows() > k)
    throw TooManyParts(std::to_string(lambda.rows()) + " rows exceed k=" + std::to_string(k));
  const int rows = lambda.rows();
  std::vector<std::vector<int>> tableau(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    tableau[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[r]), 0);
  std::vector<int> content(static_cast<std::size_t>(k), 0);
  Polynomial out;

  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == rows) {
      out.add_term(Monomial(content), 1);
      return;
    }
    if (c == lambda[r]) {
      fill(r + 1, 0);
      return;
    }
    const auto &row = tableau[static_cast<std::size_t>(r)];
    int lo = c > 0 ? row[static_cast<std::size_t>(c - 1)] : 1;
    if (r > 0)
      lo = std::max(lo, tableau[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= k; ++v) {
      tableau[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      fill(r, c + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0, 0);
  return out;
}

Polynomial schur_jacobi_trudi_two_row(const Partition &lambda, int k) {
  if (lambda.rows() > 2)
    throw BadShape("Jacobi-Trudi path needs at most two rows, got " + lambda.to_string());
  if (k < 2)
    throw KTooSmall("two-row Jacobi-Trudi needs k >= 2, got " + std::to_string(k));
  const int m1 = lambda[0], m2 = lambda[1];
  return complete_homogeneous(m1, k) * complete_homogeneous(m2, k) -
         complete_homogeneous(m1 + 1, k) * complete_homogeneous(m2 - 1, k);
}

SchubertExpansion expand_in_schubert_basis(Polynomial f, SchubertTable &table) {
  SchubertExpansion out;
  const std::size_t max_rounds = std::max<std::size_t>(f.num_terms(), 1) * 64;
  std::size_t rounds = 0;
  std::optional<Monomial> previous;
  while (!f.is_zero()) {
    if (++rounds > max_rounds)
      throw NotSchubertSpanned("reduction exceeded " + std::to_string(max_rounds) + " rounds");
    const Monomial lead = f.leading_monomial();
    if (previous && !(lead < *previous))
      throw NotSchubertSpanned("leading monomial " + lead.to_string() +
                               " did not decrease from " + previous->to_string());
    const Coefficient c = f.coefficient(lead);
    Permutation w;
    try {
      w = code_to_permutation(lead.exponents());
    } catch (const NotACode &e) {
      throw NotSchubertSpanned(e.what());
    }
    f -= *table.get(w) * c;
    out.add(w, c);
    previous = lead;
  }
  return out;
}

SchubertExpansion expand_in_schubert_basis(Polynomial f) {
  return expand_in_schubert_basis(std::move(f), default_schubert_table());
}

Polynomial schubert_combination(const SchubertExpansion &expansion) {
  Polynomial out;
  for (const auto &[w, c] : expansion.terms())
    out += schubert(w) * c;
  return out;
}

} // namespace schubert
