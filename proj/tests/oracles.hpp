#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's linear algebra or divisibility code.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "persrep/graded.hpp"

namespace oracle {

using Row = std::vector<mpq_class>;

// p == 0 means ℚ.
inline mpq_class reduce(const mpq_class& x, std::uint64_t p) {
  if (p == 0) return x;
  mpz_class num = x.get_num() % static_cast<unsigned long>(p);
  mpz_class den = x.get_den() % static_cast<unsigned long>(p);
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
  return mpq_class((num * inv) % static_cast<unsigned long>(p));
}

inline std::size_t rank(std::vector<Row> m, std::uint64_t p) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (auto& row : m)
    for (auto& x : row) x = reduce(x, p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = p ? reduce(m[i][c] * reduce(1 / m[r][c], p), p) : mpq_class(m[i][c] / m[r][c]);
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = reduce(m[i][k] - f * m[r][k], p);
    }
    ++r;
  }
  return r;
}

inline std::uint64_t modulus(const persrep::Ring& r) { return r.kind() == persrep::RingKind::PrimeField ? r.modulus() : 0; }

// f with f ⋆ a = b under left multiplication.
inline std::optional<persrep::MonoidElement> quotient(const persrep::GoodMonoid& m, const persrep::MonoidElement& a,
                                                      const persrep::MonoidElement& b) {
  using persrep::MonoidElement;
  using persrep::MonoidKind;
  switch (m.kind()) {
    case MonoidKind::Nat:
      if (a.as_nat() > b.as_nat()) return std::nullopt;
      return MonoidElement::nat(b.as_nat() - a.as_nat());
    case MonoidKind::Grid: {
      MonoidElement::Tuple t;
      for (std::size_t i = 0; i < a.as_grid().size(); ++i) {
        if (a.as_grid()[i] > b.as_grid()[i]) return std::nullopt;
        t.push_back(b.as_grid()[i] - a.as_grid()[i]);
      }
      return MonoidElement::grid(t);
    }
    case MonoidKind::FreeWord: {
      const auto& x = a.as_word();
      const auto& y = b.as_word();
      if (x.size() > y.size() || y.compare(y.size() - x.size(), x.size(), x) != 0) return std::nullopt;
      return MonoidElement::word(y.substr(0, y.size() - x.size()));
    }
    case MonoidKind::QPlus:
      if (a.as_rational() > b.as_rational()) return std::nullopt;
      return MonoidElement::rational(b.as_rational() - a.as_rational());
  }
  return std::nullopt;
}

struct Symbols {
  std::vector<std::size_t> gens;  // generator indices living at g
  std::vector<Row> relations;     // shifted relations at g, over gens
};

// Symbols X^f·e_j at degree g and the relations that reach g.
inline Symbols symbols_at(const persrep::GradedPresentation& p, const persrep::MonoidElement& g) {
  Symbols s;
  for (std::size_t j = 0; j < p.generators.size(); ++j)
    if (quotient(p.monoid, p.generators[j].degree, g)) s.gens.push_back(j);
  for (const auto& z : p.relations) {
    if (!quotient(p.monoid, z.degree, g)) continue;
    Row row(s.gens.size(), 0);
    for (const auto& t : z.terms) {
      std::size_t j = 0;
      while (p.generators[j].id != t.gen) ++j;
      auto pos = std::find(s.gens.begin(), s.gens.end(), j) - s.gens.begin();
      row[pos] += t.coeff;
    }
    s.relations.push_back(row);
  }
  return s;
}

inline std::size_t dim_at(const persrep::GradedPresentation& p, const persrep::MonoidElement& g) {
  auto s = symbols_at(p, g);
  return s.gens.size() - (s.gens.empty() ? 0 : rank(s.relations, modulus(p.ring)));
}

// Rank of the structure map g1 → g2: dimension of the span of the images
// of the g1 symbols inside the quotient at g2.
inline std::size_t map_rank(const persrep::GradedPresentation& p, const persrep::MonoidElement& g1,
                            const persrep::MonoidElement& g2) {
  auto low = symbols_at(p, g1);
  auto high = symbols_at(p, g2);
  if (high.gens.empty()) return 0;
  auto stacked = high.relations;
  const std::size_t base = rank(high.relations, modulus(p.ring));
  for (auto j : low.gens) {
    Row unit(high.gens.size(), 0);
    unit[std::find(high.gens.begin(), high.gens.end(), j) - high.gens.begin()] = 1;
    stacked.push_back(unit);
  }
  return rank(stacked, modulus(p.ring)) - base;
}

// All words over alphabet of length ≤ n.
inline std::vector<std::string> words_up_to(const std::string& alphabet, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t start = 0; start < out.size(); ++start)
    if (out[start].size() < n)
      for (char c : alphabet) out.push_back(out[start] + c);
  return out;
}

inline bool is_suffix(const std::string& a, const std::string& b) {
  return a.size() <= b.size() && b.compare(b.size() - a.size(), a.size(), a) == 0;
}

// Common multiples with no proper common-multiple divisor, by search.
inline std::vector<std::string> brute_plcm(const std::string& alphabet, const std::vector<std::string>& xs,
                                           std::size_t max_len) {
  std::vector<std::string> common;
  for (const auto& w : words_up_to(alphabet, max_len))
    if (std::all_of(xs.begin(), xs.end(), [&](const std::string& x) { return is_suffix(x, w); })) common.push_back(w);
  std::vector<std::string> out;
  for (const auto& w : common)
    if (std::none_of(common.begin(), common.end(), [&](const std::string& v) { return v != w && is_suffix(v, w); }))
      out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool dominated_or_equal(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace oracle
