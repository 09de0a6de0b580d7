#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "persrep/diagram.hpp"

namespace persrep {

// Polynomial in ℤ[x₁, x₂, …]. A monomial is a sorted multiset of variable
// indices (≥ 1); coefficients are nonzero.
class CountablePoly {
 public:
  using Monomial = std::vector<std::uint32_t>;

  CountablePoly() = default;
  static CountablePoly variable(std::uint32_t index);
  static CountablePoly term(long coeff, Monomial monomial);

  const std::map<Monomial, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CountablePoly operator+(const CountablePoly& other) const;
  std::string to_string() const;
  friend bool operator==(const CountablePoly&, const CountablePoly&) = default;

 private:
  void add_term(long coeff, Monomial monomial);
  std::map<Monomial, long> terms_;
};

// Normal form in ℤ[x₁, …]/⟨x₁, …, x_i⟩: drops every term touching x_k, k ≤ i.
CountablePoly zc_normal_form(const CountablePoly& p, std::uint32_t i);
// x_{i+1}: nonzero in M_i, zero in M_{i+1}.
CountablePoly zc_noninjectivity_witness(std::uint32_t i);

// (ℚ≥0, +) module with M_0 = R, M_q = 0 for q > 0 and zero maps.
class QPlusModule final : public EvaluableModule {
 public:
  explicit QPlusModule(Ring ring = Ring::rational()) : ring_(ring) {}
  const GoodMonoid& monoid() const override { return monoid_; }
  const Ring& ring() const override { return ring_; }
  FpPresentation evaluate(const MonoidElement& g) const override;
  Matrix morphism(const MonoidElement& g1, const MonoidElement& g2) const override;

 private:
  GoodMonoid monoid_ = GoodMonoid::qplus();
  Ring ring_;
};

// A degree g for which no h ∈ H with h ⪯ g passes verify_frame, if found.
// Tries 0, half the least positive element, and each element of H.
std::optional<MonoidElement> refute_framing_set(const EvaluableModule& m, const std::vector<MonoidElement>& framing);

// Random nonnegative rational with denominator ≤ max_den and value ≤ max_value.
mpq_class random_rational(std::mt19937_64& rng, std::uint64_t max_den, std::uint64_t max_value);

nlohmann::json zc_report(std::uint32_t max_index);
// Stationarity on `sequences` random monotone sequences and refutation of
// `candidates` random framing sets (size ≤ 6, denominators ≤ 16).
nlohmann::json qplus_report(std::uint64_t seed, std::size_t sequences, std::size_t candidates);

}  // namespace persrep
