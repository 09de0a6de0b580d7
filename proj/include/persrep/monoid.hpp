#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "persrep/report.hpp"

namespace persrep {

// Element of one of the shipped monoids, always in canonical form:
//   natural number        (Nat)
//   k-tuple of naturals   (Grid(k))
//   word over an alphabet (FreeWord), one char per symbol
//   non-negative rational (QPlus), reduced with positive denominator
class MonoidElement {
 public:
  using Tuple = std::vector<std::uint64_t>;
  using Value = std::variant<std::uint64_t, Tuple, std::string, mpq_class>;

  MonoidElement() = default;
  explicit MonoidElement(Value v);

  static MonoidElement nat(std::uint64_t n) { return MonoidElement(Value(n)); }
  static MonoidElement grid(Tuple t) { return MonoidElement(Value(std::move(t))); }
  static MonoidElement word(std::string w) { return MonoidElement(Value(std::move(w))); }
  static MonoidElement rational(const mpq_class& q);

  const Value& value() const { return value_; }
  std::uint64_t as_nat() const { return std::get<std::uint64_t>(value_); }
  const Tuple& as_grid() const { return std::get<Tuple>(value_); }
  const std::string& as_word() const { return std::get<std::string>(value_); }
  const mpq_class& as_rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const MonoidElement& a, const MonoidElement& b) { return a.value_ == b.value_; }
  friend bool operator!=(const MonoidElement& a, const MonoidElement& b) { return !(a == b); }
  // Structural order, only meant for use as a container key. For the
  // instance-aware order use GoodMonoid::canonical_less.
  friend bool operator<(const MonoidElement& a, const MonoidElement& b) { return a.value_ < b.value_; }

 private:
  Value value_;
};

enum class MonoidKind { Nat, Grid, FreeWord, QPlus };

// Bounds for random sampling of monoid elements.
struct SampleBounds {
  std::uint64_t max_coordinate = 4;   // Nat / Grid
  std::size_t max_word_length = 3;    // FreeWord
  std::uint64_t max_denominator = 16; // QPlus
  std::uint64_t max_integer_part = 4; // QPlus
};

// A good monoid: cancellative, anti-symmetric and weak plcm. The order
// g1 ⪯ g2 means h ⋆ g1 = g2 for some h (left multiplication), so in a
// free word monoid g1 ⪯ g2 iff g1 is a suffix of g2.
class GoodMonoid {
 public:
  static GoodMonoid nat();
  static GoodMonoid grid(std::size_t k);
  static GoodMonoid free_word(std::string alphabet);
  static GoodMonoid qplus();

  MonoidKind kind() const { return kind_; }
  std::size_t rank() const { return k_; }
  const std::string& alphabet() const { return alphabet_; }

  MonoidElement identity() const;
  bool contains(const MonoidElement& g) const;

  MonoidElement compose(const MonoidElement& g1, const MonoidElement& g2) const;

  // The unique h with h ⋆ g1 = g2, if g1 ⪯ g2.
  std::optional<MonoidElement> left_divide(const MonoidElement& g1, const MonoidElement& g2) const;
  bool divides(const MonoidElement& g1, const MonoidElement& g2) const;

  // All partially least common multiples; plcm(∅) = {e}.
  std::vector<MonoidElement> plcm(std::span<const MonoidElement> elems) const;

  // Total order refining ⪯: numeric for Nat/QPlus, total degree then
  // lexicographic for Grid, length then lexicographic for words.
  bool canonical_less(const MonoidElement& a, const MonoidElement& b) const;
  void sort_canonical(std::vector<MonoidElement>& elems) const;

  std::string to_string(const MonoidElement& g) const;
  std::string describe() const;

  MonoidElement random_element(std::mt19937_64& rng, const SampleBounds& bounds = {}) const;

  friend bool operator==(const GoodMonoid&, const GoodMonoid&) = default;

 private:
  GoodMonoid(MonoidKind kind, std::size_t k, std::string alphabet)
      : kind_(kind), k_(k), alphabet_(std::move(alphabet)) {}

  void require(const MonoidElement& g) const;

  MonoidKind kind_ = MonoidKind::Nat;
  std::size_t k_ = 1;
  std::string alphabet_;
};

// ⪯-minimal elements of a finite subset of ℕᵏ, in input order.
std::vector<MonoidElement> dickson_minimal(const GoodMonoid& monoid, std::span<const MonoidElement> elems);

// Seeded sampling check of associativity, identity, both cancellation
// laws, anti-symmetry and left division.
Report check_good_axioms(const GoodMonoid& monoid, std::size_t sample_count, std::uint64_t seed,
                         const SampleBounds& bounds = {6, 4, 16, 6});

// DOT digraph of the covering relation of ⪯ restricted to elems.
std::string hasse_dot(const GoodMonoid& monoid, std::span<const MonoidElement> elems);

}  // namespace persrep
