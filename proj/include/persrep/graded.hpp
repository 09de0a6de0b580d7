#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "persrep/linalg.hpp"
#include "persrep/monoid.hpp"
#include "persrep/report.hpp"

namespace persrep {

// Element of the monoid ring R[G]: Σ coeff·X^exponent with distinct
// exponents and no zero coefficients, sorted by the monoid's canonical order.
class MonoidRingElement {
 public:
  struct Term {
    Scalar coeff;
    MonoidElement exponent;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MonoidRingElement(GoodMonoid monoid, Ring ring) : monoid_(std::move(monoid)), ring_(ring) {}
  static MonoidRingElement monomial(GoodMonoid monoid, Ring ring, const Scalar& coeff, MonoidElement exponent);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MonoidRingElement operator+(const MonoidRingElement& other) const;
  MonoidRingElement operator*(const MonoidRingElement& other) const;
  friend bool operator==(const MonoidRingElement& a, const MonoidRingElement& b) { return a.terms_ == b.terms_; }

 private:
  void accumulate(const Scalar& coeff, const MonoidElement& exponent);
  void canonicalize();

  GoodMonoid monoid_;
  Ring ring_;
  std::vector<Term> terms_;
};

struct GradedGenerator {
  std::string id;
  MonoidElement degree;
};

// coeff · X^shift · e_gen
struct RelationTerm {
  Scalar coeff;
  MonoidElement shift;
  std::string gen;
};

// Σ coeff·X^shift·e_gen with shift ⋆ deg(gen) = degree for every term.
struct HomogeneousRelation {
  MonoidElement degree;
  std::vector<RelationTerm> terms;
};

// Finitely presented G-graded R[G]-module: free module on degreed
// generators modulo homogeneous relations.
struct GradedPresentation {
  GoodMonoid monoid = GoodMonoid::nat();
  Ring ring = Ring::rational();
  std::vector<GradedGenerator> generators;
  std::vector<HomogeneousRelation> relations;

  std::optional<std::size_t> generator_index(const std::string& id) const;
  // Distinct generator and relation degrees.
  std::vector<MonoidElement> degrees() const;
};

Report validate_presentation(const GradedPresentation& p);
// Throws ValidationError carrying the first violation.
void require_valid(const GradedPresentation& p);

// Indices of the generators whose degree divides g, in presentation order.
std::vector<std::size_t> component_generators(const GradedPresentation& p, const MonoidElement& g);

// R-presentation of the degree-g component. Generator j of the result is
// X^{h_j}·g_j; relation rows come from X^{h'}·z for every relation z of
// degree ⪯ g.
FpPresentation component(const GradedPresentation& p, const MonoidElement& g);

// 0/1 inclusion matrix from the component generators at g1 to those at g2
// (rows: g2 generators, columns: g1 generators). Requires g1 ⪯ g2.
Matrix structure_map(const GradedPresentation& p, const MonoidElement& g1, const MonoidElement& g2);

inline constexpr std::size_t kFramingSetCap = 20;

// ⋃ plcm(D') over all subsets D' of the given degrees, canonically sorted.
std::vector<MonoidElement> framing_set_of_degrees(const GoodMonoid& monoid, std::vector<MonoidElement> degrees,
                                                  std::size_t cap = kFramingSetCap);
std::vector<MonoidElement> framing_set(const GradedPresentation& p, std::size_t cap = kFramingSetCap);

// Dimension of each listed component computed from the full linear system
// over all symbols X^h·e_j of degree g. Independent of component().
std::vector<std::pair<MonoidElement, std::size_t>> truncated_realization(const GradedPresentation& p,
                                                                         const std::vector<MonoidElement>& degrees);

}  // namespace persrep
