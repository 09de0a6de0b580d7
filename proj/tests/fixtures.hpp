#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "persrep/diagram.hpp"
#include "persrep/graded.hpp"

namespace persrep {

inline void PrintTo(const MonoidElement& g, std::ostream* os) {
  if (std::holds_alternative<std::uint64_t>(g.value())) *os << g.as_nat();
  else if (std::holds_alternative<std::string>(g.value())) *os << '"' << g.as_word() << '"';
  else if (std::holds_alternative<mpq_class>(g.value())) *os << g.as_rational().get_str();
  else {
    *os << '(';
    for (std::size_t i = 0; i < g.as_grid().size(); ++i) *os << (i ? "," : "") << g.as_grid()[i];
    *os << ')';
  }
}

}  // namespace persrep

namespace fixtures {

using namespace persrep;

inline MonoidElement n(std::uint64_t v) { return MonoidElement::nat(v); }
inline MonoidElement xy(std::uint64_t a, std::uint64_t b) { return MonoidElement::grid({a, b}); }
inline MonoidElement w(const std::string& s) { return MonoidElement::word(s); }

inline Matrix rows(const Ring& r, std::vector<std::vector<long>> data, std::size_t cols) {
  std::vector<std::vector<Scalar>> s;
  for (auto& row : data) {
    s.emplace_back();
    for (long x : row) s.back().push_back(Scalar(x));
  }
  return Matrix::from_rows(r, s, cols);
}

// t²·g1 = 0 with g1 in degree 0, g2 in degree 1, over ℚ[t].
inline GradedPresentation f1() {
  GradedPresentation p;
  p.generators = {{"g1", n(0)}, {"g2", n(1)}};
  p.relations = {{n(2), {{Scalar(1), n(2), "g1"}}}};
  return p;
}

// 𝔽₂[ℕ²], one generator at (0,0) killed by X^(1,0).
inline GradedPresentation f2() {
  GradedPresentation p;
  p.monoid = GoodMonoid::grid(2);
  p.ring = Ring::prime_field(2);
  p.generators = {{"g1", xy(0, 0)}};
  p.relations = {{xy(1, 0), {{Scalar(1), xy(1, 0), "g1"}}}};
  return p;
}

// Frames 0 and 1 over ℚ, rank-one free modules, zero transition.
inline FramedDiagram fd() {
  FramedDiagram d;
  d.frames = {{"h0", n(0)}, {"h1", n(1)}};
  d.modules = {FpPresentation(d.ring, 1), FpPresentation(d.ring, 1)};
  d.transitions.emplace(std::pair{0, 1}, Matrix(d.ring, 1, 1));
  complete_transitions(d);
  return d;
}

}  // namespace fixtures
