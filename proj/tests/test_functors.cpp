#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "persrep/error.hpp"
#include "persrep/functors.hpp"
#include "persrep/random.hpp"

using namespace persrep;
using namespace fixtures;

TEST(Alpha, FixtureDiagram) {
  auto p = alpha(fd());
  ASSERT_EQ(p.generators.size(), 2u);
  EXPECT_EQ(p.generators[0].id, "e0");
  EXPECT_EQ(p.generators[0].degree, n(0));
  EXPECT_EQ(p.generators[1].degree, n(1));
  std::size_t nonempty = 0;
  for (const auto& z : p.relations) {
    if (z.terms.empty()) continue;
    ++nonempty;
    EXPECT_EQ(z.degree, n(1));
    ASSERT_EQ(z.terms.size(), 1u);
    EXPECT_EQ(z.terms[0].gen, "e0");
    EXPECT_EQ(z.terms[0].shift, n(1));
  }
  EXPECT_EQ(nonempty, 1u);
  for (std::uint64_t g = 0; g < 6; ++g) EXPECT_EQ(oracle::dim_at(p, n(g)), 1u);
}

TEST(Alpha, SingleIntegerFrame) {
  FramedDiagram d;
  d.ring = Ring::integer();
  d.frames = {{"h0", n(0)}};
  d.modules = {FpPresentation(d.ring, 1, rows(d.ring, {{2}}, 1))};
  complete_transitions(d);
  auto p = alpha(d);
  ASSERT_EQ(p.generators.size(), 1u);
  ASSERT_EQ(p.relations.size(), 1u);
  EXPECT_EQ(p.relations[0].degree, n(0));
  EXPECT_EQ(p.relations[0].terms[0].coeff, Scalar(2));
  EXPECT_EQ(abelian_invariants(component(p, n(3))).torsion, std::vector<mpz_class>{2});
}

TEST(Alpha, IdentityTransitionsGiveConstantComponents) {
  FramedDiagram d;
  d.monoid = GoodMonoid::grid(2);
  d.ring = Ring::integer();
  d.frames = {{"h0", xy(0, 0)}, {"h1", xy(1, 0)}, {"h2", xy(0, 1)}, {"h3", xy(1, 1)}};
  const FpPresentation m(d.ring, 2, rows(d.ring, {{3, 0}}, 2));
  d.modules = {m, m, m, m};
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 3}})
    d.transitions.emplace(std::pair<std::size_t, std::size_t>{i, j}, Matrix::identity(d.ring, 2));
  complete_transitions(d);
  ASSERT_TRUE(validate_diagram(d).pass());
  auto p = alpha(d);
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) EXPECT_TRUE(presentation_iso(component(p, xy(a, b)), m));
}

TEST(Beta, EvaluatesComponents) {
  EXPECT_EQ(dimension(beta(f1())->evaluate(n(2))), 1u);
  GradedPresentation empty;
  auto e = beta(empty);
  for (std::uint64_t g = 0; g < 4; ++g) EXPECT_TRUE(is_zero_module(e->evaluate(n(g))));
  auto bad = f1();
  bad.relations[0].terms[0].shift = n(5);
  EXPECT_THROW(beta(bad), ValidationError);
}

TEST(Morphisms, AlphaExamples) {
  auto d = fd();
  EXPECT_TRUE(same_terms(alpha_on_morphism(identity_morphism(d)), identity_graded_morphism(alpha(d))));
  auto z = alpha_on_morphism(zero_morphism(d, d));
  for (const auto& img : z.images) EXPECT_TRUE(img.empty());
}

TEST(Morphisms, BetaExamples) {
  auto id = beta_on_morphism(identity_graded_morphism(f1()));
  for (std::size_t i = 0; i < id.maps.size(); ++i) EXPECT_EQ(id.maps[i], Matrix::identity(Ring::rational(), id.maps[i].rows()));

  GradedPresentation free1;
  free1.generators = {{"g", n(0)}};
  GradedMorphism scale{free1, free1, {{{Scalar(5), n(0), "g"}}}};
  auto xi = beta_on_morphism(scale, {n(0), n(1), n(4)});
  for (const auto& m : xi.maps) EXPECT_EQ(m, rows(Ring::rational(), {{5}}, 1));
}

TEST(Morphisms, InvalidGradedMorphismRejected) {
  // g1 ↦ g1 on F1 → free module breaks t²·g1 = 0.
  GradedPresentation free1;
  free1.generators = {{"g1", n(0)}, {"g2", n(1)}};
  GradedMorphism eta{f1(), free1, {{{Scalar(1), n(0), "g1"}}, {}}};
  EXPECT_FALSE(check_graded_morphism(eta).pass());
  EXPECT_THROW(beta_on_morphism(eta), ValidationError);
  GradedMorphism wrong_degree{free1, free1, {{{Scalar(1), n(0), "g2"}}, {}}};
  EXPECT_FALSE(check_graded_morphism(wrong_degree).pass());
}

TEST(Roundtrip, FixtureExamples) {
  EXPECT_TRUE(roundtrip_check(fd(), {n(0), n(1), n(2), n(5)}).pass());
  std::vector<MonoidElement> upto6;
  for (std::uint64_t g = 0; g <= 6; ++g) upto6.push_back(n(g));
  EXPECT_TRUE(roundtrip_check(f1(), upto6).pass());
  std::vector<MonoidElement> tri;
  for (std::uint64_t a = 0; a <= 4; ++a)
    for (std::uint64_t b = 0; a + b <= 4; ++b) tri.push_back(xy(a, b));
  EXPECT_TRUE(roundtrip_check(f2(), tri).pass());
}

TEST(Roundtrip, IntegerDiagrams) {
  std::mt19937_64 rng(53);
  for (const auto& m : {GoodMonoid::nat(), GoodMonoid::grid(2), GoodMonoid::free_word("ab")})
    for (int k = 0; k < 15; ++k) {
      auto d = random_diagram(m, Ring::integer(), rng);
      auto r = roundtrip_check(d, sample_degrees(m, 8, rng));
      EXPECT_TRUE(r.pass()) << r.first_failure();
      auto p = random_presentation(m, Ring::integer(), rng);
      auto r2 = roundtrip_check(p, sample_degrees(m, 8, rng));
      EXPECT_TRUE(r2.pass()) << r2.first_failure();
    }
}
