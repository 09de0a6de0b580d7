#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "persrep/error.hpp"
#include "persrep/monoid.hpp"

using namespace persrep;
using fixtures::n;
using fixtures::w;
using fixtures::xy;

TEST(Monoid, ComposeExamples) {
  EXPECT_EQ(GoodMonoid::grid(2).compose(xy(1, 2), xy(0, 3)), xy(1, 5));
  auto ab = GoodMonoid::free_word("ab");
  EXPECT_EQ(ab.compose(w("b"), w("a")), w("ba"));
  for (const auto& m : {GoodMonoid::nat(), GoodMonoid::grid(3), ab, GoodMonoid::qplus()}) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
      auto g = m.random_element(rng);
      EXPECT_EQ(m.compose(m.identity(), g), g);
    }
  }
}

TEST(Monoid, MixedInstancesRejected) {
  EXPECT_THROW(GoodMonoid::grid(2).compose(xy(1, 2), n(3)), InstanceMismatch);
  EXPECT_THROW(GoodMonoid::grid(2).compose(xy(1, 2), MonoidElement::grid({1, 2, 3})), InstanceMismatch);
  EXPECT_THROW(GoodMonoid::free_word("ab").compose(w("a"), w("c")), InstanceMismatch);
}

TEST(Monoid, LeftDivideExamples) {
  auto ab = GoodMonoid::free_word("ab");
  EXPECT_EQ(ab.left_divide(w("a"), w("ba")), w("b"));
  EXPECT_FALSE(ab.left_divide(w("a"), w("ab")));
  EXPECT_EQ(GoodMonoid::grid(2).left_divide(xy(1, 1), xy(3, 1)), xy(2, 0));
  EXPECT_FALSE(GoodMonoid::grid(2).left_divide(xy(1, 2), xy(3, 1)));
  auto q = GoodMonoid::qplus();
  EXPECT_EQ(q.left_divide(MonoidElement::rational(mpq_class(1, 3)), MonoidElement::rational(mpq_class(1, 2))),
            MonoidElement::rational(mpq_class(1, 6)));
}

TEST(Monoid, PlcmExamples) {
  std::vector<MonoidElement> pair{xy(2, 3), xy(5, 1)};
  EXPECT_EQ(GoodMonoid::grid(2).plcm(pair), std::vector{xy(5, 3)});
  auto ab = GoodMonoid::free_word("ab");
  std::vector<MonoidElement> chain{w("a"), w("ba")};
  EXPECT_EQ(ab.plcm(chain), std::vector{w("ba")});
  std::vector<MonoidElement> apart{w("a"), w("b")};
  EXPECT_TRUE(ab.plcm(apart).empty());
  EXPECT_EQ(ab.plcm({}), std::vector{w("")});
  std::vector<MonoidElement> nats{n(3), n(7), n(1)};
  EXPECT_EQ(GoodMonoid::nat().plcm(nats), std::vector{n(7)});
}

TEST(Monoid, WordPlcmMatchesSearch) {
  auto ab = GoodMonoid::free_word("ab");
  auto words = oracle::words_up_to("ab", 3);
  for (const auto& x : words)
    for (const auto& y : words) {
      std::vector<MonoidElement> elems{w(x), w(y)};
      std::vector<std::string> got;
      for (const auto& g : ab.plcm(elems)) got.push_back(g.as_word());
      EXPECT_EQ(got, oracle::brute_plcm("ab", {x, y}, 6)) << x << "," << y;
    }
}

TEST(Monoid, DicksonExamples) {
  auto g = GoodMonoid::grid(2);
  std::vector<MonoidElement> a{xy(1, 2), xy(2, 1), xy(2, 2), xy(3, 0)};
  EXPECT_EQ(dickson_minimal(g, a), (std::vector{xy(1, 2), xy(2, 1), xy(3, 0)}));
  std::vector<MonoidElement> b{xy(0, 0), xy(5, 5)};
  EXPECT_EQ(dickson_minimal(g, b), std::vector{xy(0, 0)});
  std::vector<MonoidElement> words{w("a")};
  EXPECT_THROW(dickson_minimal(GoodMonoid::free_word("ab"), words), Unsupported);
}

TEST(Monoid, AxiomsHoldForShippedInstances) {
  for (const auto& m : {GoodMonoid::nat(), GoodMonoid::grid(3), GoodMonoid::free_word("ab"), GoodMonoid::qplus()}) {
    auto r = check_good_axioms(m, 1000, 11);
    EXPECT_TRUE(r.pass()) << m.describe() << ": " << r.first_failure();
  }
}

TEST(Monoid, CanonicalOrderRefinesDivisibility) {
  for (const auto& m : {GoodMonoid::nat(), GoodMonoid::grid(2), GoodMonoid::free_word("ab"), GoodMonoid::qplus()}) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
      auto a = m.random_element(rng);
      auto b = m.compose(m.random_element(rng), a);
      if (a != b) EXPECT_TRUE(m.canonical_less(a, b));
      EXPECT_FALSE(m.canonical_less(a, a));
    }
  }
}

TEST(Monoid, HasseExamples) {
  std::vector<MonoidElement> chain{n(0), n(1), n(2)};
  EXPECT_EQ(hasse_dot(GoodMonoid::nat(), chain),
            "digraph hasse {\n  n0 [label=\"0\"];\n  n1 [label=\"1\"];\n  n2 [label=\"2\"];\n  n0 -> n1;\n  n1 -> n2;\n}\n");

  std::vector<MonoidElement> square{xy(0, 0), xy(1, 0), xy(0, 1), xy(1, 1)};
  auto dot = hasse_dot(GoodMonoid::grid(2), square);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++edges;
  EXPECT_EQ(edges, 4u);
  EXPECT_EQ(dot.find("n0 -> n3"), std::string::npos);

  std::vector<MonoidElement> tree{w(""), w("a"), w("b"), w("aa"), w("ba")};
  auto t = hasse_dot(GoodMonoid::free_word("ab"), tree);
  for (const char* e : {"n0 -> n1;", "n0 -> n2;", "n1 -> n3;", "n1 -> n4;"}) EXPECT_NE(t.find(e), std::string::npos) << e;
  EXPECT_EQ(t.find("n2 -> "), std::string::npos);
}

TEST(Monoid, FreeWordAlphabetValidated) {
  EXPECT_THROW(GoodMonoid::free_word("aa"), Error);
  EXPECT_THROW(GoodMonoid::free_word(""), Error);
}
