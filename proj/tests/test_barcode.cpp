#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "persrep/barcode.hpp"
#include "persrep/error.hpp"
#include "persrep/random.hpp"

using namespace persrep;
using namespace fixtures;

TEST(Barcode, RankInvariantExamples) {
  EXPECT_EQ(rank_invariant(f1(), 0, 1), 1u);
  EXPECT_EQ(rank_invariant(f1(), 0, 2), 0u);
  for (std::uint64_t i = 0; i < 5; ++i) EXPECT_EQ(rank_invariant(f1(), i, i), dimension(component(f1(), n(i))));
  EXPECT_THROW(rank_invariant(f2(), 0, 1), Unsupported);
}

TEST(Barcode, Examples) {
  EXPECT_EQ(barcode(f1()), (Barcode{{0, 2, 1}, {1, std::nullopt, 1}}));
  GradedPresentation free3;
  free3.generators = {{"g", n(3)}};
  EXPECT_EQ(barcode(free3), (Barcode{{3, std::nullopt, 1}}));
  GradedPresentation torsion;
  torsion.generators = {{"g", n(0)}};
  torsion.relations = {{n(1), {{Scalar(1), n(1), "g"}}}};
  EXPECT_EQ(barcode(torsion), (Barcode{{0, 1, 1}}));
}

TEST(Barcode, UnsupportedInputs) {
  EXPECT_THROW(barcode(f2()), Unsupported);
  auto z = f1();
  z.ring = Ring::integer();
  EXPECT_THROW(barcode(z), Unsupported);
}

TEST(Barcode, MultiplicitiesMerge) {
  GradedPresentation p;
  p.generators = {{"a", n(1)}, {"b", n(1)}, {"c", n(0)}};
  auto b = barcode(p);
  EXPECT_EQ(b, (Barcode{{0, std::nullopt, 1}, {1, std::nullopt, 2}}));
}

TEST(Barcode, CountsMatchRanksOnRandomInputs) {
  std::mt19937_64 rng(61);
  RandomShape shape;
  shape.max_generators = 4;
  shape.max_relations = 4;
  shape.bounds.max_coordinate = 5;
  for (int k = 0; k < 100; ++k) {
    auto p = random_presentation(GoodMonoid::nat(), Ring::prime_field(k % 2 ? 3 : 2), rng, shape);
    auto b = barcode(p);
    const auto top = stability_bound(p) + 2;
    for (std::uint64_t i = 0; i <= top; ++i)
      for (std::uint64_t j = i; j <= top; ++j)
        EXPECT_EQ(bars_containing(b, i, j), oracle::map_rank(p, n(i), n(j))) << i << "," << j;
  }
}

TEST(Barcode, InvariantUnderPermutation) {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 50; ++k) {
    auto p = random_presentation(GoodMonoid::nat(), Ring::rational(), rng);
    auto q = p;
    std::shuffle(q.generators.begin(), q.generators.end(), rng);
    std::shuffle(q.relations.begin(), q.relations.end(), rng);
    EXPECT_EQ(barcode(p), barcode(q));
  }
}

TEST(Barcode, JsonAndAscii) {
  auto b = barcode(f1());
  EXPECT_EQ(barcode_to_json(b).dump(), R"([{"birth":0,"death":2,"mult":1},{"birth":1,"death":"inf","mult":1}])");
  EXPECT_EQ(barcode_ascii(b, 3), "        0123\n[0,2)   ##..\n[1,inf) .###>\n");
}
