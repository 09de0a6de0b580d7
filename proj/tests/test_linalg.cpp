#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "persrep/error.hpp"
#include "persrep/linalg.hpp"
#include "persrep/random.hpp"

using namespace persrep;
using fixtures::rows;

namespace {

// gcd of all k×k minors, by enumeration.
mpz_class minor_gcd(const Matrix& m, std::size_t k) {
  mpz_class g = 0;
  std::vector<std::size_t> rs(m.rows()), cs(m.cols());
  auto choose = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask)
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) == k) {
        out.emplace_back();
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) out.back().push_back(i);
      }
    return out;
  };
  for (const auto& ri : choose(m.rows(), k))
    for (const auto& ci : choose(m.cols(), k)) {
      std::vector<oracle::Row> sub;
      for (auto r : ri) {
        sub.emplace_back();
        for (auto c : ci) sub.back().push_back(m(r, c));
      }
      // Leibniz expansion keeps this independent of elimination.
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      mpz_class det = 0;
      do {
        mpz_class term = 1;
        int inversions = 0;
        for (std::size_t a = 0; a < k; ++a) {
          term *= sub[a][perm[a]].get_num();
          for (std::size_t b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
        }
        det += inversions % 2 ? -term : term;
      } while (std::next_permutation(perm.begin(), perm.end()));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    }
  return g;
}

}  // namespace

TEST(Ring, PrimeFieldArithmetic) {
  auto f5 = Ring::prime_field(5);
  EXPECT_EQ(f5.normalize(Scalar(7)), Scalar(2));
  EXPECT_EQ(f5.normalize(Scalar(-1)), Scalar(4));
  EXPECT_EQ(f5.mul(f5.inv(Scalar(2)), Scalar(2)), Scalar(1));
  EXPECT_EQ(f5.parse("1/2"), Scalar(3));
  EXPECT_THROW(Ring::prime_field(4), ValidationError);
  EXPECT_THROW(Ring::integer().parse("1/2"), Error);
  EXPECT_THROW(f5.inv(Scalar(0)), Error);
}

TEST(Linalg, RankExamples) {
  EXPECT_EQ(rank(Matrix::identity(Ring::rational(), 3)), 3u);
  EXPECT_EQ(rank(Matrix(Ring::prime_field(2), 2, 4)), 0u);
  EXPECT_EQ(rank(rows(Ring::rational(), {{1, 2}, {2, 4}}, 2)), 1u);
  EXPECT_EQ(rank(rows(Ring::prime_field(2), {{1, 1}, {1, 1}, {0, 1}}, 2)), 2u);
  EXPECT_THROW(rank(Matrix::identity(Ring::integer(), 2)), Unsupported);
}

TEST(Linalg, KernelExamples) {
  EXPECT_EQ(kernel_basis(Matrix::identity(Ring::rational(), 2)).rows(), 0u);
  auto k2 = kernel_basis(rows(Ring::prime_field(2), {{1, 1}}, 2));
  ASSERT_EQ(k2.rows(), 1u);
  EXPECT_EQ(k2(0, 0), Scalar(1));
  EXPECT_EQ(k2(0, 1), Scalar(1));
  auto m = rows(Ring::rational(), {{1, 2, 3}}, 3);
  auto k = kernel_basis(m);
  EXPECT_EQ(k.rows(), 2u);
  EXPECT_TRUE((m * k.transpose()).is_zero());
  EXPECT_EQ(rank(k), 2u);
}

TEST(Linalg, KernelRandomProperty) {
  std::mt19937_64 rng(17);
  for (const auto& r : {Ring::rational(), Ring::prime_field(2), Ring::prime_field(7)})
    for (int k = 0; k < 50; ++k) {
      auto m = random_matrix(r, 1 + rng() % 4, 1 + rng() % 5, rng);
      auto ker = kernel_basis(m);
      EXPECT_EQ(ker.rows(), m.cols() - oracle::rank([&] {
                              std::vector<oracle::Row> rs;
                              for (std::size_t i = 0; i < m.rows(); ++i) rs.emplace_back(m.row(i).begin(), m.row(i).end());
                              return rs;
                            }(), oracle::modulus(r)));
      if (ker.rows()) EXPECT_TRUE((m * ker.transpose()).is_zero());
    }
}

TEST(Linalg, SmithExamples) {
  auto z = Ring::integer();
  auto s = smith_normal_form(rows(z, {{2, 0}, {0, 3}}, 2));
  EXPECT_EQ(s.factors, (std::vector<mpz_class>{1, 6}));
  EXPECT_EQ(smith_normal_form(Matrix::identity(z, 3)).factors, (std::vector<mpz_class>{1, 1, 1}));
  EXPECT_TRUE(smith_normal_form(Matrix(z, 2, 3)).factors.empty());
  EXPECT_THROW(smith_normal_form(Matrix::identity(Ring::rational(), 2)), Unsupported);
}

TEST(Linalg, SmithMatchesMinorGcds) {
  std::mt19937_64 rng(23);
  auto z = Ring::integer();
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
  for (int k = 0; k < 60; ++k) {
    Matrix m(z, dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    auto s = smith_normal_form(m);
    // d₁⋯d_k equals the gcd of k×k minors.
    mpz_class prod = 1;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
      if (i < s.factors.size()) prod *= s.factors[i];
      else prod = 0;
      EXPECT_EQ(prod, minor_gcd(m, i + 1)) << m.to_string();
    }
    for (std::size_t i = 1; i < s.factors.size(); ++i) EXPECT_EQ(s.factors[i] % s.factors[i - 1], 0);
    Matrix diag(z, m.rows(), m.cols());
    for (std::size_t i = 0; i < s.factors.size(); ++i) diag(i, i) = Scalar(s.factors[i]);
    EXPECT_EQ(s.left * m * s.right, diag);
    EXPECT_EQ(abs(determinant(s.left)), Scalar(1));
    EXPECT_EQ(abs(determinant(s.right)), Scalar(1));
  }
}

TEST(Linalg, DeterminantExact) {
  EXPECT_EQ(determinant(rows(Ring::integer(), {{2, 1}, {7, 4}}, 2)), Scalar(1));
  EXPECT_EQ(determinant(rows(Ring::prime_field(3), {{2, 1}, {1, 2}}, 2)), Scalar(0));
  EXPECT_EQ(determinant(rows(Ring::rational(), {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}, 3)), Scalar(-3));
}

TEST(Linalg, PresentationIsoExamples) {
  auto q = Ring::rational();
  auto z = Ring::integer();
  EXPECT_TRUE(presentation_iso(FpPresentation(q, 2, rows(q, {{1, 0}}, 2)), FpPresentation(q, 1)));
  EXPECT_FALSE(presentation_iso(FpPresentation(z, 1, rows(z, {{2}}, 1)), FpPresentation(z, 1, rows(z, {{3}}, 1))));
  EXPECT_TRUE(
      presentation_iso(FpPresentation(z, 1, rows(z, {{2}}, 1)), FpPresentation(z, 2, rows(z, {{2, 0}, {0, 1}}, 2))));
  EXPECT_THROW(presentation_iso(FpPresentation(q, 1), FpPresentation(z, 1)), Error);
}

TEST(Linalg, AbelianInvariants) {
  auto z = Ring::integer();
  auto inv = abelian_invariants(FpPresentation(z, 3, rows(z, {{2, 0, 0}, {0, 4, 0}}, 3)));
  EXPECT_EQ(inv.free_rank, 1u);
  EXPECT_EQ(inv.torsion, (std::vector<mpz_class>{2, 4}));
}

TEST(Linalg, RowSpanOverIntegers) {
  auto z = Ring::integer();
  auto m = rows(z, {{2, 0}, {0, 3}}, 2);
  std::vector<Scalar> in{4, 3}, out{1, 0};
  EXPECT_TRUE(in_row_span(m, in));
  EXPECT_FALSE(in_row_span(m, out));
}

TEST(Linalg, InducedMaps) {
  auto q = Ring::rational();
  FpPresentation src(q, 2);
  FpPresentation dst(q, 2, rows(q, {{1, 0}}, 2));
  EXPECT_EQ(induced_rank(src, dst, Matrix::identity(q, 2)), 1u);
  EXPECT_FALSE(induced_is_iso(src, dst, Matrix::identity(q, 2)));
  auto z = Ring::integer();
  // ×2 on ℤ is injective but not onto.
  EXPECT_FALSE(induced_is_iso(FpPresentation(z, 1), FpPresentation(z, 1), rows(z, {{2}}, 1)));
  EXPECT_TRUE(induced_is_iso(FpPresentation(z, 1), FpPresentation(z, 1), rows(z, {{-1}}, 1)));
}
