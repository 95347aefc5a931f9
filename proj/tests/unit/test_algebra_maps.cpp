#include <gtest/gtest.h>

#include "qmetric/algebra_maps.hpp"
#include "qmetric/error.hpp"
#include "qmetric/linalg.hpp"
#include "support/oracles.hpp"

using namespace qmetric;
using qmetric::testing::block_assembly_embed;

namespace {

std::vector<DivisorPair> pairs_of(std::size_t n) {
  std::vector<DivisorPair> out;
  for (std::size_t k : divisors(n)) out.emplace_back(k, n);
  return out;
}

double min_eigenvalue(const Matrix& m) {
  return eigvalsh(HermitianMatrix(m, 1e-9 * (1.0 + max_abs(m)))).front();
}

}  // namespace

TEST(DivisorPair, Validation) {
  EXPECT_NO_THROW(DivisorPair(2, 4));
  EXPECT_NO_THROW(DivisorPair(1, 7));
  EXPECT_NO_THROW(DivisorPair(7, 7));
  EXPECT_THROW(DivisorPair(2, 5), ValidationError);
  EXPECT_THROW(DivisorPair(0, 4), ValidationError);
  EXPECT_THROW(DivisorPair(8, 4), ValidationError);
  EXPECT_EQ(divisors(12), (std::vector<std::size_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(proper_divisors(12), (std::vector<std::size_t>{2, 3, 4, 6}));
  EXPECT_TRUE(proper_divisors(7).empty());
}

TEST(Embed, Examples) {
  const DivisorPair p24(2, 4);
  Matrix expected(4, 4);
  expected(0, 1) = 1.0;
  expected(2, 3) = 1.0;
  EXPECT_EQ(embed(p24, matrix_unit(2, 1, 2)), expected);
  for (std::size_t n : {4u, 6u, 12u})
    for (const auto& pair : pairs_of(n)) EXPECT_EQ(embed(pair, Matrix::identity(pair.k())), Matrix::identity(n));

  const auto a = random_gaussian(3, 3, 42);
  const auto e = embed(DivisorPair(3, 6), a);
  EXPECT_EQ(e(4, 5), a(1, 2));  // entry (5,6) = a_{2,3} in 1-based terms
  EXPECT_EQ(e, block_assembly_embed(3, 6, a));
  EXPECT_THROW(embed(p24, Matrix(3, 3)), DimensionError);
}

TEST(Embed, IsometricMultiplicativeStarPreserving) {
  for (std::size_t n : {4u, 6u, 8u, 12u}) {
    for (const auto& pair : pairs_of(n)) {
      for (std::uint64_t s = 0; s < 5; ++s) {
        const auto a = random_gaussian(pair.k(), pair.k(), 10 * n + s);
        const auto b = random_gaussian(pair.k(), pair.k(), 1000 + 10 * n + s);
        EXPECT_EQ(embed(pair, a), block_assembly_embed(pair.k(), n, a));
        EXPECT_NEAR(operator_norm(embed(pair, a)), operator_norm(a), 1e-10);
        EXPECT_LE(max_abs_diff(embed(pair, a * b), embed(pair, a) * embed(pair, b)), 1e-12);
        EXPECT_EQ(embed(pair, adjoint(a)), adjoint(embed(pair, a)));
      }
    }
  }
}

TEST(NormalizedTrace, Examples) {
  EXPECT_EQ(normalized_trace(Matrix::diagonal({1.0, 0.0})), Complex(0.5));
  EXPECT_EQ(normalized_trace(Matrix::identity(9)), Complex(1.0));
  for (std::size_t n : {4u, 6u, 8u, 12u}) {
    for (const auto& pair : pairs_of(n)) {
      const auto a = random_gaussian(pair.k(), pair.k(), 70 + n + pair.k());
      EXPECT_LE(std::abs(normalized_trace(embed(pair, a)) - normalized_trace(a)), 1e-12);
    }
  }
  EXPECT_EQ(normalized_trace(random_hermitian(5, 2).matrix()).imag(), 0.0);
}

TEST(HsInner, Examples) {
  EXPECT_EQ(hs_inner(matrix_unit(2, 1, 1), matrix_unit(2, 2, 2)), Complex(0.0));
  for (std::size_t k : {1u, 2u, 5u})
    for (std::size_t q = 1; q <= k; ++q)
      EXPECT_EQ(hs_inner(matrix_unit(k, q, q), matrix_unit(k, q, q)), Complex(1.0 / static_cast<double>(k)));
  const auto a = random_gaussian(4, 4, 3), b = random_gaussian(4, 4, 4);
  EXPECT_GT(hs_inner(a, a).real(), 0.0);
  EXPECT_EQ(hs_inner(Matrix(4, 4), Matrix(4, 4)), Complex(0.0));
  EXPECT_LE(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))), 1e-14);
  EXPECT_LE(std::abs(hs_inner(a, b) - normalized_trace(adjoint(b) * a)), 1e-14);
  EXPECT_THROW(hs_inner(a, Matrix(3, 3)), DimensionError);
}

TEST(BasisB, Examples) {
  const auto b1 = basis_B(DivisorPair(1, 5));
  ASSERT_EQ(b1.size(), 1u);
  EXPECT_EQ(b1[0], Matrix::identity(5));
  EXPECT_EQ(basis_B(DivisorPair(3, 6)).size(), 9u);
  const auto b = basis_B(DivisorPair(2, 4));
  ASSERT_EQ(b.size(), 4u);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Complex ip = hs_inner(b[i], b[j]);
      if (i == j) EXPECT_EQ(ip, Complex(0.5));
      else EXPECT_EQ(ip, Complex(0.0));
    }
  }
}

TEST(CondExpectation, Examples) {
  EXPECT_EQ(cond_expectation(DivisorPair(1, 2), Matrix::diagonal({1.0, 0.0})), Matrix::diagonal({0.5, 0.5}));
  const DivisorPair p24(2, 4);
  const auto w = Matrix::diagonal({2.0, 0.0, 0.0, 0.0});
  const auto expected = Matrix::diagonal({1.0, 0.0, 1.0, 0.0});
  EXPECT_EQ(cond_expectation(p24, w), expected);
  EXPECT_EQ(cond_expectation_blockmean(p24, w), expected);
  EXPECT_EQ(cond_expectation_basis(p24, w), expected);
  EXPECT_EQ(cond_expectation_blockmean(p24, Matrix::identity(4)), Matrix::identity(4));

  const auto b = random_gaussian(3, 3, 5);
  const DivisorPair p36(3, 6);
  EXPECT_LE(max_abs_diff(cond_expectation(p36, embed(p36, b)), embed(p36, b)), 1e-15);

  const auto a = random_gaussian(5, 5, 6);
  EXPECT_LE(max_abs_diff(cond_expectation(DivisorPair(1, 5), a), cond_expectation_basis(DivisorPair(1, 5), a)), 1e-14);
  EXPECT_EQ(cond_expectation(DivisorPair(5, 5), a), a);
  EXPECT_THROW(cond_expectation(p24, a), DimensionError);
  EXPECT_THROW(cond_expectation_basis(p24, a), DimensionError);
  EXPECT_THROW(cond_expectation_blockmean(p24, a), DimensionError);
}

// P_{k,n}(a) = (k/n) sum_{p,q} (sum_l a_{p+kl, q+kl}) pi(E_{k,p,q}), written out term by term.
TEST(CondExpectation, MatchesMatrixUnitExpansion) {
  const DivisorPair pair(2, 6);
  const auto a = random_gaussian(6, 6, 31);
  Matrix expansion(6, 6);
  for (std::size_t p = 1; p <= 2; ++p) {
    for (std::size_t q = 1; q <= 2; ++q) {
      Complex s{};
      for (std::size_t l = 0; l < 3; ++l) s += a(p - 1 + 2 * l, q - 1 + 2 * l);
      expansion += embed(pair, matrix_unit(2, p, q)) * (s * (2.0 / 6.0));
    }
  }
  EXPECT_LE(max_abs_diff(cond_expectation(pair, a), expansion), 1e-14);
}

TEST(CondExpectation, ThreeFormsAgree) {
  for (std::size_t n : {4u, 6u, 8u, 12u}) {
    for (const auto& pair : pairs_of(n)) {
      for (std::uint64_t s = 0; s < 10; ++s) {
        const auto a = random_gaussian(n, n, 5000 + 100 * n + 10 * pair.k() + s);
        const auto p = cond_expectation(pair, a);
        EXPECT_LE(max_abs_diff(p, cond_expectation_blockmean(pair, a)), 1e-13);
        EXPECT_LE(max_abs_diff(p, cond_expectation_basis(pair, a)), 1e-13);
      }
    }
  }
}

TEST(CondExpectation, Axioms) {
  for (std::size_t n : {4u, 6u, 8u}) {
    for (const auto& pair : pairs_of(n)) {
      for (std::uint64_t s = 0; s < 5; ++s) {
        const std::uint64_t seed = 9000 + 100 * n + 10 * pair.k() + s;
        const auto a = random_gaussian(n, n, seed);
        const auto b = embed(pair, random_gaussian(pair.k(), pair.k(), seed + 1));
        const auto c = embed(pair, random_gaussian(pair.k(), pair.k(), seed + 2));
        const auto pa = cond_expectation(pair, a);

        EXPECT_GE(min_eigenvalue(cond_expectation(pair, a * adjoint(a))), -1e-9);
        EXPECT_LE(operator_norm(pa), operator_norm(a) + 1e-9);
        EXPECT_LE(max_abs_diff(cond_expectation(pair, b * a * c), b * pa * c), 1e-12);
        EXPECT_LE(max_abs_diff(cond_expectation(pair, b), b), 1e-12);
        EXPECT_LE(max_abs_diff(cond_expectation(pair, pa), pa), 1e-12);
        EXPECT_LE(std::abs(normalized_trace(pa) - normalized_trace(a)), 1e-12);
        EXPECT_LE(max_abs_diff(cond_expectation(DivisorPair(1, n), pa), cond_expectation(DivisorPair(1, n), a)), 1e-12);
        for (const auto& unit : basis_B(pair)) EXPECT_LE(std::abs(hs_inner(a - pa, unit)), 1e-12);
        // Output lies in the image of embed: equal to the embedding of its first block.
        EXPECT_EQ(pa, embed(pair, diagonal_blocks(pair, pa).blocks[0]));
      }
    }
  }
}

TEST(CondExpectation, HermitianPreserving) {
  const auto h = random_hermitian(6, 1);
  for (const auto& pair : pairs_of(6)) {
    EXPECT_EQ(hermiticity_defect(cond_expectation(pair, h.matrix())), 0.0);
    EXPECT_NO_THROW(cond_expectation(pair, h));
  }
}

TEST(BlockDecomposition, CountsAndShapes) {
  const auto d = diagonal_blocks(DivisorPair(2, 6), random_gaussian(6, 6, 2));
  ASSERT_EQ(d.blocks.size(), 3u);
  for (const auto& b : d.blocks) EXPECT_EQ(b.rows(), 2u);
}
