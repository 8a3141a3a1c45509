#include <gtest/gtest.h>

#include "test_support.hpp"
#include "toric/linalg.hpp"

using namespace toric;
using toric::testing::random_matrix;
using toric::testing::uniform;

namespace {

QMatrix random_q(std::size_t rows, std::size_t cols, long bound) {
  return QMatrix::from_integer(random_matrix(rows, cols, bound));
}

}  // namespace

TEST(RowReduce, RankAgreesWithSmithForm) {
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_matrix(static_cast<std::size_t>(uniform(1, 5)), static_cast<std::size_t>(uniform(1, 5)),
                           trial % 2 ? 1 : 4);
    EXPECT_EQ(rank(QMatrix::from_integer(a)), smith_normal_form(a).rank());
  }
}

TEST(Subspace, EqualityIsCanonical) {
  auto a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  auto b = Subspace::span(3, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_TRUE(a.contains(QVector{3, 5, 2}));
  EXPECT_FALSE(a.contains(QVector{1, 0, 0}));
}

TEST(Subspace, KernelImageDimensions) {
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = static_cast<std::size_t>(uniform(1, 4));
    const std::size_t c = static_cast<std::size_t>(uniform(1, 5));
    QMatrix a = random_q(r, c, trial % 3 ? 2 : 1);
    Subspace k = kernel(a);
    Subspace im = image(a);
    EXPECT_EQ(k.dim() + im.dim(), c);
    for (const auto& v : k.basis_vectors()) {
      for (const auto& x : a.apply(v)) EXPECT_EQ(x, 0);
    }
  }
}

TEST(Subspace, IntersectionAndSumDimensions) {
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<QVector> va, vb;
    for (long i = uniform(0, 3); i > 0; --i) va.push_back(random_q(1, 4, 2).row(0));
    for (long i = uniform(0, 3); i > 0; --i) vb.push_back(random_q(1, 4, 2).row(0));
    auto a = Subspace::span(4, va);
    auto b = Subspace::span(4, vb);
    auto s = a + b;
    auto i = a.intersect(b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    EXPECT_TRUE(s.contains(a));
    EXPECT_EQ(a.annihilator().dim(), 4 - a.dim());
  }
}

TEST(Subspace, CoordinatesReconstruct) {
  auto s = Subspace::span(3, {{1, 2, 3}, {0, 1, 1}});
  QVector v{2, 7, 9};
  auto c = s.coordinates(v);
  QVector back(3);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < 3; ++j) back[j] += c[i] * s.basis()(i, j);
  EXPECT_EQ(back, v);
  EXPECT_THROW(s.coordinates(QVector{1, 0, 0}), Error);
}

TEST(Complex, CohomologyOfShortExactPieces) {
  // Q -> Q^2 -> Q, x -> (x, x), (a, b) -> a - b: exact.
  Complex c;
  c.dims = {1, 2, 1};
  c.d.push_back(QMatrix::from_rows(1, {{1}, {1}}));
  c.d.push_back(QMatrix::from_rows(2, {{1, -1}}));
  EXPECT_TRUE(c.squares_to_zero());
  EXPECT_EQ(c.cohomology_dims(), (std::vector<std::size_t>{0, 0, 0}));

  Complex two_chart;  // the P^1 structure-sheaf shape at weight 0: Q^2 -> Q
  two_chart.dims = {2, 1};
  two_chart.d.push_back(QMatrix::from_rows(2, {{-1, 1}}));
  EXPECT_EQ(two_chart.cohomology_dims(), (std::vector<std::size_t>{1, 0}));
}

TEST(DoubleComplex, TotalSquaresToZero) {
  // K^{q,j} = Q for q, j in {0,1}, all maps identity: total complex is exact.
  DoubleComplex k;
  k.dims = {{1, 1}, {1, 1}};
  QMatrix one = QMatrix::identity(1);
  k.horizontal = {{one, one}, {}};
  k.vertical = {{one}, {one}};
  Complex t = k.total();
  EXPECT_EQ(t.dims, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_TRUE(t.squares_to_zero());
  EXPECT_EQ(t.cohomology_dims(), (std::vector<std::size_t>{0, 0, 0}));
}

TEST(CochainMap, InducedRankOfIdentity) {
  Complex c;
  c.dims = {2, 1};
  c.d.push_back(QMatrix::from_rows(2, {{1, 1}}));
  CochainMap id{QMatrix::identity(2), QMatrix::identity(1)};
  EXPECT_TRUE(is_cochain_map(id, c, c));
  EXPECT_EQ(induced_rank(id, c, c, 0), 1u);
  EXPECT_EQ(induced_rank(id, c, c, 1), 0u);
}
