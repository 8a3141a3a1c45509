#include <gtest/gtest.h>

#include "test_support.hpp"
#include "toric/dilation.hpp"
#include "toric/examples.hpp"

using namespace toric;
using toric::testing::random_nonzero;
using toric::testing::random_vector;
using toric::testing::uniform;

namespace {

Cone random_pointed(std::size_t rank) {
  return toric::testing::random_pointed_cone(rank, 1, static_cast<long>(rank) + 2, 2);
}

std::size_t face_rank(const Cone& sigma, const LatticeVector& m) { return face_of_weight(sigma, m).equations().size(); }

QVector q(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Theta, TauReferenceImage) {
  const Cone tau = examples::tau();
  auto img = theta_image(tau, LatticeVector{1, 0, 0}, 1, 2);
  EXPECT_EQ(img.weight, (LatticeVector{2, 0, 0}));
  EXPECT_EQ(img.space, Subspace::span(3, {q({1, 0, 0}), q({0, 0, 1})}));
  EXPECT_TRUE(omega_image_weight(tau, LatticeVector{2, 0, 0}, 1).space.contains(img.space));
  EXPECT_EQ(omega_image_weight(tau, LatticeVector{2, 0, 0}, 1).dim(), 3u);
}

TEST(Theta, TrivialFactorsAndDegreeZero) {
  const Cone tau = examples::tau();
  for (const auto& m : {LatticeVector{1, 0, 0}, LatticeVector{0, 1, 2}, LatticeVector{3, 1, -1}}) {
    EXPECT_EQ(theta_image(tau, m, 1, 1), omega_image_weight(tau, m, 1));
    auto zero_degree = theta_image(tau, m, 0, 5);
    EXPECT_EQ(zero_degree.weight, Integer(5) * m);
    EXPECT_EQ(zero_degree.dim(), 1u);
  }
  EXPECT_THROW(theta_image(tau, LatticeVector{-1, 0, 0}, 1, 2), Error);
  EXPECT_THROW(theta_image(tau, LatticeVector{1, 0, 0}, 1, 0), Error);
}

TEST(Theta, ScalingLawOnRandomInstances) {
  int checked = 0;
  while (checked < 120) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 3));
    Cone c = random_pointed(n);
    auto m = random_vector(n, 3);
    if (!dual_cone(c).contains(m)) continue;
    const std::size_t p = static_cast<std::size_t>(uniform(0, static_cast<long>(n)));
    const long factor = uniform(1, 5);
    auto check = scaling_law_check(c, m, p, factor);
    EXPECT_TRUE(check.ok()) << c.to_string() << " m=" << m.to_string() << " p=" << p << " c=" << factor;
    ++checked;
  }
}

TEST(Theta, TildePiecesAreDilationInvariant) {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 3));
    Cone c = random_pointed(n);
    auto m = random_vector(n, 3);
    for (std::size_t p = 0; p <= n; ++p) EXPECT_TRUE(tilde_theta_iso_check(c, m, p, uniform(1, 4)));
  }
}

TEST(Colimit, TauReferenceTrace) {
  auto t = colimit_trace(examples::tau(), LatticeVector{1, 0, 0}, 1, {2, 2, 2});
  EXPECT_EQ(t.dims(), (std::vector<std::size_t>{2, 3, 3}));
  EXPECT_EQ(t.stabilized_at, 1u);
  EXPECT_EQ(t.tilde.dim(), 3u);
  EXPECT_EQ(t.weights.back(), (LatticeVector{4, 0, 0}));
}

TEST(Colimit, ShortSequenceIsReportedNotTruncated) {
  auto t = dilation_chain(examples::tau(), LatticeVector{1, 0, 0}, 1, {2});
  EXPECT_FALSE(t.stabilized_at.has_value());
  try {
    colimit_trace(examples::tau(), LatticeVector{1, 0, 0}, 1, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotStabilized);
  }
  EXPECT_THROW(dilation_chain(examples::tau(), LatticeVector{1, 0, 0}, 1, {2, 1}), Error);
}

TEST(Colimit, SmoothConesAreStableImmediately) {
  const Cone c = examples::orthant(3);
  for (const auto& m : weight_box(3, 2)) {
    if (!dual_cone(c).contains(m)) continue;
    for (std::size_t p = 0; p <= 3; ++p) EXPECT_EQ(colimit_trace(c, m, p).stabilized_at, 0u);
  }
}

TEST(Colimit, ZeroWeightIsFixed) {
  for (const auto& c : {examples::tau(), examples::a1(), examples::huge_sigma1()})
    for (std::size_t p = 0; p <= c.rank(); ++p) {
      auto t = colimit_trace(c, LatticeVector::zero(c.rank()), p);
      EXPECT_EQ(t.stabilized_at, 0u);
      EXPECT_EQ(t.chain.front().space, t.tilde.space);
    }
}

TEST(Colimit, RandomCorpusStabilizesToFaceBinomial) {
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 3));
    Cone c = random_pointed(n);
    for (const auto& m : weight_box(n, n == 3 ? 1 : 2)) {
      if (!dual_cone(c).contains(m)) continue;
      for (std::size_t p = 0; p <= n; ++p) {
        auto t = dilation_chain(c, m, p);
        ASSERT_TRUE(t.stabilized_at.has_value()) << c.to_string() << " m=" << m.to_string() << " p=" << p;
        EXPECT_LE(*t.stabilized_at, 6u);
        EXPECT_EQ(t.chain[*t.stabilized_at].dim(), binomial(face_rank(c, m), p));
        for (std::size_t i = 0; i + 1 < t.chain.size(); ++i)
          EXPECT_TRUE(t.chain[i + 1].space.contains(t.chain[i].space));
        if (!m.is_zero() && face_of_weight(c, m).is_zero())
          EXPECT_EQ(t.chain.back().dim(), binomial(n, p));
      }
    }
  }
}

TEST(HochschildColimit, QuadricReference) {
  auto r = hh_colimit_check(examples::a1(), LatticeVector{1, 0}, 1, {2, 2});
  EXPECT_EQ(r.tilde_dim, 2u);
  ASSERT_TRUE(r.stabilized_at.has_value());
  EXPECT_EQ(r.hochschild_dims.back(), 2u);
  for (std::size_t i = 0; i < r.hochschild_dims.size(); ++i) EXPECT_GE(r.hochschild_dims[i], r.image_dims[i]);
}

TEST(HochschildColimit, DegreeZeroAndSmoothCases) {
  auto r0 = hh_colimit_check(examples::a1(), LatticeVector{1, 1}, 0, {2, 2});
  EXPECT_EQ(r0.hochschild_dims, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(r0.stabilized_at, 0u);
  auto rs = hh_colimit_check(examples::orthant(2), LatticeVector{1, 2}, 1, {2, 2});
  EXPECT_EQ(rs.stabilized_at, 0u);
  EXPECT_EQ(rs.hochschild_dims.front(), 2u);
}
