#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "test_support.hpp"
#include "toric/cech.hpp"
#include "toric/examples.hpp"

using namespace toric;
using toric::testing::random_vector;

namespace {

using Dims = std::vector<std::size_t>;

Dims zeros(std::size_t n) { return Dims(n, 0); }

// Global sections as the intersection of the chart sections inside ∧^p M.
std::size_t global_sections(const Fan& f, const SheafSpec& sheaf, const LatticeVector& m) {
  auto charts = f.maximal_cones();
  Subspace s = sections(sheaf, charts[0], m).space;
  for (std::size_t i = 1; i < charts.size(); ++i) s = s.intersect(sections(sheaf, charts[i], m).space);
  return s.dim();
}

}  // namespace

TEST(SheafSpec, ParsesAndPrints) {
  EXPECT_EQ(SheafSpec::parse("structure"), SheafSpec::structure());
  EXPECT_EQ(SheafSpec::parse("tilde:2"), SheafSpec::tilde(2));
  EXPECT_EQ(SheafSpec::parse("image:1").to_string(), "image:1");
  EXPECT_EQ(sections(SheafSpec::tilde(0), examples::tau(), LatticeVector{1, 0, 0}),
            sections(SheafSpec::structure(), examples::tau(), LatticeVector{1, 0, 0}));
  for (const char* bad : {"tilde", "tilde:", "image:x", "forms:1", ""}) EXPECT_THROW(SheafSpec::parse(bad), Error);
}

TEST(CechCohomology, ProjectiveLine) {
  const Fan p1 = examples::projective_line();
  EXPECT_EQ(cech_cohomology(p1, SheafSpec::structure(), LatticeVector{0}), (Dims{1, 0}));
  EXPECT_EQ(cech_cohomology(p1, SheafSpec::structure(), LatticeVector{2}), zeros(2));
  EXPECT_EQ(cech_cohomology(p1, SheafSpec::tilde(1), LatticeVector{0}), (Dims{0, 1}));
  EXPECT_EQ(cech_cohomology(p1, SheafSpec::tilde(1), LatticeVector{-1}), zeros(2));
}

TEST(CechCohomology, ProjectivePlaneHodgeDiagonal) {
  const Fan p2 = examples::projective_plane();
  for (std::size_t p = 0; p <= 2; ++p) {
    Dims expected = zeros(3);
    expected[p] = 1;
    EXPECT_EQ(cech_cohomology(p2, SheafSpec::tilde(p), LatticeVector{0, 0}), expected);
    for (const auto& m : weight_box(2, 2))
      if (!m.is_zero()) EXPECT_EQ(cech_cohomology(p2, SheafSpec::tilde(p), m), zeros(3)) << m.to_string();
  }
}

TEST(CechCohomology, AffineFansHaveOnlyGlobalSections) {
  for (const auto& c : {examples::tau(), examples::a1(), examples::huge_sigma1()}) {
    Fan f = affine_fan(c);
    for (int k = 0; k < 10; ++k) {
      auto m = random_vector(c.rank(), 2);
      for (auto sheaf : {SheafSpec::structure(), SheafSpec::tilde(1), SheafSpec::image(1), SheafSpec::tilde(2)})
        EXPECT_EQ(cech_cohomology(f, sheaf, m), (Dims{sections(sheaf, c, m).dim()}));
    }
  }
}

TEST(CechCohomology, GlobalSectionsAreChartIntersections) {
  for (const Fan& f : {examples::huge(), examples::projective_plane(), resolve(examples::huge()).fan}) {
    for (int k = 0; k < 15; ++k) {
      auto m = random_vector(f.rank(), 2);
      for (auto sheaf : {SheafSpec::structure(), SheafSpec::tilde(1), SheafSpec::image(1), SheafSpec::tilde(2)})
        EXPECT_EQ(cech_cohomology(f, sheaf, m)[0], global_sections(f, sheaf, m)) << m.to_string();
    }
  }
}

TEST(CechCohomology, DifferentialSquaresToZero) {
  CechCover cover(resolve(examples::huge()).fan);
  for (int k = 0; k < 10; ++k) {
    auto m = random_vector(3, 2);
    for (auto sheaf : {SheafSpec::structure(), SheafSpec::tilde(1), SheafSpec::image(2)})
      EXPECT_TRUE(cover.complex(sheaf, m).complex.squares_to_zero());
  }
}

TEST(CechCohomology, IndependentOfChartOrder) {
  const Fan f = resolve(examples::huge()).fan;
  const std::size_t k = f.maximal_cones().size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> reversed(order.rbegin(), order.rend());
  std::vector<std::size_t> rotated = order;
  std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  CechCover a(f), b(f, reversed), c(f, rotated);
  for (const auto& m : weight_box(3, 1))
    for (auto sheaf : {SheafSpec::structure(), SheafSpec::tilde(1), SheafSpec::tilde(2)}) {
      auto h = a.complex(sheaf, m).complex.cohomology_dims();
      EXPECT_EQ(h, b.complex(sheaf, m).complex.cohomology_dims());
      EXPECT_EQ(h, c.complex(sheaf, m).complex.cohomology_dims());
    }
  EXPECT_THROW(CechCover(f, {0, 0}), Error);
}

TEST(CechCohomology, RejectsInvalidFans) {
  auto bad = Fan::from_cones(2, {Cone::from_generators(2, {LatticeVector{1, 0}, LatticeVector{0, 1}}),
                                 Cone::from_generators(2, {LatticeVector{1, 2}, LatticeVector{2, 1}})});
  try {
    cech_cohomology(bad, SheafSpec::structure(), LatticeVector{0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidFan);
  }
}

TEST(HyperCohomology, TruncationZeroIsStructureSheaf) {
  for (const Fan& f : {examples::huge(), examples::projective_plane()})
    for (int k = 0; k < 8; ++k) {
      auto m = random_vector(f.rank(), 2);
      EXPECT_EQ(hyper_cohomology_truncated(f, 0, m), cech_cohomology(f, SheafSpec::structure(), m));
    }
}

TEST(HyperCohomology, ProjectiveLineTruncationOne) {
  EXPECT_EQ(hyper_cohomology_truncated(examples::projective_line(), 1, LatticeVector{0}), (Dims{1, 0, 1}));
}

TEST(HyperCohomology, AffineTopDegreeVanishes) {
  for (const auto& c : {examples::tau(), examples::orthant(3), examples::a1()})
    for (std::size_t t = 1; t <= 3; ++t)
      for (int k = 0; k < 5; ++k) {
        auto h = hyper_cohomology_truncated(affine_fan(c), t, random_vector(c.rank(), 2));
        if (2 * t < h.size()) EXPECT_EQ(h[2 * t], 0u);
      }
}

TEST(HyperCohomology, BicomplexSquaresCommute) {
  CechCover cover(examples::huge());
  for (int k = 0; k < 6; ++k) {
    auto dc = truncated_de_rham(cover, 2, random_vector(3, 2));
    EXPECT_TRUE(dc.total().squares_to_zero());
  }
}

TEST(MappingCone, HugeExample) {
  const Fan f = examples::huge();
  EXPECT_EQ(mapping_cone_cohomology(f, LatticeVector{1, 0, 0}), (Dims{0, 0, 1}));
  EXPECT_EQ(mapping_cone_cohomology(f, LatticeVector{1, 0, 1}), zeros(3));
  for (const auto& m : weight_box(3, 2))
    if (m != LatticeVector{1, 0, 0}) EXPECT_EQ(mapping_cone_cohomology(f, m)[2], 0u) << m.to_string();
}

TEST(MappingCone, SmoothFansAreAcyclic) {
  for (const Fan& f : {examples::projective_plane(), resolve(examples::huge()).fan})
    for (int k = 0; k < 8; ++k) {
      auto m = random_vector(f.rank(), 2);
      auto h = mapping_cone_cohomology(f, m);
      EXPECT_TRUE(std::all_of(h.begin(), h.end(), [](auto x) { return x == 0; })) << m.to_string();
    }
}

TEST(BlowupSequence, QuadricSurfaceSquare) {
  auto sq = blowup_square(affine_fan(examples::a1()), LatticeVector{1, 1});
  for (std::size_t p = 0; p <= 2; ++p)
    for (const auto& m : weight_box(2, 2)) {
      auto r = blowup_les_check(sq, p, m);
      EXPECT_TRUE(r.exact) << "p=" << p << " m=" << m.to_string();
      EXPECT_EQ(r.alternating_sum, 0);
    }
  auto r = blowup_les_check(sq, 0, LatticeVector{0, 0});
  EXPECT_EQ(r.h_base[0], 1u);
  EXPECT_EQ(r.h_center[0], 1u);
  EXPECT_EQ(r.h_exceptional[0], 1u);
}

TEST(BlowupSequence, DegenerateSquareIsExact) {
  auto sq = blowup_square(affine_fan(examples::a1()), LatticeVector{1, 0});
  ASSERT_TRUE(sq.degenerate);
  for (const auto& m : weight_box(2, 1)) EXPECT_TRUE(blowup_les_check(sq, 1, m).exact);
}

TEST(BlowupSequence, HugeSquare) {
  auto sq = blowup_square(examples::huge(), LatticeVector{1, 1, 0});
  for (std::size_t p = 0; p <= 2; ++p)
    for (const auto& m : weight_box(3, 1)) {
      auto r = blowup_les_check(sq, p, m);
      EXPECT_TRUE(r.exact) << "p=" << p << " m=" << m.to_string();
      EXPECT_EQ(r.alternating_sum, 0);
    }
}

TEST(Subdivision, GlobalFormsAndStructureCohomologyAreInvariant) {
  std::vector<std::pair<Fan, LatticeVector>> cases = {
      {examples::huge(), LatticeVector{1, 1, 0}},
      {examples::huge(), LatticeVector{0, 1, 1}},
      {affine_fan(examples::a1()), LatticeVector{1, 1}},
      {examples::projective_plane(), LatticeVector{1, 1}},
  };
  for (const auto& [f, v] : cases) {
    const CechCover before_cover(f), after_cover(star_subdivision(f, v));
    auto h = [](const CechCover& c, const SheafSpec& sheaf, const LatticeVector& m) {
      return c.complex(sheaf, m).complex.cohomology_dims();
    };
    for (const auto& m : weight_box(f.rank(), 2)) {
      for (std::size_t p = 0; p <= f.rank(); ++p)
        EXPECT_EQ(h(before_cover, SheafSpec::tilde(p), m)[0], h(after_cover, SheafSpec::tilde(p), m)[0]);
      auto before = h(before_cover, SheafSpec::structure(), m);
      auto after = h(after_cover, SheafSpec::structure(), m);
      before.resize(std::max(before.size(), after.size()), 0);
      after.resize(before.size(), 0);
      EXPECT_EQ(before, after) << m.to_string();
    }
  }
}
