#include <gtest/gtest.h>

#include "toric/examples.hpp"
#include "toric/lab.hpp"

using namespace toric;

namespace {

const Check* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Lab, TauCokernelReport) {
  Report r = lab::run_hugeK1(2);
  EXPECT_TRUE(r.passed()) << r.render_tsv();
  ASSERT_NE(find(r, "coker support in box"), nullptr);
  EXPECT_EQ(find(r, "coker support in box")->actual, "(1,0,-2) (1,0,-1) (1,0,0) (1,0,1) (1,0,2)");
}

TEST(Lab, TwoChartReport) {
  Report r = lab::run_huge(2);
  EXPECT_TRUE(r.passed()) << r.render_tsv();
  EXPECT_EQ(r.tables.at(0).rows.size(), 125u);
}

TEST(Lab, AffineTruncationsVanishOnSeveralCones) {
  for (const auto& c : {examples::tau(), examples::a1(), examples::orthant(3)})
    EXPECT_TRUE(lab::k0_affine_identity(c, 1).passed()) << c.to_string();
}

TEST(Lab, IdentitiesAreLabeledAndShadowsPass) {
  Report r = lab::structural_identities(examples::huge(), 1, {2, 2, 2});
  EXPECT_TRUE(r.passed()) << r.render_tsv();
  std::size_t documented = 0;
  for (const auto& a : r.annotations) documented += a.label == provenance::kDocumented;
  EXPECT_EQ(documented, 4u);
  ASSERT_EQ(r.tables.at(0).rows.size(), 1u);
  EXPECT_EQ(r.tables[0].rows[0][0], "(1,0,0)");
  EXPECT_EQ(r.tables[0].rows[0][1], "1,0,0,0");
}

TEST(Lab, ParallelSweepMatchesSerial) {
  EXPECT_EQ(lab::run_huge(2, true).render_tsv(), lab::run_huge(2, false).render_tsv());
  EXPECT_EQ(lab::run_hugeK1(2, true).render_structured(), lab::run_hugeK1(2, false).render_structured());
}
