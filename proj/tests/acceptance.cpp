// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "test_support.hpp"
#include "toric/cech.hpp"
#include "toric/dilation.hpp"
#include "toric/examples.hpp"
#include "toric/lab.hpp"

using namespace toric;
using toric::testing::random_pointed_cone;
using toric::testing::random_vector;
using toric::testing::uniform;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = "first failure: " + what;
    passed = passed && ok;
  }
};

std::string failed_checks(const Report& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += (out.empty() ? "" : "; ") + c.name + " (expected " + c.expected + ", got " + c.actual + ")";
  return out;
}

Outcome report_outcome(const Report& r, const std::string& summary) {
  Outcome o;
  o.require(r.passed(), failed_checks(r));
  if (o.passed) o.detail = summary + ", " + std::to_string(r.checks.size()) + " checks";
  return o;
}

// 1. tilde/image/coker of one-forms on tau over the radius-3 box.
Outcome criterion_tau() { return report_outcome(lab::run_hugeK1(3), "coker is 1 exactly on (1,0,c)"); }

// 2. H^2 of the two-chart mapping cone against the Mayer-Vietoris cokernel.
Outcome criterion_two_chart() { return report_outcome(lab::run_huge(3), "H^2 is 1 only at (1,0,0)"); }

// 3. Image chains reach the tilde piece along dilations.
Outcome criterion_stabilization() {
  Outcome o;
  auto t = dilation_chain(examples::tau(), LatticeVector{1, 0, 0}, 1, {2, 2, 2});
  auto dims = t.dims();
  o.require(dims.size() >= 3 && dims[0] == 2 && dims[1] == 3 && dims[2] == 3 && t.tilde.dim() == 3,
            "tau chain is " + join(dims));
  std::size_t traces = 0, cones = 0;
  for (; cones < 12; ++cones) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 3));
    const Cone c = random_pointed_cone(n, 1, static_cast<long>(n) + 2, 2);
    const Cone dual = dual_cone(c);
    for (const auto& m : weight_box(n, 3)) {
      if (!dual.contains(m)) continue;
      const std::size_t face_rank = face_of_weight(c, m).equations().size();
      for (std::size_t p = 0; p <= n; ++p) {
        auto trace = dilation_chain(c, m, p);
        ++traces;
        const bool ok = trace.stabilized_at && *trace.stabilized_at <= 6 &&
                        trace.chain[*trace.stabilized_at].dim() == binomial(face_rank, p);
        o.require(ok, c.to_string() + " m=" + m.to_string() + " p=" + std::to_string(p) + " dims " + join(trace.dims()));
      }
    }
  }
  if (o.passed)
    o.detail = "tau chain " + join(dims) + "; " + std::to_string(traces) + " traces on " + std::to_string(cones) +
               " random cones reach binomial(face rank, p)";
  return o;
}

// 4. Dilated generator wedges equal c^p times the originals.
Outcome criterion_scaling() {
  Outcome o;
  std::size_t instances = 0;
  while (instances < 150) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 3));
    const Cone c = random_pointed_cone(n, 1, static_cast<long>(n) + 1, 2);
    const LatticeVector m = random_vector(n, 3);
    if (!dual_cone(c).contains(m)) continue;
    const std::size_t p = static_cast<std::size_t>(uniform(0, static_cast<long>(n)));
    const long factor = uniform(2, 5);
    auto check = scaling_law_check(c, m, p, factor);
    ++instances;
    o.require(check.ok(), c.to_string() + " m=" + m.to_string() + " p=" + std::to_string(p) + " c=" + std::to_string(factor));
  }
  if (o.passed) o.detail = std::to_string(instances) + " instances agree coordinate by coordinate";
  return o;
}

// 5. Exactness of the blow-up long sequence.
Outcome criterion_blowup() {
  Outcome o;
  std::size_t nodes = 0;
  const std::vector<BlowupSquare> squares = {blowup_square(affine_fan(examples::a1()), LatticeVector{1, 1}),
                                             blowup_square(examples::huge(), LatticeVector{1, 1, 0})};
  for (const auto& sq : squares)
    for (std::size_t p = 0; p <= 2; ++p)
      for (const auto& m : weight_box(sq.base.rank(), 2)) {
        auto r = blowup_les_check(sq, p, m);
        nodes += 3 * r.h_base.size();
        o.require(r.exact && r.alternating_sum == 0,
                  "ray " + sq.new_ray.to_string() + " p=" + std::to_string(p) + " m=" + m.to_string());
      }
  if (o.passed) o.detail = "A1 and two-chart squares exact at " + std::to_string(nodes) + " nodes";
  return o;
}

// 6. Global forms and structure-sheaf cohomology survive star subdivisions.
Outcome criterion_subdivision() {
  Outcome o;
  std::vector<std::pair<Fan, LatticeVector>> corpus = {
      {examples::huge(), LatticeVector{1, 1, 0}},         {examples::huge(), LatticeVector{0, 1, 1}},
      {examples::huge(), LatticeVector{0, 1, -1}},        {affine_fan(examples::tau()), LatticeVector{1, 1, 0}},
      {affine_fan(examples::a1()), LatticeVector{1, 1}},  {examples::projective_plane(), LatticeVector{1, 1}},
      {affine_fan(examples::orthant(3)), LatticeVector{1, 1, 1}},
      {examples::projective_plane(), LatticeVector{-1, -2}},
  };
  // Every step of the resolutions of the singular fixtures.
  for (const Fan& f : {examples::huge(), affine_fan(examples::tau())}) {
    Fan current = f;
    for (const auto& ray : resolve(f).trail) {
      corpus.push_back({current, ray});
      current = star_subdivision(current, ray);
    }
  }
  std::size_t weights = 0;
  for (const auto& [f, v] : corpus) {
    const CechCover before(f), after(star_subdivision(f, v));
    for (const auto& m : weight_box(f.rank(), 2)) {
      ++weights;
      const std::string where = "ray " + v.to_string() + " m=" + m.to_string();
      for (std::size_t p = 0; p <= f.rank(); ++p)
        o.require(before.complex(SheafSpec::tilde(p), m).complex.cohomology_dims()[0] ==
                      after.complex(SheafSpec::tilde(p), m).complex.cohomology_dims()[0],
                  where + " H^0 tilde " + std::to_string(p));
      auto hb = before.complex(SheafSpec::structure(), m).complex.cohomology_dims();
      auto ha = after.complex(SheafSpec::structure(), m).complex.cohomology_dims();
      hb.resize(std::max(hb.size(), ha.size()), 0);
      ha.resize(hb.size(), 0);
      o.require(hb == ha, where + " structure " + join(hb) + " vs " + join(ha));
    }
  }
  if (o.passed)
    o.detail = std::to_string(corpus.size()) + " subdivisions, " + std::to_string(weights) + " weights agree";
  return o;
}

// 7. Hochschild oracle against the image of one-forms, and A against B.
Outcome criterion_hochschild() {
  Outcome o;
  std::size_t compared = 0, faces = 0;
  for (const auto& c : {examples::a1(), examples::orthant(2), examples::orthant(3)}) {
    const AffineMonoid a = monoid_of(c);
    for (const auto& m : weight_box(c.rank(), 3)) {
      const std::size_t image = omega_image_weight(c, m, 1).dim();
      if (!a.contains(m)) {
        o.require(image == 0, c.to_string() + " image outside the monoid at " + m.to_string());
        continue;
      }
      const std::size_t hh1 = hochschild_weight_oracle(a, m, {1, 1'000'000})[1];
      ++compared;
      o.require(hh1 == image, c.to_string() + " m=" + m.to_string() + " HH1=" + std::to_string(hh1) +
                                  " image=" + std::to_string(image));
    }
  }
  std::vector<Cone> cones = {examples::a1(), examples::orthant(2), examples::tau()};
  for (int k = 0; k < 8; ++k) {
    const std::size_t n = static_cast<std::size_t>(uniform(2, 3));
    cones.push_back(random_pointed_cone(n, 1, static_cast<long>(n) + 1, 2));
  }
  for (const auto& c : cones) {
    const AffineMonoid a = monoid_of(c);
    const HochschildOptions options{c.rank() == 2 ? 2u : 1u, 1'000'000};
    for (const auto& m : weight_box(c.rank(), 2)) {
      if (!a.contains(m)) continue;
      const AffineMonoid b = face_monoid(c, m);
      ++faces;
      o.require(hochschild_weight_oracle(a, m, options) == hochschild_weight_oracle(b, m, options),
                c.to_string() + " A vs B at " + m.to_string());
    }
  }
  if (o.passed)
    o.detail = "HH1 equals image at " + std::to_string(compared) + " weights; A and B agree at " +
               std::to_string(faces) + " weights";
  return o;
}

// 8. The projective line, and vanishing of top truncated hypercohomology on charts.
Outcome criterion_smooth() {
  Outcome o;
  const CechCover p1(examples::projective_line());
  for (const auto& m : weight_box(1, 3)) {
    const bool zero = m.is_zero();
    auto h = p1.complex(SheafSpec::structure(), m).complex.cohomology_dims();
    o.require(h[0] == (zero ? 1u : 0u) && h[1] == 0, "structure sheaf at " + m.to_string() + ": " + join(h));
    auto f = p1.complex(SheafSpec::tilde(1), m).complex.cohomology_dims();
    o.require(f[0] == 0 && f[1] == (zero ? 1u : 0u), "one-forms at " + m.to_string() + ": " + join(f));
  }
  for (const auto& c : {examples::tau(), examples::a1(), examples::orthant(3), examples::huge_sigma1()}) {
    Report r = lab::k0_affine_identity(c, 2);
    o.require(r.passed(), c.to_string() + ": " + failed_checks(r));
  }
  if (o.passed) o.detail = "P1 cohomology matches; H^{2t} = 0 for t = 1..3 on four charts";
  return o;
}

// 9. Statements about spectra are labeled as documented, and their shadows pass.
Outcome criterion_documented() {
  Outcome o;
  Report r = lab::structural_identities(examples::huge(), 3, default_dilation_sequence());
  o.require(r.passed(), failed_checks(r));
  std::size_t documented = 0;
  for (const auto& a : r.annotations) documented += a.label == provenance::kDocumented;
  o.require(documented == 4, "expected 4 documented statements, found " + std::to_string(documented));
  for (const Report& other : {lab::run_hugeK1(1), lab::run_huge(1), lab::k0_affine_identity(examples::tau(), 1), r})
    for (const auto& c : other.checks)
      o.require(c.provenance != provenance::kDocumented, "check '" + c.name + "' claims a documented identity");
  if (o.passed) o.detail = std::to_string(documented) + " statements labeled '" + provenance::kDocumented + "'";
  return o;
}

struct Criterion {
  int number;
  std::function<Outcome()> run;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, criterion_tau, 5},          {2, criterion_two_chart, 10}, {3, criterion_stabilization, 0},
      {4, criterion_scaling, 0},      {5, criterion_blowup, 0},     {6, criterion_subdivision, 0},
      {7, criterion_hochschild, 0},   {8, criterion_smooth, 0},     {9, criterion_documented, 0},
  };
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("threw ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.passed = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    all = all && o.passed;
    std::printf("criterion %d %s (%.2f s): %s\n", c.number, o.passed ? "PASS" : "FAIL", seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total %.2f s: %s\n", total, all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}
