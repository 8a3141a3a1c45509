#pragma once

// Per-weight Čech cohomology of the form sheaves over the cover of a toric
// variety by the charts of its maximal cones.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/forms.hpp"
#include "toric/linalg.hpp"

namespace toric {

struct SheafSpec {
  enum class Kind { Structure, Tilde, Image };
  Kind kind = Kind::Structure;
  std::size_t degree = 0;

  static SheafSpec structure() { return {Kind::Structure, 0}; }
  static SheafSpec tilde(std::size_t p) { return {Kind::Tilde, p}; }
  static SheafSpec image(std::size_t p) { return {Kind::Image, p}; }
  /// "structure", "tilde:p" or "image:p". Throws ParseError.
  static SheafSpec parse(const std::string& text);
  std::string to_string() const;
  /// Form degree of the sections (0 for the structure sheaf).
  std::size_t form_degree() const { return kind == Kind::Structure ? 0 : degree; }

  friend bool operator==(const SheafSpec& a, const SheafSpec& b) {
    return a.kind == b.kind && a.form_degree() == b.form_degree();
  }
};

/// Sections of the sheaf over the chart of `cone` in weight m.
GradedSubspace sections(const SheafSpec& sheaf, const Cone& cone, const LatticeVector& m);

struct CechComplex {
  SheafSpec sheaf;
  std::optional<LatticeVector> weight;
  /// tuples[q]: sorted (q+1)-tuples of positions in the cover.
  std::vector<std::vector<std::vector<std::size_t>>> tuples;
  /// sections[q][i]: subspace of ∧^p (ambient lattice) for tuples[q][i].
  std::vector<std::vector<Subspace>> sections;
  /// offsets[q][i]: first coordinate of tuples[q][i] in C^q.
  std::vector<std::vector<std::size_t>> offsets;
  Complex complex;
};

/// The maximal cones of a fan in a fixed order together with the cones of all
/// their intersections.
class CechCover {
 public:
  /// Throws InvalidFan if validate(f) fails. `order` permutes the maximal cones.
  explicit CechCover(Fan f, std::vector<std::size_t> order = {});

  const Fan& fan() const { return fan_; }
  const std::vector<Cone>& charts() const { return charts_; }
  std::size_t max_degree() const { return charts_.size() - 1; }
  const std::vector<std::vector<std::size_t>>& tuples(std::size_t q) const { return tuples_[q]; }
  /// The cone (as an index into fan().cones()) over which tuples(q)[i] meet.
  std::size_t meet(std::size_t q, std::size_t i) const { return meets_[q][i]; }
  std::size_t tuple_index(const std::vector<std::size_t>& tuple) const;

  /// The complex in weight m. With `embedding` (an n x k integer matrix with
  /// saturated image) the sections are mapped into ∧^p Z^n; a missing weight
  /// gives the zero complex of the same shape.
  CechComplex complex(const SheafSpec& sheaf, const std::optional<LatticeVector>& m,
                      const LatticeMatrix* embedding = nullptr) const;

 private:
  Fan fan_;
  std::vector<Cone> charts_;
  std::vector<std::vector<std::vector<std::size_t>>> tuples_;
  std::vector<std::vector<std::size_t>> meets_;
};

std::vector<std::size_t> cech_cohomology(const Fan& f, const SheafSpec& sheaf, const LatticeVector& m);

/// A cochain map between Čech complexes of two covers induced by a chart map:
/// chart i of `target` lies in chart `chart_map[i]` of `source`; sections are
/// compared inside the common exterior power.
CochainMap refinement_map(const CechCover& source, const CechComplex& from, const CechCover& target,
                          const CechComplex& to, const std::vector<std::size_t>& chart_map);

/// The double complex with K^{q,j} = C^q(tilde j) for j = 0..t and vertical
/// differential m ∧ -.
DoubleComplex truncated_de_rham(const CechCover& cover, std::size_t t, const LatticeVector& m);
std::vector<std::size_t> hyper_cohomology_truncated(const Fan& f, std::size_t t, const LatticeVector& m);

/// Two columns C(image 1) -> C(tilde 1), joined by the inclusion.
DoubleComplex form_mapping_cone(const CechCover& cover, const LatticeVector& m);
std::vector<std::size_t> mapping_cone_cohomology(const Fan& f, const LatticeVector& m);

struct BlowupLesReport {
  std::size_t degree = 0;
  LatticeVector weight;
  /// Indexed by cohomological degree q.
  std::vector<std::size_t> h_base, h_subdivided, h_center, h_exceptional;
  std::vector<std::size_t> rank_pullback;    // H^q(X) -> H^q(X') ⊕ H^q(V)
  std::vector<std::size_t> rank_difference;  // H^q(X') ⊕ H^q(V) -> H^q(V')
  std::vector<std::size_t> rank_connecting;  // H^q(V') -> H^(q+1)(X)
  /// H^q(X) -> H^q(fiber of the difference map) is an isomorphism.
  std::vector<bool> comparison_iso;
  bool exact = true;
  long alternating_sum = 0;
};

/// The long sequence of the square X' -> X, V' -> V for one sheaf degree and weight.
BlowupLesReport blowup_les_check(const BlowupSquare& sq, std::size_t p, const LatticeVector& m);

}  // namespace toric
