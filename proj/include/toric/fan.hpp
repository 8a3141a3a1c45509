#pragma once

// Fans: face-closed collections of strongly convex cones, with stars, orbit
// closures, star subdivisions, resolution, and blow-up squares.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

class Fan {
 public:
  Fan() = default;
  /// Adds every face of every strongly convex input cone. Cones with lineality
  /// are stored as given so that validate() can report them.
  static Fan from_cones(std::size_t rank, const std::vector<Cone>& cones);

  std::size_t rank() const { return rank_; }
  /// Sorted by dimension, then by rays.
  const std::vector<Cone>& cones() const { return cones_; }
  const std::vector<std::size_t>& maximal() const { return maximal_; }
  std::vector<Cone> maximal_cones() const;
  std::optional<std::size_t> index_of(const Cone& c) const;
  bool contains(const Cone& c) const { return index_of(c).has_value(); }
  /// Primitive generators of the one-dimensional cones, sorted.
  std::vector<LatticeVector> rays() const;

  friend bool operator==(const Fan& a, const Fan& b) { return a.rank_ == b.rank_ && a.cones_ == b.cones_; }

 private:
  std::size_t rank_ = 0;
  std::vector<Cone> cones_;
  std::vector<std::size_t> maximal_;
};

struct FanCheck {
  bool ok = true;
  /// "strong convexity", "face closure" or "intersection"; empty when ok.
  std::string axiom;
  std::vector<Cone> witnesses;
  std::string message;
};

/// Checks the fan axioms and reports the first violation.
FanCheck validate(const Fan& f);

/// Fans whose maximal cones are full dimensional and whose codimension-one
/// cones each lie in exactly two maximal cones.
bool is_complete(const Fan& f);

/// Cones of f containing sigma.
std::vector<Cone> star(const Fan& f, const Cone& sigma);

struct OrbitClosureData {
  Cone sigma;
  QuotientLattice quotient;
  /// The images of the cones of the star of sigma in N / Z(sigma ∩ N).
  Fan fan_bar;
  /// Basis of M ∩ sigma^perp: the rows of the projection.
  std::vector<LatticeVector> weight_lattice_basis;

  /// Coordinates of m in weight_lattice_basis; requires m in sigma^perp.
  LatticeVector restrict_weight(const LatticeVector& m) const;
  bool weight_is_orthogonal(const LatticeVector& m) const;
  /// Image of a cone of the star in the quotient lattice.
  Cone project(const Cone& c) const;
};

OrbitClosureData orbit_closure(const Fan& f, const Cone& sigma);

/// The cone of f whose relative interior contains v (the minimal cone containing v).
std::optional<Cone> minimal_cone_containing(const Fan& f, const LatticeVector& v);

/// Star subdivision at the ray through v. Returns f unchanged when v already spans a ray.
Fan star_subdivision(const Fan& f, const LatticeVector& v);

struct Resolution {
  Fan fan;
  std::vector<LatticeVector> trail;
};

/// Repeated star subdivisions until every cone is smooth.
Resolution resolve(const Fan& f, std::size_t max_steps = 1000);

struct BlowupSquare {
  Fan base;
  Fan subdivided;
  LatticeVector new_ray;
  Cone minimal_cone;
  OrbitClosureData v;
  OrbitClosureData v_prime;
  /// True when v already spans a ray of the base fan, so nothing changes.
  bool degenerate = false;
  /// Cones away from the two stars agree.
  bool complement_matches = false;
};

BlowupSquare blowup_square(const Fan& f, const LatticeVector& v);

/// The fan of all faces of one cone.
Fan affine_fan(const Cone& sigma);

}  // namespace toric
