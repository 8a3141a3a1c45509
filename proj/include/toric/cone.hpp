#pragma once

// Rational polyhedral cones with both descriptions kept in canonical form.
//
// A cone in Z^n is stored as
//   rays       primitive extreme rays, projected onto the orthogonal complement
//              of the lineality space, sorted;
//   lineality  Hermite basis of the lattice points of the lineality space;
//   facets     primitive facet normals (<f, x> >= 0), projected onto the
//              orthogonal complement of the equations, sorted;
//   equations  Hermite basis of the lattice points of span(cone)^perp.
// With this normalization the dual cone is obtained by swapping the two
// descriptions, and equality of cones is equality of representations.

#include <cstddef>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

class Cone {
 public:
  Cone() = default;

  /// The cone generated by `generators` (zero vectors allowed, redundancy allowed).
  static Cone from_generators(std::size_t rank, const std::vector<LatticeVector>& generators);
  /// { x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equations }.
  static Cone from_inequalities(std::size_t rank, const std::vector<LatticeVector>& inequalities,
                                const std::vector<LatticeVector>& equations = {});
  static Cone zero(std::size_t rank) { return from_generators(rank, {}); }
  static Cone whole(std::size_t rank) { return from_inequalities(rank, {}); }

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& lineality() const { return lineality_; }
  const std::vector<LatticeVector>& facets() const { return facets_; }
  const std::vector<LatticeVector>& equations() const { return equations_; }

  std::size_t dim() const { return rank_ - equations_.size(); }
  bool is_strongly_convex() const { return lineality_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }

  bool contains(const LatticeVector& v) const;
  bool contains(const Cone& other) const;
  /// Generators including both signs of the lineality basis.
  std::vector<LatticeVector> generators() const;

  std::string to_string() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }
  /// Order by rank, rays, lineality.
  friend bool operator<(const Cone& a, const Cone& b);
  friend Cone dual_cone(const Cone& c);

 private:
  std::size_t rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> lineality_;
  std::vector<LatticeVector> facets_;
  std::vector<LatticeVector> equations_;
};

Cone dual_cone(const Cone& c);

/// The face { n in c : <m, n> = 0 }. Requires m in the dual cone.
Cone face_of_weight(const Cone& c, const LatticeVector& m);

/// All faces of a strongly convex cone, sorted by dimension then rays.
std::vector<Cone> faces(const Cone& c);

/// True when f is a face of c (for any c, lineality allowed).
bool is_face(const Cone& c, const Cone& f);

/// A weight m in the dual of c with face_of_weight(c, m) == f: the sum of the
/// facet normals of c vanishing on f. Throws NotAFace when f is not a face.
LatticeVector weight_for_face(const Cone& c, const Cone& f);

struct ConeClass {
  bool strongly_convex = false;
  bool simplicial = false;
  bool smooth = false;
  std::size_t dim = 0;
};

/// Smoothness is read off the Smith form of the ray matrix. Cones with
/// lineality are reported as neither simplicial nor smooth.
ConeClass classify(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

/// The cone generated by c and the extra vector v.
Cone extend(const Cone& c, const LatticeVector& v);

/// Lattice points of the half-open parallelepiped { sum l_i g_i : 0 <= l_i < 1 }
/// for linearly independent generators g_i, including 0. The count equals the
/// index of the generated sublattice in its saturation.
std::vector<LatticeVector> parallelepiped_points(std::size_t rank, const std::vector<LatticeVector>& generators);

/// <a, x> + b >= 0 (or = 0 when used as an equation).
struct AffineConstraint {
  LatticeVector a;
  Integer b;
};

/// Lattice points of a bounded polyhedron, sorted. Throws Unbounded when the
/// feasible region is nonempty and unbounded.
std::vector<LatticeVector> lattice_points(std::size_t rank, const std::vector<AffineConstraint>& inequalities,
                                          const std::vector<AffineConstraint>& equations = {});

}  // namespace toric
