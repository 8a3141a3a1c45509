#pragma once

// Affine monoids A = C ∩ M for a rational cone C in M, usually C = σ^vee.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

struct PointedSplit;

class AffineMonoid {
 public:
  /// A = σ^vee ∩ M.
  static AffineMonoid of_source_cone(const Cone& sigma);
  /// A = C ∩ M for an arbitrary rational cone C in M.
  static AffineMonoid of_weight_cone(const Cone& weights);

  std::size_t rank() const;
  const Cone& weight_cone() const;
  /// σ with C = σ^vee (the dual of the weight cone when built from weights).
  const Cone& source_cone() const;

  bool contains(const LatticeVector& m) const { return weight_cone().contains(m); }
  /// Hermite basis of the unit group lineality(C) ∩ M.
  const std::vector<LatticeVector>& unit_basis() const { return weight_cone().lineality(); }
  bool is_pointed() const { return unit_basis().empty(); }

  /// Computed once, then shared between copies.
  const std::vector<LatticeVector>& hilbert_basis() const;
  const PointedSplit& pointed_split() const;

  /// A positive integer functional on nonzero elements (pointed monoids only):
  /// the sum of the facet normals of the weight cone.
  LatticeVector height() const;

 private:
  struct State;
  explicit AffineMonoid(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

struct PointedSplit {
  std::vector<LatticeVector> unit_basis;
  /// M -> M / units, rows annihilate the units; quotient_rank x rank.
  LatticeMatrix projection;
  /// M / units -> M with projection * section = identity.
  LatticeMatrix section;
  /// Image of A in M / units; has no units.
  std::shared_ptr<const AffineMonoid> pointed;
};

const std::vector<LatticeVector>& hilbert_basis(const AffineMonoid& a);
const PointedSplit& pointed_split(const AffineMonoid& a);

/// The Hilbert basis of the pointed monoid C ∩ Z^rank.
std::vector<LatticeVector> pointed_hilbert_basis(const Cone& c);

/// Elements u of A with m - u in A (pointed monoids only), sorted.
std::vector<LatticeVector> divisors(const AffineMonoid& a, const LatticeVector& m);

/// All ordered tuples (u_1, ..., u_parts) of elements of A summing to m.
std::vector<std::vector<LatticeVector>> decompositions(const AffineMonoid& a, const LatticeVector& m,
                                                       std::size_t parts);

struct Localization {
  /// m is positive on every nonzero element of the source cone.
  bool inverts = false;
  /// When inverting: for each of e_1..e_n, -e_1..-e_n the least i with
  /// (that vector) + i m in A.
  std::vector<Integer> exponents;
};

/// Whether A[-m] is the whole lattice, with an explicit witness.
Localization localization_check(const AffineMonoid& a, const LatticeVector& m);

/// Pulling triangulation of a pointed cone into simplicial cones, each given by
/// linearly independent rays of c.
std::vector<std::vector<LatticeVector>> triangulate(const Cone& c);

}  // namespace toric
