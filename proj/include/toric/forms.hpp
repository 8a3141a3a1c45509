#pragma once

// Weight pieces of differential forms on affine toric varieties, as subspaces
// of the p-th exterior power of M ⊗ Q.
//
// For a cone σ and weight m:
//   tilde   Danilov forms: ∧^p(M ∩ σ(m)^perp) when m lies in σ^vee, else 0;
//   image   the image of the Kähler p-forms of k[σ^vee ∩ M] in weight m under
//           u0 du1 ∧ ... ∧ dup -> u1 ∧ ... ∧ up (the 1/p! factor is dropped).

#include <cstddef>
#include <vector>

#include "toric/cone.hpp"
#include "toric/linalg.hpp"
#include "toric/monoid.hpp"

namespace toric {

struct GradedSubspace {
  LatticeVector weight;
  std::size_t degree = 0;
  /// Subspace of Q^binomial(rank, degree) in WedgeBasis coordinates.
  Subspace space;

  std::size_t rank() const { return weight.rank(); }
  std::size_t dim() const { return space.dim(); }
  bool is_zero() const { return space.is_zero(); }
  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.weight == b.weight && a.degree == b.degree && a.space == b.space;
  }
};

/// The monoid σ^vee ∩ M, shared per cone for the life of the process.
AffineMonoid monoid_of(const Cone& sigma);

/// B = A ∩ σ(m)^perp for A = σ^vee ∩ M; requires m in σ^vee.
AffineMonoid face_monoid(const Cone& sigma, const LatticeVector& m);

GradedSubspace tilde_omega_weight(const Cone& sigma, const LatticeVector& m, std::size_t p);

/// Spanned by u1 ∧ ... ∧ up over generators u_i of A (Hilbert basis and the
/// negated unit basis) with m - sum u_i in A; exact because the differentials
/// of the generators generate the Kähler forms as a module.
GradedSubspace omega_image_weight(const AffineMonoid& a, const LatticeVector& m, std::size_t p);
GradedSubspace omega_image_weight(const Cone& sigma, const LatticeVector& m, std::size_t p);
/// The generator tuples (u1, ..., up) whose wedges span omega_image_weight.
std::vector<std::vector<LatticeVector>> omega_image_tuples(const AffineMonoid& a, const LatticeVector& m,
                                                           std::size_t p);

std::size_t coker_dimension(const Cone& sigma, const LatticeVector& m, std::size_t p);

/// omega -> m ∧ omega on the full exterior power: binomial(n, p+1) x binomial(n, p).
QMatrix wedge_matrix(const LatticeVector& m, std::size_t p);

/// m ∧ - restricted to `domain`: columns are the images of the echelon basis of
/// domain, in ambient coordinates of degree p + 1. Throws WeightMismatch.
QMatrix derivative_map(const LatticeVector& m, std::size_t p, const GradedSubspace& domain);

enum class FormSheaf { Tilde, Image };

/// Restriction from U_σ to U_face in weight m: the inclusion of section spaces,
/// target.dim() x source.dim(). Throws NotAFace.
QMatrix restriction_map(const Cone& sigma, const Cone& face, const LatticeVector& m, std::size_t p,
                        FormSheaf sheaf);

/// Kernel of the residue map out of ∧^p M in weight m: the forms killed by
/// contraction with every ray n_ρ of σ on which m vanishes (zero if m is not
/// in σ^vee).
GradedSubspace residue_kernel(const Cone& sigma, const LatticeVector& m, std::size_t p);

/// For smooth σ: residue_kernel equals tilde_omega_weight. Throws NonSmoothCone.
bool residue_check(const Cone& sigma, const LatticeVector& m, std::size_t p);

struct HochschildOptions {
  std::size_t max_degree = 3;
  std::size_t budget = 1'000'000;
};

/// dim HH_q(k[A])_m for q = 0..max_degree, from the normalized Hochschild
/// complex of the pointed part combined with the units by the Künneth rule.
std::vector<std::size_t> hochschild_weight_oracle(const AffineMonoid& a, const LatticeVector& m,
                                                  HochschildOptions options = {});
std::vector<std::size_t> hochschild_weight_oracle(const Cone& sigma, const LatticeVector& m,
                                                  HochschildOptions options = {});

}  // namespace toric
