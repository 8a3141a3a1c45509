#pragma once

// Dilations θ_c: χ^m -> χ^{cm} acting on weight pieces of forms, and the
// chains of subspaces obtained by iterating them.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/forms.hpp"

namespace toric {

/// Default dilation sequence (2, 2, 2, 2, 2, 2).
std::vector<long> default_dilation_sequence();

/// θ_c applied to omega_image_weight(σ, m, p): the subspace spanned by the
/// wedges of the dilated generator tuples, tagged with weight c m.
/// Throws WeightNotInDual when m is not in σ^vee, InvalidArgument when c < 1.
GradedSubspace theta_image(const Cone& sigma, const LatticeVector& m, std::size_t p, long c);

struct ScalingCheck {
  GradedSubspace direct;  // span of (c u1) ∧ ... ∧ (c up)
  GradedSubspace scaled;  // c^p times the spanning wedges at m
  /// Every dilated wedge equals c^p times the original one, coordinate by coordinate.
  bool coordinates_agree = true;
  bool spans_agree = true;
  /// direct lies in omega_image_weight(σ, c m, p).
  bool lands_in_image = true;
  bool ok() const { return coordinates_agree && spans_agree && lands_in_image; }
};

ScalingCheck scaling_law_check(const Cone& sigma, const LatticeVector& m, std::size_t p, long c);

/// The tilde pieces at m and c m coincide as subspaces.
bool tilde_theta_iso_check(const Cone& sigma, const LatticeVector& m, std::size_t p, long c);

struct DilationTrace {
  Cone sigma;
  LatticeVector weight;
  std::size_t degree = 0;
  std::vector<long> sequence;
  /// Weights m, c1 m, c1 c2 m, ... for the computed prefix of the chain.
  std::vector<LatticeVector> weights;
  std::vector<GradedSubspace> chain;
  GradedSubspace tilde;
  /// First index i with chain[i] = chain[i+1] = tilde.
  std::optional<std::size_t> stabilized_at;

  std::vector<std::size_t> dims() const;
};

/// Builds the chain of image pieces along the sequence, stopping one step after
/// it reaches the tilde piece twice in a row. Throws WeightNotInDual or
/// InvalidArgument (some c_i < 2); never throws on non-stabilization.
DilationTrace dilation_chain(const Cone& sigma, const LatticeVector& m, std::size_t p,
                             const std::vector<long>& sequence = default_dilation_sequence());

/// dilation_chain, throwing NotStabilized when the sequence runs out first.
DilationTrace colimit_trace(const Cone& sigma, const LatticeVector& m, std::size_t p,
                            const std::vector<long>& sequence = default_dilation_sequence());

struct HochschildColimitReport {
  Cone sigma;
  LatticeVector weight;
  std::size_t degree = 0;
  std::vector<long> sequence;
  std::vector<LatticeVector> weights;
  std::vector<std::size_t> hochschild_dims;
  std::vector<std::size_t> image_dims;
  std::size_t tilde_dim = 0;
  /// First index i with the Hochschild dimension equal to tilde_dim at i and i+1.
  std::optional<std::size_t> stabilized_at;
};

/// Hochschild dimensions along the dilation chain. Throws NotStabilized when
/// the sequence runs out before stabilization, plus the oracle's errors.
HochschildColimitReport hh_colimit_check(const Cone& sigma, const LatticeVector& m, std::size_t q,
                                         const std::vector<long>& sequence = default_dilation_sequence(),
                                         const HochschildOptions& options = {});

}  // namespace toric
