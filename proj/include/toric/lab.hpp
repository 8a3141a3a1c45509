#pragma once

// Scripted reproductions of the reference examples with verdicts.

#include <vector>

#include "toric/fan.hpp"
#include "toric/report.hpp"

namespace toric::lab {

/// The cone tau = cone{(1,0,0),(1,2,0)}: tilde, image and cokernel of 1-forms
/// over the weight box, with the single-chart mapping cone alongside.
Report run_hugeK1(long radius, bool parallel = false);

/// The two-chart fan over tau: the mapping cone [image 1 -> tilde 1] over the
/// weight box, compared with the direct Mayer-Vietoris cokernel.
Report run_huge(long radius, bool parallel = false);

/// Single-chart truncated de Rham hypercohomology vanishing in degree 2t.
Report k0_affine_identity(const Cone& sigma, long radius, bool parallel = false);

/// Mapping-cone cohomology along dilation chains, plus the statements about
/// K-theory spectra that are documented rather than computed.
Report structural_identities(const Fan& f, long radius, const std::vector<long>& sequence, bool parallel = false);

}  // namespace toric::lab
