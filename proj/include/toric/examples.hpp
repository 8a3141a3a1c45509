#pragma once

// Named cones and fans used by the CLI fixtures, the lab reports and the tests.

#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric::examples {

/// cone{(1,0,0),(1,2,0)} in Z^3: a quadric cone times a line.
Cone tau();
/// tau + (-1,0,1) and tau + (-1,0,-1).
Cone huge_sigma1();
Cone huge_sigma2();
/// The two-chart fan {huge_sigma1, huge_sigma2} and their faces.
Fan huge();
/// cone{(1,0),(1,2)}: the A1 surface singularity.
Cone a1();
Fan projective_line();
Fan projective_plane();
/// The first orthant in Z^rank.
Cone orthant(std::size_t rank);

/// A fixture by name: tau, huge, p1, p2, a1, orthant (rank 2), orthant3.
Fan fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace toric::examples
