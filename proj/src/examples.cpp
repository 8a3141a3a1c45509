#include "toric/examples.hpp"

namespace toric::examples {

namespace {

Cone gen(std::size_t rank, std::vector<LatticeVector> rays) { return Cone::from_generators(rank, rays); }

}  // namespace

Cone tau() { return gen(3, {LatticeVector{1, 0, 0}, LatticeVector{1, 2, 0}}); }
Cone huge_sigma1() { return gen(3, {LatticeVector{1, 0, 0}, LatticeVector{1, 2, 0}, LatticeVector{-1, 0, 1}}); }
Cone huge_sigma2() { return gen(3, {LatticeVector{1, 0, 0}, LatticeVector{1, 2, 0}, LatticeVector{-1, 0, -1}}); }
Fan huge() { return Fan::from_cones(3, {huge_sigma1(), huge_sigma2()}); }
Cone a1() { return gen(2, {LatticeVector{1, 0}, LatticeVector{1, 2}}); }

Fan projective_line() { return Fan::from_cones(1, {gen(1, {LatticeVector{1}}), gen(1, {LatticeVector{-1}})}); }

Fan projective_plane() {
  const LatticeVector e1{1, 0}, e2{0, 1}, e3{-1, -1};
  return Fan::from_cones(2, {gen(2, {e1, e2}), gen(2, {e2, e3}), gen(2, {e3, e1})});
}

Cone orthant(std::size_t rank) {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < rank; ++i) rays.push_back(LatticeVector::unit(rank, i));
  return gen(rank, rays);
}

Fan fixture(const std::string& name) {
  if (name == "tau") return affine_fan(tau());
  if (name == "huge") return huge();
  if (name == "p1") return projective_line();
  if (name == "p2") return projective_plane();
  if (name == "a1") return affine_fan(a1());
  if (name == "orthant") return affine_fan(orthant(2));
  if (name == "orthant3") return affine_fan(orthant(3));
  throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() { return {"tau", "huge", "p1", "p2", "a1", "orthant", "orthant3"}; }

}  // namespace toric::examples
