#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

inline void PrintTo(const LatticeVector& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const Cone& c, std::ostream* os) { *os << c.to_string(); }

}  // namespace toric

namespace toric::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline LatticeVector random_vector(std::size_t rank, long bound) {
  std::vector<Integer> c(rank);
  for (auto& x : c) x = uniform(-bound, bound);
  return LatticeVector(std::move(c));
}

inline LatticeVector random_nonzero(std::size_t rank, long bound) {
  for (;;) {
    auto v = random_vector(rank, bound);
    if (!v.is_zero()) return v;
  }
}

/// Cones on uniform(min_rays, max_rays) random generators, redrawn until strongly convex.
inline Cone random_pointed_cone(std::size_t rank, long min_rays, long max_rays, long bound) {
  for (;;) {
    std::vector<LatticeVector> gens;
    for (long i = uniform(min_rays, max_rays); i > 0; --i) gens.push_back(random_nonzero(rank, bound));
    Cone c = Cone::from_generators(rank, gens);
    if (c.is_strongly_convex()) return c;
  }
}

inline LatticeMatrix random_matrix(std::size_t rows, std::size_t cols, long bound) {
  LatticeMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
  return m;
}

}  // namespace toric::testing
