#include "toric/monoid.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace toric {

struct AffineMonoid::State {
  Cone weights;
  Cone source;
  std::once_flag hilbert_once;
  std::vector<LatticeVector> hilbert;
  std::once_flag split_once;
  std::unique_ptr<PointedSplit> split;
};

AffineMonoid AffineMonoid::of_source_cone(const Cone& sigma) {
  auto s = std::make_shared<State>();
  s->source = sigma;
  s->weights = dual_cone(sigma);
  return AffineMonoid(std::move(s));
}

AffineMonoid AffineMonoid::of_weight_cone(const Cone& weights) {
  auto s = std::make_shared<State>();
  s->weights = weights;
  s->source = dual_cone(weights);
  return AffineMonoid(std::move(s));
}

std::size_t AffineMonoid::rank() const { return state_->weights.rank(); }
const Cone& AffineMonoid::weight_cone() const { return state_->weights; }
const Cone& AffineMonoid::source_cone() const { return state_->source; }

LatticeVector AffineMonoid::height() const {
  if (!is_pointed()) throw Error(ErrorKind::NonPointedMonoid, "height: monoid has units");
  LatticeVector h = LatticeVector::zero(rank());
  for (const auto& f : weight_cone().facets()) h += f;
  return h;
}

std::vector<std::vector<LatticeVector>> triangulate(const Cone& c) {
  if (!c.is_strongly_convex()) throw Error(ErrorKind::HasLineality, "triangulate: " + c.to_string());
  const auto& rays = c.rays();
  if (rays.size() == c.dim()) return {rays};
  const LatticeVector& apex = rays.front();
  std::vector<std::vector<LatticeVector>> out;
  for (const auto& f : c.facets()) {
    if (pairing(f, apex) == 0) continue;
    std::vector<LatticeVector> facet_rays;
    for (const auto& r : rays)
      if (pairing(f, r) == 0) facet_rays.push_back(r);
    for (auto simplex : triangulate(Cone::from_generators(c.rank(), facet_rays))) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

std::vector<LatticeVector> pointed_hilbert_basis(const Cone& c) {
  if (!c.is_strongly_convex()) throw Error(ErrorKind::NonPointedMonoid, "Hilbert basis of " + c.to_string());
  std::vector<LatticeVector> candidates = c.rays();
  for (const auto& simplex : triangulate(c)) {
    for (auto& p : parallelepiped_points(c.rank(), simplex))
      if (!p.is_zero()) candidates.push_back(std::move(p));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<LatticeVector> basis;
  for (const auto& x : candidates) {
    bool reducible = std::any_of(candidates.begin(), candidates.end(),
                                 [&](const LatticeVector& h) { return h != x && c.contains(x - h); });
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

const PointedSplit& AffineMonoid::pointed_split() const {
  std::call_once(state_->split_once, [this] {
    auto split = std::make_unique<PointedSplit>();
    const std::size_t n = rank();
    split->unit_basis = unit_basis();
    QuotientLattice q = quotient_lattice(n, split->unit_basis);
    split->projection = q.projection;
    split->section = q.section;
    std::vector<LatticeVector> images;
    for (const auto& r : weight_cone().rays()) images.push_back(q.project(r));
    Cone pointed_cone = Cone::from_generators(q.quotient_rank, images);
    split->pointed = std::make_shared<const AffineMonoid>(AffineMonoid::of_weight_cone(pointed_cone));
    state_->split = std::move(split);
  });
  return *state_->split;
}

const std::vector<LatticeVector>& AffineMonoid::hilbert_basis() const {
  std::call_once(state_->hilbert_once, [this] {
    std::vector<LatticeVector> out;
    if (is_pointed()) {
      out = pointed_hilbert_basis(weight_cone());
    } else {
      const PointedSplit& split = pointed_split();
      for (const auto& u : split.unit_basis) {
        out.push_back(u);
        out.push_back(-u);
      }
      std::vector<LatticeVector> lifted;
      for (const auto& h : split.pointed->hilbert_basis()) lifted.push_back(split.section.apply(h));
      std::sort(lifted.begin(), lifted.end());
      out.insert(out.end(), lifted.begin(), lifted.end());
    }
    state_->hilbert = std::move(out);
  });
  return state_->hilbert;
}

const std::vector<LatticeVector>& hilbert_basis(const AffineMonoid& a) { return a.hilbert_basis(); }
const PointedSplit& pointed_split(const AffineMonoid& a) { return a.pointed_split(); }

std::vector<LatticeVector> divisors(const AffineMonoid& a, const LatticeVector& m) {
  if (!a.is_pointed()) throw Error(ErrorKind::NonPointedMonoid, "divisors need a pointed monoid");
  if (!a.contains(m)) throw Error(ErrorKind::WeightOutsideMonoid, m.to_string() + " is not in the monoid");
  const Cone& c = a.weight_cone();
  std::vector<AffineConstraint> ineq, eq;
  for (const auto& f : c.facets()) {
    ineq.push_back({f, 0});
    ineq.push_back({-f, pairing(f, m)});
  }
  for (const auto& e : c.equations()) eq.push_back({e, 0});
  return lattice_points(a.rank(), ineq, eq);
}

namespace {

void extend_tuples(const AffineMonoid& a, const LatticeVector& rest, std::size_t parts,
                   std::map<LatticeVector, std::vector<LatticeVector>>& memo, std::vector<LatticeVector>& prefix,
                   std::vector<std::vector<LatticeVector>>& out) {
  if (parts == 1) {
    prefix.push_back(rest);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  auto it = memo.find(rest);
  if (it == memo.end()) it = memo.emplace(rest, divisors(a, rest)).first;
  const auto divs = it->second;
  for (const auto& u : divs) {
    prefix.push_back(u);
    extend_tuples(a, rest - u, parts - 1, memo, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<LatticeVector>> decompositions(const AffineMonoid& a, const LatticeVector& m,
                                                       std::size_t parts) {
  if (!a.is_pointed()) throw Error(ErrorKind::NonPointedMonoid, "decompositions need a pointed monoid");
  if (!a.contains(m)) throw Error(ErrorKind::WeightOutsideMonoid, m.to_string() + " is not in the monoid");
  std::vector<std::vector<LatticeVector>> out;
  if (parts == 0) {
    if (m.is_zero()) out.emplace_back();
    return out;
  }
  std::map<LatticeVector, std::vector<LatticeVector>> memo;
  std::vector<LatticeVector> prefix;
  extend_tuples(a, m, parts, memo, prefix, out);
  return out;
}

Localization localization_check(const AffineMonoid& a, const LatticeVector& m) {
  if (!a.contains(m)) throw Error(ErrorKind::WeightOutsideMonoid, m.to_string() + " is not in the monoid");
  Localization result;
  const Cone& sigma = a.source_cone();
  if (!sigma.is_strongly_convex()) return result;
  for (const auto& r : sigma.rays())
    if (pairing(m, r) <= 0) return result;
  result.inverts = true;
  // Facet normals of the weight cone are the rays of σ: the least i with
  // <r, v + i m> >= 0 for every ray r.
  const std::size_t n = a.rank();
  for (int sign : {1, -1}) {
    for (std::size_t j = 0; j < n; ++j) {
      LatticeVector v = LatticeVector::unit(n, j);
      if (sign < 0) v = -v;
      Integer i = 0;
      for (const auto& r : sigma.rays()) {
        Integer need = -pairing(r, v);
        Integer step = pairing(r, m);
        if (need > 0) {
          Integer q;
          mpz_cdiv_q(q.get_mpz_t(), need.get_mpz_t(), step.get_mpz_t());
          if (q > i) i = q;
        }
      }
      if (!a.contains(v + i * m))
        throw Error(ErrorKind::ValidationError, "localization witness failed for " + v.to_string());
      result.exponents.push_back(i);
    }
  }
  return result;
}

}  // namespace toric
