#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/linalg.hpp"

namespace toric {

namespace {

bool by_dimension(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a < b;
}

Cone ray_cone(const LatticeVector& v) { return Cone::from_generators(v.rank(), {v}); }

}  // namespace

Fan Fan::from_cones(std::size_t rank, const std::vector<Cone>& cones) {
  Fan f;
  f.rank_ = rank;
  for (const auto& c : cones) {
    if (c.rank() != rank) throw Error(ErrorKind::RankMismatch, "Fan::from_cones: cone of rank " + std::to_string(c.rank()));
    if (c.is_strongly_convex()) {
      auto fs = faces(c);
      f.cones_.insert(f.cones_.end(), fs.begin(), fs.end());
    } else {
      f.cones_.push_back(c);
    }
  }
  if (f.cones_.empty()) f.cones_.push_back(Cone::zero(rank));
  std::sort(f.cones_.begin(), f.cones_.end(), by_dimension);
  f.cones_.erase(std::unique(f.cones_.begin(), f.cones_.end()), f.cones_.end());
  for (std::size_t i = 0; i < f.cones_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < f.cones_.size() && maximal; ++j)
      if (j != i && f.cones_[j].dim() > f.cones_[i].dim() && f.cones_[j].contains(f.cones_[i])) maximal = false;
    if (maximal) f.maximal_.push_back(i);
  }
  return f;
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (auto i : maximal_) out.push_back(cones_[i]);
  return out;
}

std::optional<std::size_t> Fan::index_of(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c, by_dimension);
  if (it != cones_.end() && *it == c) return static_cast<std::size_t>(it - cones_.begin());
  return std::nullopt;
}

std::vector<LatticeVector> Fan::rays() const {
  std::vector<LatticeVector> out;
  for (const auto& c : cones_)
    if (c.dim() == 1 && c.is_strongly_convex()) out.push_back(c.rays().front());
  std::sort(out.begin(), out.end());
  return out;
}

FanCheck validate(const Fan& f) {
  FanCheck check;
  for (const auto& c : f.cones()) {
    if (!c.is_strongly_convex()) {
      check.ok = false;
      check.axiom = "strong convexity";
      check.witnesses = {c};
      check.message = c.to_string() + " contains a line";
      return check;
    }
  }
  for (const auto& c : f.cones()) {
    for (const auto& face : faces(c)) {
      if (!f.contains(face)) {
        check.ok = false;
        check.axiom = "face closure";
        check.witnesses = {c, face};
        check.message = "face " + face.to_string() + " of " + c.to_string() + " is missing";
        return check;
      }
    }
  }
  // With faces closed, compatibility of the maximal cones implies it for all cones.
  const auto cones = f.maximal_cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      Cone meet = intersect(cones[i], cones[j]);
      if (!is_face(cones[i], meet) || !is_face(cones[j], meet)) {
        check.ok = false;
        check.axiom = "intersection";
        check.witnesses = {cones[i], cones[j], meet};
        check.message = "the intersection " + meet.to_string() + " of " + cones[i].to_string() + " and " +
                        cones[j].to_string() + " is not a face of both";
        return check;
      }
    }
  }
  return check;
}

bool is_complete(const Fan& f) {
  const std::size_t n = f.rank();
  if (n == 0) return true;
  std::map<Cone, int> incidence;
  for (const auto& m : f.maximal_cones()) {
    if (m.dim() != n) return false;
    for (const auto& face : faces(m))
      if (face.dim() + 1 == n) ++incidence[face];
  }
  return !incidence.empty() &&
         std::all_of(incidence.begin(), incidence.end(), [](const auto& kv) { return kv.second == 2; });
}

std::vector<Cone> star(const Fan& f, const Cone& sigma) {
  if (!f.contains(sigma)) throw Error(ErrorKind::ConeNotInFan, sigma.to_string() + " is not a cone of the fan");
  std::vector<Cone> out;
  for (const auto& c : f.cones())
    if (c.contains(sigma)) out.push_back(c);
  return out;
}

bool OrbitClosureData::weight_is_orthogonal(const LatticeVector& m) const {
  for (const auto& g : sigma.generators())
    if (pairing(m, g) != 0) return false;
  return true;
}

LatticeVector OrbitClosureData::restrict_weight(const LatticeVector& m) const {
  if (!weight_is_orthogonal(m))
    throw Error(ErrorKind::WeightMismatch, m.to_string() + " is not orthogonal to " + sigma.to_string());
  return quotient.section.transpose().apply(m);
}

Cone OrbitClosureData::project(const Cone& c) const {
  std::vector<LatticeVector> gens;
  for (const auto& r : c.rays()) {
    LatticeVector p = quotient.project(r);
    if (!p.is_zero()) gens.push_back(p);
  }
  return Cone::from_generators(quotient.quotient_rank, gens);
}

OrbitClosureData orbit_closure(const Fan& f, const Cone& sigma) {
  auto cones = star(f, sigma);
  OrbitClosureData data;
  data.sigma = sigma;
  data.quotient = quotient_lattice(f.rank(), sigma.rays());
  std::vector<Cone> images;
  for (const auto& c : cones) images.push_back(data.project(c));
  data.fan_bar = Fan::from_cones(data.quotient.quotient_rank, images);
  data.weight_lattice_basis = data.quotient.projection.row_vectors();
  return data;
}

std::optional<Cone> minimal_cone_containing(const Fan& f, const LatticeVector& v) {
  for (const auto& c : f.cones())  // sorted by dimension
    if (c.contains(v)) return c;
  return std::nullopt;
}

Fan star_subdivision(const Fan& f, const LatticeVector& v) {
  if (v.rank() != f.rank()) throw Error(ErrorKind::RankMismatch, "star_subdivision: ray rank");
  if (!v.is_primitive()) throw Error(ErrorKind::NonPrimitiveRay, v.to_string() + " is not primitive");
  if (!minimal_cone_containing(f, v))
    throw Error(ErrorKind::RayOutsideSupport, v.to_string() + " is outside the support of the fan");
  if (f.contains(ray_cone(v))) return f;
  std::vector<Cone> out;
  for (const auto& c : f.cones()) {
    if (!c.contains(v)) {
      out.push_back(c);
      continue;
    }
    for (const auto& face : faces(c))
      if (!face.contains(v)) out.push_back(extend(face, v));
  }
  return Fan::from_cones(f.rank(), out);
}

namespace {

// Ray used to lower the multiplicity of a non-smooth cone whose proper faces are smooth.
LatticeVector resolving_ray(const Cone& c) {
  const auto& rays = c.rays();
  if (rays.size() != c.dim()) {
    LatticeVector sum = LatticeVector::zero(c.rank());
    for (const auto& r : rays) sum += r;
    return primitive(sum);
  }
  // Interior parallelepiped point with the least coordinate sum.
  QMatrix g = QMatrix::from_integer(LatticeMatrix::from_columns(c.rank(), rays));
  QMatrix gt = g.transpose();
  QMatrix solve = inverse(gt * g) * gt;
  std::optional<LatticeVector> best;
  Rational best_height;
  for (const auto& p : parallelepiped_points(c.rank(), rays)) {
    if (p.is_zero()) continue;
    QVector lambda = solve.apply(to_rational(p));
    Rational h = 0;
    for (const auto& x : lambda) h += x;
    if (!best || h < best_height || (h == best_height && p < *best)) {
      best = p;
      best_height = h;
    }
  }
  return primitive(*best);
}

}  // namespace

Resolution resolve(const Fan& f, std::size_t max_steps) {
  Resolution res{f, {}};
  for (std::size_t step = 0;; ++step) {
    const Cone* target = nullptr;
    for (const auto& c : res.fan.cones()) {  // sorted by dimension: first hit is minimal
      if (!classify(c).smooth) {
        target = &c;
        break;
      }
    }
    if (!target) return res;
    if (step == max_steps) throw Error(ErrorKind::ValidationError, "resolve: step limit reached");
    LatticeVector v = resolving_ray(*target);
    res.trail.push_back(v);
    res.fan = star_subdivision(res.fan, v);
  }
}

BlowupSquare blowup_square(const Fan& f, const LatticeVector& v) {
  BlowupSquare sq;
  sq.base = f;
  sq.subdivided = star_subdivision(f, v);
  sq.new_ray = v;
  sq.minimal_cone = *minimal_cone_containing(f, v);
  const Cone rho = ray_cone(v);
  sq.degenerate = f.contains(rho);
  sq.v = orbit_closure(f, sq.minimal_cone);
  sq.v_prime = orbit_closure(sq.subdivided, rho);
  std::set<Cone> away_base, away_sub;
  for (const auto& c : f.cones())
    if (!c.contains(sq.minimal_cone)) away_base.insert(c);
  for (const auto& c : sq.subdivided.cones())
    if (!c.contains(rho)) away_sub.insert(c);
  sq.complement_matches = away_base == away_sub;
  if (!sq.complement_matches)
    throw Error(ErrorKind::MalformedSquare, "cones away from the stars differ for ray " + v.to_string());
  return sq;
}

Fan affine_fan(const Cone& sigma) { return Fan::from_cones(sigma.rank(), {sigma}); }

}  // namespace toric
