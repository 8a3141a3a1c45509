#include "toric/cone.hpp"

#include <algorithm>
#include <set>

#include "toric/linalg.hpp"

namespace toric {

namespace {

void require_rank(const LatticeVector& v, std::size_t rank, const char* where) {
  if (v.rank() != rank)
    throw Error(ErrorKind::RankMismatch, std::string(where) + ": expected rank " + std::to_string(rank) +
                                             ", got " + std::to_string(v.rank()));
}

// Clear denominators and divide by the content.
LatticeVector primitive_of(const QVector& v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(v.size());
  for (const auto& x : v) c.push_back(Integer(x * den));
  LatticeVector out(std::move(c));
  if (out.is_zero()) return out;
  return primitive(out);
}

// Orthogonal projection of v onto basis^perp (standard inner product),
// rescaled to a primitive integer vector.
LatticeVector project_out(const LatticeVector& v, const std::vector<LatticeVector>& basis) {
  if (basis.empty()) return v.is_zero() ? v : primitive(v);
  const std::size_t k = basis.size();
  QMatrix gram(k, k);
  QVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = pairing(basis[i], basis[j]);
    rhs[i] = pairing(basis[i], v);
  }
  QVector coeff = inverse(gram).apply(rhs);
  QVector out = to_rational(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.rank(); ++j) out[j] -= coeff[i] * basis[i][j];
  return primitive_of(out);
}

std::size_t row_rank(std::size_t rank, const std::vector<LatticeVector>& rows) {
  if (rows.empty() || rank == 0) return 0;
  return toric::rank(QMatrix::from_integer(LatticeMatrix::from_rows(rank, rows)));
}

struct Description {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> lineality;
};

// Double description: generators of { x in Q^rank : <a, x> >= 0 for all a }.
// Rays are extreme and pairwise non-parallel modulo the lineality space.
Description double_description(std::size_t rank, const std::vector<LatticeVector>& inequalities) {
  std::vector<LatticeVector> lin;
  for (std::size_t i = 0; i < rank; ++i) lin.push_back(LatticeVector::unit(rank, i));
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> processed;

  for (const auto& a_raw : inequalities) {
    if (a_raw.is_zero()) continue;
    const LatticeVector a = primitive(a_raw);

    auto pivot = std::find_if(lin.begin(), lin.end(), [&](const LatticeVector& l) { return pairing(a, l) != 0; });
    if (pivot != lin.end()) {
      LatticeVector l0 = *pivot;
      lin.erase(pivot);
      Integer s = pairing(a, l0);
      if (s < 0) {
        l0 = -l0;
        s = -s;
      }
      for (auto& l : lin) {
        Integer t = pairing(a, l);
        if (t != 0) l = primitive(s * l - t * l0);
      }
      for (auto& r : rays) {
        Integer t = pairing(a, r);
        if (t != 0) r = primitive(s * r - t * l0);
      }
      rays.push_back(l0);
      processed.push_back(a);
      continue;
    }

    std::vector<LatticeVector> pos, zero, neg;
    for (auto& r : rays) {
      Integer t = pairing(a, r);
      if (t > 0) pos.push_back(r);
      else if (t == 0) zero.push_back(r);
      else neg.push_back(r);
    }
    if (neg.empty()) {
      processed.push_back(a);
      continue;
    }
    const std::size_t prev_rank = row_rank(rank, processed);
    std::vector<LatticeVector> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        std::vector<LatticeVector> common;
        for (const auto& b : processed)
          if (pairing(b, p) == 0 && pairing(b, n) == 0) common.push_back(b);
        if (prev_rank < 2 || common.size() + 2 < prev_rank) continue;
        if (row_rank(rank, common) != prev_rank - 2) continue;
        Integer ap = pairing(a, p);
        Integer an = pairing(a, n);
        next.push_back(primitive(ap * n - an * p));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
    processed.push_back(a);
  }
  return Description{std::move(rays), std::move(lin)};
}

// Canonical form of a description: Hermite lineality, projected sorted rays.
Description canonical(std::size_t rank, Description d) {
  Description out;
  if (!d.lineality.empty()) out.lineality = saturation(rank, d.lineality);
  for (const auto& r : d.rays) {
    LatticeVector p = project_out(r, out.lineality);
    if (!p.is_zero()) out.rays.push_back(std::move(p));
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

std::vector<LatticeVector> with_negatives(const std::vector<LatticeVector>& rays,
                                          const std::vector<LatticeVector>& lineality) {
  std::vector<LatticeVector> out = rays;
  for (const auto& l : lineality) {
    out.push_back(l);
    out.push_back(-l);
  }
  return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Cone Cone::from_generators(std::size_t rank, const std::vector<LatticeVector>& generators) {
  for (const auto& g : generators) require_rank(g, rank, "Cone::from_generators");
  Description dual = canonical(rank, double_description(rank, generators));
  Description primal =
      canonical(rank, double_description(rank, with_negatives(dual.rays, dual.lineality)));
  Cone c;
  c.rank_ = rank;
  c.rays_ = std::move(primal.rays);
  c.lineality_ = std::move(primal.lineality);
  c.facets_ = std::move(dual.rays);
  c.equations_ = std::move(dual.lineality);
  return c;
}

Cone Cone::from_inequalities(std::size_t rank, const std::vector<LatticeVector>& inequalities,
                             const std::vector<LatticeVector>& equations) {
  for (const auto& a : inequalities) require_rank(a, rank, "Cone::from_inequalities");
  for (const auto& e : equations) require_rank(e, rank, "Cone::from_inequalities");
  Description primal =
      canonical(rank, double_description(rank, with_negatives(inequalities, equations)));
  Description dual =
      canonical(rank, double_description(rank, with_negatives(primal.rays, primal.lineality)));
  Cone c;
  c.rank_ = rank;
  c.rays_ = std::move(primal.rays);
  c.lineality_ = std::move(primal.lineality);
  c.facets_ = std::move(dual.rays);
  c.equations_ = std::move(dual.lineality);
  return c;
}

bool Cone::contains(const LatticeVector& v) const {
  require_rank(v, rank_, "Cone::contains");
  for (const auto& e : equations_)
    if (pairing(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (pairing(f, v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.rank_ != rank_) throw Error(ErrorKind::RankMismatch, "Cone::contains: rank mismatch");
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_)
    if (!contains(l) || !contains(-l)) return false;
  return true;
}

std::vector<LatticeVector> Cone::generators() const { return with_negatives(rays_, lineality_); }

std::string Cone::to_string() const {
  std::string s = "cone{";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) s += ",";
    s += rays_[i].to_string();
  }
  s += "}";
  if (!lineality_.empty()) {
    s += "+lin{";
    for (std::size_t i = 0; i < lineality_.size(); ++i) {
      if (i) s += ",";
      s += lineality_[i].to_string();
    }
    s += "}";
  }
  return s;
}

bool operator<(const Cone& a, const Cone& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
  return a.lineality_ < b.lineality_;
}

Cone dual_cone(const Cone& c) {
  Cone d = c;
  std::swap(d.rays_, d.facets_);
  std::swap(d.lineality_, d.equations_);
  return d;
}

Cone face_of_weight(const Cone& c, const LatticeVector& m) {
  require_rank(m, c.rank(), "face_of_weight");
  for (const auto& l : c.lineality())
    if (pairing(m, l) != 0)
      throw Error(ErrorKind::WeightNotInDual, m.to_string() + " is not constant on the lineality of " + c.to_string());
  std::vector<LatticeVector> gens;
  for (const auto& r : c.rays()) {
    Integer t = pairing(m, r);
    if (t < 0)
      throw Error(ErrorKind::WeightNotInDual,
                  m.to_string() + " is negative on ray " + r.to_string() + " of " + c.to_string());
    if (t == 0) gens.push_back(r);
  }
  for (const auto& l : c.lineality()) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return Cone::from_generators(c.rank(), gens);
}

std::vector<Cone> faces(const Cone& c) {
  if (!c.is_strongly_convex()) throw Error(ErrorKind::HasLineality, c.to_string() + " contains a line");
  const auto& rays = c.rays();
  // Faces as sets of ray indices, found by cutting with facets breadth first.
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue;
  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) all[i] = i;
  seen.insert(all);
  queue.push_back(all);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto current = queue[head];
    for (const auto& f : c.facets()) {
      std::vector<std::size_t> next;
      for (auto i : current)
        if (pairing(f, rays[i]) == 0) next.push_back(i);
      if (next.size() == current.size()) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Cone> out;
  for (const auto& subset : seen) {
    std::vector<LatticeVector> gens;
    for (auto i : subset) gens.push_back(rays[i]);
    out.push_back(Cone::from_generators(c.rank(), gens));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
  });
  return out;
}

namespace {

LatticeVector supporting_weight(const Cone& c, const Cone& f) {
  LatticeVector m = LatticeVector::zero(c.rank());
  const auto gens = f.generators();
  for (const auto& a : c.facets()) {
    bool vanishes = std::all_of(gens.begin(), gens.end(), [&](const LatticeVector& g) { return pairing(a, g) == 0; });
    if (vanishes) m += a;
  }
  return m;
}

}  // namespace

bool is_face(const Cone& c, const Cone& f) {
  if (c.rank() != f.rank()) throw Error(ErrorKind::RankMismatch, "is_face: rank mismatch");
  if (!c.contains(f)) return false;
  return face_of_weight(c, supporting_weight(c, f)) == f;
}

LatticeVector weight_for_face(const Cone& c, const Cone& f) {
  if (!is_face(c, f)) throw Error(ErrorKind::NotAFace, f.to_string() + " is not a face of " + c.to_string());
  return supporting_weight(c, f);
}

ConeClass classify(const Cone& c) {
  ConeClass k;
  k.strongly_convex = c.is_strongly_convex();
  k.dim = c.dim();
  if (!k.strongly_convex) return k;
  k.simplicial = c.rays().size() == k.dim;
  if (!k.simplicial) return k;
  if (c.rays().empty()) {
    k.smooth = true;
    return k;
  }
  auto d = smith_normal_form(LatticeMatrix::from_columns(c.rank(), c.rays())).diagonal();
  k.smooth = std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
  return k;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::RankMismatch, "intersect: rank mismatch");
  auto ineq = a.facets();
  ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
  auto eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.rank(), ineq, eq);
}

Cone extend(const Cone& c, const LatticeVector& v) {
  auto gens = c.generators();
  gens.push_back(v);
  return Cone::from_generators(c.rank(), gens);
}

std::vector<LatticeVector> parallelepiped_points(std::size_t rank, const std::vector<LatticeVector>& generators) {
  const std::size_t k = generators.size();
  if (k == 0) return {LatticeVector::zero(rank)};
  for (const auto& g : generators) require_rank(g, rank, "parallelepiped_points");
  auto basis = saturation(rank, generators);
  if (basis.size() != k) throw Error(ErrorKind::InvalidArgument, "parallelepiped_points: generators are dependent");

  // Coordinates T of the generators in the saturated basis: G = B T.
  Subspace span = Subspace::span(rank, [&] {
    std::vector<QVector> rows;
    for (const auto& b : basis) rows.push_back(to_rational(b));
    return rows;
  }());
  QMatrix echelon_of_basis(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    QVector c = span.coordinates(to_rational(basis[j]));
    for (std::size_t i = 0; i < k; ++i) echelon_of_basis(i, j) = c[i];
  }
  QMatrix basis_from_echelon = inverse(echelon_of_basis);
  LatticeMatrix t(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    QVector c = basis_from_echelon.apply(span.coordinates(to_rational(generators[j])));
    for (std::size_t i = 0; i < k; ++i) {
      if (c[i].get_den() != 1) throw Error(ErrorKind::InvalidArgument, "parallelepiped_points: non-integral coordinates");
      t(i, j) = c[i].get_num();
    }
  }

  // Z^k / T Z^k via the Smith form U T V = D; representatives U^-1 z, 0 <= z_i < d_i.
  SmithForm snf = smith_normal_form(t);
  auto d = snf.diagonal();
  QMatrix u_inv = inverse(QMatrix::from_integer(snf.U));
  QMatrix t_inv = inverse(QMatrix::from_integer(t));
  std::vector<LatticeVector> out;
  std::vector<Integer> z(k, 0);
  for (;;) {
    QVector y = u_inv.apply(to_rational(z));
    QVector lambda = t_inv.apply(y);
    for (auto& x : lambda) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      x -= fl;
    }
    QVector point(rank);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < rank; ++j) point[j] += lambda[i] * generators[i][j];
    std::vector<Integer> coords;
    for (const auto& x : point) coords.push_back(x.get_num());
    out.emplace_back(std::move(coords));
    std::size_t i = 0;
    while (i < k) {
      if (++z[i] < d[i]) break;
      z[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> lattice_points(std::size_t rank, const std::vector<AffineConstraint>& inequalities,
                                          const std::vector<AffineConstraint>& equations) {
  auto lift = [rank](const AffineConstraint& c) {
    require_rank(c.a, rank, "lattice_points");
    std::vector<Integer> v = c.a.coords();
    v.push_back(c.b);
    return LatticeVector(std::move(v));
  };
  std::vector<LatticeVector> ineq;
  for (const auto& c : inequalities) ineq.push_back(lift(c));
  ineq.push_back(LatticeVector::unit(rank + 1, rank));
  for (const auto& c : equations) {
    ineq.push_back(lift(c));
    ineq.push_back(-lift(c));
  }
  Description d = double_description(rank + 1, ineq);
  std::vector<LatticeVector> tops;
  bool recession = !d.lineality.empty();
  for (const auto& r : d.rays) {
    if (r[rank] > 0) tops.push_back(r);
    else recession = true;
  }
  if (tops.empty()) return {};
  if (recession) throw Error(ErrorKind::Unbounded, "lattice_points: feasible region is unbounded");

  std::vector<Integer> lo(rank), hi(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    for (std::size_t i = 0; i < tops.size(); ++i) {
      Integer f = ceil_div(tops[i][j], tops[i][rank]);
      Integer c = floor_div(tops[i][j], tops[i][rank]);
      if (i == 0 || f < lo[j]) lo[j] = f;
      if (i == 0 || c > hi[j]) hi[j] = c;
    }
    if (lo[j] > hi[j]) return {};
  }
  std::vector<LatticeVector> out;
  std::vector<Integer> x = lo;
  auto feasible = [&](const LatticeVector& p) {
    for (const auto& c : inequalities)
      if (pairing(c.a, p) + c.b < 0) return false;
    for (const auto& c : equations)
      if (pairing(c.a, p) + c.b != 0) return false;
    return true;
  };
  for (;;) {
    LatticeVector p(x);
    if (feasible(p)) out.push_back(std::move(p));
    bool done = true;
    for (std::size_t j = rank; j-- > 0;) {
      if (x[j] < hi[j]) {
        ++x[j];
        for (std::size_t t = j + 1; t < rank; ++t) x[t] = lo[t];
        done = false;
        break;
      }
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toric
