#include "toric/forms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace toric {

namespace {

GradedSubspace zero_piece(const LatticeVector& m, std::size_t p) {
  return GradedSubspace{m, p, Subspace(binomial(m.rank(), p))};
}

GradedSubspace span_of_wedges(const LatticeVector& m, std::size_t p,
                              const std::vector<std::vector<LatticeVector>>& tuples) {
  std::vector<QVector> rows;
  for (const auto& t : tuples) {
    auto w = wedge(t, m.rank());
    if (std::any_of(w.begin(), w.end(), [](const Integer& x) { return x != 0; })) rows.push_back(to_rational(w));
  }
  return GradedSubspace{m, p, Subspace::span(binomial(m.rank(), p), rows)};
}

// Visits every p-element subset of {0, ..., n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t p, F&& visit) {
  std::vector<std::size_t> idx(p);
  for (std::size_t i = 0; i < p; ++i) idx[i] = i;
  if (p > n) return;
  for (;;) {
    visit(idx);
    std::size_t i = p;
    while (i > 0 && idx[i - 1] == n - p + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

AffineMonoid monoid_of(const Cone& sigma) {
  static std::mutex mutex;
  static std::map<Cone, AffineMonoid> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(sigma);
  if (it == cache.end()) it = cache.emplace(sigma, AffineMonoid::of_source_cone(sigma)).first;
  return it->second;
}

AffineMonoid face_monoid(const Cone& sigma, const LatticeVector& m) {
  Cone face = face_of_weight(sigma, m);
  return AffineMonoid::of_weight_cone(Cone::from_inequalities(sigma.rank(), sigma.generators(), face.generators()));
}

GradedSubspace tilde_omega_weight(const Cone& sigma, const LatticeVector& m, std::size_t p) {
  if (m.rank() != sigma.rank()) throw Error(ErrorKind::RankMismatch, "tilde_omega_weight: weight rank");
  for (const auto& l : sigma.lineality())
    if (pairing(m, l) != 0) return zero_piece(m, p);
  std::vector<bool> vanishing;
  for (const auto& r : sigma.rays()) {
    Integer x = pairing(m, r);
    if (x < 0) return zero_piece(m, p);
    vanishing.push_back(x == 0);
  }
  // The piece depends on m only through the face σ(m); weight sweeps hit few faces.
  static std::mutex mutex;
  static std::map<std::tuple<Cone, std::vector<bool>, std::size_t>, Subspace> cache;
  auto key = std::make_tuple(sigma, vanishing, p);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return GradedSubspace{m, p, it->second};
  }
  // M ∩ σ(m)^perp is the equation lattice of the face.
  const auto basis = face_of_weight(sigma, m).equations();
  std::vector<std::vector<LatticeVector>> tuples;
  for_each_subset(basis.size(), p, [&](const std::vector<std::size_t>& s) {
    std::vector<LatticeVector> t;
    for (auto i : s) t.push_back(basis[i]);
    tuples.push_back(std::move(t));
  });
  GradedSubspace out = span_of_wedges(m, p, tuples);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(std::move(key), out.space);
  return out;
}

std::vector<std::vector<LatticeVector>> omega_image_tuples(const AffineMonoid& a, const LatticeVector& m,
                                                           std::size_t p) {
  if (m.rank() != a.rank()) throw Error(ErrorKind::RankMismatch, "omega_image_weight: weight rank");
  std::vector<std::vector<LatticeVector>> tuples;
  if (!a.contains(m)) return tuples;
  const auto& gens = a.hilbert_basis();
  for_each_subset(gens.size(), p, [&](const std::vector<std::size_t>& s) {
    LatticeVector rest = m;
    std::vector<LatticeVector> t;
    for (auto i : s) {
      rest -= gens[i];
      t.push_back(gens[i]);
    }
    if (a.contains(rest)) tuples.push_back(std::move(t));
  });
  return tuples;
}

GradedSubspace omega_image_weight(const AffineMonoid& a, const LatticeVector& m, std::size_t p) {
  if (m.rank() != a.rank()) throw Error(ErrorKind::RankMismatch, "omega_image_weight: weight rank");
  if (!a.contains(m)) return zero_piece(m, p);
  return span_of_wedges(m, p, omega_image_tuples(a, m, p));
}

GradedSubspace omega_image_weight(const Cone& sigma, const LatticeVector& m, std::size_t p) {
  return omega_image_weight(monoid_of(sigma), m, p);
}

std::size_t coker_dimension(const Cone& sigma, const LatticeVector& m, std::size_t p) {
  return tilde_omega_weight(sigma, m, p).dim() - omega_image_weight(sigma, m, p).dim();
}

QMatrix wedge_matrix(const LatticeVector& m, std::size_t p) {
  const std::size_t n = m.rank();
  const std::size_t cols = binomial(n, p);
  QMatrix out(binomial(n, p + 1), cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Rational> e(cols);
    e[j] = 1;
    auto img = wedge_left(m, e, p);
    for (std::size_t i = 0; i < img.size(); ++i) out(i, j) = img[i];
  }
  return out;
}

QMatrix derivative_map(const LatticeVector& m, std::size_t p, const GradedSubspace& domain) {
  if (domain.weight != m || domain.degree != p)
    throw Error(ErrorKind::WeightMismatch, "derivative_map: domain has weight " + domain.weight.to_string() +
                                               " and degree " + std::to_string(domain.degree));
  QMatrix full = wedge_matrix(m, p);
  return full * domain.space.basis().transpose();
}

QMatrix restriction_map(const Cone& sigma, const Cone& face, const LatticeVector& m, std::size_t p,
                        FormSheaf sheaf) {
  if (!is_face(sigma, face)) throw Error(ErrorKind::NotAFace, face.to_string() + " is not a face of " + sigma.to_string());
  auto piece = [&](const Cone& c) {
    return sheaf == FormSheaf::Tilde ? tilde_omega_weight(c, m, p) : omega_image_weight(c, m, p);
  };
  GradedSubspace source = piece(sigma);
  GradedSubspace target = piece(face);
  if (source.is_zero()) return QMatrix(target.dim(), 0);
  return inclusion_matrix(source.space, target.space);
}

GradedSubspace residue_kernel(const Cone& sigma, const LatticeVector& m, std::size_t p) {
  if (!dual_cone(sigma).contains(m)) return zero_piece(m, p);
  const std::size_t n = m.rank();
  const std::size_t dim = binomial(n, p);
  if (p == 0) return GradedSubspace{m, p, Subspace::whole(dim)};
  std::vector<QVector> stacked;
  for (const auto& r : sigma.rays()) {
    if (pairing(m, r) != 0) continue;
    QMatrix comp(binomial(n, p - 1), dim);
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<Rational> e(dim);
      e[j] = 1;
      auto img = contract(r, e, p);
      for (std::size_t i = 0; i < img.size(); ++i) comp(i, j) = img[i];
    }
    for (std::size_t i = 0; i < comp.rows(); ++i) stacked.push_back(comp.row(i));
  }
  if (stacked.empty()) return GradedSubspace{m, p, Subspace::whole(dim)};
  return GradedSubspace{m, p, kernel(QMatrix::from_rows(dim, stacked))};
}

bool residue_check(const Cone& sigma, const LatticeVector& m, std::size_t p) {
  if (!classify(sigma).smooth) throw Error(ErrorKind::NonSmoothCone, sigma.to_string() + " is not smooth");
  return residue_kernel(sigma, m, p) == tilde_omega_weight(sigma, m, p);
}

// ---------------------------------------------------------------------------
// Hochschild oracle

namespace {

using Chain = std::vector<LatticeVector>;

class PointedHochschild {
 public:
  PointedHochschild(const AffineMonoid& a, const LatticeVector& w, std::size_t budget)
      : a_(a), w_(w), budget_(budget) {}

  std::vector<std::size_t> dims(std::size_t max_degree) {
    std::vector<std::vector<Chain>> chains(max_degree + 2);
    std::vector<std::map<Chain, std::size_t>> index(max_degree + 2);
    for (std::size_t q = 0; q <= max_degree + 1; ++q) {
      Chain tail;
      collect(w_, q, tail, chains[q]);
      for (std::size_t i = 0; i < chains[q].size(); ++i) index[q].emplace(chains[q][i], i);
    }
    std::vector<std::size_t> ranks(max_degree + 2, 0);  // ranks[q] = rank of b: C_q -> C_{q-1}
    for (std::size_t q = 1; q <= max_degree + 1; ++q) {
      std::vector<SparseRow> rows;
      rows.reserve(chains[q].size());
      for (const auto& c : chains[q]) {
        SparseRow row;
        auto add = [&](const Chain& target, int sign) {
          auto it = index[q - 1].find(target);
          if (it == index[q - 1].end())
            throw Error(ErrorKind::ValidationError, "Hochschild boundary left the weight piece");
          Rational& x = row[it->second];
          x += sign;
          if (x == 0) row.erase(it->second);
        };
        for (std::size_t i = 0; i < q; ++i) {
          Chain t;
          for (std::size_t j = 0; j < i; ++j) t.push_back(c[j]);
          t.push_back(c[i] + c[i + 1]);
          for (std::size_t j = i + 2; j <= q; ++j) t.push_back(c[j]);
          add(t, i % 2 == 0 ? 1 : -1);
        }
        Chain t{c[q] + c[0]};
        for (std::size_t j = 1; j < q; ++j) t.push_back(c[j]);
        add(t, q % 2 == 0 ? 1 : -1);
        rows.push_back(std::move(row));
      }
      ranks[q] = sparse_rank(std::move(rows));
    }
    std::vector<std::size_t> out(max_degree + 1);
    for (std::size_t q = 0; q <= max_degree; ++q) out[q] = chains[q].size() - ranks[q] - ranks[q + 1];
    return out;
  }

 private:
  // Chains (u0, u1, ..., uq) with u1..uq nonzero; `tail` holds u1..u_k chosen so far.
  void collect(const LatticeVector& rest, std::size_t remaining, Chain& tail, std::vector<Chain>& out) {
    if (remaining == 0) {
      Chain c{rest};
      c.insert(c.end(), tail.begin(), tail.end());
      out.push_back(std::move(c));
      if (++produced_ > budget_)
        throw Error(ErrorKind::BudgetExceeded, "Hochschild complex exceeds " + std::to_string(budget_) + " chains");
      return;
    }
    for (const auto& u : divisors_of(rest)) {
      if (u.is_zero()) continue;
      tail.push_back(u);
      collect(rest - u, remaining - 1, tail, out);
      tail.pop_back();
    }
  }

  const std::vector<LatticeVector>& divisors_of(const LatticeVector& v) {
    auto it = memo_.find(v);
    if (it == memo_.end()) it = memo_.emplace(v, divisors(a_, v)).first;
    return it->second;
  }

  const AffineMonoid& a_;
  LatticeVector w_;
  std::size_t budget_;
  std::size_t produced_ = 0;
  std::map<LatticeVector, std::vector<LatticeVector>> memo_;
};

}  // namespace

std::vector<std::size_t> hochschild_weight_oracle(const AffineMonoid& a, const LatticeVector& m,
                                                  HochschildOptions options) {
  if (options.max_degree > 3)
    throw Error(ErrorKind::DegreeTooLarge, "Hochschild oracle supports degrees up to 3, asked for " +
                                               std::to_string(options.max_degree));
  std::vector<std::size_t> out(options.max_degree + 1, 0);
  if (!a.contains(m)) return out;
  const PointedSplit& split = a.pointed_split();
  LatticeVector bar = split.projection.apply(m);
  PointedHochschild complex(*split.pointed, bar, options.budget);
  auto pointed = complex.dims(options.max_degree);
  const std::size_t u = split.unit_basis.size();
  for (std::size_t q = 0; q <= options.max_degree; ++q)
    for (std::size_t i = 0; i <= std::min(q, u); ++i) out[q] += binomial(u, i) * pointed[q - i];
  return out;
}

std::vector<std::size_t> hochschild_weight_oracle(const Cone& sigma, const LatticeVector& m,
                                                  HochschildOptions options) {
  return hochschild_weight_oracle(monoid_of(sigma), m, options);
}

}  // namespace toric
