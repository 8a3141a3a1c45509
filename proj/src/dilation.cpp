#include "toric/dilation.hpp"

namespace toric {

namespace {

void require_in_dual(const Cone& sigma, const LatticeVector& m) {
  if (!dual_cone(sigma).contains(m))
    throw Error(ErrorKind::WeightNotInDual, m.to_string() + " is not in the dual of " + sigma.to_string());
}

void require_sequence(const std::vector<long>& sequence) {
  for (long c : sequence)
    if (c < 2) throw Error(ErrorKind::InvalidArgument, "dilation factors must be at least 2, got " + std::to_string(c));
}

Integer power(long c, std::size_t p) {
  Integer out = 1;
  for (std::size_t i = 0; i < p; ++i) out *= c;
  return out;
}

}  // namespace

std::vector<long> default_dilation_sequence() { return {2, 2, 2, 2, 2, 2}; }

ScalingCheck scaling_law_check(const Cone& sigma, const LatticeVector& m, std::size_t p, long c) {
  if (c < 1) throw Error(ErrorKind::InvalidArgument, "dilation factor must be positive");
  require_in_dual(sigma, m);
  const std::size_t n = m.rank();
  const LatticeVector cm = Integer(c) * m;
  const Integer factor = power(c, p);
  std::vector<QVector> direct_rows, scaled_rows;
  ScalingCheck check;
  for (const auto& t : omega_image_tuples(monoid_of(sigma), m, p)) {
    std::vector<LatticeVector> dilated;
    for (const auto& u : t) dilated.push_back(Integer(c) * u);
    auto d = wedge(dilated, n);
    auto w = wedge(t, n);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (d[i] != factor * w[i]) check.coordinates_agree = false;
    direct_rows.push_back(to_rational(d));
    QVector s = to_rational(w);
    for (auto& x : s) x *= factor;
    scaled_rows.push_back(std::move(s));
  }
  if (p == 0) direct_rows = scaled_rows = {QVector{Rational(1)}};
  check.direct = GradedSubspace{cm, p, Subspace::span(binomial(n, p), direct_rows)};
  check.scaled = GradedSubspace{cm, p, Subspace::span(binomial(n, p), scaled_rows)};
  check.spans_agree = check.direct.space == check.scaled.space;
  check.lands_in_image = omega_image_weight(sigma, cm, p).space.contains(check.direct.space);
  return check;
}

GradedSubspace theta_image(const Cone& sigma, const LatticeVector& m, std::size_t p, long c) {
  return scaling_law_check(sigma, m, p, c).direct;
}

bool tilde_theta_iso_check(const Cone& sigma, const LatticeVector& m, std::size_t p, long c) {
  if (c < 1) throw Error(ErrorKind::InvalidArgument, "dilation factor must be positive");
  return tilde_omega_weight(sigma, m, p).space == tilde_omega_weight(sigma, Integer(c) * m, p).space;
}

std::vector<std::size_t> DilationTrace::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : chain) out.push_back(s.dim());
  return out;
}

DilationTrace dilation_chain(const Cone& sigma, const LatticeVector& m, std::size_t p,
                             const std::vector<long>& sequence) {
  require_in_dual(sigma, m);
  require_sequence(sequence);
  DilationTrace t;
  t.sigma = sigma;
  t.weight = m;
  t.degree = p;
  t.sequence = sequence;
  t.tilde = tilde_omega_weight(sigma, m, p);
  LatticeVector w = m;
  for (std::size_t i = 0;; ++i) {
    t.weights.push_back(w);
    t.chain.push_back(omega_image_weight(sigma, w, p));
    if (i > 0 && t.chain[i - 1].space == t.tilde.space && t.chain[i].space == t.tilde.space) {
      t.stabilized_at = i - 1;
      break;
    }
    if (i == sequence.size()) break;
    w = Integer(sequence[i]) * w;
  }
  return t;
}

DilationTrace colimit_trace(const Cone& sigma, const LatticeVector& m, std::size_t p,
                            const std::vector<long>& sequence) {
  DilationTrace t = dilation_chain(sigma, m, p, sequence);
  if (!t.stabilized_at) {
    std::string dims;
    for (auto d : t.dims()) dims += (dims.empty() ? "" : ",") + std::to_string(d);
    throw Error(ErrorKind::NotStabilized, "image chain for " + sigma.to_string() + " at " + m.to_string() +
                                              " has dims " + dims + ", tilde dim " + std::to_string(t.tilde.dim()));
  }
  return t;
}

HochschildColimitReport hh_colimit_check(const Cone& sigma, const LatticeVector& m, std::size_t q,
                                         const std::vector<long>& sequence, const HochschildOptions& options) {
  require_in_dual(sigma, m);
  require_sequence(sequence);
  HochschildColimitReport r;
  r.sigma = sigma;
  r.weight = m;
  r.degree = q;
  r.sequence = sequence;
  r.tilde_dim = tilde_omega_weight(sigma, m, q).dim();
  const AffineMonoid a = monoid_of(sigma);
  HochschildOptions opts = options;
  opts.max_degree = q;
  LatticeVector w = m;
  for (std::size_t i = 0;; ++i) {
    r.weights.push_back(w);
    r.hochschild_dims.push_back(hochschild_weight_oracle(a, w, opts)[q]);
    r.image_dims.push_back(omega_image_weight(a, w, q).dim());
    if (i > 0 && r.hochschild_dims[i - 1] == r.tilde_dim && r.hochschild_dims[i] == r.tilde_dim) {
      r.stabilized_at = i - 1;
      return r;
    }
    if (i == sequence.size()) break;
    w = Integer(sequence[i]) * w;
  }
  throw Error(ErrorKind::NotStabilized, "Hochschild dimensions at " + m.to_string() + " did not reach " +
                                            std::to_string(r.tilde_dim) + " along the sequence");
}

}  // namespace toric
