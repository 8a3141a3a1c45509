#include "toric/cech.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace toric {

SheafSpec SheafSpec::parse(const std::string& text) {
  if (text == "structure") return structure();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string kind = text.substr(0, colon);
    std::string digits = text.substr(colon + 1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() < 4) {
      std::size_t p = std::stoul(digits);
      if (kind == "tilde") return tilde(p);
      if (kind == "image") return image(p);
    }
  }
  throw Error(ErrorKind::ParseError, "sheaf must be structure, tilde:p or image:p, got '" + text + "'");
}

std::string SheafSpec::to_string() const {
  switch (kind) {
    case Kind::Structure: return "structure";
    case Kind::Tilde: return "tilde:" + std::to_string(degree);
    case Kind::Image: return "image:" + std::to_string(degree);
  }
  return "";
}

GradedSubspace sections(const SheafSpec& sheaf, const Cone& cone, const LatticeVector& m) {
  switch (sheaf.kind) {
    case SheafSpec::Kind::Structure: return tilde_omega_weight(cone, m, 0);
    case SheafSpec::Kind::Tilde: return tilde_omega_weight(cone, m, sheaf.degree);
    case SheafSpec::Kind::Image: return omega_image_weight(cone, m, sheaf.degree);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown sheaf");
}

namespace {

// Columns: images of the echelon basis of src under `ambient`, in echelon coordinates of tgt.
QMatrix map_between(const Subspace& src, const Subspace& tgt, const QMatrix& ambient) {
  QMatrix out(tgt.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    QVector c = tgt.coordinates(ambient.apply(src.basis_vector(j)));
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

void put_block(QMatrix& dst, std::size_t row0, std::size_t col0, const QMatrix& src, int sign) {
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) dst(row0 + r, col0 + c) += sign > 0 ? src(r, c) : -src(r, c);
}

// Sorts in place and returns the sign of the permutation, or 0 on a repeated entry.
int sort_with_sign(std::vector<std::size_t>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

// Block diagonal map C^q(from) -> C^q(to) applying `ambient` tuple by tuple.
QMatrix tuplewise(const CechComplex& from, const CechComplex& to, std::size_t q, const QMatrix& ambient) {
  QMatrix out(to.complex.dim(q), from.complex.dim(q));
  for (std::size_t i = 0; i < from.tuples[q].size(); ++i)
    put_block(out, to.offsets[q][i], from.offsets[q][i], map_between(from.sections[q][i], to.sections[q][i], ambient),
              1);
  return out;
}

}  // namespace

CechCover::CechCover(Fan f, std::vector<std::size_t> order) : fan_(std::move(f)) {
  auto check = validate(fan_);
  if (!check.ok) throw Error(ErrorKind::InvalidFan, check.axiom + ": " + check.message);
  auto maximal = fan_.maximal_cones();
  if (order.empty()) {
    order.resize(maximal.size());
    std::iota(order.begin(), order.end(), 0);
  }
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(maximal.size());
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) throw Error(ErrorKind::InvalidArgument, "chart order is not a permutation");
  }
  for (auto i : order) charts_.push_back(maximal[i]);

  // charts_containing[c]: bitmask of charts containing fan cone c.
  const auto& cones = fan_.cones();
  const std::size_t k = charts_.size();
  if (k > 20) throw Error(ErrorKind::BudgetExceeded, "Čech cover with more than 20 charts");
  std::vector<unsigned long> containing(cones.size(), 0);
  for (std::size_t c = 0; c < cones.size(); ++c)
    for (std::size_t i = 0; i < k; ++i)
      if (charts_[i].contains(cones[c])) containing[c] |= 1ul << i;

  tuples_.resize(k);
  meets_.resize(k);
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    std::vector<std::size_t> tuple;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) tuple.push_back(i);
    // The meet is the largest cone lying in every chart of the tuple.
    std::size_t best = cones.size();
    for (std::size_t c = 0; c < cones.size(); ++c)
      if ((containing[c] & mask) == mask && (best == cones.size() || cones[c].dim() > cones[best].dim())) best = c;
    const std::size_t q = tuple.size() - 1;
    tuples_[q].push_back(std::move(tuple));
    meets_[q].push_back(best);
  }
  // Lexicographic order inside each degree.
  for (std::size_t q = 0; q < k; ++q) {
    std::vector<std::size_t> idx(tuples_[q].size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return tuples_[q][a] < tuples_[q][b]; });
    std::vector<std::vector<std::size_t>> t;
    std::vector<std::size_t> mt;
    for (auto i : idx) {
      t.push_back(tuples_[q][i]);
      mt.push_back(meets_[q][i]);
    }
    tuples_[q] = std::move(t);
    meets_[q] = std::move(mt);
  }
}

std::size_t CechCover::tuple_index(const std::vector<std::size_t>& tuple) const {
  const auto& list = tuples_.at(tuple.size() - 1);
  auto it = std::lower_bound(list.begin(), list.end(), tuple);
  if (it == list.end() || *it != tuple) throw Error(ErrorKind::InvalidArgument, "not a tuple of the cover");
  return static_cast<std::size_t>(it - list.begin());
}

CechComplex CechCover::complex(const SheafSpec& sheaf, const std::optional<LatticeVector>& m,
                               const LatticeMatrix* embedding) const {
  const std::size_t p = sheaf.form_degree();
  const std::size_t n = embedding ? embedding->rows() : fan_.rank();
  const std::size_t ambient = binomial(n, p);
  std::optional<QMatrix> lift;
  if (embedding) lift = QMatrix::from_integer(wedge_power(*embedding, p));

  std::map<std::size_t, Subspace> cache;
  auto section_of = [&](std::size_t cone) -> const Subspace& {
    auto it = cache.find(cone);
    if (it != cache.end()) return it->second;
    Subspace s(ambient);
    if (m) {
      GradedSubspace g = sections(sheaf, fan_.cones()[cone], *m);
      if (lift) {
        std::vector<QVector> rows;
        for (const auto& b : g.space.basis_vectors()) rows.push_back(lift->apply(b));
        s = Subspace::span(ambient, rows);
      } else {
        s = g.space;
      }
    }
    return cache.emplace(cone, std::move(s)).first->second;
  };

  CechComplex out;
  out.sheaf = sheaf;
  out.weight = m;
  out.tuples = tuples_;
  const std::size_t k = charts_.size();
  out.sections.resize(k);
  out.offsets.resize(k);
  out.complex.dims.assign(k, 0);
  for (std::size_t q = 0; q < k; ++q)
    for (std::size_t i = 0; i < tuples_[q].size(); ++i) {
      out.sections[q].push_back(section_of(meets_[q][i]));
      out.offsets[q].push_back(out.complex.dims[q]);
      out.complex.dims[q] += out.sections[q].back().dim();
    }
  for (std::size_t q = 0; q + 1 < k; ++q) {
    QMatrix d(out.complex.dims[q + 1], out.complex.dims[q]);
    for (std::size_t t = 0; t < tuples_[q + 1].size(); ++t) {
      const auto& target = tuples_[q + 1][t];
      const Subspace& tsec = out.sections[q + 1][t];
      if (tsec.is_zero()) continue;
      for (std::size_t j = 0; j < target.size(); ++j) {
        std::vector<std::size_t> face = target;
        face.erase(face.begin() + static_cast<long>(j));
        const std::size_t s = tuple_index(face);
        if (out.sections[q][s].is_zero()) continue;
        put_block(d, out.offsets[q + 1][t], out.offsets[q][s], inclusion_matrix(out.sections[q][s], tsec),
                  j % 2 == 0 ? 1 : -1);
      }
    }
    out.complex.d.push_back(std::move(d));
  }
  return out;
}

std::vector<std::size_t> cech_cohomology(const Fan& f, const SheafSpec& sheaf, const LatticeVector& m) {
  return CechCover(f).complex(sheaf, m).complex.cohomology_dims();
}

CochainMap refinement_map(const CechCover& source, const CechComplex& from, const CechCover& target,
                          const CechComplex& to, const std::vector<std::size_t>& chart_map) {
  if (chart_map.size() != target.charts().size())
    throw Error(ErrorKind::InvalidArgument, "chart map has the wrong length");
  CochainMap f;
  const std::size_t n = std::min(from.tuples.size(), to.tuples.size());
  for (std::size_t q = 0; q < n; ++q) {
    QMatrix m(to.complex.dim(q), from.complex.dim(q));
    for (std::size_t t = 0; t < to.tuples[q].size(); ++t) {
      if (to.sections[q][t].is_zero()) continue;
      std::vector<std::size_t> image;
      for (auto i : to.tuples[q][t]) image.push_back(chart_map[i]);
      const int sign = sort_with_sign(image);
      if (sign == 0) continue;
      const std::size_t s = source.tuple_index(image);
      if (from.sections[q][s].is_zero()) continue;
      put_block(m, to.offsets[q][t], from.offsets[q][s], inclusion_matrix(from.sections[q][s], to.sections[q][t]),
                sign);
    }
    f.push_back(std::move(m));
  }
  return f;
}

DoubleComplex truncated_de_rham(const CechCover& cover, std::size_t t, const LatticeVector& m) {
  std::vector<CechComplex> columns;
  for (std::size_t j = 0; j <= t; ++j) columns.push_back(cover.complex(SheafSpec::tilde(j), m));
  const std::size_t nq = cover.charts().size();
  DoubleComplex dc;
  dc.dims.assign(nq, std::vector<std::size_t>(t + 1));
  dc.horizontal.assign(nq, std::vector<QMatrix>(t + 1));
  dc.vertical.assign(nq, std::vector<QMatrix>(t + 1));
  for (std::size_t q = 0; q < nq; ++q)
    for (std::size_t j = 0; j <= t; ++j) {
      dc.dims[q][j] = columns[j].complex.dim(q);
      dc.horizontal[q][j] = columns[j].complex.differential(q);
      if (j < t) dc.vertical[q][j] = tuplewise(columns[j], columns[j + 1], q, wedge_matrix(m, j));
    }
  return dc;
}

std::vector<std::size_t> hyper_cohomology_truncated(const Fan& f, std::size_t t, const LatticeVector& m) {
  return truncated_de_rham(CechCover(f), t, m).total().cohomology_dims();
}

DoubleComplex form_mapping_cone(const CechCover& cover, const LatticeVector& m) {
  CechComplex image = cover.complex(SheafSpec::image(1), m);
  CechComplex tilde = cover.complex(SheafSpec::tilde(1), m);
  const std::size_t nq = cover.charts().size();
  const QMatrix identity = QMatrix::identity(m.rank());
  DoubleComplex dc;
  dc.dims.assign(nq, std::vector<std::size_t>(2));
  dc.horizontal.assign(nq, std::vector<QMatrix>(2));
  dc.vertical.assign(nq, std::vector<QMatrix>(2));
  for (std::size_t q = 0; q < nq; ++q) {
    dc.dims[q] = {image.complex.dim(q), tilde.complex.dim(q)};
    dc.horizontal[q] = {image.complex.differential(q), tilde.complex.differential(q)};
    dc.vertical[q][0] = tuplewise(image, tilde, q, identity);
  }
  return dc;
}

std::vector<std::size_t> mapping_cone_cohomology(const Fan& f, const LatticeVector& m) {
  return form_mapping_cone(CechCover(f), m).total().cohomology_dims();
}

// ---------------------------------------------------------------------------
// Blow-up squares

namespace {

std::vector<std::size_t> padded(std::vector<std::size_t> v, std::size_t n) {
  v.resize(n, 0);
  return v;
}

// Chart i of `fine` lies in chart result[i] of `coarse` (first match in cover order).
std::vector<std::size_t> refining_charts(const CechCover& coarse, const CechCover& fine) {
  std::vector<std::size_t> out;
  for (const auto& c : fine.charts()) {
    std::size_t j = 0;
    while (j < coarse.charts().size() && !coarse.charts()[j].contains(c)) ++j;
    if (j == coarse.charts().size())
      throw Error(ErrorKind::MalformedSquare, c.to_string() + " lies in no chart of the coarser fan");
    out.push_back(j);
  }
  return out;
}

// Chart i of the orbit closure cover is the image of chart result[i] of the ambient cover.
std::vector<std::size_t> orbit_charts(const CechCover& ambient, const CechCover& orbit, const OrbitClosureData& data) {
  std::vector<std::size_t> out;
  for (const auto& c : orbit.charts()) {
    std::size_t j = 0;
    while (j < ambient.charts().size() &&
           !(ambient.charts()[j].contains(data.sigma) && data.project(ambient.charts()[j]) == c))
      ++j;
    if (j == ambient.charts().size())
      throw Error(ErrorKind::MalformedSquare, c.to_string() + " is not the image of a chart");
    out.push_back(j);
  }
  return out;
}

QMatrix negated(const QMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = -m(r, c);
  return out;
}

}  // namespace

BlowupLesReport blowup_les_check(const BlowupSquare& sq, std::size_t p, const LatticeVector& m) {
  const CechCover x(sq.base), xp(sq.subdivided), v(sq.v.fan_bar), vp(sq.v_prime.fan_bar);
  const SheafSpec sheaf = SheafSpec::tilde(p);
  const LatticeMatrix ev = sq.v.quotient.projection.transpose();
  const LatticeMatrix evp = sq.v_prime.quotient.projection.transpose();
  std::optional<LatticeVector> mv, mvp;
  if (sq.v.weight_is_orthogonal(m)) mv = sq.v.restrict_weight(m);
  if (sq.v_prime.weight_is_orthogonal(m)) mvp = sq.v_prime.restrict_weight(m);

  const CechComplex cx = x.complex(sheaf, m), cxp = xp.complex(sheaf, m);
  const CechComplex cv = v.complex(sheaf, mv, &ev), cvp = vp.complex(sheaf, mvp, &evp);

  const auto xp_to_x = refining_charts(x, xp);
  const auto v_to_x = orbit_charts(x, v, sq.v);
  const auto vp_to_xp = orbit_charts(xp, vp, sq.v_prime);
  std::vector<std::size_t> vp_to_v;
  for (auto i : vp_to_xp) {
    auto it = std::find(v_to_x.begin(), v_to_x.end(), xp_to_x[i]);
    if (it == v_to_x.end()) throw Error(ErrorKind::MalformedSquare, "exceptional chart maps outside the center");
    vp_to_v.push_back(static_cast<std::size_t>(it - v_to_x.begin()));
  }

  // alpha: C(X) -> A = C(X') ⊕ C(V); beta: A -> B = C(V'), beta = (restriction, -pullback).
  const Complex a = direct_sum(cxp.complex, cv.complex);
  const Complex& b = cvp.complex;
  CochainMap alpha = stack_maps(refinement_map(x, cx, xp, cxp, xp_to_x), cx.complex, cxp.complex,
                                refinement_map(x, cx, v, cv, v_to_x), cv.complex);
  CochainMap to_exceptional = refinement_map(xp, cxp, vp, cvp, vp_to_xp);
  CochainMap from_center = refinement_map(v, cv, vp, cvp, vp_to_v);
  const std::size_t len = std::max({cx.complex.length(), a.length(), b.length()}) + 1;
  CochainMap beta;
  for (std::size_t q = 0; q < len; ++q) {
    QMatrix m_q(b.dim(q), a.dim(q));
    put_block(m_q, 0, 0, map_component(to_exceptional, cxp.complex, b, q), 1);
    put_block(m_q, 0, cxp.complex.dim(q), map_component(from_center, cv.complex, b, q), -1);
    beta.push_back(std::move(m_q));
  }

  const Complex fib = mapping_fiber(beta, a, b);
  CochainMap compare;  // x -> (alpha x, 0)
  for (std::size_t q = 0; q < len; ++q) {
    QMatrix m_q(fib.dim(q), cx.complex.dim(q));
    put_block(m_q, 0, 0, map_component(alpha, cx.complex, a, q), 1);
    compare.push_back(std::move(m_q));
  }
  // B shifted up by one with negated differential, so that y -> (0, y) is a cochain map into the fiber.
  Complex shifted;
  shifted.dims.push_back(0);
  for (std::size_t q = 0; q < b.length(); ++q) shifted.dims.push_back(b.dim(q));
  shifted.d.push_back(QMatrix(b.dim(0), 0));
  for (std::size_t q = 0; q + 1 < b.length(); ++q) shifted.d.push_back(negated(b.differential(q)));
  CochainMap include;
  for (std::size_t q = 0; q < len + 1; ++q) {
    QMatrix m_q(fib.dim(q), shifted.dim(q));
    for (std::size_t i = 0; i < shifted.dim(q); ++i) m_q(a.dim(q) + i, i) = 1;
    include.push_back(std::move(m_q));
  }

  BlowupLesReport r;
  r.degree = p;
  r.weight = m;
  const std::size_t n = len - 1;
  r.h_base = padded(cx.complex.cohomology_dims(), n);
  r.h_subdivided = padded(cxp.complex.cohomology_dims(), n);
  r.h_center = padded(cv.complex.cohomology_dims(), n);
  r.h_exceptional = padded(b.cohomology_dims(), n);
  const auto h_fib = padded(fib.cohomology_dims(), n + 1);

  bool composite_zero = true;
  for (std::size_t q = 0; q < n; ++q)
    if (!(map_component(beta, a, b, q) * map_component(alpha, cx.complex, a, q)).is_zero()) composite_zero = false;
  r.exact = composite_zero;

  for (std::size_t q = 0; q < n; ++q) {
    r.rank_pullback.push_back(induced_rank(alpha, cx.complex, a, q));
    r.rank_difference.push_back(induced_rank(beta, a, b, q));
    r.rank_connecting.push_back(induced_rank(include, shifted, fib, q + 1));
    const std::size_t iso_rank = induced_rank(compare, cx.complex, fib, q);
    r.comparison_iso.push_back(iso_rank == r.h_base[q] && iso_rank == h_fib[q]);
  }
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t into_base = q > 0 ? r.rank_connecting[q - 1] : 0;
    const bool at_base = into_base + r.rank_pullback[q] == r.h_base[q];
    const bool at_middle = r.rank_pullback[q] + r.rank_difference[q] == r.h_subdivided[q] + r.h_center[q];
    const bool at_exceptional = r.rank_difference[q] + r.rank_connecting[q] == r.h_exceptional[q];
    r.exact = r.exact && at_base && at_middle && at_exceptional && r.comparison_iso[q];
    const long term = static_cast<long>(r.h_base[q]) - static_cast<long>(r.h_subdivided[q]) -
                      static_cast<long>(r.h_center[q]) + static_cast<long>(r.h_exceptional[q]);
    r.alternating_sum += q % 2 == 0 ? term : -term;
  }
  return r;
}

}  // namespace toric
