#include "toric/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toric {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::TorsionQuotient: return "TorsionQuotient";
    case ErrorKind::WeightNotInDual: return "WeightNotInDual";
    case ErrorKind::HasLineality: return "HasLineality";
    case ErrorKind::NonPointedMonoid: return "NonPointedMonoid";
    case ErrorKind::WeightOutsideMonoid: return "WeightOutsideMonoid";
    case ErrorKind::ConeNotInFan: return "ConeNotInFan";
    case ErrorKind::RayOutsideSupport: return "RayOutsideSupport";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NonSmoothCone: return "NonSmoothCone";
    case ErrorKind::WeightMismatch: return "WeightMismatch";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::MalformedSquare: return "MalformedSquare";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector::LatticeVector(std::initializer_list<long> values) {
  coords_.reserve(values.size());
  for (long v : values) coords_.emplace_back(v);
}

LatticeVector LatticeVector::zero(std::size_t rank) {
  return LatticeVector(std::vector<Integer>(rank, Integer(0)));
}

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t index) {
  LatticeVector v = zero(rank);
  v[index] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& x : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

static void require_same_rank(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::RankMismatch,
                "ranks " + std::to_string(a) + " and " + std::to_string(b) + " differ");
  }
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  require_same_rank(rank(), other.rank());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  require_same_rank(rank(), other.rank());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& scalar) {
  for (auto& x : coords_) x *= scalar;
  return *this;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string LatticeVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].get_str();
  }
  return out + ")";
}

Integer pairing(const LatticeVector& m, const LatticeVector& n) {
  require_same_rank(m.rank(), n.rank());
  Integer s = 0;
  for (std::size_t i = 0; i < m.rank(); ++i) s += m[i] * n[i];
  return s;
}

LatticeVector primitive(const LatticeVector& v) {
  Integer g = v.content();
  if (g == 0) throw Error(ErrorKind::ZeroVector, "primitive of the zero vector");
  LatticeVector out = v;
  if (g != 1) {
    for (std::size_t i = 0; i < out.rank(); ++i) mpz_divexact(out[i].get_mpz_t(), out[i].get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

// ---------------------------------------------------------------------------
// LatticeMatrix

LatticeMatrix LatticeMatrix::identity(std::size_t n) {
  LatticeMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LatticeMatrix LatticeMatrix::from_rows(std::size_t cols, const std::vector<LatticeVector>& rows) {
  LatticeMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_rank(rows[i].rank(), cols);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

LatticeMatrix LatticeMatrix::from_columns(std::size_t rows, const std::vector<LatticeVector>& columns) {
  LatticeMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_same_rank(columns[j].rank(), rows);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

LatticeVector LatticeMatrix::row(std::size_t i) const {
  std::vector<Integer> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return LatticeVector(std::move(v));
}

LatticeVector LatticeMatrix::column(std::size_t j) const {
  std::vector<Integer> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return LatticeVector(std::move(v));
}

std::vector<LatticeVector> LatticeMatrix::row_vectors() const {
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<LatticeVector> LatticeMatrix::column_vectors() const {
  std::vector<LatticeVector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

LatticeMatrix LatticeMatrix::transpose() const {
  LatticeMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

LatticeVector LatticeMatrix::apply(const LatticeVector& v) const {
  require_same_rank(v.rank(), cols_);
  std::vector<Integer> out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return LatticeVector(std::move(out));
}

LatticeMatrix operator*(const LatticeMatrix& a, const LatticeMatrix& b) {
  require_same_rank(a.cols_, b.rows_);
  LatticeMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

bool LatticeMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::string LatticeMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ",";
    out += row(i).to_string();
  }
  return out + "]";
}

Integer determinant(const LatticeMatrix& a) {
  require_same_rank(a.rows(), a.cols());
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  LatticeMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(LatticeMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(LatticeMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[target] -= q * row[source]
void add_row_multiple(LatticeMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
}

void add_col_multiple(LatticeMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) -= q * m(i, source);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const LatticeMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  LatticeMatrix s = a;
  LatticeMatrix u = LatticeMatrix::identity(m);
  LatticeMatrix v = LatticeMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    auto move_min_to_pivot = [&](bool whole_block) -> bool {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (s(i, j) == 0) continue;
          if (bi == m || abs(s(i, j)) < abs(s(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) return false;
      swap_rows(s, t, bi);
      swap_rows(u, t, bi);
      swap_cols(s, t, bj);
      swap_cols(v, t, bj);
      return true;
    };

    if (!move_min_to_pivot(true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = floor_div(s(i, t), s(t, t));
        add_row_multiple(s, i, t, q);
        add_row_multiple(u, i, t, q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = floor_div(s(t, j), s(t, t));
        add_col_multiple(s, j, t, q);
        add_col_multiple(v, j, t, q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_min_to_pivot(false);
        continue;
      }
      // Divisibility: fold an offending row into row t and repeat.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            add_row_multiple(s, t, i, Integer(-1));
            add_row_multiple(u, t, i, Integer(-1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (s(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) s(t, j) = -s(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithForm{std::move(s), std::move(u), std::move(v)};
}

LatticeMatrix hermite_normal_form(const LatticeMatrix& a) {
  LatticeMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, col) == 0) continue;
        if (best == m || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best == m) break;
      swap_rows(h, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, col) == 0) continue;
        add_row_multiple(h, i, r, floor_div(h(i, col), h(r, col)));
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0)
      for (std::size_t j = 0; j < n; ++j) h(r, j) = -h(r, j);
    for (std::size_t i = 0; i < r; ++i) add_row_multiple(h, i, r, floor_div(h(i, col), h(r, col)));
    ++r;
  }
  LatticeMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
  return out;
}

std::vector<LatticeVector> integer_kernel(const LatticeMatrix& a) {
  const std::size_t n = a.cols();
  SmithForm snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  std::vector<LatticeVector> basis;
  for (std::size_t j = r; j < n; ++j) basis.push_back(snf.V.column(j));
  if (basis.empty()) return basis;
  return hermite_normal_form(LatticeMatrix::from_rows(n, basis)).row_vectors();
}

std::vector<LatticeVector> saturation(std::size_t rank, const std::vector<LatticeVector>& gens) {
  auto annihilator = integer_kernel(LatticeMatrix::from_rows(rank, gens));
  return integer_kernel(LatticeMatrix::from_rows(rank, annihilator));
}

QuotientLattice quotient_lattice(std::size_t rank, const std::vector<LatticeVector>& gens,
                                 QuotientMode mode) {
  for (const auto& g : gens) require_same_rank(g.rank(), rank);
  if (mode == QuotientMode::Strict && !gens.empty()) {
    SmithForm snf = smith_normal_form(LatticeMatrix::from_columns(rank, gens));
    for (const auto& d : snf.diagonal()) {
      if (d != 0 && d != 1) {
        throw Error(ErrorKind::TorsionQuotient,
                    "sublattice has elementary divisor " + d.get_str());
      }
    }
  }
  QuotientLattice q;
  q.rank = rank;
  auto annihilator = integer_kernel(LatticeMatrix::from_rows(rank, gens));
  q.quotient_rank = annihilator.size();
  q.projection = LatticeMatrix::from_rows(rank, annihilator);
  q.kernel_basis = integer_kernel(q.projection);

  // Right inverse from the Smith form of the projection (all divisors are 1).
  SmithForm snf = smith_normal_form(q.projection);
  const std::size_t k = q.quotient_rank;
  LatticeMatrix head(rank, k);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < k; ++j) head(i, j) = snf.V(i, j);
  LatticeMatrix section = head * snf.U;
  // Canonical representative of each column modulo the kernel lattice.
  for (std::size_t j = 0; j < k; ++j) {
    LatticeVector s = section.column(j);
    for (const auto& h : q.kernel_basis) {
      std::size_t pivot = 0;
      while (h[pivot] == 0) ++pivot;
      s -= floor_div(s[pivot], h[pivot]) * h;
    }
    for (std::size_t i = 0; i < rank; ++i) section(i, j) = s[i];
  }
  q.section = std::move(section);
  return q;
}

// ---------------------------------------------------------------------------
// Exterior powers

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

WedgeBasis::WedgeBasis(std::size_t rank, std::size_t degree) : rank_(rank), degree_(degree) {
  if (degree > rank) return;
  std::vector<std::size_t> current(degree);
  for (std::size_t i = 0; i < degree; ++i) current[i] = i;
  while (true) {
    subsets_.push_back(current);
    if (degree == 0) break;
    std::size_t i = degree;
    while (i > 0 && current[i - 1] == rank - degree + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < degree; ++j) current[j] = current[j - 1] + 1;
  }
}

std::size_t WedgeBasis::index_of(const std::vector<std::size_t>& subset) const {
  auto it = std::lower_bound(subsets_.begin(), subsets_.end(), subset);
  if (it == subsets_.end() || *it != subset) {
    throw Error(ErrorKind::InvalidArgument, "subset is not in the wedge basis");
  }
  return static_cast<std::size_t>(it - subsets_.begin());
}

std::vector<Integer> wedge(std::span<const LatticeVector> vectors, std::size_t rank) {
  const std::size_t k = vectors.size();
  for (const auto& v : vectors) require_same_rank(v.rank(), rank);
  WedgeBasis basis(rank, k);
  std::vector<Integer> out(basis.size());
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const auto& cols = basis.subset(idx);
    LatticeMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = vectors[i][cols[j]];
    out[idx] = determinant(minor);
  }
  return out;
}

std::vector<Rational> wedge_left(const LatticeVector& m, std::span<const Rational> omega,
                                 std::size_t degree) {
  const std::size_t n = m.rank();
  WedgeBasis source(n, degree);
  WedgeBasis target(n, degree + 1);
  if (omega.size() != source.size()) throw Error(ErrorKind::RankMismatch, "wedge_left: bad form size");
  std::vector<Rational> out(target.size());
  for (std::size_t t = 0; t < target.size(); ++t) {
    const auto& subset = target.subset(t);
    Rational acc = 0;
    for (std::size_t pos = 0; pos < subset.size(); ++pos) {
      if (m[subset[pos]] == 0) continue;
      std::vector<std::size_t> rest;
      for (std::size_t q = 0; q < subset.size(); ++q)
        if (q != pos) rest.push_back(subset[q]);
      const Rational& coeff = omega[source.index_of(rest)];
      if (coeff == 0) continue;
      Rational term = Rational(m[subset[pos]]) * coeff;
      if (pos % 2) acc -= term;
      else acc += term;
    }
    out[t] = acc;
  }
  return out;
}

std::vector<Rational> contract(const LatticeVector& n, std::span<const Rational> omega,
                               std::size_t degree) {
  const std::size_t r = n.rank();
  WedgeBasis source(r, degree);
  if (omega.size() != source.size()) throw Error(ErrorKind::RankMismatch, "contract: bad form size");
  if (degree == 0) return {};
  WedgeBasis target(r, degree - 1);
  std::vector<Rational> out(target.size());
  for (std::size_t s = 0; s < source.size(); ++s) {
    if (omega[s] == 0) continue;
    const auto& subset = source.subset(s);
    for (std::size_t pos = 0; pos < subset.size(); ++pos) {
      if (n[subset[pos]] == 0) continue;
      std::vector<std::size_t> rest;
      for (std::size_t q = 0; q < subset.size(); ++q)
        if (q != pos) rest.push_back(subset[q]);
      Rational term = omega[s] * Rational(n[subset[pos]]);
      if (pos % 2) out[target.index_of(rest)] -= term;
      else out[target.index_of(rest)] += term;
    }
  }
  return out;
}

LatticeMatrix wedge_power(const LatticeMatrix& map, std::size_t degree) {
  const std::size_t n = map.rows();
  const std::size_t k = map.cols();
  WedgeBasis source(k, degree);
  WedgeBasis target(n, degree);
  LatticeMatrix out(target.size(), source.size());
  auto columns = map.column_vectors();
  for (std::size_t s = 0; s < source.size(); ++s) {
    std::vector<LatticeVector> images;
    for (auto idx : source.subset(s)) images.push_back(columns[idx]);
    auto coords = wedge(images, n);
    for (std::size_t t = 0; t < target.size(); ++t) out(t, s) = coords[t];
  }
  return out;
}

std::vector<LatticeVector> weight_box(std::size_t rank, long radius) {
  std::vector<LatticeVector> out;
  if (radius < 0) return out;
  std::vector<long> cur(rank, -radius);
  while (true) {
    LatticeVector v = LatticeVector::zero(rank);
    for (std::size_t i = 0; i < rank; ++i) v[i] = cur[i];
    out.push_back(std::move(v));
    std::size_t i = rank;
    while (i > 0 && cur[i - 1] == radius) {
      cur[i - 1] = -radius;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

}  // namespace toric
