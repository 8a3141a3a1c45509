#include "toric/linalg.hpp"

#include <algorithm>

namespace toric {

QVector to_rational(const LatticeVector& v) { return to_rational(v.coords()); }

QVector to_rational(const std::vector<Integer>& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// QMatrix

QMatrix QMatrix::from_rows(std::size_t cols, const std::vector<QVector>& rows) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::RankMismatch, "QMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<QVector>& columns) {
  QMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorKind::RankMismatch, "QMatrix::from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

QMatrix QMatrix::from_integer(const LatticeMatrix& a) {
  QMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVector QMatrix::column(std::size_t j) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::RankMismatch, "QMatrix::apply: size mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0 && (*this)(i, j) != 0) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::RankMismatch, "QMatrix product: shape mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

// ---------------------------------------------------------------------------
// Echelon forms

RowEchelon row_reduce(const QMatrix& input) {
  QMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (m(r, j) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  QMatrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  return RowEchelon{std::move(reduced), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Reduce along the shorter side.
  if (m.rows() > m.cols()) return row_reduce(m.transpose()).pivots.size();
  return row_reduce(m).pivots.size();
}

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::RankMismatch, "inverse: matrix is not square");
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = row_reduce(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw Error(ErrorKind::InvalidArgument, "inverse: matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::size_t sparse_rank(std::vector<SparseRow> rows) {
  // pivots[c]: reduced row whose leading column is c, normalized to lead 1
  std::map<std::size_t, SparseRow> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        Rational inv = 1 / lead->second;
        for (auto& [c, v] : row) v *= inv;
        const std::size_t col = lead->first;
        pivots.emplace(col, std::move(row));
        break;
      }
      Rational f = lead->second;
      for (const auto& [c, v] : it->second) {
        Rational& x = row[c];
        x -= f * v;
        if (x == 0) row.erase(c);
      }
    }
  }
  return pivots.size();
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  RowEchelon e = row_reduce(QMatrix::from_rows(ambient, vectors));
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = QMatrix::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

std::vector<QVector> Subspace::basis_vectors() const {
  std::vector<QVector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

QVector Subspace::coordinates(const QVector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::RankMismatch, "Subspace::coordinates: size mismatch");
  QVector c(dim());
  QVector residual = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    c[i] = v[pivots_[i]];
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_(i, j) != 0) residual[j] -= c[i] * basis_(i, j);
  }
  for (const auto& x : residual)
    if (x != 0) throw Error(ErrorKind::InvalidArgument, "vector is not in the subspace");
  return c;
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_) return false;
  QVector residual = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational c = v[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_(i, j) != 0) residual[j] -= c * basis_(i, j);
  }
  return std::all_of(residual.begin(), residual.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return whole(ambient_);
  return kernel(basis_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::RankMismatch, "intersect: ambient mismatch");
  if (is_zero() || other.is_zero()) return Subspace(ambient_);
  auto a = annihilator().basis_vectors();
  auto b = other.annihilator().basis_vectors();
  a.insert(a.end(), b.begin(), b.end());
  if (a.empty()) return whole(ambient_);
  return kernel(QMatrix::from_rows(ambient_, a));
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw Error(ErrorKind::RankMismatch, "sum: ambient mismatch");
  auto v = a.basis_vectors();
  auto w = b.basis_vectors();
  v.insert(v.end(), w.begin(), w.end());
  return Subspace::span(a.ambient_, v);
}

Subspace kernel(const QMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return Subspace::whole(n);
  RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace image(const QMatrix& a) {
  std::vector<QVector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  return Subspace::span(a.rows(), cols);
}

Subspace image_of(const QMatrix& a, const Subspace& s) {
  std::vector<QVector> images;
  for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(a.apply(s.basis_vector(i)));
  return Subspace::span(a.rows(), images);
}

QMatrix inclusion_matrix(const Subspace& source, const Subspace& target) {
  QMatrix m(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    QVector c = target.coordinates(source.basis_vector(j));
    for (std::size_t i = 0; i < target.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Complexes

QMatrix Complex::differential(std::size_t q) const {
  if (q < d.size()) return d[q];
  return QMatrix(dim(q + 1), dim(q));
}

Subspace Complex::cocycles(std::size_t q) const {
  QMatrix dq = differential(q);
  if (dq.rows() == 0) return Subspace::whole(dim(q));
  return kernel(dq);
}

Subspace Complex::coboundaries(std::size_t q) const {
  if (q == 0) return Subspace(dim(0));
  return image(differential(q - 1));
}

std::vector<std::size_t> Complex::cohomology_dims() const {
  std::vector<std::size_t> out(dims.size());
  std::vector<std::size_t> ranks(dims.size(), 0);
  for (std::size_t q = 0; q < dims.size(); ++q) ranks[q] = rank(differential(q));
  for (std::size_t q = 0; q < dims.size(); ++q) {
    out[q] = dims[q] - ranks[q] - (q > 0 ? ranks[q - 1] : 0);
  }
  return out;
}

bool Complex::squares_to_zero() const {
  for (std::size_t q = 0; q + 1 < dims.size(); ++q) {
    if (!(differential(q + 1) * differential(q)).is_zero()) return false;
  }
  return true;
}

QMatrix map_component(const CochainMap& f, const Complex& source, const Complex& target, std::size_t q) {
  if (q < f.size()) return f[q];
  return QMatrix(target.dim(q), source.dim(q));
}

bool is_cochain_map(const CochainMap& f, const Complex& source, const Complex& target) {
  const std::size_t n = std::max(source.length(), target.length());
  for (std::size_t q = 0; q < n; ++q) {
    QMatrix lhs = target.differential(q) * map_component(f, source, target, q);
    QMatrix rhs = map_component(f, source, target, q + 1) * source.differential(q);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::size_t induced_rank(const CochainMap& f, const Complex& source, const Complex& target, std::size_t q) {
  if (source.dim(q) == 0 || target.dim(q) == 0) return 0;
  Subspace z = source.cocycles(q);
  Subspace b = target.coboundaries(q);
  Subspace fz = image_of(map_component(f, source, target, q), z);
  return (fz + b).dim() - b.dim();
}

Complex DoubleComplex::total() const {
  const std::size_t nq = dims.size();
  const std::size_t nj = nq ? dims[0].size() : 0;
  Complex t;
  if (nq == 0 || nj == 0) return t;
  const std::size_t top = nq + nj - 2;
  // offsets[n][q]: start of K^{q, n-q} inside Tot^n
  std::vector<std::vector<std::size_t>> offsets(top + 1, std::vector<std::size_t>(nq, 0));
  t.dims.assign(top + 1, 0);
  for (std::size_t n = 0; n <= top; ++n)
    for (std::size_t q = 0; q < nq; ++q) {
      offsets[n][q] = t.dims[n];
      if (n >= q && n - q < nj) t.dims[n] += dims[q][n - q];
    }
  for (std::size_t n = 0; n < top; ++n) {
    QMatrix dn(t.dims[n + 1], t.dims[n]);
    for (std::size_t q = 0; q < nq; ++q) {
      if (n < q || n - q >= nj) continue;
      const std::size_t j = n - q;
      const std::size_t col0 = offsets[n][q];
      if (q + 1 < nq) {
        const QMatrix& h = horizontal[q][j];
        const std::size_t row0 = offsets[n + 1][q + 1];
        for (std::size_t r = 0; r < h.rows(); ++r)
          for (std::size_t c = 0; c < h.cols(); ++c) dn(row0 + r, col0 + c) += h(r, c);
      }
      if (j + 1 < nj) {
        const QMatrix& v = vertical[q][j];
        const std::size_t row0 = offsets[n + 1][q];
        const bool negate = q % 2 == 1;
        for (std::size_t r = 0; r < v.rows(); ++r)
          for (std::size_t c = 0; c < v.cols(); ++c) dn(row0 + r, col0 + c) += negate ? -v(r, c) : v(r, c);
      }
    }
    t.d.push_back(std::move(dn));
  }
  return t;
}

}  // namespace toric

namespace toric {

namespace {

void put_block(QMatrix& dst, std::size_t row0, std::size_t col0, const QMatrix& src, int sign = 1) {
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) dst(row0 + r, col0 + c) += sign == 1 ? src(r, c) : -src(r, c);
}

}  // namespace

Complex direct_sum(const Complex& a, const Complex& b) {
  Complex out;
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t q = 0; q < n; ++q) out.dims.push_back(a.dim(q) + b.dim(q));
  for (std::size_t q = 0; q + 1 < n; ++q) {
    QMatrix d(out.dims[q + 1], out.dims[q]);
    put_block(d, 0, 0, a.differential(q));
    put_block(d, a.dim(q + 1), a.dim(q), b.differential(q));
    out.d.push_back(std::move(d));
  }
  return out;
}

CochainMap stack_maps(const CochainMap& f, const Complex& source, const Complex& ftarget, const CochainMap& g,
                      const Complex& gtarget) {
  CochainMap out;
  const std::size_t n = std::max({source.length(), ftarget.length(), gtarget.length()});
  for (std::size_t q = 0; q < n; ++q) {
    QMatrix m(ftarget.dim(q) + gtarget.dim(q), source.dim(q));
    put_block(m, 0, 0, map_component(f, source, ftarget, q));
    put_block(m, ftarget.dim(q), 0, map_component(g, source, gtarget, q));
    out.push_back(std::move(m));
  }
  return out;
}

Complex mapping_fiber(const CochainMap& f, const Complex& a, const Complex& b) {
  Complex out;
  const std::size_t n = std::max(a.length(), b.length() + 1);
  auto bdim = [&](std::size_t q) { return q == 0 ? 0 : b.dim(q - 1); };
  for (std::size_t q = 0; q < n; ++q) out.dims.push_back(a.dim(q) + bdim(q));
  for (std::size_t q = 0; q + 1 < n; ++q) {
    QMatrix d(out.dims[q + 1], out.dims[q]);
    put_block(d, 0, 0, a.differential(q));
    put_block(d, a.dim(q + 1), 0, map_component(f, a, b, q));
    if (q > 0) put_block(d, a.dim(q + 1), a.dim(q), b.differential(q - 1), -1);
    out.d.push_back(std::move(d));
  }
  return out;
}

}  // namespace toric
