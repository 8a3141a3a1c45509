#pragma once

// Exact linear algebra over Q: dense matrices, reduced row echelon form,
// subspaces with canonical bases, and finite cochain complexes.

#include <cstddef>
#include <map>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

using QVector = std::vector<Rational>;

QVector to_rational(const LatticeVector& v);
QVector to_rational(const std::vector<Integer>& v);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix from_rows(std::size_t cols, const std::vector<QVector>& rows);
  static QMatrix from_columns(std::size_t rows, const std::vector<QVector>& columns);
  static QMatrix from_integer(const LatticeMatrix& m);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const;
  QVector apply(const QVector& v) const;
  QMatrix transpose() const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  QMatrix reduced;                   // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

RowEchelon row_reduce(const QMatrix& m);
std::size_t rank(const QMatrix& m);
/// Inverse of a square matrix; throws InvalidArgument if singular.
QMatrix inverse(const QMatrix& m);

/// Sparse row: column index -> nonzero entry.
using SparseRow = std::map<std::size_t, Rational>;
/// Rank of a sparse matrix given by rows, by exact elimination.
std::size_t sparse_rank(std::vector<SparseRow> rows);

/// A subspace of Q^ambient, stored by its reduced row echelon basis so that
/// equality of subspaces is equality of representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<QVector>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const QMatrix& basis() const { return basis_; }
  QVector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<QVector> basis_vectors() const;

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis; throws if v is not in the subspace.
  QVector coordinates(const QVector& v) const;

  Subspace intersect(const Subspace& other) const;
  /// Vectors y with <x, y> = 0 for every x in the subspace.
  Subspace annihilator() const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// { x : A x = 0 } inside Q^cols.
Subspace kernel(const QMatrix& a);
/// Column space inside Q^rows.
Subspace image(const QMatrix& a);
/// A(S) inside Q^rows.
Subspace image_of(const QMatrix& a, const Subspace& s);

/// Matrix of the inclusion source -> target in their echelon coordinates:
/// target.dim() x source.dim(). Throws if source is not contained in target.
QMatrix inclusion_matrix(const Subspace& source, const Subspace& target);

/// A bounded cochain complex C^0 -> C^1 -> ... with d[q]: C^q -> C^{q+1}
/// stored as a dims[q+1] x dims[q] matrix.
struct Complex {
  std::vector<std::size_t> dims;
  std::vector<QMatrix> d;

  std::size_t length() const { return dims.size(); }
  std::size_t dim(std::size_t q) const { return q < dims.size() ? dims[q] : 0; }
  /// d^q, or a zero matrix outside the stored range.
  QMatrix differential(std::size_t q) const;
  Subspace cocycles(std::size_t q) const;
  Subspace coboundaries(std::size_t q) const;
  std::vector<std::size_t> cohomology_dims() const;
  bool squares_to_zero() const;
};

/// f[q]: target.dim(q) x source.dim(q).
using CochainMap = std::vector<QMatrix>;

QMatrix map_component(const CochainMap& f, const Complex& source, const Complex& target, std::size_t q);
bool is_cochain_map(const CochainMap& f, const Complex& source, const Complex& target);
/// Rank of the map induced on H^q.
std::size_t induced_rank(const CochainMap& f, const Complex& source, const Complex& target, std::size_t q);

/// A ⊕ B with the block diagonal differential.
Complex direct_sum(const Complex& a, const Complex& b);
/// Stacks two maps out of the same complex: x -> (f x, g x).
CochainMap stack_maps(const CochainMap& f, const Complex& source, const Complex& ftarget, const CochainMap& g,
                      const Complex& gtarget);

/// Fib(f)^q = A^q ⊕ B^(q-1) with d(a, b) = (d a, f a - d b).
Complex mapping_fiber(const CochainMap& f, const Complex& a, const Complex& b);

/// A first-quadrant double complex K^{q,j} with commuting differentials
/// horizontal[q][j]: K^{q,j} -> K^{q+1,j} and vertical[q][j]: K^{q,j} -> K^{q,j+1}.
/// The total differential is d_h + (-1)^q d_v.
struct DoubleComplex {
  std::vector<std::vector<std::size_t>> dims;  // dims[q][j]
  std::vector<std::vector<QMatrix>> horizontal;
  std::vector<std::vector<QMatrix>> vertical;

  Complex total() const;
};

}  // namespace toric
