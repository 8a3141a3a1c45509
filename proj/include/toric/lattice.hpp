#pragma once

// Exact integer lattices: vectors in N and M = Hom(N, Z), integer matrices,
// Smith and Hermite normal forms, quotient lattices, and exterior powers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

class LatticeVector {
 public:
  LatticeVector() = default;
  LatticeVector(std::initializer_list<long> values);
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}

  static LatticeVector zero(std::size_t rank);
  static LatticeVector unit(std::size_t rank, std::size_t index);

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;
  /// gcd of the coordinates; zero for the zero vector.
  Integer content() const;
  bool is_primitive() const { return content() == 1; }

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& scalar);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& s, LatticeVector v) { return v *= s; }
  friend LatticeVector operator-(LatticeVector v) { return v *= Integer(-1); }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic order, rank first.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

/// The pairing <m, n>.
Integer pairing(const LatticeVector& m, const LatticeVector& n);

/// v / gcd(v). Sign is preserved.
LatticeVector primitive(const LatticeVector& v);

class LatticeMatrix {
 public:
  LatticeMatrix() = default;
  LatticeMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static LatticeMatrix identity(std::size_t n);
  static LatticeMatrix from_rows(std::size_t cols, const std::vector<LatticeVector>& rows);
  static LatticeMatrix from_columns(std::size_t rows, const std::vector<LatticeVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  LatticeVector column(std::size_t j) const;
  std::vector<LatticeVector> row_vectors() const;
  std::vector<LatticeVector> column_vectors() const;
  LatticeMatrix transpose() const;
  LatticeVector apply(const LatticeVector& v) const;

  friend LatticeMatrix operator*(const LatticeMatrix& a, const LatticeMatrix& b);
  friend bool operator==(const LatticeMatrix& a, const LatticeMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_diagonal() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Integer determinant(const LatticeMatrix& a);

/// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ... , d_i >= 0.
struct SmithForm {
  LatticeMatrix S;
  LatticeMatrix U;
  LatticeMatrix V;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const LatticeMatrix& a);

/// Row-style Hermite normal form of the row lattice: upper echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
LatticeMatrix hermite_normal_form(const LatticeMatrix& a);

/// Lattice basis (rows in Hermite form) of { x in Z^cols : A x = 0 }.
std::vector<LatticeVector> integer_kernel(const LatticeMatrix& a);

/// Lattice basis (Hermite form) of span_Q(gens) intersected with Z^rank.
std::vector<LatticeVector> saturation(std::size_t rank, const std::vector<LatticeVector>& gens);

enum class QuotientMode {
  /// Quotient by the saturation of the generated sublattice.
  Saturate,
  /// Reject sublattices that are not saturated.
  Strict,
};

/// Z^rank / L as a free lattice. projection: quotient_rank x rank, its rows a
/// basis of the annihilator of L. section: rank x quotient_rank right inverse.
struct QuotientLattice {
  std::size_t rank = 0;
  std::size_t quotient_rank = 0;
  LatticeMatrix projection;
  LatticeMatrix section;
  /// Hermite basis of the (saturated) kernel of the projection.
  std::vector<LatticeVector> kernel_basis;

  LatticeVector project(const LatticeVector& v) const { return projection.apply(v); }
  LatticeVector lift(const LatticeVector& v) const { return section.apply(v); }
};

QuotientLattice quotient_lattice(std::size_t rank, const std::vector<LatticeVector>& gens,
                                 QuotientMode mode = QuotientMode::Saturate);

/// Ordered basis of the p-th exterior power: the p-element subsets of
/// {0, ..., rank-1} in lexicographic order.
class WedgeBasis {
 public:
  WedgeBasis(std::size_t rank, std::size_t degree);

  std::size_t rank() const { return rank_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return subsets_.size(); }
  const std::vector<std::size_t>& subset(std::size_t index) const { return subsets_[index]; }
  std::size_t index_of(const std::vector<std::size_t>& subset) const;

 private:
  std::size_t rank_;
  std::size_t degree_;
  std::vector<std::vector<std::size_t>> subsets_;
};

std::size_t binomial(std::size_t n, std::size_t k);

/// Coordinates of v_1 ^ ... ^ v_k in WedgeBasis(rank, k): the k x k minors.
std::vector<Integer> wedge(std::span<const LatticeVector> vectors, std::size_t rank);

/// m ^ omega for omega in degree p, as coordinates in degree p + 1.
std::vector<Rational> wedge_left(const LatticeVector& m, std::span<const Rational> omega,
                                 std::size_t degree);

/// Interior product with n in N: lowers degree by one.
std::vector<Rational> contract(const LatticeVector& n, std::span<const Rational> omega,
                               std::size_t degree);

/// The matrix of the p-th exterior power of an integer map Z^k -> Z^n given
/// by the n x k matrix `map`: binomial(n,p) x binomial(k,p).
LatticeMatrix wedge_power(const LatticeMatrix& map, std::size_t degree);

/// All vectors with |coordinate| <= radius, in lexicographic order.
std::vector<LatticeVector> weight_box(std::size_t rank, long radius);

}  // namespace toric
