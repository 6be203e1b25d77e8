#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hermrank/field.hpp"

namespace hermrank {

/// Dense row-major matrix over F_{q^{2n}} (entries may lie in a subfield).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Felt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Felt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Felt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Felt> data_;
};

Matrix identity_matrix(const Field& field, std::size_t size);

/// Row-echelon rank.
unsigned matrix_rank(const Field& field, Matrix a);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> matrix_inverse(const Field& field, const Matrix& a);

Matrix matrix_product(const Field& field, const Matrix& a, const Matrix& b);

/// Row vector times matrix: v * A.
std::vector<Felt> row_times(const Field& field, std::span<const Felt> v, const Matrix& a);

/// Solves A x = b. Returns nullopt when the system is inconsistent or its
/// solution is not unique.
std::optional<std::vector<Felt>> solve_unique(const Field& field, Matrix a, std::vector<Felt> b);

/// A q^2-linearized polynomial x -> sum_i coeffs[i] * x^{q^{2i}}, i < n.
struct LinearizedPoly {
  std::vector<Felt> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
  bool is_zero() const;
  friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;
};

LinearizedPoly zero_poly(const Field& field);
LinearizedPoly identity_poly(const Field& field);

Felt lp_eval(const Field& field, const LinearizedPoly& poly, const Felt& x);

/// Moore matrix M = (alpha_i^{[j]}) on n evaluation points, with (M^T)^{-1}
/// cached for interpolation.
class MooreMatrix {
 public:
  /// Throws Error{DependentPoints} when the points are F_{q^2}-dependent.
  static MooreMatrix from_points(const Field& field, std::span<const Felt> points);

  const std::vector<Felt>& points() const noexcept { return points_; }
  const Matrix& entries() const noexcept { return entries_; }
  const Matrix& inverse_transpose() const noexcept { return inv_transpose_; }

 private:
  std::vector<Felt> points_;
  Matrix entries_;
  Matrix inv_transpose_;
};

/// The unique polynomial with poly(points[i]) = values[i]; equals values*(M^T)^{-1}.
LinearizedPoly lp_interpolate(const Field& field, const MooreMatrix& moore, std::span<const Felt> values);

/// Dickson matrix G(i, j) = g_{(i-j) mod n}^{[j]}.
Matrix dickson(const Field& field, const LinearizedPoly& g);

/// Rank over F_{q^2} of x -> g(x) on F_{q^{2n}}. Computed from the F_q-matrix of
/// the map in the power basis (F_q-rank is twice the F_{q^2}-rank).
unsigned map_rank(const Field& field, const LinearizedPoly& g);

/// t x t submatrix on rows row0..row0+t-1 and columns col0..col0+t-1, indices
/// wrapping modulo the matrix size.
Matrix cyclic_submatrix(const Matrix& a, std::size_t row0, std::size_t col0, std::size_t t);

}  // namespace hermrank
