#include "hermrank/linpoly.hpp"

#include <utility>

namespace hermrank {

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix identity_matrix(const Field& field, std::size_t size) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = field.one();
  return m;
}

namespace {

// In-place reduction to reduced row-echelon form; returns pivot columns.
// `aug` (may be empty) receives the same row operations.
std::vector<std::size_t> reduce_rows(const Field& field, Matrix& a, Matrix* aug) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
      if (aug)
        for (std::size_t c = 0; c < aug->cols(); ++c) std::swap((*aug)(p, c), (*aug)(row, c));
    }
    const Felt s = field.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = field.mul(a(row, c), s);
    if (aug)
      for (std::size_t c = 0; c < aug->cols(); ++c) (*aug)(row, c) = field.mul((*aug)(row, c), s);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Felt t = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = field.sub(a(r, c), field.mul(t, a(row, c)));
      if (aug)
        for (std::size_t c = 0; c < aug->cols(); ++c)
          (*aug)(r, c) = field.sub((*aug)(r, c), field.mul(t, (*aug)(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

unsigned matrix_rank(const Field& field, Matrix a) {
  return static_cast<unsigned>(reduce_rows(field, a, nullptr).size());
}

std::optional<Matrix> matrix_inverse(const Field& field, const Matrix& a) {
  Matrix work = a;
  Matrix inv = identity_matrix(field, a.rows());
  if (reduce_rows(field, work, &inv).size() != a.rows()) return std::nullopt;
  return inv;
}

Matrix matrix_product(const Field& field, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = field.add(out(r, c), field.mul(a(r, k), b(k, c)));
    }
  return out;
}

std::vector<Felt> row_times(const Field& field, std::span<const Felt> v, const Matrix& a) {
  std::vector<Felt> out(a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] = field.add(out[c], field.mul(v[k], a(k, c)));
  }
  return out;
}

std::optional<std::vector<Felt>> solve_unique(const Field& field, Matrix a, std::vector<Felt> b) {
  Matrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  const auto pivots = reduce_rows(field, a, &rhs);
  if (pivots.size() != a.cols()) return std::nullopt;
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    if (!rhs(r, 0).is_zero()) return std::nullopt;
  std::vector<Felt> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs(r, 0);
  return x;
}

bool LinearizedPoly::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

LinearizedPoly zero_poly(const Field& field) { return {std::vector<Felt>(field.n())}; }

LinearizedPoly identity_poly(const Field& field) {
  LinearizedPoly p = zero_poly(field);
  p.coeffs[0] = field.one();
  return p;
}

Felt lp_eval(const Field& field, const LinearizedPoly& poly, const Felt& x) {
  Felt acc{};
  Felt power = x;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i > 0) power = field.sigma(power, 1);
    if (!poly.coeffs[i].is_zero()) acc = field.add(acc, field.mul(poly.coeffs[i], power));
  }
  return acc;
}

MooreMatrix MooreMatrix::from_points(const Field& field, std::span<const Felt> points) {
  const std::size_t n = field.n();
  if (points.size() != n)
    throw Error(ErrorKind::DependentPoints, "Moore matrix needs exactly n points");
  MooreMatrix m;
  m.points_.assign(points.begin(), points.end());
  m.entries_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Felt p = points[i];
    for (std::size_t j = 0; j < n; ++j) {
      m.entries_(i, j) = p;
      p = field.sigma(p, 1);
    }
  }
  auto inv = matrix_inverse(field, m.entries_.transposed());
  if (!inv) throw Error(ErrorKind::DependentPoints, "evaluation points are linearly dependent over F_{q^2}");
  m.inv_transpose_ = std::move(*inv);
  return m;
}

LinearizedPoly lp_interpolate(const Field& field, const MooreMatrix& moore, std::span<const Felt> values) {
  return {row_times(field, values, moore.inverse_transpose())};
}

Matrix dickson(const Field& field, const LinearizedPoly& g) {
  const std::size_t n = g.size();
  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      out(i, j) = field.sigma(g.coeffs[(i + n - j) % n], static_cast<long long>(j));
  return out;
}

unsigned map_rank(const Field& field, const LinearizedPoly& g) {
  const unsigned N = field.degree();
  std::vector<std::vector<std::uint32_t>> images;
  images.reserve(N);
  for (unsigned i = 0; i < N; ++i) {
    Felt xi{};
    xi.c[i] = 1;
    const Felt y = lp_eval(field, g, xi);
    images.emplace_back(y.c.begin(), y.c.begin() + N);
  }
  return fq_matrix_rank(field.q(), images) / 2;
}

Matrix cyclic_submatrix(const Matrix& a, std::size_t row0, std::size_t col0, std::size_t t) {
  Matrix out(t, t);
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t c = 0; c < t; ++c) out(r, c) = a((row0 + r) % a.rows(), (col0 + c) % a.cols());
  return out;
}

}  // namespace hermrank
