#include "hermrank/code.hpp"

#include <string>

#include "hermrank/rng.hpp"
#include "hermrank/sampling.hpp"

namespace hermrank {

namespace {

void finish_params(CodeParams& p) {
  const Field& f = p.field;
  p.alpha_conj.clear();
  for (const Felt& a : p.alpha) p.alpha_conj.push_back(f.frobenius(a, 1));
  // alpha_dual_j = sum_k X(k, j) alpha_k with X = (Tr(alpha_i^q alpha_k))^{-1}
  const std::size_t n = p.alpha.size();
  Matrix pairing(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) pairing(i, k) = f.rel_trace(f.mul(p.alpha_conj[i], p.alpha[k]));
  const auto x = matrix_inverse(f, pairing);
  if (!x) throw Error(ErrorKind::ParamsMismatch, "basis is not F_{q^2}-independent");
  p.alpha_dual.assign(n, Felt{});
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) p.alpha_dual[j] = f.add(p.alpha_dual[j], f.mul((*x)(k, j), p.alpha[k]));
  p.moore = MooreMatrix::from_points(f, p.alpha);
  p.qn_basis = f.subfield_basis(f.n());
  p.q2_basis = f.subfield_basis(2);
}

bool gram_is_identity(const Field& field, std::span<const Felt> basis) {
  return gram_matrix(field, basis) == identity_matrix(field, basis.size());
}

}  // namespace

Felt hermitian_form(const Field& field, const Felt& x, const Felt& y) {
  return field.rel_trace(field.mul(field.frobenius(x, field.n()), y));
}

Matrix gram_matrix(const Field& field, std::span<const Felt> basis) {
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = hermitian_form(field, basis[i], basis[j]);
  return g;
}

std::vector<Felt> find_selfdual_basis(const Field& field) {
  Rng rng(stream_seed(field.q(), field.n()));
  const unsigned budget = 64 * field.q();
  std::vector<Felt> basis;
  while (basis.size() < field.n()) {
    bool placed = false;
    for (unsigned attempt = 0; attempt < budget && !placed; ++attempt) {
      Felt v = random_element(field, rng);
      for (const Felt& a : basis) v = field.sub(v, field.mul(hermitian_form(field, a, v), a));
      const Felt self = hermitian_form(field, v, v);
      if (self.is_zero()) continue;  // isotropic (or zero) vector
      const Felt c = field.solve_hermitian_norm(field.inv(self));
      basis.push_back(field.mul(c, v));
      placed = true;
    }
    if (!placed)
      throw Error(ErrorKind::BasisSearchFailed, "no anisotropic vector found after " + std::to_string(budget) + " draws");
  }
  if (!gram_is_identity(field, basis))
    throw Error(ErrorKind::BasisSearchFailed, "constructed basis fails the Gram identity");
  return basis;
}

Felt choose_eta(const Field& field) { return field.generator(); }

CodeParams build_params(std::uint64_t q, unsigned n, unsigned d) {
  if (n == 0 || n % 2 == 0) throw Error(ErrorKind::BadParams, "n must be odd");
  if (d == 0 || d % 2 == 0) throw Error(ErrorKind::BadParams, "d must be odd");
  if (d > n) throw Error(ErrorKind::BadParams, "d must satisfy 1 <= d <= n");
  Field field = Field::make(q, n);
  std::vector<Felt> alpha = find_selfdual_basis(field);
  const Felt eta = choose_eta(field);
  return params_from_basis(std::move(field), d, std::move(alpha), eta);
}

CodeParams params_from_basis(Field field, unsigned d, std::vector<Felt> alpha, const Felt& eta) {
  const unsigned n = field.n();
  if (d == 0 || d % 2 == 0 || d > n) throw Error(ErrorKind::BadParams, "d must be odd with 1 <= d <= n");
  if (alpha.size() != n) throw Error(ErrorKind::ParamsMismatch, "basis must have n elements");
  if (!gram_is_identity(field, alpha)) throw Error(ErrorKind::ParamsMismatch, "basis is not Hermitian self-dual");
  if (field.in_subfield(eta, n)) throw Error(ErrorKind::ParamsMismatch, "eta must lie outside F_{q^n}");
  CodeParams p{.field = std::move(field),
               .d = d,
               .m = (n + 1) / 2,
               .kappa = (n - d) / 2,
               .k = n - d + 1,
               .alpha = std::move(alpha),
               .alpha_conj = {},
               .alpha_dual = {},
               .eta = eta,
               .moore = {},
               .qn_basis = {},
               .q2_basis = {}};
  finish_params(p);
  return p;
}

std::pair<Felt, Felt> decompose_eta(const CodeParams& params, const Felt& b) {
  const Field& f = params.field;
  const long long n = f.n();
  const Felt denom = f.sub(params.eta, f.frobenius(params.eta, n));
  const Felt v = f.mul(f.sub(b, f.frobenius(b, n)), f.inv(denom));
  const Felt u = f.sub(b, f.mul(params.eta, v));
  return {u, v};
}

bool HermitianMatrix::is_hermitian(const Field& field) const {
  for (std::size_t i = 0; i < entries.rows(); ++i)
    for (std::size_t j = 0; j < entries.cols(); ++j)
      if (entries(i, j) != field.frobenius(entries(j, i), 1)) return false;
  return true;
}

HermitianMatrix codeword_to_matrix(const CodeParams& params, std::span<const Felt> c) {
  const Field& f = params.field;
  const std::size_t n = params.n();
  HermitianMatrix a{Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) a.entries(i, r) = f.rel_trace(f.mul(params.alpha_conj[i], c[r]));
  return a;
}

std::vector<Felt> matrix_to_vector(const CodeParams& params, const Matrix& a) {
  const Field& f = params.field;
  std::vector<Felt> v(a.cols());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t i = 0; i < a.rows(); ++i) v[r] = f.add(v[r], f.mul(a(i, r), params.alpha_dual[i]));
  return v;
}

unsigned rank_distance(const CodeParams& params, std::span<const Felt> a, std::span<const Felt> b) {
  const auto diff = vec_sub(params.field, a, b);
  return matrix_rank(params.field, codeword_to_matrix(params, diff).entries);
}

unsigned vector_rank(const CodeParams& params, std::span<const Felt> v) {
  const Field& f = params.field;
  const unsigned N = f.degree();
  const Felt& w = f.in_subfield(params.q2_basis[0], 1) ? params.q2_basis[1] : params.q2_basis[0];
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(2 * v.size());
  for (const Felt& x : v) {
    if (x.is_zero()) continue;
    rows.emplace_back(x.c.begin(), x.c.begin() + N);
    const Felt wx = f.mul(w, x);
    rows.emplace_back(wx.c.begin(), wx.c.begin() + N);
  }
  return fq_matrix_rank(f.q(), rows) / 2;
}

std::vector<Felt> vec_add(const Field& field, std::span<const Felt> a, std::span<const Felt> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Malformed, "vector length mismatch");
  std::vector<Felt> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.add(a[i], b[i]);
  return out;
}

std::vector<Felt> vec_sub(const Field& field, std::span<const Felt> a, std::span<const Felt> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Malformed, "vector length mismatch");
  std::vector<Felt> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
  return out;
}

}  // namespace hermrank
