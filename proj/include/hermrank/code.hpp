#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hermrank/field.hpp"
#include "hermrank/linpoly.hpp"

namespace hermrank {

/// Parameters of the maximum Hermitian d-code of odd length n and odd minimum
/// distance d over F_{q^2}, realized as evaluations of q^2-polynomials at a
/// Hermitian self-dual basis.
struct CodeParams {
  Field field;
  unsigned d = 0;
  unsigned m = 0;      // (n+1)/2
  unsigned kappa = 0;  // (n-d)/2
  unsigned k = 0;      // n-d+1, message length over F_{q^n}
  std::vector<Felt> alpha;
  std::vector<Felt> alpha_conj;  // alpha_i^q
  std::vector<Felt> alpha_dual;  // Tr(alpha_i^q alpha_dual_j) = delta_ij
  Felt eta;
  MooreMatrix moore;
  std::vector<Felt> qn_basis;  // F_q-basis of F_{q^n}
  std::vector<Felt> q2_basis;  // F_q-basis of F_{q^2}

  unsigned n() const noexcept { return field.n(); }
  /// Unique decoding radius floor((d-1)/2).
  unsigned radius() const noexcept { return (d - 1) / 2; }
};

/// Throws Error{BadParams} for invalid (q, n, d), and the field errors of
/// Field::make. Deterministic in (q, n, d).
CodeParams build_params(std::uint64_t q, unsigned n, unsigned d);

/// Rebuilds parameters around a stored basis; the basis must pass the Gram
/// check (Error{ParamsMismatch} otherwise).
CodeParams params_from_basis(Field field, unsigned d, std::vector<Felt> alpha, const Felt& eta);

/// <x, y> = Tr(x^{q^n} y). Since n is odd, x -> x^{q^n} restricts to the
/// conjugation of F_{q^2}, so this is a nondegenerate Hermitian form on
/// F_{q^{2n}} over F_{q^2}. (The pairing Tr(x^q y) is not conjugate-symmetric
/// for n > 1 and admits no orthonormal basis.)
Felt hermitian_form(const Field& field, const Felt& x, const Felt& y);

/// Orthonormal basis for <.,.> by randomized Gram-Schmidt with a fixed seed
/// derived from (q, n). Throws Error{BasisSearchFailed} if the retry budget is
/// exhausted.
std::vector<Felt> find_selfdual_basis(const Field& field);

/// Gram matrix (<alpha_i, alpha_j>).
Matrix gram_matrix(const Field& field, std::span<const Felt> basis);

/// The residue class of X; it has degree 2n over F_q, so {1, eta} is an
/// F_{q^n}-basis of F_{q^{2n}}.
Felt choose_eta(const Field& field);

/// (u, v) in F_{q^n} x F_{q^n} with b = u + eta*v.
std::pair<Felt, Felt> decompose_eta(const CodeParams& params, const Felt& b);

/// Entry (i, r) = Tr(alpha_i^q c_r): the coordinates of c_r in the basis
/// trace-dual to (alpha_i^q). For a codeword c_r = L(alpha_r) this is the
/// matrix of H(x, y) = Tr(y^q L(x)), which is Hermitian.
struct HermitianMatrix {
  Matrix entries;

  /// A(i, j) == A(j, i)^q for all i, j.
  bool is_hermitian(const Field& field) const;
};

HermitianMatrix codeword_to_matrix(const CodeParams& params, std::span<const Felt> c);

/// Inverse of codeword_to_matrix: c_r = sum_i A(i, r) alpha_dual_i.
std::vector<Felt> matrix_to_vector(const CodeParams& params, const Matrix& a);

/// rank over F_{q^2} of codeword_to_matrix(a - b), by elimination over F_{q^2}.
unsigned rank_distance(const CodeParams& params, std::span<const Felt> a, std::span<const Felt> b);

/// F_{q^2}-dimension of the span of v_0..v_{n-1}, computed as half the F_q-rank
/// of {v_r, w*v_r} for w in F_{q^2} \ F_q. Equals the rank weight of v.
unsigned vector_rank(const CodeParams& params, std::span<const Felt> v);

std::vector<Felt> vec_add(const Field& field, std::span<const Felt> a, std::span<const Felt> b);
std::vector<Felt> vec_sub(const Field& field, std::span<const Felt> a, std::span<const Felt> b);

}  // namespace hermrank
