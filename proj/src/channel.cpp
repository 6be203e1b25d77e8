#include "hermrank/channel.hpp"

#include <string>

#include "hermrank/sampling.hpp"

namespace hermrank {

namespace {

Matrix random_q2_matrix(const CodeParams& p, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_in_span(p.field, p.q2_basis, rng);
  return m;
}

// Full-rank draw: a rows x cols matrix over F_{q^2} of rank min(rows, cols).
Matrix random_full_rank(const CodeParams& p, std::size_t rows, std::size_t cols, Rng& rng) {
  for (;;) {
    Matrix m = random_q2_matrix(p, rows, cols, rng);
    if (matrix_rank(p.field, m) == std::min(rows, cols)) return m;
  }
}

std::vector<Felt> arbitrary_error(const CodeParams& p, unsigned t, Rng& rng) {
  const Field& f = p.field;
  const std::size_t n = p.n();
  // coordinates (n x t) of gamma_1..gamma_t times a rank-t mixing matrix (t x n)
  const Matrix gamma_coords = random_full_rank(p, n, t, rng);
  const Matrix mix = random_full_rank(p, t, n, rng);
  return matrix_to_vector(p, matrix_product(f, gamma_coords, mix));
}

std::vector<Felt> hermitian_error(const CodeParams& p, unsigned t, Rng& rng) {
  const Field& f = p.field;
  const std::size_t n = p.n();
  const Matrix b = random_full_rank(p, n, t, rng);
  std::vector<Felt> diag(t);
  for (auto& x : diag) x = f.from_fq(static_cast<std::uint32_t>(1 + rng.below(f.q() - 1)));
  Matrix a(n, n);  // B D B*
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (unsigned l = 0; l < t; ++l)
        a(i, r) = f.add(a(i, r), f.mul(f.mul(b(i, l), diag[l]), f.frobenius(b(r, l), 1)));
  return matrix_to_vector(p, a);
}

}  // namespace

std::vector<Felt> random_rank_error(const CodeParams& params, unsigned rank, ErrorMode mode, Rng& rng) {
  if (rank > params.n())
    throw Error(ErrorKind::BadT, "error rank " + std::to_string(rank) + " exceeds n");
  if (rank == 0) return std::vector<Felt>(params.n());
  for (;;) {
    auto e = mode == ErrorMode::Arbitrary ? arbitrary_error(params, rank, rng) : hermitian_error(params, rank, rng);
    if (vector_rank(params, e) == rank) return e;
  }
}

std::vector<Felt> random_rank_error(const CodeParams& params, const ChannelSpec& spec) {
  Rng rng(spec.seed);
  return random_rank_error(params, spec.rank, spec.mode, rng);
}

std::vector<Felt> corrupt(const Field& field, std::span<const Felt> codeword, std::span<const Felt> error) {
  return vec_add(field, codeword, error);
}

std::vector<Felt> random_message(const CodeParams& params, Rng& rng) {
  std::vector<Felt> msg;
  msg.reserve(params.k);
  for (unsigned j = 0; j < params.k; ++j) msg.push_back(random_in_span(params.field, params.qn_basis, rng));
  return msg;
}

}  // namespace hermrank
