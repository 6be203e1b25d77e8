#include <doctest.h>

#include "hermrank/code.hpp"
#include "hermrank/linpoly.hpp"
#include "hermrank/sampling.hpp"

using namespace hermrank;

namespace {

LinearizedPoly random_poly(const Field& f, Rng& rng) {
  LinearizedPoly p = zero_poly(f);
  for (auto& c : p.coeffs) c = random_element(f, rng);
  return p;
}

// Random polynomial of prescribed map rank t: interpolate a rank-t vector on
// the self-dual basis (images gamma_l mixed by an F_{q^2} matrix).
LinearizedPoly random_rank_poly(const CodeParams& p, unsigned t, Rng& rng) {
  const Field& f = p.field;
  for (;;) {
    std::vector<Felt> gammas(t);
    for (auto& g : gammas) g = random_element(f, rng);
    std::vector<Felt> values(p.n());
    for (auto& v : values)
      for (const Felt& g : gammas) v = f.add(v, f.mul(random_in_span(f, p.q2_basis, rng), g));
    if (vector_rank(p, values) != t) continue;
    return lp_interpolate(f, p.moore, values);
  }
}

// Kernel size by enumeration of the whole field (tiny fields only).
std::uint64_t kernel_size(const Field& f, const LinearizedPoly& g) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < f.degree(); ++i) total *= f.q();
  std::uint64_t zeros = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Felt x{};
    std::uint64_t v = idx;
    for (unsigned i = 0; i < f.degree(); ++i, v /= f.q()) x.c[i] = static_cast<std::uint32_t>(v % f.q());
    if (lp_eval(f, g, x).is_zero()) ++zeros;
  }
  return zeros;
}

}  // namespace

TEST_CASE("lp_eval") {
  const Field f = Field::make(2, 3);
  Rng rng(1);
  const Felt x = random_element(f, rng);
  CHECK(lp_eval(f, zero_poly(f), x).is_zero());
  CHECK(lp_eval(f, identity_poly(f), x) == x);

  const auto q2 = f.subfield_basis(2);
  for (int trial = 0; trial < 50; ++trial) {
    const LinearizedPoly g = random_poly(f, rng);
    const Felt a = random_element(f, rng), b = random_element(f, rng);
    // naive summation with exponentiation by q^{2i}
    Felt naive{};
    std::uint64_t e = 1;
    for (unsigned i = 0; i < 3; ++i, e *= 4) naive = f.add(naive, f.mul(g.coeffs[i], f.pow(a, e)));
    CHECK(lp_eval(f, g, a) == naive);
    CHECK(lp_eval(f, g, f.add(a, b)) == f.add(lp_eval(f, g, a), lp_eval(f, g, b)));
    const Felt lambda = random_in_span(f, q2, rng);
    CHECK(lp_eval(f, g, f.mul(lambda, a)) == f.mul(lambda, lp_eval(f, g, a)));
  }
}

TEST_CASE("Moore matrix") {
  SUBCASE("n = 1") {
    const Field f = Field::make(3, 1);
    const Felt one = f.one();
    const MooreMatrix m = MooreMatrix::from_points(f, std::span(&one, 1));
    CHECK(m.entries()(0, 0) == f.one());
    CHECK(m.inverse_transpose()(0, 0) == f.one());
  }
  SUBCASE("repeated point is rejected") {
    const Field f = Field::make(2, 3);
    const std::vector<Felt> pts{f.generator(), f.generator(), f.one()};
    try {
      MooreMatrix::from_points(f, pts);
      FAIL("expected DependentPoints");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DependentPoints);
    }
  }
  SUBCASE("F_{q^2}-multiples are dependent") {
    const Field f = Field::make(2, 3);
    const auto q2 = f.subfield_basis(2);
    const Felt w = f.in_subfield(q2[0], 1) ? q2[1] : q2[0];
    const std::vector<Felt> pts{f.generator(), f.mul(w, f.generator()), f.one()};
    CHECK_THROWS_AS(MooreMatrix::from_points(f, pts), Error);
  }
  SUBCASE("self-dual basis: multiply back to identity") {
    for (auto [q, n] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 3}, {2, 5}}) {
      const CodeParams p = build_params(q, n, 1);
      const Matrix& mt_inv = p.moore.inverse_transpose();
      const Matrix prod = matrix_product(p.field, p.moore.entries().transposed(), mt_inv);
      CHECK(prod == identity_matrix(p.field, n));
    }
  }
}

TEST_CASE("interpolation round trip") {
  for (auto [q, n] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 3}, {2, 5}}) {
    const CodeParams p = build_params(q, n, 1);
    const Field& f = p.field;
    std::vector<Felt> zeros(n);
    CHECK(lp_interpolate(f, p.moore, zeros).is_zero());
    CHECK(lp_interpolate(f, p.moore, p.alpha) == identity_poly(f));
    Rng rng(q + n);
    for (int trial = 0; trial < 100; ++trial) {
      const LinearizedPoly g = random_poly(f, rng);
      std::vector<Felt> values;
      for (const Felt& a : p.alpha) values.push_back(lp_eval(f, g, a));
      CHECK(lp_interpolate(f, p.moore, values) == g);
    }
  }
}

TEST_CASE("Dickson matrix structure") {
  const Field f = Field::make(2, 3);
  CHECK(dickson(f, zero_poly(f)) == Matrix(3, 3));
  CHECK(dickson(f, identity_poly(f)) == identity_matrix(f, 3));
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const LinearizedPoly g = random_poly(f, rng);
    const Matrix d = dickson(f, g);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(d(i, 0) == g.coeffs[i]);
      for (std::size_t j = 0; j < 3; ++j) CHECK(d(i, j) == f.pow(g.coeffs[(i + 3 - j) % 3], std::uint64_t{1} << (2 * j)));
    }
  }
}

TEST_CASE("map rank") {
  const Field f = Field::make(2, 3);
  CHECK(map_rank(f, zero_poly(f)) == 0);
  CHECK(map_rank(f, identity_poly(f)) == 3);

  // x + x^{[1]} + x^{[2]} is the relative trace: kernel of size 4^2, rank 1.
  LinearizedPoly trace_poly = zero_poly(f);
  for (auto& c : trace_poly.coeffs) c = f.one();
  CHECK(kernel_size(f, trace_poly) == 16);
  CHECK(map_rank(f, trace_poly) == 1);

  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const LinearizedPoly g = random_poly(f, rng);
    const std::uint64_t ker = kernel_size(f, g);
    unsigned kdim = 0;
    for (std::uint64_t s = ker; s > 1; s /= 4) ++kdim;
    CHECK(map_rank(f, g) == 3 - kdim);
  }
}

TEST_CASE("Dickson rank equals map rank on random polynomials") {
  for (auto [q, n] : {std::pair<std::uint64_t, unsigned>{2, 3}, {2, 5}, {3, 3}}) {
    const CodeParams p = build_params(q, n, 1);
    Rng rng(1000 + q * n);
    for (int trial = 0; trial < 500; ++trial) {
      // mix full-random and low-rank draws so every rank shows up
      const unsigned target = static_cast<unsigned>(rng.below(n + 1));
      const LinearizedPoly g = trial % 2 ? random_poly(p.field, rng) : random_rank_poly(p, target, rng);
      const unsigned r = map_rank(p.field, g);
      CHECK(matrix_rank(p.field, dickson(p.field, g)) == r);
      if (trial % 2 == 0) CHECK(r == target);
    }
  }
}

TEST_CASE("successive minors of a rank-t Dickson matrix are nonsingular") {
  for (auto [q, n] : {std::pair<std::uint64_t, unsigned>{2, 5}, {3, 3}, {2, 7}}) {
    const CodeParams p = build_params(q, n, 1);
    Rng rng(77 + n);
    for (int trial = 0; trial < 60; ++trial) {
      const unsigned t = 1 + static_cast<unsigned>(rng.below(n));
      const LinearizedPoly g = random_rank_poly(p, t, rng);
      const Matrix d = dickson(p.field, g);
      for (std::size_t r0 = 0; r0 < n; ++r0)
        for (std::size_t c0 = 0; c0 < n; ++c0) CHECK(matrix_rank(p.field, cyclic_submatrix(d, r0, c0, t)) == t);
    }
  }
}

TEST_CASE("support on w consecutive sigma-degrees forces rank >= n-w+1") {
  // Exhaustive over polynomials with coefficients in a small window at q=2, n=3:
  // every coefficient ranges over F_64, windows of width 1 and 2 (cyclic).
  const Field f = Field::make(2, 3);
  for (unsigned w = 1; w <= 2; ++w) {
    for (unsigned start = 0; start < 3; ++start) {
      const std::uint64_t count = w == 1 ? 64 : 64 * 64;
      for (std::uint64_t idx = 1; idx < count; ++idx) {
        LinearizedPoly g = zero_poly(f);
        std::uint64_t v = idx;
        for (unsigned s = 0; s < w; ++s, v /= 64) {
          Felt c{};
          for (unsigned b = 0; b < 6; ++b) c.c[b] = (v % 64 >> b) & 1;
          g.coeffs[(start + s) % 3] = c;
        }
        if (g.is_zero()) continue;
        CHECK(map_rank(f, g) >= 3 - w + 1);
      }
    }
  }
}

TEST_CASE("generic matrix rank") {
  const Field f = Field::make(3, 3);
  CHECK(matrix_rank(f, Matrix(4, 3)) == 0);
  CHECK(matrix_rank(f, identity_matrix(f, 5)) == 5);
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix outer(4, 5);
    std::vector<Felt> u(4), v(5);
    for (auto& x : u) x = random_element(f, rng);
    for (auto& x : v) x = random_element(f, rng);
    u[0] = f.one();
    v[0] = f.one();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) outer(i, j) = f.mul(u[i], v[j]);
    CHECK(matrix_rank(f, outer) == 1);
  }
}

TEST_CASE("solve_unique") {
  const Field f = Field::make(2, 3);
  Rng rng(12);
  Matrix a(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) a(i, j) = random_element(f, rng);
  const std::vector<Felt> x{random_element(f, rng), random_element(f, rng)};
  std::vector<Felt> b = row_times(f, x, a.transposed());
  if (matrix_rank(f, a) == 2) {
    CHECK(solve_unique(f, a, b) == x);
    b[0] = f.add(b[0], f.one());
    CHECK_FALSE(solve_unique(f, a, b).has_value());
  }
  CHECK_FALSE(solve_unique(f, Matrix(2, 1), {f.zero(), f.zero()}).has_value());  // underdetermined
}
