#include <doctest.h>

#include "hermrank/channel.hpp"
#include "hermrank/codec.hpp"
#include "hermrank/sampling.hpp"

using namespace hermrank;

TEST_CASE("random_rank_error hits the requested rank") {
  for (auto [q, n] : {std::pair<std::uint64_t, unsigned>{2, 5}, {3, 3}, {2, 7}}) {
    const CodeParams p = build_params(q, n, 3);
    const Field& f = p.field;
    for (ErrorMode mode : {ErrorMode::Arbitrary, ErrorMode::Hermitian}) {
      CHECK(random_rank_error(p, ChannelSpec{0, mode, 1}) == std::vector<Felt>(n));
      for (unsigned t = 1; t <= n; ++t) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
          const auto e = random_rank_error(p, ChannelSpec{t, mode, seed});
          const HermitianMatrix a = codeword_to_matrix(p, e);
          CHECK(matrix_rank(f, a.entries) == t);
          CHECK(map_rank(f, lp_interpolate(f, p.moore, e)) == t);
          if (mode == ErrorMode::Hermitian) CHECK(a.is_hermitian(f));
        }
      }
    }
    try {
      random_rank_error(p, ChannelSpec{n + 1, ErrorMode::Arbitrary, 0});
      FAIL("expected BadT");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadT);
    }
  }
}

TEST_CASE("random_rank_error is a function of the seed") {
  const CodeParams p = build_params(2, 5, 3);
  const auto a = random_rank_error(p, ChannelSpec{2, ErrorMode::Arbitrary, 42});
  CHECK(a == random_rank_error(p, ChannelSpec{2, ErrorMode::Arbitrary, 42}));
  CHECK(a != random_rank_error(p, ChannelSpec{2, ErrorMode::Arbitrary, 43}));
}

TEST_CASE("corrupt") {
  const CodeParams p = build_params(2, 5, 3);
  const Field& f = p.field;
  Rng rng(3);
  const auto c = encode(p, random_message(p, rng));
  const auto e = random_rank_error(p, 1, ErrorMode::Arbitrary, rng);
  const std::vector<Felt> zero(5);
  CHECK(corrupt(f, c, zero) == c);
  CHECK(corrupt(f, zero, e) == e);
  CHECK(corrupt(f, corrupt(f, c, e), e) == c);  // characteristic 2
  CHECK_THROWS_AS(corrupt(f, c, std::vector<Felt>(4)), Error);
}

TEST_CASE("random_message lies in F_{q^n}") {
  const CodeParams p = build_params(3, 5, 3);
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto msg = random_message(p, rng);
    CHECK(msg.size() == p.k);
    for (const Felt& x : msg) CHECK(p.field.in_subfield(x, 5));
  }
}

TEST_CASE("rng streams") {
  Rng a(7), b(7);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  CHECK(stream_seed(1, 0) != stream_seed(1, 1));
  CHECK(stream_seed(1, 0) != stream_seed(2, 0));
  Rng r(8);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(3) < 3);
}
