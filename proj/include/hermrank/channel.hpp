#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hermrank/code.hpp"
#include "hermrank/rng.hpp"

namespace hermrank {

enum class ErrorMode { Arbitrary, Hermitian };

struct ChannelSpec {
  unsigned rank = 0;
  ErrorMode mode = ErrorMode::Arbitrary;
  std::uint64_t seed = 0;
};

/// Error vector of rank weight exactly spec.rank, drawn from Rng(spec.seed).
/// Throws Error{BadT} if rank > n.
std::vector<Felt> random_rank_error(const CodeParams& params, const ChannelSpec& spec);

/// Same, drawing from a caller-owned stream.
std::vector<Felt> random_rank_error(const CodeParams& params, unsigned rank, ErrorMode mode, Rng& rng);

/// Componentwise c + e.
std::vector<Felt> corrupt(const Field& field, std::span<const Felt> codeword, std::span<const Felt> error);

/// Uniform message: k uniform elements of F_{q^n}.
std::vector<Felt> random_message(const CodeParams& params, Rng& rng);

}  // namespace hermrank
