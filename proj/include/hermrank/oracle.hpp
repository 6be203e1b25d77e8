#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hermrank/codec.hpp"

namespace hermrank {

inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 20;

/// Every codeword of the code, indexed like the messages that produce them.
struct CodeTable {
  std::vector<Message> messages;
  std::vector<Codeword> codewords;

  std::size_t size() const noexcept { return codewords.size(); }
};

/// q^{n k}, or 0 if it does not fit in 64 bits.
std::uint64_t code_size(const CodeParams& params);

/// Throws Error{TooLargeToEnumerate} when q^{n k} > limit.
CodeTable enumerate_code(const CodeParams& params, std::uint64_t limit = kDefaultEnumerationLimit);

/// Number of distinct codewords in the table.
std::size_t distinct_codewords(const CodeTable& table);

/// Minimum rank (via codeword_to_matrix and elimination over F_{q^2}) of the
/// nonzero codewords.
unsigned brute_min_distance(const CodeParams& params, const CodeTable& table);
unsigned brute_min_distance(const CodeParams& params, std::uint64_t limit = kDefaultEnumerationLimit);

struct NearestResult {
  std::size_t index = 0;  // into the table
  unsigned distance = 0;
  std::size_t ties = 0;   // other codewords at the same distance
};

NearestResult nearest_codeword(const CodeParams& params, const CodeTable& table, std::span<const Felt> received);

}  // namespace hermrank
