#include "hermrank/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hermrank {

std::uint64_t code_size(const CodeParams& params) {
  unsigned __int128 size = 1;
  for (unsigned i = 0; i < params.n() * params.k; ++i) {
    size *= params.field.q();
    if (size > std::numeric_limits<std::uint64_t>::max()) return 0;
  }
  return static_cast<std::uint64_t>(size);
}

CodeTable enumerate_code(const CodeParams& params, std::uint64_t limit) {
  const std::uint64_t total = code_size(params);
  if (total == 0 || total > limit)
    throw Error(ErrorKind::TooLargeToEnumerate,
                "code has more than " + std::to_string(limit) + " codewords; pick smaller parameters");
  const Field& f = params.field;
  const unsigned n = params.n();
  const unsigned digits = n * params.k;
  CodeTable table;
  table.messages.reserve(total);
  table.codewords.reserve(total);
  std::vector<std::uint32_t> counter(digits, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Message msg(params.k);
    for (unsigned j = 0; j < params.k; ++j)
      for (unsigned b = 0; b < n; ++b)
        if (counter[j * n + b]) msg[j] = f.add(msg[j], f.scale(counter[j * n + b], params.qn_basis[b]));
    table.codewords.push_back(encode(params, msg));
    table.messages.push_back(std::move(msg));
    for (unsigned i = 0; i < digits; ++i) {
      if (++counter[i] < f.q()) break;
      counter[i] = 0;
    }
  }
  return table;
}

std::size_t distinct_codewords(const CodeTable& table) {
  std::vector<const Codeword*> ptrs;
  ptrs.reserve(table.size());
  for (const auto& c : table.codewords) ptrs.push_back(&c);
  auto less = [](const Codeword* a, const Codeword* b) {
    return std::lexicographical_compare(a->begin(), a->end(), b->begin(), b->end(),
                                        [](const Felt& x, const Felt& y) { return x.c < y.c; });
  };
  std::sort(ptrs.begin(), ptrs.end(), less);
  auto eq = [](const Codeword* a, const Codeword* b) { return *a == *b; };
  return static_cast<std::size_t>(std::unique(ptrs.begin(), ptrs.end(), eq) - ptrs.begin());
}

unsigned brute_min_distance(const CodeParams& params, const CodeTable& table) {
  unsigned best = params.n() + 1;
  for (const auto& c : table.codewords) {
    bool zero = std::all_of(c.begin(), c.end(), [](const Felt& x) { return x.is_zero(); });
    if (zero) continue;
    best = std::min(best, matrix_rank(params.field, codeword_to_matrix(params, c).entries));
  }
  return best;
}

unsigned brute_min_distance(const CodeParams& params, std::uint64_t limit) {
  return brute_min_distance(params, enumerate_code(params, limit));
}

NearestResult nearest_codeword(const CodeParams& params, const CodeTable& table, std::span<const Felt> received) {
  NearestResult best{0, std::numeric_limits<unsigned>::max(), 0};
  for (std::size_t i = 0; i < table.size(); ++i) {
    const unsigned dist = rank_distance(params, received, table.codewords[i]);
    if (dist < best.distance) {
      best = {i, dist, 0};
    } else if (dist == best.distance) {
      ++best.ties;
    }
  }
  return best;
}

}  // namespace hermrank
