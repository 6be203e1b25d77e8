#pragma once

#include <cstdint>

// (q, n, d) triple for table-driven tests; braced lists of these deduce cleanly.
struct Qnd {
  std::uint64_t q;
  unsigned n, d;
};
