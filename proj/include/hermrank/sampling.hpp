#pragma once

#include <span>

#include "hermrank/field.hpp"
#include "hermrank/rng.hpp"

namespace hermrank {

inline Felt random_element(const Field& field, Rng& rng) {
  Felt x{};
  for (unsigned i = 0; i < field.degree(); ++i) x.c[i] = static_cast<std::uint32_t>(rng.below(field.q()));
  return x;
}

/// Uniform element of the F_q-span of `basis` (e.g. a subfield basis).
inline Felt random_in_span(const Field& field, std::span<const Felt> basis, Rng& rng) {
  Felt x{};
  for (const Felt& b : basis)
    x = field.add(x, field.scale(static_cast<std::uint32_t>(rng.below(field.q())), b));
  return x;
}

inline Felt random_nonzero_in_span(const Field& field, std::span<const Felt> basis, Rng& rng) {
  for (;;) {
    Felt x = random_in_span(field, basis, rng);
    if (!x.is_zero()) return x;
  }
}

}  // namespace hermrank
