#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hermrank/error.hpp"

namespace hermrank {

// Upper bound on the extension degree 2n that a Felt can hold. Contexts with
// q^{2n} >= 2^64 are rejected, so 64 coefficients always suffice.
inline constexpr std::size_t kMaxExtensionDegree = 64;

/// An element of F_{q^{2n}} in the polynomial basis 1, X, ..., X^{2n-1} of the
/// context modulus. Coefficients at index >= 2n are always zero.
struct Felt {
  std::array<std::uint32_t, kMaxExtensionDegree> c{};

  bool is_zero() const noexcept {
    for (auto v : c)
      if (v != 0) return false;
    return true;
  }
  friend bool operator==(const Felt&, const Felt&) = default;
};

/// Arithmetic in F_{q^{2n}} = F_q[X]/(f) for prime q and odd n.
///
/// The modulus f is the canonical one: the monic irreducible of degree 2n
/// whose coefficients (a_0, ..., a_{2n-1}), read as a base-q integer with a_0
/// least significant, are smallest. Frobenius powers and the relative trace to
/// F_{q^2} are tabulated as F_q-linear maps at construction. A Field is
/// immutable once built and may be shared across threads.
class Field {
 public:
  /// Throws Error{NotPrime | EvenN | TooLarge}.
  static Field make(std::uint64_t q, unsigned n);

  /// Rebuilds a context from a serialized modulus, checking it against the
  /// canonical choice. Throws Error{ParamsMismatch} on disagreement.
  static Field make_checked(std::uint64_t q, unsigned n,
                            std::span<const std::uint32_t> modulus);

  std::uint32_t q() const noexcept { return q_; }
  unsigned n() const noexcept { return n_; }
  /// Extension degree 2n of F_{q^{2n}} over F_q.
  unsigned degree() const noexcept { return deg_; }
  /// Low coefficients a_0..a_{2n-1} of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Felt zero() const { return Felt{}; }
  Felt one() const;
  /// Residue class of X.
  Felt generator() const;
  Felt from_fq(std::uint32_t a) const;
  Felt from_coeffs(std::span<const std::uint64_t> coeffs) const;

  Felt add(const Felt& a, const Felt& b) const;
  Felt sub(const Felt& a, const Felt& b) const;
  Felt neg(const Felt& a) const;
  Felt scale(std::uint32_t s, const Felt& a) const;
  Felt mul(const Felt& a, const Felt& b) const;
  /// Throws Error{ZeroInput} on zero.
  Felt inv(const Felt& a) const;
  Felt pow(const Felt& a, std::uint64_t e) const;

  /// x^{q^j}, with j taken modulo 2n (negative j allowed).
  Felt frobenius(const Felt& x, long long j) const;
  /// x^{q^{2i}}, the sigma-power used by q^2-linearized polynomials.
  Felt sigma(const Felt& x, long long i) const { return frobenius(x, 2 * i); }

  /// Relative trace F_{q^{2n}} -> F_{q^2}: sum_{i<n} z^{q^{2i}}.
  Felt rel_trace(const Felt& z) const;

  /// True iff z lies in F_{q^e}. Throws Error{NotADivisor} unless e | 2n.
  bool in_subfield(const Felt& z, unsigned e) const;

  /// Some c in F_{q^2} with c^{q+1} = a, for a in F_q \ {0}.
  /// Throws Error{ZeroInput} for a = 0, Error{NotInSubfield} if a is not in F_q.
  Felt solve_hermitian_norm(const Felt& a) const;

  /// An F_q-basis of the subfield F_{q^e}; e must divide 2n.
  std::vector<Felt> subfield_basis(unsigned e) const;

  /// Coefficient of X^0, meaningful for elements of F_q.
  std::uint32_t fq_value(const Felt& a) const { return a.c[0]; }

 private:
  Field() = default;

  void build_tables();
  Felt apply(std::span<const std::uint32_t> matrix, const Felt& x) const;
  std::uint64_t reduce(std::uint64_t v) const { return v % q_; }

  std::uint32_t q_ = 0;
  unsigned n_ = 0;
  unsigned deg_ = 0;
  bool wide_ = false;  // q large enough that lazy accumulation could overflow
  std::vector<std::uint32_t> modulus_;
  // frob_[j] is the 2n x 2n row-major matrix of x -> x^{q^j} over F_q.
  std::vector<std::vector<std::uint32_t>> frob_;
  std::vector<std::uint32_t> trace_;
};

/// Rank over F_q of a matrix given as rows of residues in [0, q).
unsigned fq_matrix_rank(std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& rows);

}  // namespace hermrank
