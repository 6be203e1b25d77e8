#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hermrank/code.hpp"
#include "hermrank/linpoly.hpp"

namespace hermrank {

/// k = n-d+1 elements of F_{q^n}: f_0 packs the middle coefficient, and
/// f_j, f_{kappa+j} are packed as b_j = f_j + eta*f_{kappa+j}.
using Message = std::vector<Felt>;
using Codeword = std::vector<Felt>;

/// Coefficients of L(x) (all n of them); nonzero only on the cyclic window
/// m-kappa .. m+kappa.
LinearizedPoly expand_message(const CodeParams& params, std::span<const Felt> message);

/// (L(alpha_0), ..., L(alpha_{n-1})) = f~ * M^T, using only the k window
/// columns of the Moore matrix.
Codeword encode(const CodeParams& params, std::span<const Felt> message);

/// Same codeword by direct evaluation of L at each basis element.
Codeword encode_by_evaluation(const CodeParams& params, std::span<const Felt> message);

/// Known error coefficients g_i at the d-1 cyclic indices start, start+1, ...
/// where start = m+kappa+1 (mod n). values[j] = g_{(start+j) mod n}.
struct KnownCoeffs {
  std::size_t start = 0;
  std::vector<Felt> values;

  bool all_zero() const;
};

struct BetaSplit {
  std::vector<Felt> beta;  // r * (M^T)^{-1}
  KnownCoeffs known;
};

BetaSplit beta_split(const CodeParams& params, std::span<const Felt> received);

/// The d-1-t key equations g_i = sum_l lambda_l g_{i-l}^{[l]} for
/// i = m+kappa+t+1 .. m+kappa+d-1 (mod n), as a matrix over the unknowns
/// lambda_1..lambda_t and a right-hand side.
struct KeySystem {
  Matrix lhs;
  std::vector<Felt> rhs;
};

/// Throws Error{BadT} unless 1 <= t <= radius.
KeySystem key_equation_system(const CodeParams& params, const KnownCoeffs& known, unsigned t);

/// Unique lambda solving the key equations, or nullopt when the system is
/// inconsistent or underdetermined. Throws Error{BadT} unless 1 <= t <= radius.
std::optional<std::vector<Felt>> solve_key_equation(const CodeParams& params, const KnownCoeffs& known, unsigned t);

/// Shortest skew shift register u_j = sum_{l=1}^{L} lambda_l u_{j-l}^{[l]} (j >= L).
struct ShiftRegister {
  unsigned length = 0;
  std::vector<Felt> lambda;  // lambda_1..lambda_L
};

ShiftRegister skew_bm(const Field& field, std::span<const Felt> sequence);

/// Extends the known coefficients to the full error polynomial through the
/// recursion, filling the window m-kappa .. m+kappa in increasing order.
LinearizedPoly complete_g(const CodeParams& params, const KnownCoeffs& known, std::span<const Felt> lambda);

enum class FailureReason {
  RadiusExceeded,
  InconsistentKeyEquation,
  SymmetryCheckFailed,
  SubfieldCheckFailed,
};

std::string_view to_string(FailureReason reason);

/// Inverts expand_message on the window f~_{m-kappa} .. f~_{m+kappa}.
std::variant<Message, FailureReason> extract_message(const CodeParams& params, std::span<const Felt> window);

enum class SolverPath {
  ZeroWindow,        // all known coefficients vanish; g = 0
  BerlekampMassey,
  Gaussian,          // fallback after the register was rejected
  None,
};

std::string_view to_string(SolverPath path);

struct DecodeDiagnostics {
  SolverPath path = SolverPath::None;
  unsigned bm_length = 0;
  /// Gaussian solution for t = bm_length matched the register (when checked).
  std::optional<bool> solvers_agree;
  /// Number of key equations in the accepted system (d-1-t).
  unsigned equations = 0;
  /// Values of t in 1..radius for which the Gaussian system was inconsistent
  /// or underdetermined while searching for a fallback.
  unsigned inconsistent_systems = 0;
  /// On failure: the furthest stage any hypothesis reached (a certification
  /// miss beats a failed extraction, which beats an unsolvable key equation).
  std::optional<FailureReason> inner_reason;
};

struct DecodeResult {
  bool success = false;
  FailureReason reason = FailureReason::RadiusExceeded;  // valid when !success
  Message message;
  LinearizedPoly error_poly;
  unsigned error_rank = 0;
  DecodeDiagnostics diagnostics;
};

/// Certified bounded-distance decoder: Success only when the re-encoded
/// message lies within rank distance radius() of the received word. Every word
/// within the radius decodes, so a failure always means RadiusExceeded; why the
/// individual hypotheses were rejected is left in diagnostics.inner_reason.
DecodeResult decode(const CodeParams& params, std::span<const Felt> received);

}  // namespace hermrank
