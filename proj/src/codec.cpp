#include "hermrank/codec.hpp"

#include <algorithm>
#include <string>

namespace hermrank {

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::RadiusExceeded: return "RadiusExceeded";
    case FailureReason::InconsistentKeyEquation: return "InconsistentKeyEquation";
    case FailureReason::SymmetryCheckFailed: return "SymmetryCheckFailed";
    case FailureReason::SubfieldCheckFailed: return "SubfieldCheckFailed";
  }
  return "Unknown";
}

std::string_view to_string(SolverPath path) {
  switch (path) {
    case SolverPath::ZeroWindow: return "zero-window";
    case SolverPath::BerlekampMassey: return "berlekamp-massey";
    case SolverPath::Gaussian: return "gaussian";
    case SolverPath::None: return "none";
  }
  return "unknown";
}

namespace {

std::size_t wrap(long long i, std::size_t n) {
  const long long nn = static_cast<long long>(n);
  return static_cast<std::size_t>(((i % nn) + nn) % nn);
}

// How far a failed attempt got; later stages win when reporting.
int stage(FailureReason r) {
  switch (r) {
    case FailureReason::InconsistentKeyEquation: return 0;
    case FailureReason::SymmetryCheckFailed:
    case FailureReason::SubfieldCheckFailed: return 1;
    case FailureReason::RadiusExceeded: return 2;
  }
  return 0;
}

}  // namespace

LinearizedPoly expand_message(const CodeParams& params, std::span<const Felt> message) {
  const Field& f = params.field;
  const unsigned n = params.n();
  if (message.size() != params.k)
    throw Error(ErrorKind::Malformed, "message must have k = " + std::to_string(params.k) + " entries");
  for (const Felt& x : message)
    if (!f.in_subfield(x, n)) throw Error(ErrorKind::NotInSubfield, "message entries must lie in F_{q^n}");
  LinearizedPoly out = zero_poly(f);
  const long long m = params.m;
  out.coeffs[wrap(m, n)] = f.sigma(message[0], m);
  for (unsigned j = 1; j <= params.kappa; ++j) {
    const Felt b = f.add(message[j], f.mul(params.eta, message[params.kappa + j]));
    const Felt low = f.frobenius(b, 1);
    out.coeffs[wrap(m - j, n)] = low;
    out.coeffs[wrap(m + j, n)] = f.frobenius(low, static_cast<long long>(n) + 2 * j);
  }
  return out;
}

Codeword encode(const CodeParams& params, std::span<const Felt> message) {
  const Field& f = params.field;
  const std::size_t n = params.n();
  const LinearizedPoly coeffs = expand_message(params, message);
  const Matrix& moore = params.moore.entries();
  Codeword c(n);
  for (unsigned s = 0; s < params.k; ++s) {
    const std::size_t j = wrap(static_cast<long long>(params.m) - params.kappa + s, n);
    const Felt& fj = coeffs.coeffs[j];
    if (fj.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) c[i] = f.add(c[i], f.mul(fj, moore(i, j)));
  }
  return c;
}

Codeword encode_by_evaluation(const CodeParams& params, std::span<const Felt> message) {
  const LinearizedPoly poly = expand_message(params, message);
  Codeword c;
  c.reserve(params.n());
  for (const Felt& a : params.alpha) c.push_back(lp_eval(params.field, poly, a));
  return c;
}

bool KnownCoeffs::all_zero() const {
  for (const Felt& v : values)
    if (!v.is_zero()) return false;
  return true;
}

BetaSplit beta_split(const CodeParams& params, std::span<const Felt> received) {
  const std::size_t n = params.n();
  if (received.size() != n) throw Error(ErrorKind::Malformed, "received word must have n entries");
  BetaSplit out;
  out.beta = row_times(params.field, received, params.moore.inverse_transpose());
  out.known.start = wrap(static_cast<long long>(params.m) + params.kappa + 1, n);
  for (unsigned j = 0; j + 1 < params.d; ++j) out.known.values.push_back(out.beta[(out.known.start + j) % n]);
  return out;
}

KeySystem key_equation_system(const CodeParams& params, const KnownCoeffs& known, unsigned t) {
  if (t < 1 || t > params.radius())
    throw Error(ErrorKind::BadT, "t must satisfy 1 <= t <= " + std::to_string(params.radius()));
  const Field& f = params.field;
  const auto& u = known.values;
  const std::size_t rows = u.size() - t;
  KeySystem sys{Matrix(rows, t), std::vector<Felt>(rows)};
  for (std::size_t e = 0; e < rows; ++e) {
    const std::size_t j = t + e;
    for (unsigned l = 1; l <= t; ++l) sys.lhs(e, l - 1) = f.sigma(u[j - l], l);
    sys.rhs[e] = u[j];
  }
  return sys;
}

std::optional<std::vector<Felt>> solve_key_equation(const CodeParams& params, const KnownCoeffs& known, unsigned t) {
  KeySystem sys = key_equation_system(params, known, t);
  return solve_unique(params.field, std::move(sys.lhs), std::move(sys.rhs));
}

ShiftRegister skew_bm(const Field& field, std::span<const Felt> sequence) {
  // Massey's synthesis in the skew ring F[x; sigma]: the register C acts on the
  // sequence by (C u)_j = sum_i C_i sigma^i(u_{j-i}), and x^s B shifts B's
  // discrepancy at j-s to sigma^s of it at j.
  std::vector<Felt> conn{field.one()};
  std::vector<Felt> prev{field.one()};
  Felt prev_disc = field.one();
  unsigned length = 0;
  unsigned shift = 1;
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    Felt disc{};
    for (std::size_t i = 0; i < conn.size() && i <= pos; ++i)
      if (!conn[i].is_zero())
        disc = field.add(disc, field.mul(conn[i], field.sigma(sequence[pos - i], static_cast<long long>(i))));
    if (disc.is_zero()) {
      ++shift;
      continue;
    }
    const Felt coef = field.mul(disc, field.inv(field.sigma(prev_disc, shift)));
    std::vector<Felt> next = conn;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift);
    for (std::size_t l = 0; l < prev.size(); ++l)
      next[l + shift] = field.sub(next[l + shift], field.mul(coef, field.sigma(prev[l], shift)));
    if (2 * length <= pos) {
      prev = std::move(conn);
      prev_disc = disc;
      length = static_cast<unsigned>(pos + 1 - length);
      shift = 1;
    } else {
      ++shift;
    }
    conn = std::move(next);
  }
  ShiftRegister reg;
  reg.length = length;
  conn.resize(std::max<std::size_t>(conn.size(), length + 1));
  for (unsigned l = 1; l <= length; ++l) reg.lambda.push_back(field.neg(conn[l]));
  return reg;
}

LinearizedPoly complete_g(const CodeParams& params, const KnownCoeffs& known, std::span<const Felt> lambda) {
  const Field& f = params.field;
  const std::size_t n = params.n();
  LinearizedPoly g = zero_poly(f);
  for (std::size_t j = 0; j < known.values.size(); ++j) g.coeffs[(known.start + j) % n] = known.values[j];
  const long long first = static_cast<long long>(params.m) - params.kappa;
  for (unsigned s = 0; s < params.k; ++s) {
    const long long i = first + s;
    Felt acc{};
    for (std::size_t l = 1; l <= lambda.size(); ++l) {
      const Felt& prior = g.coeffs[wrap(i - static_cast<long long>(l), n)];
      acc = f.add(acc, f.mul(lambda[l - 1], f.sigma(prior, static_cast<long long>(l))));
    }
    g.coeffs[wrap(i, n)] = acc;
  }
  return g;
}

std::variant<Message, FailureReason> extract_message(const CodeParams& params, std::span<const Felt> window) {
  const Field& f = params.field;
  const unsigned n = params.n();
  const unsigned kappa = params.kappa;
  if (window.size() != params.k) throw Error(ErrorKind::Malformed, "window must have k entries");
  for (unsigned j = 1; j <= kappa; ++j)
    if (window[kappa + j] != f.frobenius(window[kappa - j], static_cast<long long>(n) + 2 * j))
      return FailureReason::SymmetryCheckFailed;
  const Felt f0 = f.frobenius(window[kappa], static_cast<long long>(n) - 1);
  if (!f.in_subfield(f0, n)) return FailureReason::SubfieldCheckFailed;
  Message msg(params.k);
  msg[0] = f0;
  for (unsigned j = 1; j <= kappa; ++j) {
    const Felt b = f.frobenius(window[kappa - j], -1);
    auto [u, v] = decompose_eta(params, b);
    msg[j] = u;
    msg[kappa + j] = v;
  }
  return msg;
}

DecodeResult decode(const CodeParams& params, std::span<const Felt> received) {
  const Field& f = params.field;
  const std::size_t n = params.n();
  const unsigned radius = params.radius();
  const BetaSplit split = beta_split(params, received);

  DecodeResult result;
  FailureReason worst = FailureReason::InconsistentKeyEquation;
  auto note = [&](FailureReason r) {
    if (stage(r) >= stage(worst)) worst = r;
  };

  // Tries one error polynomial; fills `result` and returns true on a certified hit.
  auto attempt = [&](LinearizedPoly g, SolverPath path) {
    std::vector<Felt> window(params.k);
    for (unsigned s = 0; s < params.k; ++s) {
      const std::size_t idx = wrap(static_cast<long long>(params.m) - params.kappa + s, n);
      window[s] = f.sub(split.beta[idx], g.coeffs[idx]);
    }
    auto extracted = extract_message(params, window);
    if (auto* reason = std::get_if<FailureReason>(&extracted)) {
      note(*reason);
      return false;
    }
    Message msg = std::get<Message>(std::move(extracted));
    const Codeword c = encode(params, msg);
    const unsigned dist = vector_rank(params, vec_sub(f, received, c));
    if (dist > radius) {
      note(FailureReason::RadiusExceeded);
      return false;
    }
    result.success = true;
    result.message = std::move(msg);
    result.error_poly = std::move(g);
    result.error_rank = dist;
    result.diagnostics.path = path;
    return true;
  };

  if (split.known.all_zero()) {
    if (attempt(zero_poly(f), SolverPath::ZeroWindow)) return result;
    result.diagnostics.inner_reason = worst;
    return result;
  }

  const ShiftRegister reg = skew_bm(f, split.known.values);
  result.diagnostics.bm_length = reg.length;
  if (reg.length >= 1 && reg.length <= radius) {
    const auto gauss = solve_key_equation(params, split.known, reg.length);
    result.diagnostics.solvers_agree = gauss.has_value() && *gauss == reg.lambda;
    result.diagnostics.equations = params.d - 1 - reg.length;
    if (attempt(complete_g(params, split.known, reg.lambda), SolverPath::BerlekampMassey)) return result;
  }

  for (unsigned t = 1; t <= radius; ++t) {
    const auto lambda = solve_key_equation(params, split.known, t);
    if (!lambda) {
      ++result.diagnostics.inconsistent_systems;
      continue;
    }
    if (t == reg.length && *lambda == reg.lambda) continue;  // already tried
    result.diagnostics.equations = params.d - 1 - t;
    if (attempt(complete_g(params, split.known, *lambda), SolverPath::Gaussian)) return result;
  }
  result.diagnostics.inner_reason = worst;
  return result;
}

}  // namespace hermrank
