#include "hermrank/field.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hermrank {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::EvenN: return "EvenN";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::DependentPoints: return "DependentPoints";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BasisSearchFailed: return "BasisSearchFailed";
    case ErrorKind::NotInSubfield: return "NotInSubfield";
    case ErrorKind::BadT: return "BadT";
    case ErrorKind::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::ParamsMismatch: return "ParamsMismatch";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first, trimmed

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) r = mulm(r, a, q);
    a = mulm(a, a, q);
    e >>= 1;
  }
  return r;
}

std::uint64_t invm(std::uint64_t a, std::uint64_t q) { return powm(a, q - 2, q); }

// Tonelli-Shanks; a must be a nonzero quadratic residue mod odd prime q.
std::uint64_t sqrtm(std::uint64_t a, std::uint64_t q) {
  std::uint64_t s = 0, odd = q - 1;
  while (odd % 2 == 0) {
    odd /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (powm(z, (q - 1) / 2, q) != q - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powm(z, odd, q);
  std::uint64_t t = powm(a, odd, q);
  std::uint64_t r = powm(a, (odd + 1) / 2, q);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulm(tt, tt, q);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mulm(b, b, q);
    m = i;
    c = mulm(b, b, q);
    t = mulm(t, c, q);
    r = mulm(r, b, q);
  }
  return r;
}

bool is_square(std::uint64_t a, std::uint64_t q) {
  return a == 0 || q == 2 || powm(a, (q - 1) / 2, q) == 1;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t q) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = invm(f.back(), q);
  while (a.size() > df) {
    const std::uint64_t t = mulm(a.back(), lead_inv, q);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t k = 0; k <= df; ++k)
      a[shift + k] = (a[shift + k] + q - mulm(t, f[k], q)) % q;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulm(a[i], b[j], q)) % q;
  return poly_mod(std::move(r), f, q);
}

Poly poly_powmod(Poly a, std::uint64_t e, const Poly& f, std::uint64_t q) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, a, f, q);
    a = poly_mulmod(a, a, f, q);
    e >>= 1;
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t q) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + q - b[i]) % q;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

// Rabin's test for a monic f of degree deg.
bool is_irreducible(const Poly& f, unsigned deg, std::uint64_t q) {
  const Poly x{0, 1};
  std::vector<Poly> frob(deg + 1);  // frob[k] = X^{q^k} mod f
  frob[0] = poly_mod(x, f, q);
  for (unsigned k = 1; k <= deg; ++k) frob[k] = poly_powmod(frob[k - 1], q, f, q);
  if (poly_sub(frob[deg], poly_mod(x, f, q), q).size() != 0) return false;
  for (unsigned p : prime_divisors(deg)) {
    Poly g = poly_gcd(f, poly_sub(frob[deg / p], x, q), q);
    if (g.size() != 1) return false;
  }
  return true;
}

// Smallest monic irreducible of the given degree in base-q order (a_0 least
// significant). Returns the low coefficients a_0..a_{deg-1}.
std::vector<std::uint32_t> canonical_modulus(std::uint64_t q, unsigned deg) {
  std::vector<std::uint64_t> low(deg, 0);
  for (;;) {
    // increment the base-q counter
    for (unsigned i = 0; i < deg; ++i) {
      if (++low[i] < q) break;
      low[i] = 0;
    }
    if (low[0] == 0) continue;  // divisible by X
    Poly f(low.begin(), low.end());
    f.push_back(1);
    if (is_irreducible(f, deg, q)) return {low.begin(), low.end()};
  }
}

// Incremental row reduction over F_q; returns true if v was independent of
// the rows already stored (and adds it).
class FqEchelon {
 public:
  FqEchelon(std::uint64_t q, std::size_t width) : q_(q), width_(width) {}

  bool insert(std::vector<std::uint64_t> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint64_t t = v[pivots_[r]];
      if (t == 0) continue;
      for (std::size_t k = 0; k < width_; ++k)
        v[k] = (v[k] + q_ - mulm(t, rows_[r][k], q_)) % q_;
    }
    std::size_t p = 0;
    while (p < width_ && v[p] == 0) ++p;
    if (p == width_) return false;
    const std::uint64_t s = invm(v[p], q_);
    for (auto& x : v) x = mulm(x, s, q_);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::uint64_t q_;
  std::size_t width_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

unsigned fq_matrix_rank(std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& rows) {
  if (rows.empty()) return 0;
  FqEchelon ech(q, rows.front().size());
  for (const auto& r : rows) ech.insert({r.begin(), r.end()});
  return static_cast<unsigned>(ech.rank());
}

Field Field::make(std::uint64_t q, unsigned n) {
  if (q > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorKind::TooLarge, "q^(2n) exceeds 64-bit element packing");
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, "q must be prime, got " + std::to_string(q));
  if (n == 0 || n % 2 == 0) throw Error(ErrorKind::EvenN, "n must be odd, got " + std::to_string(n));
  unsigned __int128 size = 1;
  for (unsigned i = 0; i < 2 * n; ++i) {
    size *= q;
    if (size > std::numeric_limits<std::uint64_t>::max())
      throw Error(ErrorKind::TooLarge, "q^(2n) exceeds 64-bit element packing");
  }
  Field f;
  f.q_ = static_cast<std::uint32_t>(q);
  f.n_ = n;
  f.deg_ = 2 * n;
  const unsigned __int128 bound = static_cast<unsigned __int128>(q - 1) * (q - 1) * (2 * f.deg_ + 2);
  f.wide_ = bound >= (static_cast<unsigned __int128>(1) << 63);
  f.modulus_ = canonical_modulus(q, f.deg_);
  f.build_tables();
  return f;
}

Field Field::make_checked(std::uint64_t q, unsigned n, std::span<const std::uint32_t> modulus) {
  Field f = make(q, n);
  if (!std::equal(modulus.begin(), modulus.end(), f.modulus_.begin(), f.modulus_.end()))
    throw Error(ErrorKind::ParamsMismatch, "modulus does not match the canonical choice");
  return f;
}

void Field::build_tables() {
  const unsigned N = deg_;
  frob_.assign(N, std::vector<std::uint32_t>(N * N, 0));
  for (unsigned i = 0; i < N; ++i) frob_[0][i * N + i] = 1;
  const Felt xq = pow(generator(), q_);
  Felt col = one();
  for (unsigned i = 0; i < N; ++i) {
    for (unsigned r = 0; r < N; ++r) frob_[1][r * N + i] = col.c[r];
    col = mul(col, xq);
  }
  for (unsigned j = 2; j < N; ++j) {
    for (unsigned i = 0; i < N; ++i) {
      Felt basis{};
      for (unsigned r = 0; r < N; ++r) basis.c[r] = frob_[j - 1][r * N + i];
      const Felt img = apply(frob_[1], basis);
      for (unsigned r = 0; r < N; ++r) frob_[j][r * N + i] = img.c[r];
    }
  }
  trace_.assign(N * N, 0);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < N * N; ++k)
      trace_[k] = static_cast<std::uint32_t>((trace_[k] + std::uint64_t{frob_[2 * i][k]}) % q_);
}

Felt Field::one() const { return from_fq(1); }

Felt Field::generator() const {
  Felt x{};
  x.c[1] = 1;  // degree is at least 2
  return x;
}

Felt Field::from_fq(std::uint32_t a) const {
  Felt x{};
  x.c[0] = a % q_;
  return x;
}

Felt Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() != deg_)
    throw Error(ErrorKind::Malformed, "element must have " + std::to_string(deg_) + " coefficients");
  Felt x{};
  for (unsigned i = 0; i < deg_; ++i) {
    if (coeffs[i] >= q_) throw Error(ErrorKind::Malformed, "coefficient out of range [0, q)");
    x.c[i] = static_cast<std::uint32_t>(coeffs[i]);
  }
  return x;
}

Felt Field::add(const Felt& a, const Felt& b) const {
  Felt r{};
  for (unsigned i = 0; i < deg_; ++i) {
    std::uint64_t s = std::uint64_t{a.c[i]} + b.c[i];
    r.c[i] = static_cast<std::uint32_t>(s >= q_ ? s - q_ : s);
  }
  return r;
}

Felt Field::sub(const Felt& a, const Felt& b) const {
  Felt r{};
  for (unsigned i = 0; i < deg_; ++i) {
    std::uint64_t s = std::uint64_t{a.c[i]} + q_ - b.c[i];
    r.c[i] = static_cast<std::uint32_t>(s >= q_ ? s - q_ : s);
  }
  return r;
}

Felt Field::neg(const Felt& a) const { return sub(Felt{}, a); }

Felt Field::scale(std::uint32_t s, const Felt& a) const {
  Felt r{};
  for (unsigned i = 0; i < deg_; ++i) r.c[i] = static_cast<std::uint32_t>(mulm(s, a.c[i], q_));
  return r;
}

Felt Field::mul(const Felt& a, const Felt& b) const {
  const unsigned N = deg_;
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
  if (!wide_) {
    for (unsigned i = 0; i < N; ++i) {
      const std::uint64_t ai = a.c[i];
      if (ai == 0) continue;
      for (unsigned j = 0; j < N; ++j) prod[i + j] += ai * b.c[j];
    }
    for (unsigned i = 2 * N - 1; i-- > N;) {
      const std::uint64_t t = prod[i] % q_;
      if (t == 0) continue;
      const unsigned base = i - N;
      for (unsigned k = 0; k < N; ++k) prod[base + k] += t * (q_ - modulus_[k]);
    }
  } else {
    for (unsigned i = 0; i < N; ++i)
      for (unsigned j = 0; j < N; ++j) prod[i + j] = (prod[i + j] + mulm(a.c[i], b.c[j], q_)) % q_;
    for (unsigned i = 2 * N - 1; i-- > N;) {
      const std::uint64_t t = prod[i] % q_;
      if (t == 0) continue;
      const unsigned base = i - N;
      for (unsigned k = 0; k < N; ++k)
        prod[base + k] = (prod[base + k] + mulm(t, q_ - modulus_[k], q_)) % q_;
    }
  }
  Felt r{};
  for (unsigned i = 0; i < N; ++i) r.c[i] = static_cast<std::uint32_t>(prod[i] % q_);
  return r;
}

Felt Field::inv(const Felt& a) const {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "inverse of zero");
  // Extended Euclid on (f, a) tracking only the cofactor of a.
  Poly f(modulus_.begin(), modulus_.end());
  f.push_back(1);
  Poly r0 = f, r1(a.c.begin(), a.c.begin() + deg_);
  trim(r1);
  Poly s0{}, s1{1};
  while (r1.size() > 1) {
    // r0 = quot * r1 + rem
    Poly rem = r0;
    Poly quot(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
    const std::uint64_t lead_inv = invm(r1.back(), q_);
    while (rem.size() >= r1.size()) {
      const std::uint64_t t = mulm(rem.back(), lead_inv, q_);
      const std::size_t shift = rem.size() - r1.size();
      quot[shift] = t;
      for (std::size_t k = 0; k < r1.size(); ++k)
        rem[shift + k] = (rem[shift + k] + q_ - mulm(t, r1[k], q_)) % q_;
      trim(rem);
    }
    trim(quot);
    Poly qs(quot.size() + s1.size(), 0);
    for (std::size_t i = 0; i < quot.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        qs[i + j] = (qs[i + j] + mulm(quot[i], s1[j], q_)) % q_;
    trim(qs);
    Poly s2 = poly_sub(s0, qs, q_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since f is irreducible
  const std::uint64_t c = invm(r1[0], q_);
  s1 = poly_mod(std::move(s1), f, q_);
  Felt out{};
  for (std::size_t i = 0; i < s1.size(); ++i) out.c[i] = static_cast<std::uint32_t>(mulm(s1[i], c, q_));
  return out;
}

Felt Field::pow(const Felt& a, std::uint64_t e) const {
  Felt r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Felt Field::apply(std::span<const std::uint32_t> matrix, const Felt& x) const {
  const unsigned N = deg_;
  Felt y{};
  for (unsigned r = 0; r < N; ++r) {
    const std::uint32_t* row = matrix.data() + std::size_t{r} * N;
    std::uint64_t acc = 0;
    if (!wide_) {
      for (unsigned i = 0; i < N; ++i) acc += std::uint64_t{row[i]} * x.c[i];
    } else {
      for (unsigned i = 0; i < N; ++i) acc = (acc + mulm(row[i], x.c[i], q_)) % q_;
    }
    y.c[r] = static_cast<std::uint32_t>(acc % q_);
  }
  return y;
}

Felt Field::frobenius(const Felt& x, long long j) const {
  const long long N = deg_;
  const long long k = ((j % N) + N) % N;
  if (k == 0) return x;
  return apply(frob_[static_cast<std::size_t>(k)], x);
}

Felt Field::rel_trace(const Felt& z) const { return apply(trace_, z); }

bool Field::in_subfield(const Felt& z, unsigned e) const {
  if (e == 0 || deg_ % e != 0)
    throw Error(ErrorKind::NotADivisor, std::to_string(e) + " does not divide " + std::to_string(deg_));
  return frobenius(z, e) == z;
}

std::vector<Felt> Field::subfield_basis(unsigned e) const {
  if (e == 0 || deg_ % e != 0)
    throw Error(ErrorKind::NotADivisor, std::to_string(e) + " does not divide " + std::to_string(deg_));
  // The trace to F_{q^e} is F_q-linear and onto; images of the power basis span it.
  FqEchelon ech(q_, deg_);
  std::vector<Felt> basis;
  for (unsigned i = 0; i < deg_ && basis.size() < e; ++i) {
    Felt xi{};
    xi.c[i] = 1;
    Felt t{};
    for (unsigned s = 0; s < deg_ / e; ++s) t = add(t, frobenius(xi, static_cast<long long>(s) * e));
    if (ech.insert({t.c.begin(), t.c.begin() + deg_})) basis.push_back(t);
  }
  return basis;
}

Felt Field::solve_hermitian_norm(const Felt& a) const {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "norm equation with zero right-hand side");
  if (!in_subfield(a, 1)) throw Error(ErrorKind::NotInSubfield, "norm target must lie in F_q");
  const std::uint64_t av = a.c[0];
  if (q_ == 2) return one();
  // Norms of F_q elements are their squares; for a non-residue, shift by an
  // element of F_{q^2} whose norm is a non-residue.
  if (is_square(av, q_)) return from_fq(static_cast<std::uint32_t>(sqrtm(av, q_)));
  const auto b = subfield_basis(2);
  const Felt w = in_subfield(b[0], 1) ? b[1] : b[0];
  for (std::uint32_t x = 0; x < q_; ++x) {
    const Felt c0 = add(from_fq(x), w);
    const Felt nc0 = mul(frobenius(c0, 1), c0);
    const std::uint64_t nv = nc0.c[0];
    if (is_square(nv, q_)) continue;
    const std::uint64_t ratio = mulm(av, invm(nv, q_), q_);
    return scale(static_cast<std::uint32_t>(sqrtm(ratio, q_)), c0);
  }
  throw Error(ErrorKind::BasisSearchFailed, "no element of non-square norm found");
}

}  // namespace hermrank
