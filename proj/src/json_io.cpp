#include "hermrank/json_io.hpp"

#include <string>

namespace hermrank {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::Malformed, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t require_uint(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw Error(ErrorKind::Malformed, std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

json felt_to_json(const Field& field, const Felt& x) {
  json arr = json::array();
  for (unsigned i = 0; i < field.degree(); ++i) arr.push_back(x.c[i]);
  return arr;
}

Felt felt_from_json(const Field& field, const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Malformed, "field element must be an array of integers");
  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw Error(ErrorKind::Malformed, "field element coefficients must be non-negative integers");
    coeffs.push_back(v.get<std::uint64_t>());
  }
  return field.from_coeffs(coeffs);
}

json vector_to_json(const Field& field, std::span<const Felt> v) {
  json arr = json::array();
  for (const Felt& x : v) arr.push_back(felt_to_json(field, x));
  return arr;
}

std::vector<Felt> vector_from_json(const Field& field, const json& j, std::size_t expected_size) {
  if (!j.is_array() || j.size() != expected_size)
    throw Error(ErrorKind::Malformed, "expected an array of " + std::to_string(expected_size) + " field elements");
  std::vector<Felt> out;
  out.reserve(expected_size);
  for (const auto& x : j) out.push_back(felt_from_json(field, x));
  return out;
}

json matrix_to_json(const Field& field, const Matrix& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(vector_to_json(field, a.row(r)));
  return rows;
}

json params_to_json(const CodeParams& p) {
  return json{
      {"q", p.field.q()},
      {"n", p.n()},
      {"d", p.d},
      {"m", p.m},
      {"kappa", p.kappa},
      {"k", p.k},
      {"modulus", p.field.modulus()},
      {"alpha", vector_to_json(p.field, p.alpha)},
      {"eta", felt_to_json(p.field, p.eta)},
  };
}

CodeParams params_from_json(const json& j) {
  const auto q = require_uint(j, "q");
  const auto n = static_cast<unsigned>(require_uint(j, "n"));
  const auto d = static_cast<unsigned>(require_uint(j, "d"));
  const json& mod = require(j, "modulus");
  if (!mod.is_array()) throw Error(ErrorKind::Malformed, "modulus must be an array");
  std::vector<std::uint32_t> modulus;
  for (const auto& v : mod) {
    if (!v.is_number_integer()) throw Error(ErrorKind::Malformed, "modulus entries must be integers");
    modulus.push_back(v.get<std::uint32_t>());
  }
  Field field = Field::make_checked(q, n, modulus);
  auto alpha = vector_from_json(field, require(j, "alpha"), n);
  const Felt eta = felt_from_json(field, require(j, "eta"));
  CodeParams p = params_from_basis(std::move(field), d, std::move(alpha), eta);
  // derived fields are optional on input but must agree when present
  for (auto [key, value] : {std::pair{"m", p.m}, std::pair{"kappa", p.kappa}, std::pair{"k", p.k}})
    if (j.contains(key) && require_uint(j, key) != value)
      throw Error(ErrorKind::ParamsMismatch, std::string("stored \"") + key + "\" disagrees with (n, d)");
  return p;
}

json message_to_json(const CodeParams& params, std::span<const Felt> message) {
  return json{{"f", vector_to_json(params.field, message)}};
}

Message message_from_json(const CodeParams& params, const json& j) {
  Message msg = vector_from_json(params.field, require(j, "f"), params.k);
  for (const Felt& x : msg)
    if (!params.field.in_subfield(x, params.n()))
      throw Error(ErrorKind::NotInSubfield, "message entries must lie in F_{q^n}");
  return msg;
}

json word_to_json(const CodeParams& params, std::span<const Felt> word) {
  return json{{"v", vector_to_json(params.field, word)}};
}

std::vector<Felt> word_from_json(const CodeParams& params, const json& j) {
  return vector_from_json(params.field, require(j, "v"), params.n());
}

json decode_result_to_json(const CodeParams& params, const DecodeResult& r) {
  json diag{
      {"path", to_string(r.diagnostics.path)},
      {"bm_length", r.diagnostics.bm_length},
      {"equations", r.diagnostics.equations},
      {"inconsistent_systems", r.diagnostics.inconsistent_systems},
  };
  diag["solvers_agree"] = r.diagnostics.solvers_agree ? json(*r.diagnostics.solvers_agree) : json(nullptr);
  json out{{"status", r.success ? "Success" : "Failure"}};
  if (r.success) {
    out["f"] = vector_to_json(params.field, r.message);
    out["t"] = r.error_rank;
    out["error_poly"] = vector_to_json(params.field, r.error_poly.coeffs);
  } else {
    out["reason"] = to_string(r.reason);
    if (r.diagnostics.inner_reason) diag["inner_reason"] = to_string(*r.diagnostics.inner_reason);
  }
  out["diagnostics"] = std::move(diag);
  return out;
}

}  // namespace hermrank
