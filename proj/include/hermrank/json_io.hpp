#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "hermrank/codec.hpp"

namespace hermrank {

using json = nlohmann::json;

// Elements are arrays of 2n integers, a_0 first. Vectors of elements are
// arrays of such arrays. Malformed input raises Error{Malformed}.

json felt_to_json(const Field& field, const Felt& x);
Felt felt_from_json(const Field& field, const json& j);

json vector_to_json(const Field& field, std::span<const Felt> v);
std::vector<Felt> vector_from_json(const Field& field, const json& j, std::size_t expected_size);

/// Row-major array of serialized elements.
json matrix_to_json(const Field& field, const Matrix& a);

/// {"q","n","d","m","kappa","k","modulus","alpha","eta"}
json params_to_json(const CodeParams& params);
/// Rebuilds the field and Moore inverse; the stored modulus and basis are
/// cross-checked (Error{ParamsMismatch}).
CodeParams params_from_json(const json& j);

/// {"f": [...]} with k entries.
json message_to_json(const CodeParams& params, std::span<const Felt> message);
Message message_from_json(const CodeParams& params, const json& j);

/// {"v": [...]} with n entries.
json word_to_json(const CodeParams& params, std::span<const Felt> word);
std::vector<Felt> word_from_json(const CodeParams& params, const json& j);

json decode_result_to_json(const CodeParams& params, const DecodeResult& result);

}  // namespace hermrank
