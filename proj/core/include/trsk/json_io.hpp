#pragma once

/**
 * @file json_io.hpp
 * @brief Canonical JSON encodings: rational scalars as "num/den" strings
 *        ("num" when den = 1), max-plus scalars as JSON integers, matrices
 *        as {"algebra","rows"}, tableau contents with the leading units
 *        trimmed. nlohmann objects keep keys sorted, so dump() is a
 *        canonical byte encoding.
 */

#include "trsk/rsk.hpp"
#include "trsk/weyl.hpp"

#include <json.hpp>

namespace trsk {

using Json = nlohmann::json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Algebra alg);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json tableau_to_json(const TableauContent& t);
TableauContent tableau_from_json(const Json& j);

Json pair_to_json(const TableauPair& p);
TableauPair pair_from_json(const Json& j);

Json report_to_json(const CheckReport& r);

/// Canonical compact byte encoding (sorted keys, no whitespace).
std::string canonical_dump(const Json& j);

}  // namespace trsk
