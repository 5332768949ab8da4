#pragma once

#include <json.hpp>

#include "jring/mapalg.hpp"
#include "jring/reconstruct.hpp"

namespace jring {

// JSON forms: matrices as {"ring", "n", "entries"}, entries as ring value
// strings (coefficient arrays for polynomial rings); maps as
// {"omega", "points"}; oracle tables as {"ring", "n", "values", "witnesses"}.
// Parse and emit round-trip bit-exactly.

nlohmann::json entry_to_json(const RingValue& v);
RingValue entry_from_json(const RingId& ring, const nlohmann::json& j);

nlohmann::json matrix_to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json omega_map_to_json(const OmegaMap& m);
OmegaMap omega_map_from_json(const nlohmann::json& j);

nlohmann::json oracle_table_to_json(const OracleTable& table);
OracleTable oracle_table_from_json(const nlohmann::json& j);

nlohmann::json value_table_to_json(const RingId& ring, int n,
                                   const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& table);
std::vector<std::pair<HermitianMatrix, HermitianMatrix>> value_table_from_json(
    const nlohmann::json& j, RingId& ring_out, int& n_out);

}  // namespace jring
