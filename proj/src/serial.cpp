#include "jring/serial.hpp"

namespace jring {

using nlohmann::json;

json entry_to_json(const RingValue& v) {
    if (v.ring().kind() == RingKind::polynomial) {
        json arr = json::array();
        for (const auto& c : v.poly_coeffs()) arr.push_back(entry_to_json(c));
        return arr;
    }
    return value_to_string(v);
}

RingValue entry_from_json(const RingId& ring, const json& j) {
    if (ring.kind() == RingKind::polynomial) {
        if (!j.is_array()) throw ParseError("polynomial entry must be a coefficient array");
        std::vector<RingValue> coeffs;
        coeffs.reserve(j.size());
        for (const auto& c : j) coeffs.push_back(entry_from_json(ring.base(), c));
        return make_polynomial(ring, std::move(coeffs));
    }
    if (!j.is_string()) throw ParseError("ring value must be a string");
    return value_from_string(ring, j.get<std::string>());
}

json matrix_to_json(const SquareMatrix& m) {
    json entries = json::array();
    for (int i = 1; i <= m.n(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.n(); ++j) row.push_back(entry_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"ring", m.ring().to_string()}, {"n", m.n()}, {"entries", std::move(entries)}};
}

SquareMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("n") || !j.contains("entries")) {
        throw ParseError("matrix JSON needs ring, n and entries");
    }
    RingId ring = RingId::parse(j.at("ring").get<std::string>());
    int n = j.at("n").get<int>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != n) {
        throw ParseError("matrix entries must be an n x n array");
    }
    SquareMatrix m(ring, n);
    for (int i = 1; i <= n; ++i) {
        const json& row = entries.at(static_cast<std::size_t>(i - 1));
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw ParseError("matrix entries must be an n x n array");
        }
        for (int c = 1; c <= n; ++c) {
            m.set(i, c, entry_from_json(ring, row.at(static_cast<std::size_t>(c - 1))));
        }
    }
    return m;
}

json omega_map_to_json(const OmegaMap& m) {
    json points = json::array();
    for (int t = 1; t <= m.omega_size(); ++t) points.push_back(matrix_to_json(m.at(t)));
    return json{{"omega", m.omega_size()}, {"points", std::move(points)}};
}

OmegaMap omega_map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("omega") || !j.contains("points")) {
        throw ParseError("map JSON needs omega and points");
    }
    int m = j.at("omega").get<int>();
    const json& points = j.at("points");
    if (!points.is_array() || static_cast<int>(points.size()) != m) {
        throw ParseError("points array size must equal omega");
    }
    std::vector<SquareMatrix> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(matrix_from_json(p));
    return OmegaMap(std::move(out));
}

json oracle_table_to_json(const OracleTable& table) {
    json values = json::array();
    for (const auto& [x, dx] : table.values) {
        values.push_back(json{{"x", matrix_to_json(x.matrix())}, {"dx", matrix_to_json(dx.matrix())}});
    }
    json witnesses = json::array();
    for (const auto& w : table.witnesses) {
        json pairs = json::array();
        for (const auto& [a, b] : w.derivation.pairs()) {
            pairs.push_back(json::array({matrix_to_json(a.matrix()), matrix_to_json(b.matrix())}));
        }
        witnesses.push_back(json{{"x", matrix_to_json(w.x.matrix())},
                                 {"y", matrix_to_json(w.y.matrix())},
                                 {"pairs", std::move(pairs)}});
    }
    return json{{"ring", table.ring.to_string()},
                {"n", table.n},
                {"values", std::move(values)},
                {"witnesses", std::move(witnesses)}};
}

OracleTable oracle_table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("values")) throw ParseError("oracle table needs values");
    OracleTable table;
    if (j.contains("ring")) table.ring = RingId::parse(j.at("ring").get<std::string>());
    for (const auto& entry : j.at("values")) {
        HermitianMatrix x(matrix_from_json(entry.at("x")));
        HermitianMatrix dx(matrix_from_json(entry.at("dx")));
        table.values.emplace_back(std::move(x), std::move(dx));
    }
    if (table.values.empty()) throw ParseError("oracle table has no values");
    table.n = table.values[0].first.n();
    if (!j.contains("ring")) table.ring = table.values[0].first.ring();
    if (j.contains("witnesses")) {
        for (const auto& entry : j.at("witnesses")) {
            HermitianMatrix x(matrix_from_json(entry.at("x")));
            HermitianMatrix y(matrix_from_json(entry.at("y")));
            std::vector<std::pair<HermitianMatrix, HermitianMatrix>> pairs;
            for (const auto& p : entry.at("pairs")) {
                if (!p.is_array() || p.size() != 2) throw ParseError("witness pair must be [a, b]");
                pairs.emplace_back(HermitianMatrix(matrix_from_json(p.at(0))),
                                   HermitianMatrix(matrix_from_json(p.at(1))));
            }
            table.witnesses.push_back(
                {std::move(x), std::move(y), JordanPairDerivation(std::move(pairs))});
        }
    }
    return table;
}

json value_table_to_json(const RingId& ring, int n,
                         const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& table) {
    json values = json::array();
    for (const auto& [x, dx] : table) {
        values.push_back(json{{"x", matrix_to_json(x.matrix())}, {"dx", matrix_to_json(dx.matrix())}});
    }
    return json{{"ring", ring.to_string()}, {"n", n}, {"values", std::move(values)}};
}

std::vector<std::pair<HermitianMatrix, HermitianMatrix>> value_table_from_json(const json& j,
                                                                               RingId& ring_out,
                                                                               int& n_out) {
    if (!j.is_object() || !j.contains("values") || !j.at("values").is_array()) {
        throw ParseError("value table needs a values array");
    }
    std::vector<std::pair<HermitianMatrix, HermitianMatrix>> table;
    for (const auto& entry : j.at("values")) {
        table.emplace_back(HermitianMatrix(matrix_from_json(entry.at("x"))),
                           HermitianMatrix(matrix_from_json(entry.at("dx"))));
    }
    if (table.empty()) throw ParseError("value table is empty");
    ring_out = table[0].first.ring();
    n_out = table[0].first.n();
    for (const auto& [x, dx] : table) {
        if (x.ring() != ring_out || x.n() != n_out || dx.ring() != ring_out || dx.n() != n_out) {
            throw ParseError("value table entries do not share ring and size");
        }
    }
    return table;
}

}  // namespace jring
