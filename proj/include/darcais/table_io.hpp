// Text, JSON and CSV serialization of coefficient tables. Rationals are
// always written as strings ("p/q", or "p" for integers), never as floats.

#ifndef DARCAIS_TABLE_IO_HPP
#define DARCAIS_TABLE_IO_HPP

#include <string>

#include <json.hpp>

#include "darcais/poly_engine.hpp"

namespace darcais {

/// {"g": ..., "h": ..., "max_n": N, "H": [...], "A": [[...], ...]}
nlohmann::json table_to_json(const CoefficientTable& table);

/// Inverse of table_to_json. Throws std::invalid_argument on malformed input.
CoefficientTable table_from_json(const nlohmann::json& doc);

/// Header "n,m0,m1,...,mN"; row n holds A_{n,0..n} and leaves the cells
/// above the diagonal empty.
std::string table_to_csv(const CoefficientTable& table);

nlohmann::json rational_to_json(const Rational& r);
nlohmann::json polynomial_to_json(const Polynomial& p);

} // namespace darcais

#endif
