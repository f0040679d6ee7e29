#include "darcais/table_io.hpp"

#include <sstream>
#include <stdexcept>

namespace darcais {

nlohmann::json rational_to_json(const Rational& r)
{
    return to_string(r);
}

nlohmann::json polynomial_to_json(const Polynomial& p)
{
    auto out = nlohmann::json::array();
    for (const auto& c : p.coefficients())
        out.push_back(rational_to_json(c));
    return out;
}

nlohmann::json table_to_json(const CoefficientTable& table)
{
    nlohmann::json doc;
    doc["g"] = table.g_name();
    doc["h"] = table.h_name();
    doc["max_n"] = table.max_n();
    auto H = nlohmann::json::array();
    auto A = nlohmann::json::array();
    for (int n = 0; n <= table.max_n(); ++n) {
        H.push_back(rational_to_json(table.normalizer(n)));
        auto row = nlohmann::json::array();
        for (const auto& a : table.row(n))
            row.push_back(rational_to_json(a));
        A.push_back(std::move(row));
    }
    doc["H"] = std::move(H);
    doc["A"] = std::move(A);
    return doc;
}

CoefficientTable table_from_json(const nlohmann::json& doc)
{
    try {
        std::vector<Rational> H;
        for (const auto& v : doc.at("H"))
            H.push_back(parse_rational(v.get<std::string>()));
        std::vector<std::vector<Rational>> rows;
        for (const auto& row : doc.at("A")) {
            std::vector<Rational> r;
            for (const auto& v : row)
                r.push_back(parse_rational(v.get<std::string>()));
            rows.push_back(std::move(r));
        }
        CoefficientTable table(doc.at("g").get<std::string>(), doc.at("h").get<std::string>(), std::move(rows),
                               std::move(H));
        if (table.max_n() != doc.at("max_n").get<int>())
            throw std::invalid_argument("max_n does not match the number of rows");
        return table;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed coefficient table: ") + e.what());
    }
}

std::string table_to_csv(const CoefficientTable& table)
{
    std::ostringstream os;
    const int N = table.max_n();
    os << "n";
    for (int m = 0; m <= N; ++m)
        os << ",m" << m;
    os << '\n';
    for (int n = 0; n <= N; ++n) {
        os << n;
        for (int m = 0; m <= N; ++m) {
            os << ',';
            if (m <= n)
                os << to_string(table.coeff(n, m));
        }
        os << '\n';
    }
    return os.str();
}

} // namespace darcais
