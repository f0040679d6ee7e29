// Helpers shared by the unit tests.

#ifndef DARCAIS_TEST_SUPPORT_HPP
#define DARCAIS_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "darcais/exact.hpp"

namespace darcais::test {

inline Polynomial poly(std::initializer_list<Rational> coefficients)
{
    return Polynomial(std::vector<Rational>(coefficients));
}

inline Polynomial random_poly(std::mt19937& rng, int max_degree = 4)
{
    std::uniform_int_distribution<int> degree(-1, max_degree);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> c(static_cast<std::size_t>(degree(rng) + 1));
    for (auto& v : c) {
        v = Rational(num(rng), den(rng));
        v.canonicalize();
    }
    return Polynomial(std::move(c));
}

} // namespace darcais::test

#endif
