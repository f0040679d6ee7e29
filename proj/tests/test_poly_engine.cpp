#include <doctest.h>

#include "darcais/poly_engine.hpp"
#include "test_support.hpp"

using namespace darcais;
using darcais::test::poly;

namespace {

const auto one = ArithmeticFunction::one();
const auto id = ArithmeticFunction::id();
const auto sigma = ArithmeticFunction::sigma(1);

} // namespace

TEST_CASE("pn small cases")
{
    // P_1 = x; P_2 = x/2 (sigma(1) P_1 + sigma(2) P_0) = (x^2 + 3x)/2.
    CHECK(pn(sigma, id, 2) == poly({0, Rational(3, 2), Rational(1, 2)}));
    for (const auto& g : {one, id, sigma, ArithmeticFunction::sigma(5)})
        for (const auto& h : {one, id, sigma, ArithmeticFunction::tilde(sigma)})
            CHECK(pn(g, h, 1) == Polynomial::x());
    CHECK(pn(one, one, 3) == poly({0, 1, 2, 1}));
    CHECK(pn(one, id, 0) == Polynomial(Rational(1)));
}

TEST_CASE("pn rejects vanishing h")
{
    const auto vanishing = ArithmeticFunction::from_table({1, 0, 1});
    CHECK_THROWS_AS(pn(sigma, vanishing, 2), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientTable(sigma, vanishing, 2), std::invalid_argument);
    CHECK_THROWS_AS(pn(sigma, id, -1), std::out_of_range);
}

TEST_CASE("coeff_table entries")
{
    CHECK(CoefficientTable(sigma, id, 4).coeff(2, 1) == 3);
    CHECK(CoefficientTable(one, id, 4).coeff(3, 2) == 3);
    CHECK(CoefficientTable(id, id, 4).coeff(3, 2) == 6);
    const CoefficientTable t(sigma, one, 6);
    CHECK(t.coeff(0, 0) == 1);
    for (int n = 1; n <= 6; ++n) {
        CHECK(t.coeff(n, 0) == 0);
        CHECK(t.coeff(n, n) == 1);
    }
    CHECK_THROWS_AS((void)t.coeff(7, 1), std::out_of_range);
    CHECK_THROWS_AS((void)t.coeff(3, 4), std::out_of_range);
    CHECK_THROWS_AS((void)t.coeff(3, -1), std::out_of_range);
}

TEST_CASE("scaled_coeff")
{
    CHECK(scaled_coeff(CoefficientTable(sigma, id, 3), 2, 1) == Rational(3, 2));
    const CoefficientTable t(sigma, id, 8);
    for (int n = 0; n <= 8; ++n)
        CHECK(scaled_coeff(t, n, n) == 1 / t.normalizer(n));
    CHECK(t.normalizer(5) == 120);
    CHECK(scaled_coeff(CoefficientTable(one, one, 3), 3, 2) == 2);
}

TEST_CASE("recursion and coefficient table agree")
{
    const auto table_g = ArithmeticFunction::from_table({1, Rational(-2, 3), 5, Rational(7, 4), 0, 3, -1, 2, 9, 1});
    const std::vector<std::pair<ArithmeticFunction, ArithmeticFunction>> pairs{
        {one, one},
        {id, id},
        {sigma, id},
        {sigma, one},
        {ArithmeticFunction::sigma(3), sigma},
        {ArithmeticFunction::tilde(sigma), one},
        {id, ArithmeticFunction::tilde(ArithmeticFunction::sigma(2))},
        {table_g, sigma},
    };
    for (const auto& [g, h] : pairs) {
        const int N = g.name() == "table" ? 10 : 30;
        const auto p = pn_sequence(g, h, N);
        const CoefficientTable t(g, h, N);
        for (int n = 0; n <= N; ++n) {
            INFO(g.name(), " ", h.name(), " n=", n);
            const auto& P = p[static_cast<std::size_t>(n)];
            CHECK(P * t.normalizer(n) == t.row_polynomial(n));
            CHECK(t.polynomial(n) == P);
            CHECK(P.degree() == n);
            CHECK((P * t.normalizer(n)).leading() == 1);
            if (n >= 1)
                CHECK(P.coefficient(0) == 0);
        }
    }
}

TEST_CASE("integer tables for builtin g with h in {1, id}")
{
    for (const auto& g : {one, id, sigma, ArithmeticFunction::sigma(3), ArithmeticFunction::sigma(5)})
        for (const auto& h : {one, id}) {
            const CoefficientTable t(g, h, 30);
            for (int n = 0; n <= 30; ++n)
                for (const auto& a : t.row(n)) {
                    CHECK(a.get_den() == 1);
                    CHECK(sgn(a) >= 0);
                }
        }
}

TEST_CASE("integer fast path matches rational path")
{
    // tilde(id) is the constant one but is not flagged integer-valued, so
    // its table takes the rational route.
    const CoefficientTable fast(sigma, one, 25);
    const CoefficientTable slow(sigma, ArithmeticFunction::tilde(id), 25);
    for (int n = 0; n <= 25; ++n)
        CHECK(fast.row(n) == slow.row(n));
}
