#include <doctest.h>

#include "darcais/partitions.hpp"
#include "darcais/poly_engine.hpp"
#include "darcais/series_oracles.hpp"
#include "test_support.hpp"

using namespace darcais;
using darcais::test::poly;

namespace {

const auto one = ArithmeticFunction::one();
const auto id = ArithmeticFunction::id();
const auto sigma = ArithmeticFunction::sigma(1);

bool is_triangular(int n)
{
    for (int k = 0; k * (k + 1) / 2 <= n; ++k)
        if (k * (k + 1) / 2 == n)
            return true;
    return false;
}

} // namespace

TEST_CASE("gen_series_h_id")
{
    const auto s = gen_series_h_id(sigma, 6);
    CHECK(s[0] == Polynomial(Rational(1)));
    CHECK(s[2] == poly({0, Rational(3, 2), Rational(1, 2)}));

    const auto ones = gen_series_h_id(one, 8);
    Polynomial rising(Rational(1));
    for (int n = 0; n <= 8; ++n) {
        CHECK(ones[static_cast<std::size_t>(n)] == rising / Rational(factorial(static_cast<unsigned long>(n))));
        rising *= poly({n, 1});
    }
}

TEST_CASE("gen_series_h_one")
{
    const auto s3 = gen_series_h_one(ArithmeticFunction::sigma(3), 3);
    CHECK(s3[1].eval(-240) == -240);
    const auto s5 = gen_series_h_one(ArithmeticFunction::sigma(5), 3);
    CHECK(s5[1].eval(504) == 504);
    const auto ones = gen_series_h_one(one, 8);
    CHECK(ones[0] == Polynomial(Rational(1)));
    Polynomial power(Rational(1));
    for (int n = 1; n <= 8; ++n) {
        CHECK(ones[static_cast<std::size_t>(n)] == Polynomial::x() * power);
        power *= poly({1, 1});
    }
}

TEST_CASE("generating series reproduce the recursion")
{
    for (const auto& g : {one, id, sigma, ArithmeticFunction::sigma(3), ArithmeticFunction::tilde(sigma)}) {
        const auto via_id = gen_series_h_id(g, 15);
        const auto via_one = gen_series_h_one(g, 15);
        const auto p_id = pn_sequence(g, id, 15);
        const auto p_one = pn_sequence(g, one, 15);
        for (std::size_t n = 0; n <= 15; ++n) {
            CHECK(via_id[n] == p_id[n]);
            CHECK(via_one[n] == p_one[n]);
        }
    }
}

TEST_CASE("eta_power special values")
{
    const auto e1 = eta_power(1, 10);
    CHECK(e1[1] == -1);
    CHECK(e1[2] == -1);
    CHECK(e1[3] == 0);
    CHECK(e1[5] == 1);
    const auto em1 = eta_power(-1, 30);
    for (int n = 0; n <= 30; ++n)
        CHECK(em1[static_cast<std::size_t>(n)] == partition_count(n));
    const auto e24 = eta_power(24, 4);
    CHECK(e24[1] == -24);
    CHECK(e24[2] == 252);
    CHECK(e24[3] == -1472);
    CHECK(eta_power(0, 5)[0] == 1);
    CHECK(eta_power(0, 5)[3] == 0);
    const auto e3 = eta_power(3, 50);
    for (int n = 0; n <= 50; ++n)
        if (!is_triangular(n))
            CHECK(e3[static_cast<std::size_t>(n)] == 0);
}

TEST_CASE("eta_power agrees with D'Arcais polynomials at -r")
{
    const auto p = pn_sequence(sigma, id, 30);
    for (long r : {-2L, -1L, 1L, 3L, 24L}) {
        const auto e = eta_power(r, 30);
        for (std::size_t n = 0; n <= 30; ++n)
            CHECK(Rational(e[n]) == p[n].eval(Rational(-r)));
    }
}

TEST_CASE("eta_power_symbolic")
{
    const auto s = eta_power_symbolic(12);
    const auto p = pn_sequence(sigma, id, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(s[n] == reflect(p[n]));
        CHECK(s[n].degree() == static_cast<long>(n));
    }
    for (long r : {1L, 3L, 24L}) {
        const auto e = eta_power(r, 12);
        for (std::size_t n = 0; n <= 12; ++n)
            CHECK(s[n].eval(Rational(r)) == Rational(e[n]));
    }
}

TEST_CASE("inverse_eisenstein")
{
    const auto a4 = inverse_eisenstein(EisensteinWeight::four, 20);
    CHECK(a4[0] == 1);
    CHECK(a4[1] == -240);
    const auto a6 = inverse_eisenstein(EisensteinWeight::six, 20);
    // Geometric route: 1/(1 - u) with u = 504 q + 504*33 q^2 + ...
    CHECK(a6[2] == 504 * 504 + 504 * 33);
    CHECK(a6[2] == 270648);
    CHECK(Rational(a6[2]) == pn(ArithmeticFunction::sigma(5), one, 2).eval(504));
    const auto p4 = pn_sequence(ArithmeticFunction::sigma(3), one, 20);
    const auto p6 = pn_sequence(ArithmeticFunction::sigma(5), one, 20);
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(Rational(a4[n]) == p4[n].eval(-240));
        CHECK(Rational(a6[n]) == p6[n].eval(504));
    }
}

TEST_CASE("nekrasov_okounkov")
{
    CHECK(nekrasov_okounkov(0) == Polynomial(Rational(1)));
    CHECK(nekrasov_okounkov(1) == poly({1, 1}));
    CHECK(nekrasov_okounkov(2) == poly({2, Rational(5, 2), Rational(1, 2)}));
    const auto p = pn_sequence(sigma, id, 12);
    for (int n = 0; n <= 12; ++n) {
        const auto q = nekrasov_okounkov(n);
        CHECK(q.eval(0) == Rational(partition_count(n)));
        CHECK(q == taylor_shift(p[static_cast<std::size_t>(n)], 1));
        CHECK(q.degree() == n);
        for (const auto& c : q.coefficients())
            CHECK(sgn(c) > 0);
    }
}

TEST_CASE("the unshifted hook formula fails at n = 1")
{
    // sum over lambda |- 1 of (1 + (z+1)/1) = z + 2, while P_1(z) = z.
    const auto q1 = nekrasov_okounkov(1);
    CHECK(taylor_shift(q1, 1) != pn(sigma, id, 1));
    CHECK(taylor_shift(q1, -1) == pn(sigma, id, 1));
}

TEST_CASE("closed_family_check")
{
    for (auto f : {ClosedFamily::pochhammer, ClosedFamily::stirling, ClosedFamily::lah, ClosedFamily::chebyshev3term,
                   ClosedFamily::symmetric_product}) {
        const auto report = closed_family_check(f, 10);
        INFO(to_string(f));
        CHECK(report.ok);
        CHECK(report.checked > 0);
        CHECK_FALSE(report.failure);
        CHECK(parse_closed_family(to_string(f)) == f);
    }
    for (const auto& h : {id, sigma, ArithmeticFunction::tilde(ArithmeticFunction::sigma(2))}) {
        CHECK(closed_family_check(ClosedFamily::chebyshev3term, 10, h).ok);
        CHECK(closed_family_check(ClosedFamily::symmetric_product, 10, h).ok);
    }
    CHECK_THROWS_AS(parse_closed_family("laguerre"), std::invalid_argument);
    CHECK_THROWS_AS(closed_family_check(ClosedFamily::lah, 0), std::out_of_range);
}

TEST_CASE("three-term relation at n = 0 needs h(0) = 0")
{
    // g = id, h = 1: P_1 = x, P_2 = x^2 + 2x.
    const auto p = pn_sequence(id, one, 2);
    CHECK(p[2] == poly({0, 2, 1}));
    const Polynomial with_h0 = p[0] * one(0) - poly({2, 1}) * p[1] + p[2];
    CHECK(with_h0.is_zero());
    const Polynomial with_h0_one = p[0] - poly({2, 1}) * p[1] + p[2];
    CHECK(with_h0_one == Polynomial(Rational(1)));
}

TEST_CASE("symmetric product instance")
{
    CHECK(pn(one, id, 3) * Rational(6) == poly({0, 2, 3, 1}));
}
