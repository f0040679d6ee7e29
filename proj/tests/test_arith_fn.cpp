#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "darcais/arith_fn.hpp"

using namespace darcais;

TEST_CASE("builtin functions")
{
    const auto sigma = ArithmeticFunction::sigma(1);
    CHECK(sigma(6) == 12);
    CHECK(ArithmeticFunction::sigma(3)(2) == 9);
    CHECK(ArithmeticFunction::id()(7) == 7);
    CHECK(ArithmeticFunction::one()(123) == 1);
    CHECK(sigma(0) == 0);
    CHECK(sigma.non_vanishing());
    CHECK(sigma.integer_valued());
    CHECK(ArithmeticFunction::sigma(0)(12) == 6);
}

TEST_CASE("tilde")
{
    const auto ts = ArithmeticFunction::tilde(ArithmeticFunction::sigma(1));
    CHECK(ts(2) == Rational(3, 2));
    const auto tid = ArithmeticFunction::tilde(ArithmeticFunction::id());
    for (int n = 1; n <= 20; ++n)
        CHECK(tid(n) == 1);
    CHECK(ArithmeticFunction::tilde(ArithmeticFunction::one())(4) == Rational(1, 4));
    CHECK(ts(1) == 1);
    CHECK(ts.non_vanishing());
}

TEST_CASE("from_table")
{
    const auto t = ArithmeticFunction::from_table({1, 2, 100});
    CHECK(t(3) == 100);
    CHECK_THROWS_AS(ArithmeticFunction::from_table({1})(2), std::out_of_range);
    const auto s = ArithmeticFunction::from_table({1, 3, 4, 7});
    const auto sigma = ArithmeticFunction::sigma(1);
    for (int n = 1; n <= 4; ++n)
        CHECK(s(n) == sigma(n));
    CHECK_THROWS_AS(ArithmeticFunction::from_table({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(ArithmeticFunction::from_table({}), std::invalid_argument);
    CHECK_FALSE(ArithmeticFunction::from_table({1, 0, 2}).non_vanishing());
    CHECK_FALSE(ArithmeticFunction::from_table({1, Rational(1, 2)}).integer_valued());
}

TEST_CASE("normalization is enforced")
{
    CHECK_THROWS_AS(ArithmeticFunction("two", [](std::int64_t) { return Rational(2); }, {true, true}),
                    std::invalid_argument);
}

TEST_CASE("non-vanishing flag is checked on evaluation")
{
    ArithmeticFunction bad("bad", [](std::int64_t n) { return Rational(n == 3 ? 0 : 1); }, {true, true});
    CHECK(bad(2) == 1);
    CHECK_THROWS_AS(bad(3), std::logic_error);
}

TEST_CASE("h_window")
{
    const CumulativeProduct H(ArithmeticFunction::id());
    CHECK(h_window(H, 2, 4) == 12);
    for (int k = 1; k <= 10; ++k)
        CHECK(h_window(H, 1, k) == k);
    CHECK(h_window(H, 0, 5) == 1);
    CHECK_THROWS_AS(h_window(H, 3, 2), std::out_of_range);
    const CumulativeProduct ones(ArithmeticFunction::one());
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; m <= n; ++m)
            CHECK(h_window(ones, m, n) == 1);
}

TEST_CASE("cumulative product matches windows")
{
    std::mt19937 rng(5);
    for (const auto& h : {ArithmeticFunction::id(), ArithmeticFunction::sigma(1),
                          ArithmeticFunction::tilde(ArithmeticFunction::sigma(2))}) {
        const CumulativeProduct H(h);
        CHECK(H(0) == 1);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = std::uniform_int_distribution<int>(0, 50)(rng);
            const int m = std::uniform_int_distribution<int>(0, n)(rng);
            CHECK(H(n) / H(n - m) == H.window(m, n));
        }
    }
}

TEST_CASE("sigma_l is multiplicative on coprime pairs")
{
    for (unsigned l : {0U, 1U, 3U, 5U}) {
        const auto s = ArithmeticFunction::sigma(l);
        for (int a = 1; a <= 100; ++a)
            for (int b = 1; a * b <= 100; ++b)
                if (std::gcd(a, b) == 1)
                    CHECK(s(a * b) == s(a) * s(b));
    }
}

TEST_CASE("descriptor grammar")
{
    CHECK(parse_function("one")(5) == 1);
    CHECK(parse_function("id")(5) == 5);
    CHECK(parse_function("sigma:3")(2) == 9);
    CHECK(parse_function("tilde:sigma:1")(2) == Rational(3, 2));
    CHECK(parse_function("tilde:tilde:id")(4) == Rational(1, 4));
    CHECK_THROWS_AS(parse_function("sigma:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("sigma:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("table:/nonexistent/file.json"), std::invalid_argument);

    const auto path = std::filesystem::temp_directory_path() / "darcais_table_test.json";
    {
        std::ofstream out(path);
        out << R"([1, "3/2", 4, "-7"])";
    }
    const auto t = parse_function("table:" + path.string());
    CHECK(t(2) == Rational(3, 2));
    CHECK(t(4) == -7);
    CHECK_THROWS_AS(t(5), std::out_of_range);
    {
        std::ofstream out(path);
        out << R"({"not": "an array"})";
    }
    CHECK_THROWS_AS(parse_function("table:" + path.string()), std::invalid_argument);
    {
        std::ofstream out(path);
        out << R"([1, 2.5])";
    }
    CHECK_THROWS_AS(parse_function("table:" + path.string()), std::invalid_argument);
    std::filesystem::remove(path);
}
