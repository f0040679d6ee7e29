#include <doctest.h>

#include <algorithm>
#include <set>

#include "darcais/partitions.hpp"

using namespace darcais;

namespace {

// Independent oracles: brute-force counts and direct diagram scans.

long count_partitions(int n, int max_part)
{
    if (n == 0)
        return 1;
    long total = 0;
    for (int p = std::min(n, max_part); p >= 1; --p)
        total += count_partitions(n - p, p);
    return total;
}

// Every composition of n via the 2^(n-1) cut patterns.
std::vector<std::vector<int>> all_compositions(int n)
{
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1U << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(parts);
    }
    return out;
}

std::multiset<int> hooks_by_diagram(const std::vector<int>& rows)
{
    std::multiset<int> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j) {
            int arm = 0, leg = 0;
            for (int jj = j + 1; jj < rows[i]; ++jj)
                ++arm;
            for (std::size_t ii = i + 1; ii < rows.size(); ++ii)
                if (rows[ii] > j)
                    ++leg;
            out.insert(arm + leg + 1);
        }
    return out;
}

} // namespace

TEST_CASE("partitions_of")
{
    int count = 0;
    for (const auto& p : partitions_of(0)) {
        CHECK(p.length() == 0);
        CHECK(p.size() == 0);
        ++count;
    }
    CHECK(count == 1);

    std::vector<std::vector<int>> four;
    for (const auto& p : partitions_of(4))
        four.emplace_back(p.parts().begin(), p.parts().end());
    CHECK(four == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});

    for (int n = 1; n <= 20; ++n) {
        std::set<std::vector<int>> seen;
        for (const auto& p : partitions_of(n)) {
            CHECK(p.size() == n);
            seen.emplace(p.parts().begin(), p.parts().end());
        }
        CHECK(static_cast<long>(seen.size()) == count_partitions(n, n));
        CHECK(Integer(count_partitions(n, n)) == partition_count(n));
    }
    CHECK(count_partitions(10, 10) == 42);
    CHECK(partition_count(10) == 42);
    CHECK(partition_count(50) == 204226);
}

TEST_CASE("partitions_of is lazy enough for n = 50")
{
    long count = 0;
    for (const auto& p : partitions_of(50)) {
        (void)p;
        ++count;
    }
    CHECK(count == 204226);
}

TEST_CASE("orbit_of")
{
    std::vector<std::vector<int>> got;
    for (const auto& c : orbit_of(Partition({2, 1})))
        got.emplace_back(c.parts().begin(), c.parts().end());
    CHECK(got == std::vector<std::vector<int>>{{1, 2}, {2, 1}});

    int count = 0;
    for (const auto& c : orbit_of(Partition({1, 1}))) {
        (void)c;
        ++count;
    }
    CHECK(count == 1);

    for (int n = 1; n <= 9; ++n)
        for (const auto& mu : partitions_of(n)) {
            std::vector<int> parts(mu.parts().begin(), mu.parts().end());
            std::set<std::vector<int>> brute;
            std::sort(parts.begin(), parts.end());
            do
                brute.insert(parts);
            while (std::next_permutation(parts.begin(), parts.end()));
            std::set<std::vector<int>> got_set;
            int partitions_in_orbit = 0;
            for (const auto& c : orbit_of(mu)) {
                got_set.emplace(c.parts().begin(), c.parts().end());
                if (std::is_sorted(c.parts().begin(), c.parts().end(), std::greater<>()))
                    ++partitions_in_orbit;
                CHECK(sorted_partition(c) == mu);
            }
            CHECK(got_set == brute);
            CHECK(Integer(static_cast<long>(brute.size())) == orbit_size(mu));
            CHECK(partitions_in_orbit == 1);
        }
    CHECK(orbit_size(Partition({3, 1, 1})) == 3);
}

TEST_CASE("compositions_of")
{
    CHECK(composition_count(4, 2) == 3);
    CHECK(composition_count(7, 1) == 1);
    CHECK(composition_count(5, 3) == 6);

    for (int n = 1; n <= 12; ++n) {
        const auto brute = all_compositions(n);
        for (int k = 1; k <= n; ++k) {
            std::vector<std::vector<int>> expected;
            for (const auto& c : brute)
                if (static_cast<int>(c.size()) == k)
                    expected.push_back(c);
            std::sort(expected.begin(), expected.end());
            std::vector<std::vector<int>> got;
            for (const auto& c : compositions_of(n, k))
                got.emplace_back(c.parts().begin(), c.parts().end());
            CHECK(got == expected);
            CHECK(Integer(static_cast<long>(got.size())) == composition_count(n, k));
        }
    }
    int empty = 0;
    for (const auto& c : compositions_of(3, 4)) {
        (void)c;
        ++empty;
    }
    CHECK(empty == 0);
}

TEST_CASE("orbit sizes of fixed length add up to c_k(n)")
{
    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k <= n; ++k) {
            Integer total = 0;
            for (const auto& mu : partitions_of(n))
                if (mu.length() == k)
                    total += orbit_size(mu);
            CHECK(total == binomial(n - 1, k - 1));
        }
}

TEST_CASE("multinomial")
{
    CHECK(multinomial(4, std::vector<int>{2, 2}) == 6);
    CHECK(multinomial(9, std::vector<int>{9}) == 1);
    CHECK(multinomial(6, std::vector<int>{1, 2, 3}) == 60);
    CHECK(multinomial(0, std::vector<int>{}) == 1);
    CHECK_THROWS_AS(multinomial(5, std::vector<int>{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(multinomial(1, std::vector<int>{2, -1}), std::invalid_argument);
}

TEST_CASE("stirling_first_unsigned")
{
    // x(x+1)(x+2) = x^3 + 3x^2 + 2x
    Polynomial rising(Rational(1));
    for (int k = 0; k < 3; ++k)
        rising *= Polynomial(std::vector<Rational>{k, 1});
    CHECK(Rational(stirling_first_unsigned(3, 2)) == rising.coefficient(2));
    CHECK(stirling_first_unsigned(3, 2) == 3);
    for (int n = 0; n <= 10; ++n)
        CHECK(stirling_first_unsigned(n, n) == 1);
    CHECK(stirling_first_unsigned(4, 1) == 6);
    CHECK(stirling_first_unsigned(4, 0) == 0);
    CHECK_THROWS_AS(stirling_first_unsigned(2, 3), std::out_of_range);
}

TEST_CASE("hook_multiset")
{
    CHECK(hook_multiset(Partition({1})) == std::vector<int>{1});
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(hook_multiset(Partition({2}))) == std::vector<int>{1, 2});
    CHECK(sorted(hook_multiset(Partition({1, 1}))) == std::vector<int>{1, 2});
    CHECK(sorted(hook_multiset(Partition({2, 1}))) == std::vector<int>{1, 1, 3});
    for (int n = 0; n <= 15; ++n) {
        long trivial_weight_sum = 0;
        for (const auto& lambda : partitions_of(n)) {
            const auto hooks = hook_multiset(lambda);
            CHECK(static_cast<int>(hooks.size()) == lambda.size());
            const std::vector<int> rows(lambda.parts().begin(), lambda.parts().end());
            CHECK(std::multiset<int>(hooks.begin(), hooks.end()) == hooks_by_diagram(rows));
            ++trivial_weight_sum;
        }
        CHECK(Integer(trivial_weight_sum) == partition_count(n));
    }
}

TEST_CASE("composition and partition invariants")
{
    CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    const Composition c({3, 1, 3});
    CHECK(c.size() == 7);
    CHECK(c.length() == 3);
    CHECK(c.multiplicities() == std::map<int, int>{{1, 1}, {3, 2}});
    CHECK(c.without_last() == Composition({3, 1}));
    CHECK_THROWS_AS((void)Composition().without_last(), std::logic_error);
}
