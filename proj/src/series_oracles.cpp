#include "darcais/series_oracles.hpp"

#include <stdexcept>

#include "darcais/partitions.hpp"
#include "darcais/poly_engine.hpp"

namespace darcais {

Series<Polynomial> gen_series_h_id(const ArithmeticFunction& g, int N)
{
    Series<Polynomial> exponent(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n)
        exponent[static_cast<std::size_t>(n)] = Polynomial::monomial(g(n) / n, 1);
    return series_exp(exponent);
}

Series<Polynomial> gen_series_h_one(const ArithmeticFunction& g, int N)
{
    Series<Polynomial> denominator(static_cast<std::size_t>(N));
    denominator[0] = Polynomial(Rational(1));
    for (int k = 1; k <= N; ++k)
        denominator[static_cast<std::size_t>(k)] = Polynomial::monomial(-g(k), 1);
    return series_inverse(denominator);
}

Series<Integer> eta_power(long r, int N)
{
    const auto order = static_cast<std::size_t>(N);
    // prod (1 - q^n), one factor at a time.
    Series<Integer> base(order);
    base[0] = 1;
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t i = order; i >= n; --i)
            base[i] -= base[i - n];
    if (r < 0)
        base = series_inverse(base);

    Series<Integer> result(order);
    result[0] = 1;
    for (unsigned long e = static_cast<unsigned long>(r < 0 ? -r : r); e != 0; e >>= 1) {
        if (e & 1U)
            result = series_mul(result, base);
        if (e > 1)
            base = series_mul(base, base);
    }
    return result;
}

Series<Polynomial> eta_power_symbolic(int N)
{
    const auto order = static_cast<std::size_t>(N);
    // C(x, j) for j = 0..N.
    std::vector<Polynomial> choose{Polynomial(Rational(1))};
    for (int j = 1; j <= N; ++j)
        choose.push_back(choose.back() * Polynomial(std::vector<Rational>{Rational(-(j - 1)), Rational(1)}) /
                         Rational(j));

    Series<Polynomial> result(order);
    result[0] = Polynomial(Rational(1));
    for (std::size_t n = 1; n <= order; ++n) {
        Series<Polynomial> factor(order);
        for (std::size_t j = 0; j * n <= order; ++j)
            factor[j * n] = (j % 2 == 0) ? choose[j] : -choose[j];
        result = series_mul(result, factor);
    }
    return result;
}

std::vector<Integer> inverse_eisenstein(EisensteinWeight weight, int N)
{
    const bool four = weight == EisensteinWeight::four;
    const long scale = four ? 240 : -504;
    const unsigned power = four ? 3 : 5;
    Series<Integer> e(static_cast<std::size_t>(N));
    e[0] = 1;
    for (int n = 1; n <= N; ++n)
        e[static_cast<std::size_t>(n)] = scale * divisor_power_sum(n, power);
    return series_inverse(e).coefficients();
}

Polynomial nekrasov_okounkov(int n)
{
    if (n < 0)
        throw std::out_of_range("nekrasov_okounkov: negative n");
    Polynomial sum;
    for (const Partition& lambda : partitions_of(n)) {
        Polynomial term(Rational(1));
        for (int hook : hook_multiset(lambda)) {
            const long hh = static_cast<long>(hook) * hook;
            term *= Polynomial(std::vector<Rational>{Rational(1), Rational(1, hh)});
        }
        sum += term;
    }
    return sum;
}

std::string to_string(ClosedFamily family)
{
    switch (family) {
    case ClosedFamily::pochhammer:
        return "pochhammer";
    case ClosedFamily::stirling:
        return "stirling";
    case ClosedFamily::lah:
        return "lah";
    case ClosedFamily::chebyshev3term:
        return "chebyshev3term";
    case ClosedFamily::symmetric_product:
        return "symmetric_product";
    }
    return "unknown";
}

ClosedFamily parse_closed_family(const std::string& name)
{
    for (auto f : {ClosedFamily::pochhammer, ClosedFamily::stirling, ClosedFamily::lah, ClosedFamily::chebyshev3term,
                   ClosedFamily::symmetric_product})
        if (to_string(f) == name)
            return f;
    throw std::invalid_argument("unknown closed family '" + name + "'");
}

namespace {

void fail(FamilyReport& report, int n, int m)
{
    report.ok = false;
    report.failure = std::make_pair(n, m);
}

FamilyReport check_pochhammer(int N)
{
    FamilyReport report{ClosedFamily::pochhammer};
    const auto one = ArithmeticFunction::one();
    const auto p = pn_sequence(one, one, N);
    const Polynomial x_plus_1(std::vector<Rational>{Rational(1), Rational(1)});
    Polynomial power(Rational(1));
    for (int n = 0; n <= N; ++n) {
        const Polynomial expected = n == 0 ? Polynomial(Rational(1)) : Polynomial::x() * power;
        if (n >= 1)
            power *= x_plus_1;
        ++report.checked;
        if (p[static_cast<std::size_t>(n)] != expected) {
            fail(report, n, -1);
            return report;
        }
    }
    return report;
}

FamilyReport check_stirling(int N)
{
    FamilyReport report{ClosedFamily::stirling};
    const CoefficientTable table(ArithmeticFunction::one(), ArithmeticFunction::id(), N);
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= n; ++m) {
            ++report.checked;
            if (table.coeff(n, m) != Rational(stirling_first_unsigned(n, m))) {
                fail(report, n, m);
                return report;
            }
        }
    return report;
}

FamilyReport check_lah(int N)
{
    FamilyReport report{ClosedFamily::lah};
    const CoefficientTable table(ArithmeticFunction::id(), ArithmeticFunction::id(), N);
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= n; ++m) {
            Integer lah = n == 0 ? Integer(1) : Integer(0);
            if (m >= 1)
                lah = factorial(static_cast<unsigned long>(n)) / factorial(static_cast<unsigned long>(m)) *
                      binomial(n - 1, m - 1);
            ++report.checked;
            if (table.coeff(n, m) != Rational(lah)) {
                fail(report, n, m);
                return report;
            }
        }
    return report;
}

FamilyReport check_three_term(int N, const ArithmeticFunction& h)
{
    FamilyReport report{ClosedFamily::chebyshev3term};
    const auto p = pn_sequence(ArithmeticFunction::id(), h, N + 2);
    const Polynomial x = Polynomial::x();
    for (int n = 0; n <= N; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const Polynomial middle = Polynomial(Rational(-2 * h(n + 1))) - x;
        const Polynomial residual = p[i] * h(n) + middle * p[i + 1] + p[i + 2] * h(n + 2);
        ++report.checked;
        if (!residual.is_zero()) {
            fail(report, n, -1);
            return report;
        }
    }
    return report;
}

FamilyReport check_symmetric_product(int N, const ArithmeticFunction& h)
{
    FamilyReport report{ClosedFamily::symmetric_product};
    const auto p = pn_sequence(ArithmeticFunction::one(), h, N);
    Polynomial product(Rational(1));
    Rational normalizer = 1;
    for (int n = 0; n <= N; ++n) {
        if (n >= 1) {
            product *= Polynomial(std::vector<Rational>{h(n - 1), Rational(1)});
            normalizer *= h(n);
        }
        ++report.checked;
        if (p[static_cast<std::size_t>(n)] * normalizer != product) {
            fail(report, n, -1);
            return report;
        }
    }
    return report;
}

} // namespace

FamilyReport closed_family_check(ClosedFamily family, int N, const ArithmeticFunction& h)
{
    if (N < 1)
        throw std::out_of_range("closed_family_check requires N >= 1");
    switch (family) {
    case ClosedFamily::pochhammer:
        return check_pochhammer(N);
    case ClosedFamily::stirling:
        return check_stirling(N);
    case ClosedFamily::lah:
        return check_lah(N);
    case ClosedFamily::chebyshev3term:
        return check_three_term(N, h);
    case ClosedFamily::symmetric_product:
        return check_symmetric_product(N, h);
    }
    throw std::invalid_argument("unknown closed family");
}

} // namespace darcais
