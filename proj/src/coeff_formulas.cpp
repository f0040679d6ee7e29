#include "darcais/coeff_formulas.hpp"

#include <stdexcept>

namespace darcais {

namespace {

void check_coeff_range(int n, int m)
{
    if (m < 1 || m > n)
        throw std::out_of_range("coefficient formula requires 1 <= m <= n, got (" + std::to_string(n) + ", " +
                                std::to_string(m) + ")");
}

// n (n-1) ... (n-count+1)
Integer falling(long n, long count)
{
    Integer out = 1;
    for (long k = 0; k < count; ++k)
        out *= n - k;
    return out;
}

} // namespace

Rational g_weight(const ArithmeticFunction& g, const Composition& mu)
{
    Rational out = 1;
    for (int part : mu.parts())
        out *= g(part + 1);
    return out;
}

HWeight::HWeight(ArithmeticFunction h) : H_(std::move(h))
{
    if (!H_.base().non_vanishing())
        throw std::invalid_argument("H(mu, n) needs a non-vanishing h, got '" + H_.base().name() + "'");
}

Rational HWeight::operator()(const Composition& mu, int n)
{
    if (mu.empty())
        return 1;
    const int threshold = mu.size() + mu.length();
    if (n < threshold)
        return 0;
    auto key = std::make_pair(std::vector<int>(mu.parts().begin(), mu.parts().end()), n);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    const int last = mu.parts().back();
    const Composition head = mu.without_last();
    Rational sum = 0;
    for (int k = threshold - 1; k <= n - 1; ++k) {
        Rational inner = (*this)(head, k - last);
        if (sgn(inner) == 0)
            continue;
        sum += H_.window(last, k) * inner;
    }
    memo_.emplace(std::move(key), sum);
    return sum;
}

Rational h_weight_recursive(HWeight& weights, const Composition& mu, int n)
{
    return weights(mu, n);
}

Rational h_weight_closed_one(const Composition& mu, int n)
{
    return Rational(binomial(n - mu.size(), mu.length()));
}

Rational h_weight_closed_id(const Composition& mu, int n)
{
    Rational out(falling(n, mu.size() + mu.length()));
    if (sgn(out) == 0)
        return out;
    long prefix = 0;
    Integer denominator = 1;
    for (int k = 1; k <= mu.length(); ++k) {
        prefix += mu[static_cast<std::size_t>(k - 1)];
        denominator *= k + prefix;
    }
    return out / Rational(denominator);
}

Rational hcal(HWeight& weights, const Partition& mu, int n)
{
    if (n < mu.size() + mu.length())
        return 0;
    Rational sum = 0;
    for (const Composition& lambda : orbit_of(mu))
        sum += weights(lambda, n);
    return sum;
}

Rational main_theorem_coeff(const ArithmeticFunction& g, HWeight& weights, int n, int m)
{
    check_coeff_range(n, m);
    Rational sum = 0;
    for (const Partition& mu : partitions_of(n - m)) {
        // Hcal vanishes once l(mu) > m.
        if (mu.length() > m)
            continue;
        sum += g_weight(g, mu.composition()) * hcal(weights, mu, n);
    }
    return sum;
}

Rational main_theorem_coeff(const ArithmeticFunction& g, const ArithmeticFunction& h, int n, int m)
{
    HWeight weights(h);
    return main_theorem_coeff(g, weights, n, m);
}

Rational thm1_coeff(const ArithmeticFunction& g, int n, int m)
{
    check_coeff_range(n, m);
    Rational sum = 0;
    for (const Partition& mu : partitions_of(n - m)) {
        const Integer tail = binomial(n - mu.size(), mu.length());
        if (tail == 0)
            continue;
        std::vector<int> mult;
        for (const auto& [part, count] : mu.multiplicities())
            mult.push_back(count);
        sum += g_weight(g, mu.composition()) * Rational(multinomial(mu.length(), mult) * tail);
    }
    return sum;
}

Rational orbit_prefix_sum(const Partition& mu)
{
    thread_local std::map<std::vector<int>, Rational> cache;
    std::vector<int> key(mu.parts().begin(), mu.parts().end());
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    Rational sum = 0;
    for (const Composition& lambda : orbit_of(mu)) {
        Integer denominator = 1;
        long prefix = 0;
        for (int k = 1; k <= lambda.length(); ++k) {
            prefix += lambda[static_cast<std::size_t>(k - 1)];
            denominator *= k + prefix;
        }
        sum += Rational(1) / Rational(denominator);
    }
    cache.emplace(std::move(key), sum);
    return sum;
}

Rational thm2_coeff(const ArithmeticFunction& g, int n, int m)
{
    check_coeff_range(n, m);
    Rational sum = 0;
    for (const Partition& mu : partitions_of(n - m)) {
        const Integer head = falling(n, mu.size() + mu.length());
        if (head == 0)
            continue;
        sum += g_weight(g, mu.composition()) * Rational(head) * orbit_prefix_sum(mu);
    }
    return sum;
}

ConversionReport conversion_check(const ArithmeticFunction& g, int n, int m)
{
    check_coeff_range(n, m);
    ConversionReport report;
    report.id_side = thm2_coeff(g, n, m) / Rational(factorial(static_cast<unsigned long>(n)));
    report.one_side = thm1_coeff(ArithmeticFunction::tilde(g), n, m) / Rational(factorial(static_cast<unsigned long>(m)));
    report.equal = report.id_side == report.one_side;
    return report;
}

Rational composition_sum_coeff(const ArithmeticFunction& g, int n, int m, CompositionVariant variant)
{
    check_coeff_range(n, m);
    Rational sum = 0;
    for (const Composition& k : compositions_of(n, m)) {
        Rational term = 1;
        for (int part : k.parts()) {
            term *= g(part);
            if (variant == CompositionVariant::h_id)
                term /= part;
        }
        sum += term;
    }
    if (variant == CompositionVariant::h_id)
        sum *= Rational(factorial(static_cast<unsigned long>(n))) / Rational(factorial(static_cast<unsigned long>(m)));
    return sum;
}

} // namespace darcais
