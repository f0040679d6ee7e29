#include "darcais/poly_engine.hpp"

#include <stdexcept>

namespace darcais {

namespace {

void require_non_vanishing(const ArithmeticFunction& h)
{
    if (!h.non_vanishing())
        throw std::invalid_argument("h = '" + h.name() + "' is not flagged non-vanishing");
}

} // namespace

std::vector<Polynomial> pn_sequence(const ArithmeticFunction& g, const ArithmeticFunction& h, int n)
{
    require_non_vanishing(h);
    if (n < 0)
        throw std::out_of_range("pn: negative degree");
    std::vector<Polynomial> p;
    p.reserve(static_cast<std::size_t>(n) + 1);
    p.emplace_back(Rational(1));
    for (int i = 1; i <= n; ++i) {
        Polynomial sum;
        for (int k = 1; k <= i; ++k)
            sum += p[static_cast<std::size_t>(i - k)] * g(k);
        p.push_back(sum * Polynomial::x() / h(i));
    }
    return p;
}

Polynomial pn(const ArithmeticFunction& g, const ArithmeticFunction& h, int n)
{
    return pn_sequence(g, h, n).back();
}

CoefficientTable::CoefficientTable(ArithmeticFunction g, ArithmeticFunction h, int max_n)
    : g_name_(g.name()), h_name_(h.name())
{
    require_non_vanishing(h);
    if (max_n < 0)
        throw std::out_of_range("coefficient table: negative size");
    H_.assign(1, Rational(1));
    for (int n = 1; n <= max_n; ++n)
        H_.push_back(H_.back() * h(n));
    if (g.integer_valued() && h.integer_valued())
        build_integer(g, h, max_n);
    else
        build_rational(g, h, max_n);
}

CoefficientTable::CoefficientTable(std::string g_name, std::string h_name, std::vector<std::vector<Rational>> rows,
                                   std::vector<Rational> normalizers)
    : g_name_(std::move(g_name)), h_name_(std::move(h_name)), rows_(std::move(rows)), H_(std::move(normalizers))
{
    if (rows_.empty() || rows_.size() != H_.size())
        throw std::invalid_argument("coefficient table: rows and normalizers disagree in length");
    for (std::size_t n = 0; n < rows_.size(); ++n)
        if (rows_[n].size() != n + 1)
            throw std::invalid_argument("coefficient table: row " + std::to_string(n) + " has wrong length");
}

void CoefficientTable::build_integer(const ArithmeticFunction& g, const ArithmeticFunction& h, int max_n)
{
    const auto N = static_cast<std::size_t>(max_n);
    std::vector<Integer> gv(N + 1), hv(N + 1);
    for (std::size_t k = 1; k <= N; ++k) {
        gv[k] = g(static_cast<std::int64_t>(k)).get_num();
        hv[k] = h(static_cast<std::int64_t>(k)).get_num();
    }
    std::vector<std::vector<Integer>> A(N + 1);
    A[0] = {1};
    Integer weight;
    for (std::size_t n = 1; n <= N; ++n) {
        A[n].assign(n + 1, 0);
        // H(n-1)/H(n-k), grown one factor per step in k.
        Integer window = 1;
        for (std::size_t k = 1; k <= n; ++k) {
            if (k > 1)
                window *= hv[n - k + 1];
            weight = gv[k] * window;
            const auto& prev = A[n - k];
            for (std::size_t m = 1; m <= n - k + 1; ++m)
                A[n][m] += weight * prev[m - 1];
        }
    }
    rows_.resize(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        rows_[n].reserve(n + 1);
        for (auto& a : A[n])
            rows_[n].emplace_back(a);
    }
}

void CoefficientTable::build_rational(const ArithmeticFunction& g, const ArithmeticFunction& h, int max_n)
{
    const auto N = static_cast<std::size_t>(max_n);
    rows_.assign(N + 1, {});
    rows_[0] = {Rational(1)};
    Rational weight;
    for (std::size_t n = 1; n <= N; ++n) {
        rows_[n].assign(n + 1, Rational(0));
        Rational window = 1;
        for (std::size_t k = 1; k <= n; ++k) {
            if (k > 1)
                window *= h(static_cast<std::int64_t>(n - k + 1));
            weight = g(static_cast<std::int64_t>(k)) * window;
            const auto& prev = rows_[n - k];
            for (std::size_t m = 1; m <= n - k + 1; ++m)
                rows_[n][m] += weight * prev[m - 1];
        }
    }
}

void CoefficientTable::check_range(int n, int m) const
{
    if (n < 0 || n > max_n() || m < 0 || m > n)
        throw std::out_of_range("coefficient index (" + std::to_string(n) + ", " + std::to_string(m) +
                                ") outside table of size " + std::to_string(max_n()));
}

const Rational& CoefficientTable::coeff(int n, int m) const
{
    check_range(n, m);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

const Rational& CoefficientTable::normalizer(int n) const
{
    check_range(n, 0);
    return H_[static_cast<std::size_t>(n)];
}

Rational CoefficientTable::scaled(int n, int m) const
{
    return coeff(n, m) / normalizer(n);
}

const std::vector<Rational>& CoefficientTable::row(int n) const
{
    check_range(n, 0);
    return rows_[static_cast<std::size_t>(n)];
}

Polynomial CoefficientTable::row_polynomial(int n) const
{
    return Polynomial(row(n));
}

Polynomial CoefficientTable::polynomial(int n) const
{
    return row_polynomial(n) / normalizer(n);
}

} // namespace darcais
