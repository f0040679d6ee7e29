// Exact scalars, dense univariate polynomials and truncated power series.
//
// Scalars are GMP integers and rationals. Polynomials are dense vectors of
// rationals indexed by degree; the zero polynomial has no stored
// coefficients. Series<C> is a truncated power series in q whose
// coefficients live in C (Integer, Rational or Polynomial).

#ifndef DARCAIS_EXACT_HPP
#define DARCAIS_EXACT_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace darcais {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p/q", or plain "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);

/// Combinatorial binomial: zero outside 0 <= k <= n.
Integer binomial(long n, long k);

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    explicit Polynomial(const Rational& constant);

    static Polynomial x();
    static Polynomial monomial(const Rational& coefficient, std::size_t degree);

    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i; zero beyond the degree.
    [[nodiscard]] Rational coefficient(std::size_t i) const;
    [[nodiscard]] std::span<const Rational> coefficients() const { return c_; }
    [[nodiscard]] Rational leading() const;

    [[nodiscard]] Rational eval(const Rational& x0) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& s);
    Polynomial& operator/=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }
    friend Polynomial operator-(Polynomial a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Human-readable form in the variable `var`, highest degree first.
    [[nodiscard]] std::string str(char var = 'x') const;

private:
    void trim();

    std::vector<Rational> c_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Rational poly_eval(const Polynomial& p, const Rational& x0);

/// p(x + c), by repeated synthetic division.
Polynomial taylor_shift(const Polynomial& p, const Rational& c);

/// p(-x).
Polynomial reflect(const Polynomial& p);

/// p(q(x)) by Horner's scheme.
Polynomial compose(const Polynomial& p, const Polynomial& q);

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Multiplicative inverse within the coefficient ring. Integers must be
/// +-1 and polynomials must be nonzero constants; anything else throws
/// std::domain_error.
Integer unit_inverse(const Integer& z);
Rational unit_inverse(const Rational& r);
Polynomial unit_inverse(const Polynomial& p);

template <class C>
class Series {
public:
    explicit Series(std::size_t order) : c_(order + 1) {}

    Series(std::size_t order, std::vector<C> coefficients) : c_(std::move(coefficients))
    {
        c_.resize(order + 1);
    }

    [[nodiscard]] std::size_t order() const { return c_.size() - 1; }

    C& operator[](std::size_t n) { return c_.at(n); }
    const C& operator[](std::size_t n) const { return c_.at(n); }

    [[nodiscard]] const std::vector<C>& coefficients() const { return c_; }

    /// Copy truncated to a lower order.
    [[nodiscard]] Series truncated(std::size_t order) const
    {
        return Series(std::min(order, this->order()),
                      std::vector<C>(c_.begin(), c_.begin() + std::min(order, this->order()) + 1));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    std::vector<C> c_;
};

template <class C>
Series<C> series_add(const Series<C>& a, const Series<C>& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    Series<C> out(order);
    for (std::size_t n = 0; n <= order; ++n)
        out[n] = a[n] + b[n];
    return out;
}

template <class C>
Series<C> series_mul(const Series<C>& a, const Series<C>& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    Series<C> out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (is_zero(a[i]))
            continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (is_zero(b[j]))
                continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// 1/s. The constant term must be a unit of the coefficient ring.
template <class C>
Series<C> series_inverse(const Series<C>& s)
{
    if (is_zero(s[0]))
        throw std::domain_error("series_inverse: constant term is zero");
    const C inv0 = unit_inverse(s[0]);
    Series<C> out(s.order());
    out[0] = inv0;
    for (std::size_t n = 1; n <= s.order(); ++n) {
        C acc{};
        for (std::size_t k = 1; k <= n; ++k) {
            if (is_zero(s[k]))
                continue;
            acc += s[k] * out[n - k];
        }
        out[n] = -(inv0 * acc);
    }
    return out;
}

/// exp(s) for s with zero constant term. Uses f' = s' f, so that
/// n f_n = sum_{k=1}^n k s_k f_{n-k}; only field operations are needed.
template <class C>
    requires std::same_as<C, Rational> || std::same_as<C, Polynomial>
Series<C> series_exp(const Series<C>& s)
{
    if (!is_zero(s[0]))
        throw std::domain_error("series_exp: constant term must be zero");
    Series<C> out(s.order());
    out[0] = C(Rational(1));
    for (std::size_t n = 1; n <= s.order(); ++n) {
        C acc{};
        for (std::size_t k = 1; k <= n; ++k) {
            if (is_zero(s[k]))
                continue;
            acc += (s[k] * out[n - k]) * Rational(static_cast<long>(k));
        }
        out[n] = acc / Rational(static_cast<long>(n));
    }
    return out;
}

} // namespace darcais

#endif
