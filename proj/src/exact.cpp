#include "darcais/exact.hpp"

#include <sstream>

namespace darcais {

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

Rational parse_rational(std::string_view text)
{
    const auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    const auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
    Integer p(strip_plus(num), 10);
    Integer q(strip_plus(den), 10);
    if (q == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients))
{
    trim();
}

Polynomial::Polynomial(const Rational& constant)
{
    if (sgn(constant) != 0)
        c_.push_back(constant);
}

Polynomial Polynomial::x()
{
    return monomial(1, 1);
}

Polynomial Polynomial::monomial(const Rational& coefficient, std::size_t degree)
{
    std::vector<Rational> c(degree + 1);
    c[degree] = coefficient;
    return Polynomial(std::move(c));
}

Rational Polynomial::coefficient(std::size_t i) const
{
    return i < c_.size() ? c_[i] : Rational(0);
}

Rational Polynomial::leading() const
{
    return c_.empty() ? Rational(0) : c_.back();
}

Rational Polynomial::eval(const Rational& x0) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x0 + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.c_.size() > c_.size())
        c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i)
        c_[i] += rhs.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.c_.size() > c_.size())
        c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i)
        c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s)
{
    if (sgn(s) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& s)
{
    if (sgn(s) == 0)
        throw std::domain_error("polynomial division by zero");
    for (auto& c : c_)
        c /= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(Polynomial a)
{
    for (auto& c : a.c_)
        c = -c;
    return a;
}

std::string Polynomial::str(char var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (sgn(c) == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << '*';
        os << var;
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

void Polynomial::trim()
{
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b)
{
    return a + b;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b)
{
    return a * b;
}

Rational poly_eval(const Polynomial& p, const Rational& x0)
{
    return p.eval(x0);
}

Polynomial taylor_shift(const Polynomial& p, const Rational& c)
{
    std::vector<Rational> a(p.coefficients().begin(), p.coefficients().end());
    const std::size_t n = a.size();
    // After pass i, a[i] is the i-th Taylor coefficient at c.
    const bool unit = c == 1;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) {
            if (unit)
                a[j - 1] += a[j];
            else
                a[j - 1] += c * a[j];
        }
    return Polynomial(std::move(a));
}

Polynomial reflect(const Polynomial& p)
{
    std::vector<Rational> a(p.coefficients().begin(), p.coefficients().end());
    for (std::size_t i = 1; i < a.size(); i += 2)
        a[i] = -a[i];
    return Polynomial(std::move(a));
}

Polynomial compose(const Polynomial& p, const Polynomial& q)
{
    Polynomial acc;
    const auto c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * q + Polynomial(c[i]);
    return acc;
}

Integer unit_inverse(const Integer& z)
{
    if (z == 1 || z == -1)
        return z;
    throw std::domain_error("integer series inverse needs constant term +-1");
}

Rational unit_inverse(const Rational& r)
{
    if (sgn(r) == 0)
        throw std::domain_error("zero has no inverse");
    return 1 / r;
}

Polynomial unit_inverse(const Polynomial& p)
{
    if (p.degree() != 0)
        throw std::domain_error("polynomial inverse needs a nonzero constant");
    return Polynomial(Rational(1 / p.coefficient(0)));
}

} // namespace darcais
