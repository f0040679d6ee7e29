// The polynomials P_n^{g,h}(x) and their coefficient triangle.
//
//   P_0 = 1,   P_n(x) = x/h(n) * sum_{k=1}^n g(k) P_{n-k}(x),
//   H(n) P_n(x) = sum_m A_{n,m} x^m,   H(n) = h(1)...h(n).
//
// pn() runs the polynomial recursion directly. CoefficientTable runs the
// coefficient recursion
//
//   A_{n,m} = sum_{k=1}^{n-m+1} g(k) H(n-1)/H(n-k) A_{n-k,m-1}
//
// on scalars. The two share no code so each can check the other.

#ifndef DARCAIS_POLY_ENGINE_HPP
#define DARCAIS_POLY_ENGINE_HPP

#include <vector>

#include "darcais/arith_fn.hpp"
#include "darcais/exact.hpp"

namespace darcais {

/// P_0, ..., P_n by the defining recursion. Throws std::invalid_argument
/// if h is not flagged non-vanishing.
std::vector<Polynomial> pn_sequence(const ArithmeticFunction& g, const ArithmeticFunction& h, int n);

Polynomial pn(const ArithmeticFunction& g, const ArithmeticFunction& h, int n);

class CoefficientTable {
public:
    /// Builds rows 0..max_n. When g and h are both integer-valued every
    /// A_{n,m} is an integer and the rows are built in integer arithmetic.
    CoefficientTable(ArithmeticFunction g, ArithmeticFunction h, int max_n);

    /// Adopts precomputed rows (used when importing exported tables).
    /// Throws std::invalid_argument if the shape is not triangular.
    CoefficientTable(std::string g_name, std::string h_name, std::vector<std::vector<Rational>> rows,
                     std::vector<Rational> normalizers);

    [[nodiscard]] int max_n() const { return static_cast<int>(rows_.size()) - 1; }

    /// A_{n,m}; throws std::out_of_range unless 0 <= m <= n <= max_n.
    [[nodiscard]] const Rational& coeff(int n, int m) const;

    /// H(n).
    [[nodiscard]] const Rational& normalizer(int n) const;

    /// A_{n,m} / H(n), the coefficient of x^m in P_n.
    [[nodiscard]] Rational scaled(int n, int m) const;

    [[nodiscard]] const std::vector<Rational>& row(int n) const;

    /// H(n) P_n(x).
    [[nodiscard]] Polynomial row_polynomial(int n) const;

    /// P_n(x).
    [[nodiscard]] Polynomial polynomial(int n) const;

    [[nodiscard]] const std::string& g_name() const { return g_name_; }
    [[nodiscard]] const std::string& h_name() const { return h_name_; }

    friend bool operator==(const CoefficientTable& a, const CoefficientTable& b)
    {
        return a.g_name_ == b.g_name_ && a.h_name_ == b.h_name_ && a.rows_ == b.rows_ && a.H_ == b.H_;
    }

private:
    void build_integer(const ArithmeticFunction& g, const ArithmeticFunction& h, int max_n);
    void build_rational(const ArithmeticFunction& g, const ArithmeticFunction& h, int max_n);
    void check_range(int n, int m) const;

    std::string g_name_;
    std::string h_name_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> H_;
};

inline CoefficientTable coeff_table(const ArithmeticFunction& g, const ArithmeticFunction& h, int max_n)
{
    return CoefficientTable(g, h, max_n);
}

inline Rational scaled_coeff(const CoefficientTable& table, int n, int m)
{
    return table.scaled(n, m);
}

} // namespace darcais

#endif
