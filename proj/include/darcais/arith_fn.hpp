// Normalized arithmetic functions and their cumulative products.

#ifndef DARCAIS_ARITH_FN_HPP
#define DARCAIS_ARITH_FN_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "darcais/exact.hpp"

namespace darcais {

/// A map n -> f(n) on the positive integers with f(1) = 1, extended by
/// f(0) = 0. Copies share one memo table; the table is mutex-guarded, so an
/// instance may be queried from several threads.
class ArithmeticFunction {
public:
    using Evaluator = std::function<Rational(std::int64_t)>;

    struct Flags {
        bool non_vanishing = false;
        bool integer_valued = false;
    };

    /// Throws std::invalid_argument unless evaluator(1) == 1.
    ArithmeticFunction(std::string name, Evaluator evaluator, Flags flags);

    static ArithmeticFunction one();
    static ArithmeticFunction id();
    static ArithmeticFunction sigma(unsigned power);
    /// n -> g(n)/n.
    static ArithmeticFunction tilde(const ArithmeticFunction& g);
    /// values[0] is the value at n = 1. Queries past the end throw
    /// std::out_of_range.
    static ArithmeticFunction from_table(std::vector<Rational> values, std::string name = "table");

    /// Value at n >= 0; zero at n = 0. Throws std::logic_error if the
    /// function is flagged non-vanishing and the value is zero.
    Rational operator()(std::int64_t n) const;

    [[nodiscard]] const std::string& name() const;
    [[nodiscard]] bool non_vanishing() const;
    [[nodiscard]] bool integer_valued() const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// Parses the descriptor grammar `one`, `id`, `sigma:<l>`, `tilde:<desc>`,
/// `table:<path>`. Table files hold a JSON array of integers or "p/q"
/// strings, first entry at n = 1. Throws std::invalid_argument.
ArithmeticFunction parse_function(std::string_view descriptor);

/// Reads a table file as described for parse_function.
std::vector<Rational> read_function_table(const std::string& path);

/// sum_{d | n} d^power.
Integer divisor_power_sum(std::int64_t n, unsigned power);

/// H(n) = h(1) * ... * h(n), H(0) = 1.
class CumulativeProduct {
public:
    explicit CumulativeProduct(ArithmeticFunction h);

    Rational operator()(std::int64_t n) const;

    /// h_m(n) = H(n)/H(n-m) = h(n) h(n-1) ... h(n-m+1). Throws
    /// std::out_of_range unless 0 <= m <= n.
    Rational window(std::int64_t m, std::int64_t n) const;

    [[nodiscard]] const ArithmeticFunction& base() const { return h_; }

private:
    ArithmeticFunction h_;
    struct Memo;
    std::shared_ptr<Memo> memo_;
};

Rational h_window(const CumulativeProduct& H, std::int64_t m, std::int64_t n);

} // namespace darcais

#endif
