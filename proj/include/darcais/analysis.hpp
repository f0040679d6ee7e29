// Shape predicates on coefficient sequences and the scans built on them.

#ifndef DARCAIS_ANALYSIS_HPP
#define DARCAIS_ANALYSIS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "darcais/arith_fn.hpp"
#include "darcais/exact.hpp"
#include "darcais/poly_engine.hpp"

namespace darcais {

enum class Shape { unimodal, log_concave, ultra_log_concave };

std::string to_string(Shape shape);

struct ShapeReport {
    int n = 0;
    Shape predicate = Shape::unimodal;
    bool holds = true;
    /// First violating index; set iff !holds.
    std::optional<std::size_t> witness;
};

// Sequences a_0..a_n of nonnegative rationals; a negative entry throws
// std::invalid_argument. `n` defaults to seq.size() - 1 and is the binomial
// row used by the ultra variant.

/// a_0 <= ... <= a_k >= ... >= a_n for some k. The witness is the first
/// index that rises again after a descent.
ShapeReport is_unimodal(std::span<const Rational> seq, std::optional<int> n = std::nullopt);

/// a_j^2 >= a_{j-1} a_{j+1} for 1 <= j < n. The witness is the first
/// failing j.
ShapeReport is_log_concave(std::span<const Rational> seq, std::optional<int> n = std::nullopt);

/// Log-concavity of a_k / C(n, k).
ShapeReport is_ultra_log_concave(std::span<const Rational> seq, std::optional<int> n = std::nullopt);

/// Outcome of a scan over n.
struct ScanReport {
    std::string name;
    bool ok = true;
    int checked = 0;
    std::optional<int> failure_n;
    std::string detail;
};

/// For 1 <= n <= N: if the coefficients of P_n^{g~,1} are log-concave
/// (resp. ultra-log-concave), so are those of P_n^{g,id}.
ScanReport transfer_check(const ArithmeticFunction& g, int N);

/// A_{n,n-1}^2 - A_{n,n-2} A_{n,n}, i.e. H(n)^2 times the discriminant of
/// the top three coefficients of P_n. Throws std::out_of_range if n < 2.
Rational delta_n(const CoefficientTable& table, int n);
Rational delta_n(const ArithmeticFunction& g, const ArithmeticFunction& h, int n);

/// (g(2)^2 - g(3)) * sum_{k=2}^{n-1} h(k) h(k-1).
Rational delta_lower_bound(const ArithmeticFunction& g, const ArithmeticFunction& h, int n);

struct DeltaCounterexample {
    Rational G;                     ///< value placed at g(3)
    std::vector<Rational> g_table;  ///< g(1..max_n) = 1, 1, G, 1, 1, ...
    int n = 0;                      ///< first n with delta < 0
    Rational delta;
};

/// Doubles G = 1, 2, 4, ... on g = (1, 1, G, 1, 1, ...) until delta_n < 0
/// for some 2 <= n <= max_n, with the given h.
std::optional<DeltaCounterexample> find_delta_counterexample(const ArithmeticFunction& h, int max_n = 50,
                                                             int max_doublings = 64);

/// Q_0..Q_N where Q_n(x) = P_n^{sigma,id}(x + 1), from the coefficient
/// table. This matches the hook-length sum nekrasov_okounkov(n) and scales
/// to n where enumerating partitions is out of reach.
std::vector<Polynomial> no_polynomials(int N);

/// b_{n,n-1}^2 > b_{n,n-2} b_{n,n} for 2 <= n <= N.
ScanReport no_corollary_check(int N);

/// Coefficients of Q_n log-concave for 1 <= n <= N.
ScanReport logconcavity_scan_no(int N);

struct LehmerReport {
    std::vector<Integer> values;  ///< values[n-1] = P_n^{sigma,id}(-24)
    std::vector<int> zeros;
    /// First n where the value disagrees with prod (1-q^k)^24.
    std::optional<int> eta_mismatch;
    [[nodiscard]] bool ok() const { return zeros.empty() && !eta_mismatch; }
};

/// Evaluates P_n^{sigma,id}(-24) for 1 <= n <= N.
LehmerReport lehmer_scan(int N);

} // namespace darcais

#endif
