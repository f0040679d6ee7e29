// Partition-sum formulas for the coefficients A_{n,m}^{g,h}.
//
// The coefficient is split into a g-part and an h-part:
//
//   A_{n,m} = sum_{mu |- n-m} G(mu) * Hcal(mu, n),
//
// where G(mu) = prod_k g(mu_k + 1) and Hcal(mu, n) sums the composition
// weight H(lambda, n) over all rearrangements lambda of mu. H is defined by
// peeling off the last part t of nu = (mu, t):
//
//   H(empty, n) = 1,
//   H(nu, n)    = sum_{k=|nu|+l(nu)-1}^{n-1} h_t(k) H(mu, k - t),
//
// with h_t(k) = h(k) h(k-1) ... h(k-t+1), and H(nu, n) = 0 whenever
// n < |nu| + l(nu).

#ifndef DARCAIS_COEFF_FORMULAS_HPP
#define DARCAIS_COEFF_FORMULAS_HPP

#include <map>
#include <utility>
#include <vector>

#include "darcais/arith_fn.hpp"
#include "darcais/exact.hpp"
#include "darcais/partitions.hpp"

namespace darcais {

Rational g_weight(const ArithmeticFunction& g, const Composition& mu);

/// Memoized H(mu, n) for one h. Not thread-safe; give each worker its own.
class HWeight {
public:
    /// Throws std::invalid_argument if h is not flagged non-vanishing.
    explicit HWeight(ArithmeticFunction h);

    Rational operator()(const Composition& mu, int n);

    [[nodiscard]] const ArithmeticFunction& h() const { return H_.base(); }

private:
    CumulativeProduct H_;
    std::map<std::pair<std::vector<int>, int>, Rational> memo_;
};

Rational h_weight_recursive(HWeight& weights, const Composition& mu, int n);

/// H(mu, n) for h = 1: C(n - |mu|, l(mu)).
Rational h_weight_closed_one(const Composition& mu, int n);

/// H(mu, n) for h = id:
///   prod_{k=0}^{|mu|+l(mu)-1} (n-k) * prod_{k=1}^{l(mu)} (k + mu_1 + ... + mu_k)^{-1}.
Rational h_weight_closed_id(const Composition& mu, int n);

/// Hcal(mu, n), the orbit sum of H.
Rational hcal(HWeight& weights, const Partition& mu, int n);

/// A_{n,m} by the partition sum. For m = n the only partition of 0 is the
/// empty one and the result is 1. Throws std::out_of_range unless
/// 1 <= m <= n.
Rational main_theorem_coeff(const ArithmeticFunction& g, HWeight& weights, int n, int m);
Rational main_theorem_coeff(const ArithmeticFunction& g, const ArithmeticFunction& h, int n, int m);

/// A_{n,m}^{g,1} = sum_{mu |- n-m} G(mu) * l!/prod m_j! * C(n - |mu|, l).
Rational thm1_coeff(const ArithmeticFunction& g, int n, int m);

/// A_{n,m}^{g,id} = sum_{mu |- n-m} G(mu) prod_{k<|mu|+l}(n-k)
///                   * sum_{lambda in Orb(mu)} prod_k (k + lambda_1 + ... + lambda_k)^{-1}.
Rational thm2_coeff(const ArithmeticFunction& g, int n, int m);

/// Orbit sum of inverse shifted prefix products; depends only on mu.
Rational orbit_prefix_sum(const Partition& mu);

struct ConversionReport {
    Rational id_side;   ///< A_{n,m}^{g,id} / n!
    Rational one_side;  ///< A_{n,m}^{g~,1} / m!
    bool equal = false;
};

/// Compares A^{g,id}_{n,m}/n! (the h = id formula on g) against
/// A^{g~,1}_{n,m}/m! (the h = 1 formula on g~ = g(n)/n).
ConversionReport conversion_check(const ArithmeticFunction& g, int n, int m);

enum class CompositionVariant { h_one, h_id };

/// Brute-force sum over compositions of n with exactly m parts:
///   h_one: sum prod g(k_i)                       = A^{g,1}_{n,m}
///   h_id:  n!/m! * sum prod g(k_i)/k_i            = A^{g,id}_{n,m}
/// Both variants return A_{n,m} so that they compare directly with the
/// other routes.
Rational composition_sum_coeff(const ArithmeticFunction& g, int n, int m, CompositionVariant variant);

} // namespace darcais

#endif
