// Generating-function and hook-length computations that reproduce P_n^{g,h}
// without going through the recursion: exponentials and geometric inverses
// of series, products of (1 - q^n)^r, inverse Eisenstein series and
// Nekrasov-Okounkov hook sums. Nothing here calls into poly_engine except
// closed_family_check, which compares poly_engine output against closed
// forms computed here.

#ifndef DARCAIS_SERIES_ORACLES_HPP
#define DARCAIS_SERIES_ORACLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "darcais/arith_fn.hpp"
#include "darcais/exact.hpp"

namespace darcais {

/// exp(x * sum_{n>=1} g(n) q^n / n) to order N; the coefficient of q^n is
/// P_n^{g,id}(x).
Series<Polynomial> gen_series_h_id(const ArithmeticFunction& g, int N);

/// 1 / (1 - x * sum_{k>=1} g(k) q^k) to order N; the coefficient of q^n is
/// P_n^{g,1}(x).
Series<Polynomial> gen_series_h_one(const ArithmeticFunction& g, int N);

/// prod_{n=1}^N (1 - q^n)^r to order N for an integer r.
Series<Integer> eta_power(long r, int N);

/// prod_{n=1}^N (1 - q^n)^x to order N with x symbolic. Each factor is the
/// binomial series sum_j C(x, j) (-q^n)^j.
Series<Polynomial> eta_power_symbolic(int N);

enum class EisensteinWeight { four = 4, six = 6 };

/// Coefficients a(0..N) of 1/E_4 (E_4 = 1 + 240 sum sigma_3(n) q^n) or
/// 1/E_6 (E_6 = 1 - 504 sum sigma_5(n) q^n).
std::vector<Integer> inverse_eisenstein(EisensteinWeight weight, int N);

/// Q_n(x) = sum_{lambda |- n} prod_{h in hooks(lambda)} (1 + x/h^2).
Polynomial nekrasov_okounkov(int n);

enum class ClosedFamily { pochhammer, stirling, lah, chebyshev3term, symmetric_product };

std::string to_string(ClosedFamily family);
ClosedFamily parse_closed_family(const std::string& name);

struct FamilyReport {
    ClosedFamily family;
    bool ok = true;
    int checked = 0;  ///< number of polynomials or coefficients compared
    /// First failure as (n, m); m = -1 when a whole polynomial differs.
    std::optional<std::pair<int, int>> failure;
};

/// Checks poly_engine against one closed family for 0 <= n <= N:
///   pochhammer:        P_n^{1,1} = x (x+1)^{n-1}
///   stirling:          A_{n,m}^{1,id} = |s(n,m)|
///   lah:               A_{n,m}^{id,id} = n!/m! C(n-1, m-1)
///   chebyshev3term:    h(n) P_n + (-2 h(n+1) - x) P_{n+1} + h(n+2) P_{n+2} = 0
///                      for g = id, with h(0) = 0
///   symmetric_product: H(n) P_n^{1,h} = prod_{k=0}^{n-1} (x + h(k))
/// `h` is used by the last two families only.
FamilyReport closed_family_check(ClosedFamily family, int N,
                                 const ArithmeticFunction& h = ArithmeticFunction::one());

} // namespace darcais

#endif
