#include "darcais/analysis.hpp"

#include <functional>
#include <stdexcept>

#include "darcais/parallel.hpp"
#include "darcais/series_oracles.hpp"

namespace darcais {

std::string to_string(Shape shape)
{
    switch (shape) {
    case Shape::unimodal:
        return "unimodal";
    case Shape::log_concave:
        return "log-concave";
    case Shape::ultra_log_concave:
        return "ultra-log-concave";
    }
    return "unknown";
}

namespace {

int context_length(std::span<const Rational> seq, std::optional<int> n)
{
    for (const auto& a : seq)
        if (sgn(a) < 0)
            throw std::invalid_argument("shape predicates need nonnegative sequences");
    return n.value_or(static_cast<int>(seq.size()) - 1);
}

ShapeReport log_concave_report(std::span<const Rational> seq, int n, Shape predicate)
{
    ShapeReport report{n, predicate};
    for (std::size_t j = 1; j + 1 < seq.size(); ++j) {
        if (seq[j] * seq[j] < seq[j - 1] * seq[j + 1]) {
            report.holds = false;
            report.witness = j;
            break;
        }
    }
    return report;
}

bool nonnegative(std::span<const Rational> seq)
{
    for (const auto& a : seq)
        if (sgn(a) < 0)
            return false;
    return true;
}

} // namespace

ShapeReport is_unimodal(std::span<const Rational> seq, std::optional<int> n)
{
    ShapeReport report{context_length(seq, n), Shape::unimodal};
    bool descending = false;
    for (std::size_t j = 1; j < seq.size(); ++j) {
        if (seq[j] < seq[j - 1]) {
            descending = true;
        } else if (seq[j] > seq[j - 1] && descending) {
            report.holds = false;
            report.witness = j;
            break;
        }
    }
    return report;
}

ShapeReport is_log_concave(std::span<const Rational> seq, std::optional<int> n)
{
    return log_concave_report(seq, context_length(seq, n), Shape::log_concave);
}

ShapeReport is_ultra_log_concave(std::span<const Rational> seq, std::optional<int> n)
{
    const int len = context_length(seq, n);
    std::vector<Rational> scaled(seq.begin(), seq.end());
    for (std::size_t k = 0; k < scaled.size(); ++k) {
        const Integer c = binomial(len, static_cast<long>(k));
        if (c == 0)
            throw std::invalid_argument("ultra-log-concavity: sequence longer than n + 1");
        scaled[k] /= Rational(c);
    }
    return log_concave_report(scaled, len, Shape::ultra_log_concave);
}

ScanReport transfer_check(const ArithmeticFunction& g, int N)
{
    ScanReport report{"transfer:" + g.name()};
    const CoefficientTable id_table(g, ArithmeticFunction::id(), N);
    const CoefficientTable one_table(ArithmeticFunction::tilde(g), ArithmeticFunction::one(), N);
    for (int n = 1; n <= N; ++n) {
        const auto& premise = one_table.row(n);
        const auto& conclusion = id_table.row(n);
        ++report.checked;
        if (!nonnegative(premise))
            continue;
        if (!nonnegative(conclusion)) {
            report.ok = false;
            report.failure_n = n;
            report.detail = "P_n^{g,id} has a negative coefficient";
            return report;
        }
        for (auto shape : {Shape::log_concave, Shape::ultra_log_concave}) {
            const auto check = shape == Shape::log_concave ? is_log_concave : is_ultra_log_concave;
            if (check(premise, n).holds && !check(conclusion, n).holds) {
                report.ok = false;
                report.failure_n = n;
                report.detail = to_string(shape) + " not transferred";
                return report;
            }
        }
    }
    return report;
}

Rational delta_n(const CoefficientTable& table, int n)
{
    if (n < 2)
        throw std::out_of_range("delta_n requires n >= 2");
    const Rational& top = table.coeff(n, n - 1);
    return top * top - table.coeff(n, n - 2) * table.coeff(n, n);
}

Rational delta_n(const ArithmeticFunction& g, const ArithmeticFunction& h, int n)
{
    if (n < 2)
        throw std::out_of_range("delta_n requires n >= 2");
    return delta_n(CoefficientTable(g, h, n), n);
}

Rational delta_lower_bound(const ArithmeticFunction& g, const ArithmeticFunction& h, int n)
{
    Rational sum = 0;
    for (int k = 2; k <= n - 1; ++k)
        sum += h(k) * h(k - 1);
    return (g(2) * g(2) - g(3)) * sum;
}

std::optional<DeltaCounterexample> find_delta_counterexample(const ArithmeticFunction& h, int max_n,
                                                             int max_doublings)
{
    if (max_n < 3)
        throw std::out_of_range("counterexample search needs max_n >= 3");
    Rational G = 1;
    for (int step = 0; step <= max_doublings; ++step, G *= 2) {
        std::vector<Rational> values(static_cast<std::size_t>(max_n), Rational(1));
        values[2] = G;
        const auto g = ArithmeticFunction::from_table(values);
        const CoefficientTable table(g, h, max_n);
        for (int n = 2; n <= max_n; ++n) {
            Rational d = delta_n(table, n);
            if (sgn(d) < 0)
                return DeltaCounterexample{G, values, n, d};
        }
    }
    return std::nullopt;
}

std::vector<Polynomial> no_polynomials(int N)
{
    const CoefficientTable table(ArithmeticFunction::sigma(1), ArithmeticFunction::id(), N);
    std::vector<Polynomial> out(static_cast<std::size_t>(N) + 1);
    parallel_for(out.size(), [&](std::size_t n) {
        out[n] = taylor_shift(table.row_polynomial(static_cast<int>(n)), 1) / table.normalizer(static_cast<int>(n));
    });
    return out;
}

namespace {

// Runs holds(n, H(n) Q_n) for 1 <= n <= N in parallel and reports the first
// failing n. Both shape conditions scanned here are invariant under positive
// scaling, so the rows are never divided by H(n).
ScanReport scan_no_rows(std::string name, int from, int N,
                        const std::function<bool(int, const Polynomial&)>& holds)
{
    ScanReport report{std::move(name)};
    const CoefficientTable table(ArithmeticFunction::sigma(1), ArithmeticFunction::id(), N);
    const auto count = static_cast<std::size_t>(N - from + 1);
    std::vector<char> ok(count, 1);
    parallel_for(count, [&](std::size_t i) {
        const int n = from + static_cast<int>(i);
        ok[i] = holds(n, taylor_shift(table.row_polynomial(n), 1)) ? 1 : 0;
    });
    for (std::size_t i = 0; i < count; ++i) {
        ++report.checked;
        if (!ok[i]) {
            report.ok = false;
            report.failure_n = from + static_cast<int>(i);
            break;
        }
    }
    return report;
}

} // namespace

ScanReport no_corollary_check(int N)
{
    if (N < 2)
        throw std::out_of_range("no_corollary_check requires N >= 2");
    return scan_no_rows("no-corollary", 2, N, [](int n, const Polynomial& q) {
        const auto k = static_cast<std::size_t>(n);
        const Rational& top = q.coefficient(k - 1);
        return top * top > q.coefficient(k - 2) * q.coefficient(k);
    });
}

ScanReport logconcavity_scan_no(int N)
{
    if (N < 1)
        throw std::out_of_range("logconcavity_scan_no requires N >= 1");
    return scan_no_rows("no-logconcave", 1, N,
                        [](int, const Polynomial& q) { return is_log_concave(q.coefficients()).holds; });
}

LehmerReport lehmer_scan(int N)
{
    if (N < 1)
        throw std::out_of_range("lehmer_scan requires N >= 1");
    const CoefficientTable table(ArithmeticFunction::sigma(1), ArithmeticFunction::id(), N);
    LehmerReport report;
    report.values.resize(static_cast<std::size_t>(N));
    parallel_for(static_cast<std::size_t>(N), [&](std::size_t i) {
        const int n = static_cast<int>(i) + 1;
        Integer acc = 0;
        const auto& row = table.row(n);
        for (std::size_t m = row.size(); m-- > 0;)
            acc = acc * -24 + row[m].get_num();
        Integer value;
        if (!mpz_divisible_p(acc.get_mpz_t(), table.normalizer(n).get_num_mpz_t()))
            throw std::logic_error("P_n(-24) is not an integer at n = " + std::to_string(n));
        mpz_divexact(value.get_mpz_t(), acc.get_mpz_t(), table.normalizer(n).get_num_mpz_t());
        report.values[i] = value;
    });
    const auto eta = eta_power(24, N);
    for (int n = 1; n <= N; ++n) {
        const auto& v = report.values[static_cast<std::size_t>(n - 1)];
        if (v == 0)
            report.zeros.push_back(n);
        if (!report.eta_mismatch && v != eta[static_cast<std::size_t>(n)])
            report.eta_mismatch = n;
    }
    return report;
}

} // namespace darcais
