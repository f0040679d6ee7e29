// darcais: compute, cross-check and export the polynomials P_n^{g,h}(x).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "darcais/analysis.hpp"
#include "darcais/arith_fn.hpp"
#include "darcais/coeff_formulas.hpp"
#include "darcais/exact.hpp"
#include "darcais/partitions.hpp"
#include "darcais/poly_engine.hpp"
#include "darcais/series_oracles.hpp"
#include "darcais/table_io.hpp"

using namespace darcais;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string g_desc = "sigma:1";
    std::string h_desc = "id";
    int n = -1;
    int m = -1;
    int max_n = -1;
    std::string method = "recursion";
    std::string eval_at;
    std::string format = "text";
    std::string export_format = "json";
    std::string suite = "all";
    std::string check;
    std::string table_path;
};

ArithmeticFunction load(const std::string& desc)
{
    try {
        return parse_function(desc);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
}

bool is_one(const ArithmeticFunction& f) { return f.name() == "one"; }
bool is_id(const ArithmeticFunction& f) { return f.name() == "id"; }

void require(bool condition, const std::string& message)
{
    if (!condition)
        throw UsageError(message);
}

// ---------------------------------------------------------------- poly/coeff

Polynomial hook_polynomial(const ArithmeticFunction& g, const ArithmeticFunction& h, int n)
{
    require(g.name() == "sigma:1" && is_id(h), "method 'hook' needs --g sigma:1 --h id");
    return taylor_shift(nekrasov_okounkov(n), Rational(-1));
}

Polynomial series_polynomial(const ArithmeticFunction& g, const ArithmeticFunction& h, int n)
{
    if (is_id(h))
        return gen_series_h_id(g, n)[static_cast<std::size_t>(n)];
    if (is_one(h))
        return gen_series_h_one(g, n)[static_cast<std::size_t>(n)];
    throw UsageError("method 'series' needs --h one or --h id");
}

// P_n(x) by a method that produces the whole polynomial.
Polynomial polynomial_by(const std::string& method, const ArithmeticFunction& g, const ArithmeticFunction& h, int n)
{
    if (method == "recursion")
        return pn(g, h, n);
    if (method == "lemma")
        return CoefficientTable(g, h, n).polynomial(n);
    if (method == "series")
        return series_polynomial(g, h, n);
    if (method == "hook")
        return hook_polynomial(g, h, n);
    throw UsageError("method '" + method + "' does not produce a polynomial; use coeff");
}

// A_{n,m} = H(n) [x^m] P_n.
Rational coefficient_by(const std::string& method, const ArithmeticFunction& g, const ArithmeticFunction& h, int n,
                        int m)
{
    require(m >= 0 && m <= n, "--m must satisfy 0 <= m <= n");
    if (method == "lemma")
        return CoefficientTable(g, h, n).coeff(n, m);
    if (method == "main-theorem" || method == "thm1" || method == "thm2" || method == "composition") {
        if (m == 0)
            return n == 0 ? Rational(1) : Rational(0);
        if (method == "main-theorem")
            return main_theorem_coeff(g, h, n, m);
        if (method == "thm1") {
            require(is_one(h), "method 'thm1' needs --h one");
            return thm1_coeff(g, n, m);
        }
        if (method == "thm2") {
            require(is_id(h), "method 'thm2' needs --h id");
            return thm2_coeff(g, n, m);
        }
        require(is_one(h) || is_id(h), "method 'composition' needs --h one or --h id");
        return composition_sum_coeff(g, n, m, is_one(h) ? CompositionVariant::h_one : CompositionVariant::h_id);
    }
    const Polynomial p = polynomial_by(method, g, h, n);
    return p.coefficient(static_cast<std::size_t>(m)) * CumulativeProduct(h)(n);
}

const std::vector<std::string> methods{"recursion", "lemma",       "main-theorem", "thm1",
                                       "thm2",      "composition", "series",       "hook"};

int run_poly(const Config& cfg)
{
    require(cfg.n >= 0, "--n is required and must be >= 0");
    const auto g = load(cfg.g_desc);
    const auto h = load(cfg.h_desc);
    const Polynomial p = polynomial_by(cfg.method, g, h, cfg.n);
    if (!cfg.eval_at.empty()) {
        Rational x0;
        try {
            x0 = parse_rational(cfg.eval_at);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const Rational value = p.eval(x0);
        if (cfg.format == "json")
            std::cout << json{{"g", g.name()}, {"h", h.name()}, {"n", cfg.n}, {"x", to_string(x0)},
                              {"value", rational_to_json(value)}}
                             .dump()
                      << '\n';
        else
            std::cout << to_string(value) << '\n';
        return exit_ok;
    }
    if (cfg.format == "json")
        std::cout << json{{"g", g.name()}, {"h", h.name()}, {"n", cfg.n}, {"coefficients", polynomial_to_json(p)}}.dump()
                  << '\n';
    else
        std::cout << p.str() << '\n';
    return exit_ok;
}

int run_coeff(const Config& cfg)
{
    require(cfg.n >= 0, "--n is required and must be >= 0");
    require(cfg.m >= 0, "--m is required and must be >= 0");
    const auto g = load(cfg.g_desc);
    const auto h = load(cfg.h_desc);
    const Rational a = coefficient_by(cfg.method, g, h, cfg.n, cfg.m);
    if (cfg.format == "json")
        std::cout << json{{"g", g.name()}, {"h", h.name()}, {"n", cfg.n}, {"m", cfg.m}, {"method", cfg.method},
                          {"value", rational_to_json(a)}}
                         .dump()
                  << '\n';
    else
        std::cout << to_string(a) << '\n';
    return exit_ok;
}

// ------------------------------------------------------------------- verify

struct Outcome {
    std::string name;
    bool ok = true;
    long checked = 0;
    std::string detail;  // first counterexample
};

class Suite {
public:
    void add(Outcome o) { outcomes_.push_back(std::move(o)); }

    [[nodiscard]] bool ok() const
    {
        for (const auto& o : outcomes_)
            if (!o.ok)
                return false;
        return true;
    }

    void print(const std::string& format) const
    {
        if (format == "json") {
            json out = json::array();
            for (const auto& o : outcomes_) {
                json item{{"check", o.name}, {"ok", o.ok}, {"checked", o.checked}};
                if (!o.ok)
                    item["counterexample"] = o.detail;
                out.push_back(item);
            }
            std::cout << out.dump(2) << '\n';
            return;
        }
        for (const auto& o : outcomes_) {
            std::cout << (o.ok ? "PASS " : "FAIL ") << o.name << " (" << o.checked << " checked)";
            if (!o.ok)
                std::cout << ": " << o.detail;
            std::cout << '\n';
        }
    }

private:
    std::vector<Outcome> outcomes_;
};

const std::vector<std::string> builtin_g{"one", "id", "sigma:1", "sigma:3", "sigma:5"};
const std::vector<std::string> builtin_h{"one", "id", "sigma:1"};

std::string at(int n, int m = -1)
{
    std::string s = "n=" + std::to_string(n);
    if (m >= 0)
        s += " m=" + std::to_string(m);
    return s;
}

// Runs body(n) for n = from..N until it returns a non-empty mismatch.
Outcome sweep(std::string name, int from, int N, const std::function<std::string(int)>& body)
{
    Outcome o{std::move(name)};
    for (int n = from; n <= N; ++n) {
        ++o.checked;
        std::string mismatch = body(n);
        if (!mismatch.empty()) {
            o.ok = false;
            o.detail = std::move(mismatch);
            break;
        }
    }
    return o;
}

std::string compare(const Polynomial& expected, const Polynomial& actual, int n)
{
    if (expected == actual)
        return {};
    return at(n) + ": expected " + expected.str() + ", got " + actual.str();
}

std::string compare(const Rational& expected, const Rational& actual, int n, int m = -1)
{
    if (expected == actual)
        return {};
    return at(n, m) + ": expected " + to_string(expected) + ", got " + to_string(actual);
}

void suite_oracles(Suite& suite, int N)
{
    for (const auto& gd : builtin_g) {
        const auto g = load(gd);
        for (const auto& hd : {"one", "id"}) {
            const auto h = load(hd);
            const auto p = pn_sequence(g, h, N);
            const auto series = is_id(h) ? gen_series_h_id(g, N) : gen_series_h_one(g, N);
            suite.add(sweep("oracles/generating-series g=" + gd + " h=" + hd, 0, N, [&](int n) {
                return compare(series[static_cast<std::size_t>(n)], p[static_cast<std::size_t>(n)], n);
            }));
        }
    }

    const auto sigma = load("sigma:1");
    const auto id = load("id");
    const auto dar = pn_sequence(sigma, id, N);
    const auto eta = eta_power_symbolic(N);
    suite.add(sweep("oracles/eta-symbolic", 0, N, [&](int n) {
        return compare(eta[static_cast<std::size_t>(n)], reflect(dar[static_cast<std::size_t>(n)]), n);
    }));

    for (long r : {1L, 3L, -1L, 24L}) {
        const auto e = eta_power(r, N);
        suite.add(sweep("oracles/eta-power r=" + std::to_string(r), 0, N, [&](int n) {
            return compare(Rational(e[static_cast<std::size_t>(n)]), dar[static_cast<std::size_t>(n)].eval(Rational(-r)),
                           n);
        }));
    }
    suite.add(sweep("oracles/partition-count", 0, N, [&](int n) {
        return compare(Rational(partition_count(n)), dar[static_cast<std::size_t>(n)].eval(Rational(1)), n);
    }));

    for (auto [weight, gd, x0] : {std::tuple{EisensteinWeight::four, "sigma:3", -240},
                                  std::tuple{EisensteinWeight::six, "sigma:5", 504}}) {
        const auto a = inverse_eisenstein(weight, N);
        const auto p = pn_sequence(load(gd), load("one"), N);
        suite.add(sweep("oracles/inverse-eisenstein weight=" + std::to_string(static_cast<int>(weight)), 0, N,
                        [&](int n) {
                            return compare(Rational(a[static_cast<std::size_t>(n)]),
                                           p[static_cast<std::size_t>(n)].eval(Rational(x0)), n);
                        }));
    }
}

void suite_closed_forms(Suite& suite, int N)
{
    for (auto family : {ClosedFamily::pochhammer, ClosedFamily::stirling, ClosedFamily::lah}) {
        const auto r = closed_family_check(family, N);
        Outcome o{"closed-forms/" + to_string(family), r.ok, r.checked};
        if (r.failure)
            o.detail = at(r.failure->first, r.failure->second);
        suite.add(o);
    }
    for (auto family : {ClosedFamily::chebyshev3term, ClosedFamily::symmetric_product})
        for (const auto& hd : builtin_h) {
            const auto r = closed_family_check(family, N, load(hd));
            Outcome o{"closed-forms/" + to_string(family) + " h=" + hd, r.ok, r.checked};
            if (r.failure)
                o.detail = at(r.failure->first, r.failure->second);
            suite.add(o);
        }
    for (const auto& gd : builtin_g) {
        const auto g = load(gd);
        const CoefficientTable t1(g, load("one"), N);
        const CoefficientTable t2(g, load("id"), N);
        Outcome o1{"closed-forms/h-one-formula g=" + gd};
        Outcome o2{"closed-forms/h-id-formula g=" + gd};
        for (int n = 1; n <= N && (o1.ok || o2.ok); ++n)
            for (int m = 1; m <= n; ++m) {
                if (o1.ok) {
                    ++o1.checked;
                    if (auto d = compare(t1.coeff(n, m), thm1_coeff(g, n, m), n, m); !d.empty())
                        o1 = {o1.name, false, o1.checked, d};
                }
                if (o2.ok) {
                    ++o2.checked;
                    if (auto d = compare(t2.coeff(n, m), thm2_coeff(g, n, m), n, m); !d.empty())
                        o2 = {o2.name, false, o2.checked, d};
                }
            }
        suite.add(o1);
        suite.add(o2);
    }
}

void suite_conversion(Suite& suite, int N)
{
    for (const auto& gd : {"one", "id", "sigma:1", "sigma:3"}) {
        const auto g = load(gd);
        Outcome o{std::string("conversion g=") + gd};
        for (int n = 1; n <= N && o.ok; ++n)
            for (int m = 1; m <= n && o.ok; ++m) {
                ++o.checked;
                const auto r = conversion_check(g, n, m);
                if (!r.equal)
                    o = {o.name, false, o.checked,
                         at(n, m) + ": " + to_string(r.id_side) + " != " + to_string(r.one_side)};
            }
        suite.add(o);
    }
}

void suite_no_formula(Suite& suite, int N)
{
    const auto dar = pn_sequence(load("sigma:1"), load("id"), N);
    std::vector<Polynomial> hooks(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        hooks[static_cast<std::size_t>(n)] = nekrasov_okounkov(n);
    suite.add(sweep("no-formula/shifted-identity", 0, N, [&](int n) {
        return compare(hooks[static_cast<std::size_t>(n)], taylor_shift(dar[static_cast<std::size_t>(n)], Rational(1)),
                       n);
    }));
    suite.add(sweep("no-formula/constant-term", 0, N, [&](int n) {
        return compare(Rational(partition_count(n)), hooks[static_cast<std::size_t>(n)].coefficient(0), n);
    }));
    const auto Q = no_polynomials(N);
    suite.add(sweep("no-formula/table-shift", 0, N, [&](int n) {
        return compare(hooks[static_cast<std::size_t>(n)], Q[static_cast<std::size_t>(n)], n);
    }));
}

void suite_partition_sum(Suite& suite, int N)
{
    for (const auto& gd : builtin_g)
        for (const auto& hd : builtin_h) {
            const auto g = load(gd);
            const auto h = load(hd);
            const CoefficientTable table(g, h, N);
            const auto p = pn_sequence(g, h, N);
            const CumulativeProduct H(h);
            HWeight weights(h);
            Outcome o{"main-theorem g=" + gd + " h=" + hd};
            for (int n = 1; n <= N && o.ok; ++n)
                for (int m = 1; m <= n && o.ok; ++m) {
                    ++o.checked;
                    const Rational a = main_theorem_coeff(g, weights, n, m);
                    std::string d = compare(table.coeff(n, m), a, n, m);
                    if (d.empty())
                        d = compare(p[static_cast<std::size_t>(n)].coefficient(static_cast<std::size_t>(m)) * H(n), a,
                                    n, m);
                    if (!d.empty())
                        o = {o.name, false, o.checked, d};
                }
            suite.add(o);
        }
}

Outcome from_scan(const ScanReport& r)
{
    Outcome o{r.name, r.ok, r.checked};
    if (r.failure_n)
        o.detail = at(*r.failure_n) + (r.detail.empty() ? "" : ": " + r.detail);
    return o;
}

Outcome delta_positivity(const ArithmeticFunction& g, const ArithmeticFunction& h, int N)
{
    const CoefficientTable table(g, h, N);
    return sweep("delta g=" + g.name() + " h=" + h.name(), 2, N, [&](int n) -> std::string {
        const Rational d = delta_n(table, n);
        if (sgn(d) <= 0)
            return at(n) + ": delta = " + to_string(d);
        if (d < delta_lower_bound(g, h, n))
            return at(n) + ": delta = " + to_string(d) + " below bound " + to_string(delta_lower_bound(g, h, n));
        return {};
    });
}

Outcome shape_chain(int N)
{
    Outcome o{"shapes/implication-chain"};
    for (const auto& gd : builtin_g)
        for (const auto& hd : builtin_h) {
            const CoefficientTable table(load(gd), load(hd), N);
            for (int n = 1; n <= N; ++n) {
                const auto& row = table.row(n);
                ++o.checked;
                const bool ultra = is_ultra_log_concave(row, n).holds;
                const bool log = is_log_concave(row, n).holds;
                const bool uni = is_unimodal(row, n).holds;
                if ((ultra && !log) || (log && !uni)) {
                    o.ok = false;
                    o.detail = "g=" + gd + " h=" + hd + " " + at(n);
                    return o;
                }
            }
        }
    return o;
}

void suite_shapes(Suite& suite, int N)
{
    suite.add(from_scan(logconcavity_scan_no(N)));
    suite.add(from_scan(no_corollary_check(std::max(N, 2))));
    for (const auto& gd : builtin_g)
        suite.add(from_scan(transfer_check(load(gd), N)));
    for (const auto& hd : {"one", "id"})
        suite.add(delta_positivity(load("sigma:1"), load(hd), std::max(N, 2)));
    suite.add(shape_chain(N));
}

int run_verify(const Config& cfg)
{
    const std::vector<std::string> all{"oracles", "closed-forms", "conversion", "no-formula", "main-theorem", "shapes"};
    std::vector<std::string> selected = cfg.suite == "all" ? all : std::vector<std::string>{cfg.suite};
    Suite suite;
    for (const auto& name : selected) {
        auto bound = [&](int fallback) { return cfg.max_n >= 0 ? cfg.max_n : fallback; };
        if (name == "oracles")
            suite_oracles(suite, bound(30));
        else if (name == "closed-forms")
            suite_closed_forms(suite, bound(30));
        else if (name == "conversion")
            suite_conversion(suite, bound(20));
        else if (name == "no-formula")
            suite_no_formula(suite, bound(15));
        else if (name == "main-theorem")
            suite_partition_sum(suite, bound(14));
        else if (name == "shapes")
            suite_shapes(suite, bound(100));
    }
    suite.print(cfg.format);
    return suite.ok() ? exit_ok : exit_failed;
}

// --------------------------------------------------------------------- scan

int print_scan(const Outcome& o, const json& values, const std::string& format)
{
    if (format == "json") {
        std::cout << values.dump() << '\n';
    } else {
        std::cout << (o.ok ? "PASS " : "FAIL ") << o.name << " (" << o.checked << " checked)";
        if (!o.ok)
            std::cout << ": " << o.detail;
        std::cout << '\n';
    }
    if (!o.ok && format == "json")
        std::cerr << "FAIL " << o.name << ": " << o.detail << '\n';
    return o.ok ? exit_ok : exit_failed;
}

int run_scan(const Config& cfg)
{
    require(cfg.max_n >= 1, "--max-n is required and must be >= 1");
    const int N = cfg.max_n;
    if (cfg.check == "lehmer") {
        const auto r = lehmer_scan(N);
        Outcome o{"lehmer", r.ok(), N};
        if (!r.zeros.empty())
            o.detail = "P_n(-24) = 0 at " + at(r.zeros.front());
        else if (r.eta_mismatch)
            o.detail = "eta power mismatch at " + at(*r.eta_mismatch);
        json values = json::array();
        for (const auto& v : r.values)
            values.push_back(v.get_str());
        return print_scan(o, values, cfg.format);
    }
    if (cfg.check == "no-logconcave" || cfg.check == "no-corollary") {
        require(cfg.check == "no-logconcave" || N >= 2, "--max-n must be >= 2 for no-corollary");
        const auto r = cfg.check == "no-logconcave" ? logconcavity_scan_no(N) : no_corollary_check(N);
        json values{{"check", cfg.check}, {"ok", r.ok}, {"checked", r.checked}};
        if (r.failure_n)
            values["failure_n"] = *r.failure_n;
        return print_scan(from_scan(r), values, cfg.format);
    }
    if (cfg.check == "transfer") {
        const auto r = transfer_check(load(cfg.g_desc), N);
        json values{{"check", cfg.check}, {"g", cfg.g_desc}, {"ok", r.ok}, {"checked", r.checked}};
        if (r.failure_n)
            values["failure_n"] = *r.failure_n;
        return print_scan(from_scan(r), values, cfg.format);
    }
    if (cfg.check == "delta") {
        require(N >= 2, "--max-n must be >= 2 for delta");
        const auto g = load(cfg.g_desc);
        const auto h = load(cfg.h_desc);
        const CoefficientTable table(g, h, N);
        json values = json::array();
        for (int n = 2; n <= N; ++n)
            values.push_back(rational_to_json(delta_n(table, n)));
        return print_scan(delta_positivity(g, h, N), values, cfg.format);
    }
    if (cfg.check == "delta-counterexample") {
        const auto h = load(cfg.h_desc);
        const auto found = find_delta_counterexample(h, std::max(N, 3));
        if (!found) {
            std::cerr << "no counterexample found\n";
            return exit_failed;
        }
        json table = json::array();
        for (const auto& v : found->g_table)
            table.push_back(rational_to_json(v));
        const json out{{"h", h.name()},
                       {"G", rational_to_json(found->G)},
                       {"n", found->n},
                       {"delta", rational_to_json(found->delta)},
                       {"g_table", table}};
        if (cfg.format == "json")
            std::cout << out.dump() << '\n';
        else
            std::cout << "G=" << to_string(found->G) << " n=" << found->n << " delta=" << to_string(found->delta)
                      << '\n';
        return exit_ok;
    }
    throw UsageError("unknown --check '" + cfg.check + "'");
}

// ------------------------------------------------------------------- export

int run_export(const Config& cfg)
{
    std::optional<CoefficientTable> table;
    if (!cfg.table_path.empty()) {
        std::ifstream in(cfg.table_path);
        require(static_cast<bool>(in), "cannot open " + cfg.table_path);
        try {
            table = table_from_json(json::parse(in));
        } catch (const json::exception& e) {
            throw UsageError(cfg.table_path + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw UsageError(cfg.table_path + ": " + e.what());
        }
    } else {
        require(cfg.max_n >= 0, "--max-n is required and must be >= 0");
        table.emplace(load(cfg.g_desc), load(cfg.h_desc), cfg.max_n);
    }
    if (cfg.export_format == "csv")
        std::cout << table_to_csv(*table);
    else
        std::cout << table_to_json(*table).dump() << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computation and verification of the polynomials P_n^{g,h}(x)", "darcais"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    Config cfg;

    const auto function_options = [&](CLI::App* sub) {
        sub->add_option("--g", cfg.g_desc, "function g: one, id, sigma:<l>, tilde:<desc>, table:<path>")
            ->capture_default_str();
        sub->add_option("--h", cfg.h_desc, "function h, same grammar as --g")->capture_default_str();
    };
    const auto format_option = [](CLI::App* sub, std::string& target, std::vector<std::string> formats) {
        sub->add_option("--format", target, "output format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
    };

    auto* poly = app.add_subcommand("poly", "print P_n(x), or its value with --eval-at");
    function_options(poly);
    poly->add_option("--n", cfg.n, "index n")->required();
    poly->add_option("--method", cfg.method, "recursion, lemma, series or hook")
        ->check(CLI::IsMember({"recursion", "lemma", "series", "hook"}))
        ->capture_default_str();
    poly->add_option("--eval-at", cfg.eval_at, "rational point p or p/q");
    format_option(poly, cfg.format, {"text", "json"});

    auto* coeff = app.add_subcommand("coeff", "print the coefficient A_{n,m} = H(n) [x^m] P_n(x)");
    function_options(coeff);
    coeff->add_option("--n", cfg.n, "index n")->required();
    coeff->add_option("--m", cfg.m, "power of x")->required();
    coeff->add_option("--method", cfg.method,
                      "recursion: P_n recursion; lemma: coefficient table; main-theorem: partition sum;\n"
                      "thm1: partition sum for h = one; thm2: partition sum for h = id;\n"
                      "composition: sum over compositions (h = one or id); series: generating function\n"
                      "(h = one or id); hook: hook-length sum (g = sigma:1, h = id)")
        ->check(CLI::IsMember(methods))
        ->capture_default_str();
    format_option(coeff, cfg.format, {"text", "json"});

    auto* verify = app.add_subcommand("verify", "cross-check independent routes; exit 1 on the first mismatch");
    verify->add_option("--suite", cfg.suite, "verification suite")
        ->check(CLI::IsMember({"oracles", "closed-forms", "conversion", "no-formula", "main-theorem", "shapes", "all"}))
        ->capture_default_str();
    verify->add_option("--max-n", cfg.max_n, "largest n checked (default depends on the suite)");
    format_option(verify, cfg.format, {"text", "json"});

    auto* scan = app.add_subcommand("scan", "run one scan over 1 <= n <= max-n");
    function_options(scan);
    scan->add_option("--check", cfg.check, "scan to run")
        ->required()
        ->check(CLI::IsMember(
            {"lehmer", "no-logconcave", "no-corollary", "delta", "delta-counterexample", "transfer"}));
    scan->add_option("--max-n", cfg.max_n, "largest n")->required();
    format_option(scan, cfg.format, {"text", "json"});

    auto* exporter = app.add_subcommand("export", "write the coefficient table A_{n,m}, 0 <= m <= n <= max-n");
    function_options(exporter);
    exporter->add_option("--max-n", cfg.max_n, "largest n");
    exporter->add_option("--table", cfg.table_path, "re-export a previously exported JSON table")
        ->check(CLI::ExistingFile);
    format_option(exporter, cfg.export_format, {"json", "csv"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (poly->parsed())
            return run_poly(cfg);
        if (coeff->parsed())
            return run_coeff(cfg);
        if (verify->parsed())
            return run_verify(cfg);
        if (scan->parsed())
            return run_scan(cfg);
        return run_export(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
}
