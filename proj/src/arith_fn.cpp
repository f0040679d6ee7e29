#include "darcais/arith_fn.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace darcais {

struct ArithmeticFunction::State {
    std::string name;
    Evaluator evaluator;
    Flags flags;
    mutable std::mutex mutex;
    mutable std::unordered_map<std::int64_t, Rational> cache;
};

ArithmeticFunction::ArithmeticFunction(std::string name, Evaluator evaluator, Flags flags)
    : state_(std::make_shared<State>())
{
    state_->name = std::move(name);
    state_->evaluator = std::move(evaluator);
    state_->flags = flags;
    if ((*this)(1) != 1)
        throw std::invalid_argument("arithmetic function '" + state_->name + "' is not normalized: f(1) != 1");
}

Rational ArithmeticFunction::operator()(std::int64_t n) const
{
    if (n < 0)
        throw std::out_of_range("arithmetic function evaluated at negative argument");
    if (n == 0)
        return 0;
    {
        std::lock_guard lock(state_->mutex);
        if (auto it = state_->cache.find(n); it != state_->cache.end())
            return it->second;
    }
    Rational value = state_->evaluator(n);
    if (state_->flags.non_vanishing && sgn(value) == 0)
        throw std::logic_error("function '" + state_->name + "' flagged non-vanishing is zero at " + std::to_string(n));
    std::lock_guard lock(state_->mutex);
    state_->cache.emplace(n, value);
    return value;
}

const std::string& ArithmeticFunction::name() const
{
    return state_->name;
}

bool ArithmeticFunction::non_vanishing() const
{
    return state_->flags.non_vanishing;
}

bool ArithmeticFunction::integer_valued() const
{
    return state_->flags.integer_valued;
}

Integer divisor_power_sum(std::int64_t n, unsigned power)
{
    Integer sum = 0;
    Integer term;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), power);
        sum += term;
        const std::int64_t e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(e), power);
            sum += term;
        }
    }
    return sum;
}

ArithmeticFunction ArithmeticFunction::one()
{
    return {"one", [](std::int64_t) { return Rational(1); }, {true, true}};
}

ArithmeticFunction ArithmeticFunction::id()
{
    return {"id", [](std::int64_t n) { return Rational(static_cast<long>(n)); }, {true, true}};
}

ArithmeticFunction ArithmeticFunction::sigma(unsigned power)
{
    return {"sigma:" + std::to_string(power),
            [power](std::int64_t n) { return Rational(divisor_power_sum(n, power)); },
            {true, true}};
}

ArithmeticFunction ArithmeticFunction::tilde(const ArithmeticFunction& g)
{
    return {"tilde:" + g.name(),
            [g](std::int64_t n) { return Rational(g(n) / static_cast<long>(n)); },
            {g.non_vanishing(), false}};
}

ArithmeticFunction ArithmeticFunction::from_table(std::vector<Rational> values, std::string name)
{
    if (values.empty() || values.front() != 1)
        throw std::invalid_argument("function table must start with the value 1 at n = 1");
    Flags flags{true, true};
    for (const auto& v : values) {
        flags.non_vanishing = flags.non_vanishing && sgn(v) != 0;
        flags.integer_valued = flags.integer_valued && v.get_den() == 1;
    }
    auto table = std::make_shared<const std::vector<Rational>>(std::move(values));
    return {std::move(name),
            [table](std::int64_t n) {
                if (static_cast<std::size_t>(n) > table->size())
                    throw std::out_of_range("function table has no value at n = " + std::to_string(n));
                return (*table)[static_cast<std::size_t>(n - 1)];
            },
            flags};
}

std::vector<Rational> read_function_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open function table '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("function table '" + path + "': " + e.what());
    }
    if (!doc.is_array())
        throw std::invalid_argument("function table '" + path + "' must be a JSON array");
    std::vector<Rational> values;
    for (const auto& item : doc) {
        if (item.is_string())
            values.push_back(parse_rational(item.get<std::string>()));
        else if (item.is_number_integer())
            values.emplace_back(Rational(item.dump()));
        else
            throw std::invalid_argument("function table entries must be integers or \"p/q\" strings");
    }
    return values;
}

ArithmeticFunction parse_function(std::string_view descriptor)
{
    if (descriptor == "one" || descriptor == "1")
        return ArithmeticFunction::one();
    if (descriptor == "id")
        return ArithmeticFunction::id();
    if (descriptor == "sigma")
        return ArithmeticFunction::sigma(1);
    const auto colon = descriptor.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("unknown function descriptor '" + std::string(descriptor) + "'");
    const std::string_view head = descriptor.substr(0, colon);
    const std::string_view rest = descriptor.substr(colon + 1);
    if (head == "sigma") {
        unsigned power = 0;
        std::istringstream is{std::string(rest)};
        if (rest.empty() || !(is >> power) || !is.eof())
            throw std::invalid_argument("bad sigma exponent in '" + std::string(descriptor) + "'");
        return ArithmeticFunction::sigma(power);
    }
    if (head == "tilde")
        return ArithmeticFunction::tilde(parse_function(rest));
    if (head == "table")
        return ArithmeticFunction::from_table(read_function_table(std::string(rest)), std::string(descriptor));
    throw std::invalid_argument("unknown function descriptor '" + std::string(descriptor) + "'");
}

struct CumulativeProduct::Memo {
    std::mutex mutex;
    std::vector<Rational> values{Rational(1)};
};

CumulativeProduct::CumulativeProduct(ArithmeticFunction h) : h_(std::move(h)), memo_(std::make_shared<Memo>())
{
}

Rational CumulativeProduct::operator()(std::int64_t n) const
{
    if (n < 0)
        throw std::out_of_range("cumulative product at negative index");
    std::lock_guard lock(memo_->mutex);
    auto& v = memo_->values;
    while (static_cast<std::int64_t>(v.size()) <= n)
        v.push_back(v.back() * h_(static_cast<std::int64_t>(v.size())));
    return v[static_cast<std::size_t>(n)];
}

Rational CumulativeProduct::window(std::int64_t m, std::int64_t n) const
{
    if (m < 0 || m > n)
        throw std::out_of_range("h_window requires 0 <= m <= n");
    Rational out = 1;
    for (std::int64_t k = 0; k < m; ++k)
        out *= h_(n - k);
    return out;
}

Rational h_window(const CumulativeProduct& H, std::int64_t m, std::int64_t n)
{
    return H.window(m, n);
}

} // namespace darcais
