#include "darcais/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace darcais {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p < 1)
            throw std::invalid_argument("composition parts must be positive");
        size_ += p;
    }
}

std::map<int, int> Composition::multiplicities() const
{
    std::map<int, int> m;
    for (int p : parts_)
        ++m[p];
    return m;
}

Composition Composition::without_last() const
{
    if (parts_.empty())
        throw std::logic_error("empty composition has no last part");
    return Composition(std::vector<int>(parts_.begin(), parts_.end() - 1));
}

Partition::Partition(std::vector<int> parts) : c_(std::move(parts))
{
    if (!std::is_sorted(c_.parts().begin(), c_.parts().end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be non-increasing");
}

Partition sorted_partition(const Composition& c)
{
    std::vector<int> parts(c.parts().begin(), c.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

namespace detail {

PartitionGen::PartitionGen(int n)
{
    if (n < 0) {
        valid_ = false;
        return;
    }
    if (n > 0)
        parts_.push_back(n);
    current_ = Partition(parts_);
}

bool PartitionGen::advance()
{
    // Find the rightmost part > 1, decrement it, and redistribute the
    // remainder greedily with parts bounded by the new value.
    int ones = 0;
    while (!parts_.empty() && parts_.back() == 1) {
        parts_.pop_back();
        ++ones;
    }
    if (parts_.empty())
        return false;
    const int bound = --parts_.back();
    int rest = ones + 1;
    while (rest > 0) {
        const int take = std::min(bound, rest);
        parts_.push_back(take);
        rest -= take;
    }
    current_ = Partition(parts_);
    return true;
}

OrbitGen::OrbitGen(const Partition& mu) : parts_(mu.parts().begin(), mu.parts().end())
{
    std::sort(parts_.begin(), parts_.end());
    current_ = Composition(parts_);
}

bool OrbitGen::advance()
{
    if (!std::next_permutation(parts_.begin(), parts_.end()))
        return false;
    current_ = Composition(parts_);
    return true;
}

CompositionGen::CompositionGen(int n, int k) : n_(n)
{
    if (n == 0 && k == 0) {
        current_ = Composition();
        return;
    }
    if (k < 1 || n < k) {
        valid_ = false;
        return;
    }
    parts_.assign(static_cast<std::size_t>(k), 1);
    parts_.back() = n - k + 1;
    current_ = Composition(parts_);
}

bool CompositionGen::advance()
{
    // Lexicographic successor with fixed length and sum: grow the rightmost
    // non-final part whose suffix still has slack, reset the parts after it
    // to 1 and put the remainder in the last slot.
    const int k = static_cast<int>(parts_.size());
    std::vector<int> prefix(parts_.size() + 1, 0);
    for (int j = 0; j < k; ++j)
        prefix[j + 1] = prefix[j] + parts_[j];
    for (int i = k - 2; i >= 0; --i) {
        if (n_ - prefix[i + 1] <= k - 1 - i)
            continue;
        ++parts_[i];
        for (int j = i + 1; j < k - 1; ++j)
            parts_[j] = 1;
        parts_[k - 1] = n_ - (prefix[i + 1] + 1) - (k - 2 - i);
        current_ = Composition(parts_);
        return true;
    }
    return false;
}

} // namespace detail

PartitionRange partitions_of(int n)
{
    return PartitionRange(detail::PartitionGen(n));
}

OrbitRange orbit_of(const Partition& mu)
{
    return OrbitRange(detail::OrbitGen(mu));
}

CompositionRange compositions_of(int n, int k)
{
    return CompositionRange(detail::CompositionGen(n, k));
}

Integer composition_count(int n, int k)
{
    if (n == 0 && k == 0)
        return 1;
    return binomial(n - 1, k - 1);
}

Integer partition_count(int n)
{
    if (n < 0)
        return 0;
    std::vector<Integer> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int i = 1; i <= n; ++i) {
        Integer acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > i)
                break;
            const int g2 = k * (3 * k + 1) / 2;
            const Integer term = p[static_cast<std::size_t>(i - g1)] +
                                 (g2 <= i ? p[static_cast<std::size_t>(i - g2)] : Integer(0));
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<std::size_t>(i)] = acc;
    }
    return p.back();
}

Integer orbit_size(const Partition& mu)
{
    Integer out = factorial(static_cast<unsigned long>(mu.length()));
    for (const auto& [part, count] : mu.multiplicities())
        out /= factorial(static_cast<unsigned long>(count));
    return out;
}

Integer multinomial(int n, std::span<const int> parts)
{
    long sum = 0;
    for (int p : parts) {
        if (p < 0)
            throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != n)
        throw std::invalid_argument("multinomial: parts do not sum to n");
    Integer out = factorial(static_cast<unsigned long>(n));
    for (int p : parts)
        out /= factorial(static_cast<unsigned long>(p));
    return out;
}

Integer stirling_first_unsigned(int n, int m)
{
    if (n < 0 || m < 0 || m > n)
        throw std::out_of_range("stirling_first_unsigned requires 0 <= m <= n");
    // Row-by-row: |s(i+1, j)| = i |s(i, j)| + |s(i, j-1)|.
    std::vector<Integer> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<Integer> next(row.size() + 1);
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j] * i;
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(m)];
}

std::vector<int> hook_multiset(const Partition& lambda)
{
    const auto rows = lambda.parts();
    std::vector<int> columns(rows.empty() ? 0 : static_cast<std::size_t>(rows.front()), 0);
    for (int r : rows)
        for (int j = 0; j < r; ++j)
            ++columns[static_cast<std::size_t>(j)];
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j) {
            const int arm = rows[i] - j - 1;
            const int leg = columns[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks.push_back(arm + leg + 1);
        }
    return hooks;
}

} // namespace darcais
