// Compositions, partitions, orbits and the small combinatorial numbers
// built on them.

#ifndef DARCAIS_PARTITIONS_HPP
#define DARCAIS_PARTITIONS_HPP

#include <compare>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "darcais/exact.hpp"

namespace darcais {

/// An ordered sequence of positive parts. The empty composition has size
/// and length zero.
class Composition {
public:
    Composition() = default;
    /// Throws std::invalid_argument if a part is < 1.
    explicit Composition(std::vector<int> parts);

    [[nodiscard]] std::span<const int> parts() const { return parts_; }
    [[nodiscard]] int size() const { return size_; }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Multiplicity m_j of each part value j that occurs.
    [[nodiscard]] std::map<int, int> multiplicities() const;

    /// Drops the last part.
    [[nodiscard]] Composition without_last() const;

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A composition with non-increasing parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and
    /// non-increasing.
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] const Composition& composition() const { return c_; }
    [[nodiscard]] std::span<const int> parts() const { return c_.parts(); }
    [[nodiscard]] int size() const { return c_.size(); }
    [[nodiscard]] int length() const { return c_.length(); }
    [[nodiscard]] std::map<int, int> multiplicities() const { return c_.multiplicities(); }
    int operator[](std::size_t i) const { return c_[i]; }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    Composition c_;
};

/// The unique partition in the orbit of c.
Partition sorted_partition(const Composition& c);

namespace detail {

/// Shared iterator plumbing for the lazy generators below: Gen must provide
/// `bool advance()` and `const Value& current() const`.
template <class Gen, class Value>
class GeneratorRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Value;
        using difference_type = std::ptrdiff_t;
        using pointer = const Value*;
        using reference = const Value&;

        iterator() = default;
        explicit iterator(Gen* gen) : gen_(gen) {}

        reference operator*() const { return gen_->current(); }
        pointer operator->() const { return &gen_->current(); }
        iterator& operator++()
        {
            if (!gen_->advance())
                gen_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.gen_ == nullptr; }

    private:
        Gen* gen_ = nullptr;
    };

    explicit GeneratorRange(Gen gen) : gen_(std::move(gen)) {}

    iterator begin() { return gen_.valid() ? iterator(&gen_) : iterator(); }
    std::default_sentinel_t end() { return {}; }

private:
    Gen gen_;
};

class PartitionGen {
public:
    explicit PartitionGen(int n);
    bool advance();
    [[nodiscard]] const Partition& current() const { return current_; }
    [[nodiscard]] bool valid() const { return valid_; }

private:
    std::vector<int> parts_;
    Partition current_;
    bool valid_ = true;
};

class OrbitGen {
public:
    explicit OrbitGen(const Partition& mu);
    bool advance();
    [[nodiscard]] const Composition& current() const { return current_; }
    [[nodiscard]] bool valid() const { return true; }

private:
    std::vector<int> parts_;
    Composition current_;
};

class CompositionGen {
public:
    CompositionGen(int n, int k);
    bool advance();
    [[nodiscard]] const Composition& current() const { return current_; }
    [[nodiscard]] bool valid() const { return valid_; }

private:
    int n_;
    std::vector<int> parts_;
    Composition current_;
    bool valid_ = true;
};

} // namespace detail

using PartitionRange = detail::GeneratorRange<detail::PartitionGen, Partition>;
using OrbitRange = detail::GeneratorRange<detail::OrbitGen, Composition>;
using CompositionRange = detail::GeneratorRange<detail::CompositionGen, Composition>;

/// Every partition of n once, in reverse-lexicographic order: (n) first,
/// (1,...,1) last. n = 0 yields the empty partition.
PartitionRange partitions_of(int n);

/// All distinct rearrangements of mu, in lexicographic order starting from
/// the non-decreasing arrangement.
OrbitRange orbit_of(const Partition& mu);

/// Compositions of n with exactly k parts, in lexicographic order. Empty
/// when k is outside 1..n (except n = k = 0, which yields the empty
/// composition).
CompositionRange compositions_of(int n, int k);

/// c_k(n) = C(n-1, k-1).
Integer composition_count(int n, int k);

/// p(n) by Euler's pentagonal recurrence.
Integer partition_count(int n);

/// l! / prod m_j! for a composition of length l.
Integer orbit_size(const Partition& mu);

/// n! / prod parts_i!. Throws std::invalid_argument if the parts do not sum
/// to n or a part is negative.
Integer multinomial(int n, std::span<const int> parts);

/// |s(n, m)|, unsigned Stirling numbers of the first kind.
Integer stirling_first_unsigned(int n, int m);

/// Hook lengths of the Young diagram of lambda, row by row.
std::vector<int> hook_multiset(const Partition& lambda);

} // namespace darcais

#endif
