#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace symgen {

/// Weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts into decreasing order; throws Error on a part <= 0.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept;
    std::size_t length() const noexcept { return parts_.size(); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Ordered list of positive parts.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept;
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    Composition concat(const Composition& other) const;

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n, largest part first, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All compositions of n in lexicographic order.
std::vector<Composition> compositions_of(int n);

/// `(2,1,3)`; the empty composition is `()`.
std::string to_string(const Composition& c);
std::string to_string(const Partition& p);

/// Accepts `(2,1,3)`, `2,1,3` or `()`, whitespace tolerated.
Composition parse_composition(std::string_view text);

}  // namespace symgen
