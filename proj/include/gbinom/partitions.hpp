#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gbinom/exactnum.hpp"

namespace gbinom {

// An integer partition: weakly decreasing positive parts. Multiplicities are
// cached at construction so every statistic is O(length).
class Partition {
public:
    Partition() = default;

    // Throws std::invalid_argument unless parts are positive and weakly
    // decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    // m_i: number of parts equal to i (zero for i outside 1..largest part).
    int multiplicity(int i) const noexcept;

    // Largest part, 0 for the empty partition.
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    std::vector<int> mult_; // mult_[i] = m_i, index 0 unused
    int size_ = 0;
};

// Every partition of n exactly once, reverse-lexicographic on parts:
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1). n == 0 yields the empty partition.
std::vector<Partition> partitions_of(int n);

// prod_i i^{m_i} m_i!
BigInt z_mu(const Partition& mu);

// Coefficient of x^p in prod_k ((1+x)^k - 1)^{m_k}: the number of ways to
// pick p cells of the Ferrers diagram with at least one cell in every row.
// The empty partition gives 1 at p == 0.
BigInt ferrers_choose(const Partition& mu, int p);

// "3,1,1"; the empty partition is the empty string.
std::string to_string(const Partition& mu);
Partition parse_partition(std::string_view text);

} // namespace gbinom
