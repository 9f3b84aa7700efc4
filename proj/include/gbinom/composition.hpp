#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gbinom {

// The species sizes r = (r_1..r_m): nonnegative entries, m >= 1, |r| > 0.
class Composition {
public:
    // Throws std::invalid_argument when an entry is negative, the list is
    // empty, or every entry is zero.
    explicit Composition(std::vector<int> r);

    const std::vector<int>& parts() const noexcept { return r_; }
    int m() const noexcept { return static_cast<int>(r_.size()); }
    int total() const noexcept { return total_; }
    int operator[](std::size_t i) const { return r_[i]; }
    bool has_zero() const noexcept;

    // Same composition with zero entries removed.
    Composition stripped() const;
    // Entries in decreasing order.
    Composition sorted() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> r_;
    int total_ = 0;
};

// "2,1,0"
std::string to_string(const Composition& r);
Composition parse_composition(std::string_view text);

// Every composition with 1 <= m <= m_max and 0 <= r_i <= r_max (|r| > 0),
// ordered by m and then lexicographically. With min_entry = 1 only
// compositions without zero entries are produced.
std::vector<Composition> compositions_up_to(int m_max, int r_max, int min_entry = 0);

} // namespace gbinom
