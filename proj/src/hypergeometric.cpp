#include "gbinom/hypergeometric.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gbinom/errors.hpp"

namespace gbinom {

namespace {

// -a when a is a nonpositive integer.
std::optional<long> nonpositive_integer_magnitude(const BigRat& a)
{
    if (!is_integer(a) || a > 0)
        return std::nullopt;
    BigInt mag = -a.get_num();
    if (!mag.fits_slong_p())
        throw unsupported_error("hypergeometric parameter too large to terminate");
    return mag.get_si();
}

} // namespace

long termination_index(std::span<const BigRat> numerator)
{
    std::optional<long> best;
    for (const auto& a : numerator) {
        if (auto mag = nonpositive_integer_magnitude(a))
            best = best ? std::min(*best, *mag) : *mag;
    }
    if (!best)
        throw unsupported_error("hypergeometric series does not terminate");
    return *best;
}

BigRat hypergeom_terminating(std::span<const BigRat> numerator, std::span<const BigRat> denominator,
                             const BigRat& z)
{
    const long n = termination_index(numerator);
    for (const auto& b : denominator) {
        // (b)_j = 0 for j > |b|; such a j inside 0..n is a pole.
        if (auto mag = nonpositive_integer_magnitude(b); mag && *mag < n)
            throw pole_error("denominator parameter " + to_compact_string(b) +
                             " vanishes within the summation range");
    }
    BigRat term(1);
    BigRat sum(1);
    for (long j = 0; j < n; ++j) {
        // term_{j+1} / term_j
        BigRat ratio = z / (j + 1);
        for (const auto& a : numerator)
            ratio *= a + j;
        for (const auto& b : denominator)
            ratio /= b + j;
        term *= ratio;
        sum += term;
    }
    return sum;
}

} // namespace gbinom
