#pragma once

// Exact integers and rationals plus the factorial-family primitives.
//
// BigInt and BigRat are GMP's C++ wrappers. Every BigRat leaving this
// module is canonical (lowest terms, positive denominator); use make_rat
// rather than the raw two-argument mpq_class constructor, which does not
// canonicalize.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gbinom {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den);

bool is_integer(const BigRat& q);

// n!/(k!(n-k)!) for 0 <= k <= n, zero for any other k. Throws
// std::domain_error for n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

// x(x+1)...(x+n-1); empty product for n == 0.
BigRat rising(const BigRat& x, std::int64_t n);

// x(x-1)...(x-n+1); empty product for n == 0.
BigRat falling(const BigRat& x, std::int64_t n);

// n!/(a_1!...a_j!). The parts must be nonnegative and sum to n,
// otherwise std::domain_error.
BigInt multinomial(std::int64_t n, std::span<const std::int64_t> parts);

enum class FactorialKind { rising, falling, factorial };

// Uniform dispatcher over the one-argument families; `factorial` ignores x
// and returns n!.
BigRat factorial_family(const BigRat& x, std::int64_t n, FactorialKind kind);

// (-1)^n as a small integer.
inline int sign_power(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }

// Decimal serialization. Integers as "123", rationals always as "num/den".
std::string to_string(const BigInt& z);
std::string to_string(const BigRat& q);

// Integer string when the denominator is 1, "num/den" otherwise.
std::string to_compact_string(const BigRat& q);

// Accepts "n" or "n/d"; throws std::invalid_argument on malformed text or a
// zero denominator.
BigInt parse_int(std::string_view text);
BigRat parse_rat(std::string_view text);

} // namespace gbinom
