#include "gbinom/exactnum.hpp"

#include <stdexcept>

namespace gbinom {

BigRat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0)
        throw std::domain_error("binomial: negative upper index");
    if (k < 0 || k > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(std::int64_t n)
{
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigRat rising(const BigRat& x, std::int64_t n)
{
    if (n < 0)
        throw std::domain_error("rising factorial: negative length");
    BigRat acc(1);
    for (std::int64_t i = 0; i < n; ++i)
        acc *= x + i;
    return acc;
}

BigRat falling(const BigRat& x, std::int64_t n)
{
    if (n < 0)
        throw std::domain_error("falling factorial: negative length");
    BigRat acc(1);
    for (std::int64_t i = 0; i < n; ++i)
        acc *= x - i;
    return acc;
}

BigInt multinomial(std::int64_t n, std::span<const std::int64_t> parts)
{
    std::int64_t total = 0;
    for (auto a : parts) {
        if (a < 0)
            throw std::domain_error("multinomial: negative part");
        total += a;
    }
    if (total != n)
        throw std::domain_error("multinomial: parts do not sum to n");
    // Product of binomials avoids the big intermediate n!.
    BigInt acc(1);
    std::int64_t running = 0;
    for (auto a : parts) {
        running += a;
        acc *= binomial(running, a);
    }
    return acc;
}

BigRat factorial_family(const BigRat& x, std::int64_t n, FactorialKind kind)
{
    switch (kind) {
    case FactorialKind::rising:
        return rising(x, n);
    case FactorialKind::falling:
        return falling(x, n);
    case FactorialKind::factorial:
        return BigRat(factorial(n));
    }
    throw std::logic_error("factorial_family: unknown kind");
}

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const BigRat& q)
{
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::string to_compact_string(const BigRat& q)
{
    return is_integer(q) ? q.get_num().get_str(10) : to_string(q);
}

BigInt parse_int(std::string_view text)
{
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start)
        throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("not an integer: '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return BigInt(s, 10);
}

BigRat parse_rat(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return BigRat(parse_int(text));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return make_rat(parse_int(text.substr(0, slash)), den);
}

} // namespace gbinom
