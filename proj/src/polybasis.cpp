#include "gbinom/polybasis.hpp"

#include <stdexcept>

namespace gbinom {

UPoly::UPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { normalize(); }

UPoly UPoly::constant(const BigRat& c) { return UPoly({c}); }

UPoly UPoly::linear(const BigRat& shift) { return UPoly({shift, BigRat(1)}); }

void UPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

BigRat UPoly::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return c_[static_cast<std::size_t>(i)];
}

BigRat UPoly::operator()(const BigRat& x) const
{
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UPoly& UPoly::operator+=(const UPoly& other)
{
    if (other.c_.size() > c_.size())
        c_.resize(other.c_.size(), BigRat(0));
    for (std::size_t i = 0; i < other.c_.size(); ++i)
        c_[i] += other.c_[i];
    normalize();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& other)
{
    if (other.c_.size() > c_.size())
        c_.resize(other.c_.size(), BigRat(0));
    for (std::size_t i = 0; i < other.c_.size(); ++i)
        c_[i] -= other.c_[i];
    normalize();
    return *this;
}

UPoly& UPoly::operator*=(const BigRat& c)
{
    for (auto& v : c_)
        v *= c;
    normalize();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return UPoly{};
    std::vector<BigRat> out(a.c_.size() + b.c_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& other)
{
    *this = *this * other;
    return *this;
}

UPoly falling_poly(int n, const BigRat& shift)
{
    if (n < 0)
        throw std::domain_error("falling_poly: negative length");
    UPoly acc = UPoly::constant(1);
    for (int i = 0; i < n; ++i)
        acc *= UPoly::linear(shift - i);
    return acc;
}

UPoly rising_poly(int n, const BigRat& shift)
{
    if (n < 0)
        throw std::domain_error("rising_poly: negative length");
    UPoly acc = UPoly::constant(1);
    for (int i = 0; i < n; ++i)
        acc *= UPoly::linear(shift + i);
    return acc;
}

UPoly binom_poly(int n, const BigRat& shift)
{
    return falling_poly(n, shift) * BigRat(1, factorial(n));
}

UPoly shifted_binom_poly(int n, int k)
{
    if (k < 0 || k > n)
        throw std::domain_error("shifted_binom_poly: need 0 <= k <= n");
    return binom_poly(n - k, BigRat(n - 1));
}

BigRat delta_at_zero(const UPoly& p, int k)
{
    if (k < 0)
        throw std::domain_error("delta_at_zero: negative order");
    BigRat acc(0);
    for (int j = 0; j <= k; ++j) {
        BigRat term = BigRat(binomial(k, j)) * p(BigRat(k - j));
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

std::map<int, BigRat> to_falling_basis(const UPoly& p)
{
    std::map<int, BigRat> out;
    for (int k = 0; k <= p.degree(); ++k) {
        BigRat a = delta_at_zero(p, k) / BigRat(factorial(k));
        if (a != 0)
            out.emplace(k, a);
    }
    return out;
}

UPoly from_falling_basis(const std::map<int, BigRat>& coeffs)
{
    UPoly acc;
    for (const auto& [k, a] : coeffs)
        acc += falling_poly(k) * a;
    return acc;
}

std::vector<std::string> serialize(const UPoly& p)
{
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.push_back(to_string(c));
    return out;
}

UPoly parse_upoly(const std::vector<std::string>& coeffs)
{
    std::vector<BigRat> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs)
        c.push_back(parse_rat(s));
    return UPoly(std::move(c));
}

std::string to_display_string(const UPoly& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        BigRat c = p.coeff(i);
        if (c == 0)
            continue;
        bool negative = c < 0;
        BigRat mag = negative ? BigRat(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        bool unit = (mag == 1);
        if (!unit || i == 0)
            out += to_compact_string(mag);
        if (i > 0) {
            if (!unit)
                out += "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace gbinom
