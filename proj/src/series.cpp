#include "gbinom/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbinom {

MPoly::MPoly(std::vector<int> caps) : caps_(std::move(caps))
{
    for (int c : caps_)
        if (c < 0)
            throw std::invalid_argument("MPoly: negative cap");
}

MPoly MPoly::constant(std::vector<int> caps, const BigRat& c)
{
    MPoly out(std::move(caps));
    out.add_term(Exponents(out.nvars(), 0), c);
    return out;
}

MPoly MPoly::monomial(std::vector<int> caps, const Exponents& e, const BigRat& c)
{
    MPoly out(std::move(caps));
    if (e.size() != out.nvars())
        throw std::invalid_argument("MPoly: exponent vector has wrong length");
    out.add_term(e, c);
    return out;
}

MPoly MPoly::variable(std::vector<int> caps, std::size_t i)
{
    Exponents e(caps.size(), 0);
    if (i >= e.size())
        throw std::invalid_argument("MPoly: variable index out of range");
    e[i] = 1;
    return monomial(std::move(caps), e);
}

bool MPoly::within_caps(const Exponents& e) const
{
    if (e.size() != caps_.size())
        return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > caps_[i])
            return false;
    return true;
}

BigRat MPoly::coeff(const Exponents& e) const
{
    if (!within_caps(e))
        throw std::out_of_range("MPoly::coeff: exponent beyond truncation caps");
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRat(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const BigRat& c)
{
    if (c == 0 || !within_caps(e))
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void MPoly::require_same_caps(const MPoly& other) const
{
    if (caps_ != other.caps_)
        throw std::invalid_argument("MPoly: mismatched truncation caps");
}

MPoly& MPoly::operator+=(const MPoly& other)
{
    require_same_caps(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& other)
{
    require_same_caps(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    a.require_same_caps(b);
    MPoly out(a.caps_);
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            bool fits = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > a.caps_[i]) {
                    fits = false;
                    break;
                }
            }
            if (fits)
                out.add_term(e, ca * cb);
        }
    }
    return out;
}

MPoly& MPoly::operator*=(const MPoly& other)
{
    *this = *this * other;
    return *this;
}

MPoly& MPoly::operator*=(const BigRat& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

MPoly MPoly::operator-() const
{
    MPoly out(*this);
    for (auto& [e, v] : out.terms_)
        v = -v;
    return out;
}

std::string MPoly::to_string() const
{
    std::string out;
    for (const auto& [e, c] : terms_) {
        out += gbinom::to_string(c);
        out += " *";
        for (std::size_t i = 0; i < e.size(); ++i) {
            out += (i == 0 ? " x" : "*x");
            out += std::to_string(i + 1) + "^" + std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

MPoly pow(const MPoly& base, unsigned e)
{
    MPoly acc = MPoly::constant(base.caps(), 1);
    for (unsigned i = 0; i < e; ++i)
        acc *= base;
    return acc;
}

MPoly geom_inverse_product(const std::vector<int>& caps)
{
    MPoly acc = MPoly::constant(caps, 1);
    for (std::size_t i = 0; i < caps.size(); ++i) {
        MPoly factor(caps);
        Exponents e(caps.size(), 0);
        for (int j = 0; j <= caps[i]; ++j) {
            e[i] = j;
            factor.add_term(e, 1);
        }
        acc *= factor;
    }
    return acc;
}

MPoly homogeneous_h(int n, const std::vector<int>& caps)
{
    if (n < 0)
        throw std::invalid_argument("homogeneous_h: negative degree");
    // layer[d] = h_d in the variables seen so far; adding x_i gives
    // h_d(..., x_i) = sum_j x_i^j h_{d-j}(...).
    const std::size_t m = caps.size();
    std::vector<MPoly> layer(static_cast<std::size_t>(n) + 1, MPoly(caps));
    layer[0] = MPoly::constant(caps, 1);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<MPoly> next(layer.size(), MPoly(caps));
        for (int d = 0; d <= n; ++d) {
            for (int j = 0; j <= std::min(d, caps[i]); ++j) {
                for (const auto& [e, c] : layer[static_cast<std::size_t>(d - j)].terms()) {
                    Exponents moved = e;
                    moved[i] += j;
                    next[static_cast<std::size_t>(d)].add_term(moved, c);
                }
            }
        }
        layer = std::move(next);
    }
    return layer[static_cast<std::size_t>(n)];
}

} // namespace gbinom
