#pragma once

#include <map>
#include <string>
#include <vector>

#include "gbinom/exactnum.hpp"

namespace gbinom {

// Dense univariate polynomial over Q in the monomial basis. coeffs()[i] is
// the coefficient of X^i; trailing zeros are always stripped, so the zero
// polynomial has no coefficients and equality is coefficientwise.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<BigRat> coeffs);

    static UPoly constant(const BigRat& c);
    // X + shift
    static UPoly linear(const BigRat& shift);

    const std::vector<BigRat>& coeffs() const noexcept { return c_; }
    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    BigRat coeff(int i) const;
    BigRat operator()(const BigRat& x) const;

    UPoly& operator+=(const UPoly& other);
    UPoly& operator-=(const UPoly& other);
    UPoly& operator*=(const BigRat& c);
    UPoly& operator*=(const UPoly& other);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const BigRat& c) { return a *= c; }
    friend UPoly operator*(const BigRat& c, UPoly a) { return a *= c; }

    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    void normalize();
    std::vector<BigRat> c_;
};

inline UPoly scale(const UPoly& p, const BigRat& c) { return p * c; }

// <X+shift>_n = (X+shift)(X+shift-1)...(X+shift-n+1)
UPoly falling_poly(int n, const BigRat& shift = 0);
// (X+shift)_n = (X+shift)(X+shift+1)...(X+shift+n-1)
UPoly rising_poly(int n, const BigRat& shift = 0);
// binom(X+shift, n) = <X+shift>_n / n!
UPoly binom_poly(int n, const BigRat& shift = 0);
// binom(X+n-1, n-k), degree n-k; requires 0 <= k <= n.
UPoly shifted_binom_poly(int n, int k);

// Delta^k P at 0, by the alternating sum sum_j (-1)^j binom(k,j) P(k-j).
BigRat delta_at_zero(const UPoly& p, int k);

// Coefficients A_k with P = sum_k A_k <X>_k, A_k = Delta^k P(0) / k!.
// Only nonzero coefficients are stored.
std::map<int, BigRat> to_falling_basis(const UPoly& p);
UPoly from_falling_basis(const std::map<int, BigRat>& coeffs);

// Coefficient list of "num/den" strings, lowest degree first.
std::vector<std::string> serialize(const UPoly& p);
UPoly parse_upoly(const std::vector<std::string>& coeffs);

// Human-readable "3/2*X^2 - X + 1".
std::string to_display_string(const UPoly& p, const std::string& var = "X");

} // namespace gbinom
