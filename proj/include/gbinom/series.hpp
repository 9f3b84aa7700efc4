#pragma once

// Sparse multivariate polynomials over the rationals, truncated per variable.
//
// An MPoly lives in Q[x_1..x_m] / (x_i^{cap_i + 1}). The caps are fixed at
// construction; every arithmetic result drops the terms that exceed them, so
// a coefficient read back inside the caps is exact.

#include <map>
#include <string>
#include <vector>

#include "gbinom/exactnum.hpp"

namespace gbinom {

using Exponents = std::vector<int>;

class MPoly {
public:
    using Terms = std::map<Exponents, BigRat>;

    // Zero polynomial with the given caps. Caps must be nonnegative.
    explicit MPoly(std::vector<int> caps);

    static MPoly constant(std::vector<int> caps, const BigRat& c);
    static MPoly monomial(std::vector<int> caps, const Exponents& e, const BigRat& c = 1);
    // x_i (0-based); zero when cap_i == 0.
    static MPoly variable(std::vector<int> caps, std::size_t i);

    std::size_t nvars() const noexcept { return caps_.size(); }
    const std::vector<int>& caps() const noexcept { return caps_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool within_caps(const Exponents& e) const;

    // Throws std::out_of_range when e exceeds the caps: that coefficient
    // was truncated away and is unknown.
    BigRat coeff(const Exponents& e) const;

    // Adds c to the coefficient of x^e; silently dropped beyond the caps.
    void add_term(const Exponents& e, const BigRat& c);

    MPoly& operator+=(const MPoly& other);
    MPoly& operator-=(const MPoly& other);
    MPoly& operator*=(const MPoly& other);
    MPoly& operator*=(const BigRat& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const BigRat& c) { return a *= c; }
    MPoly operator-() const;

    friend bool operator==(const MPoly&, const MPoly&) = default;

    // "coef * x1^a1*...*xm^am" lines, one per stored term, in lexicographic
    // exponent order.
    std::string to_string() const;

private:
    void require_same_caps(const MPoly& other) const;

    std::vector<int> caps_;
    Terms terms_;
};

// Truncated repeated multiplication; pow(p, 0) is the constant 1.
MPoly pow(const MPoly& base, unsigned e);

// prod_i (1 + x_i + ... + x_i^{cap_i}), i.e. 1/((1-x_1)...(1-x_m)) truncated.
MPoly geom_inverse_product(const std::vector<int>& caps);

// Complete homogeneous symmetric polynomial h_n(x_1..x_m), truncated.
MPoly homogeneous_h(int n, const std::vector<int>& caps);

} // namespace gbinom
