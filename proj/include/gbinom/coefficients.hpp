#pragma once

// The coefficient families attached to a composition r = (r_1..r_m):
//
//   c_k        generalized binomial coefficients, 1 <= k <= |r|
//   c~_k       = k c_k / |r|, covering multiset choices
//   d_k        falling-factorial linearization, prod <x>_{r_i} = sum d_k <x>_k
//   d~_k       = k! d_k / prod r_i!, covering subset choices
//   F_k, S_k   round-table seatings (empty chairs allowed / forbidden)
//   T_k(r; j)  seatings presided by species j; sum_j T_k(r; j) = c_k
//
// c_k is computed by several independent routes so they can be checked
// against each other.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gbinom/composition.hpp"
#include "gbinom/exactnum.hpp"

namespace gbinom {

enum class Method {
    explicit_sum,        // |r| sum_i (-1)^{k-i}/i binom(k-1,i-1) prod binom(r_l+i-1, r_l)
    entiere,             // integer-term double sum over species j and i
    genfun,              // (|r|/k) [x^r] (1/prod(1-x_i) - 1)^k
    inclusion_exclusion, // |r| S_k / (k prod r_j), zero entries stripped
    finite_diff,         // falling-basis expansion of prod (x)_{r_i}
    recurrence,          // merge r_1, r_2 until a single species remains
    hyp3f2,              // 3F2 form, two species only
};

inline constexpr std::array all_methods{Method::explicit_sum, Method::entiere,     Method::genfun,
                                        Method::inclusion_exclusion, Method::finite_diff, Method::recurrence,
                                        Method::hyp3f2};

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

// c_k^(r). Zero for k > |r|; std::domain_error for k < 1; unsupported_error
// for hyp3f2 when m != 2. Returned as a rational so that a broken route shows
// up as a failed integrality check rather than a silent rounding.
BigRat c_coeff(const Composition& r, int k, Method method = Method::genfun);

// The four two-species expressions for c_k^(r1,r2). `lassalle` is what
// c_coeff(.., hyp3f2) uses; the others are its Whipple-transformed forms and
// the final alternating sum.
enum class TwoSpeciesForm { lassalle, whipple_twice, whipple_thrice, alternating_sum };
BigRat c_coeff_two_species(int r1, int r2, int k, TwoSpeciesForm form);

// Chairs-around-one-table count for a single species with r representatives:
// k binom(k+r-1, r-1).
BigInt seating_single(int r, int k);

enum class SeatingKind { F, S };

// F_k(r) = prod F_k(r_l); S_k(r) = sum_i (-1)^{k-i} binom(k,i) F_i(r).
// Every r_l must be >= 1 (std::domain_error otherwise); k >= 1.
BigInt seating_counts(const Composition& r, int k, SeatingKind which);

// T_k(r; j) = S_k(r) r_j / (k r_1...r_m), species index j is 1-based.
BigRat t_coeff(const Composition& r, int k, int j);

enum class Family { c, c_tilde, d, d_tilde, F, S };
std::string_view family_name(Family family);

struct CoeffTable {
    Family family;
    Composition r;
    std::map<int, BigRat> values;

    bool integral(int k) const;
    bool all_integral() const;
    BigRat at(int k) const; // zero for absent k
};

// {"family": .., "r": [..], "values": {"k": "value"}} with keys in numeric
// order.
nlohmann::ordered_json to_json(const CoeffTable& table);
nlohmann::ordered_json values_json(const CoeffTable& table);

// c_k for k = 1..|r|.
CoeffTable c_table(const Composition& r, Method method = Method::genfun);

enum class LinearizationVariant { d, d_tilde, c_tilde };

// d: falling-basis expansion of prod <x>_{r_i}; d~ and c~ by rescaling.
// Only nonzero entries are stored.
CoeffTable linearization_d(const Composition& r, LinearizationVariant variant);

} // namespace gbinom
