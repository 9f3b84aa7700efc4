#include "gbinom/coefficients.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "gbinom/errors.hpp"
#include "gbinom/hypergeometric.hpp"
#include "gbinom/polybasis.hpp"
#include "gbinom/series.hpp"

namespace gbinom {

namespace {

BigRat signed_term(std::int64_t exponent, const BigRat& v) { return sign_power(exponent) > 0 ? v : BigRat(-v); }

BigRat by_explicit_sum(const Composition& r, int k)
{
    BigRat sum(0);
    for (int i = 1; i <= k; ++i) {
        BigInt prod = binomial(k - 1, i - 1);
        for (int rl : r.parts())
            prod *= binomial(rl + i - 1, rl);
        sum += signed_term(k - i, make_rat(prod, i));
    }
    return sum * r.total();
}

BigRat by_entiere(const Composition& r, int k)
{
    BigInt sum(0);
    for (int j = 0; j < r.m(); ++j) {
        for (int i = 1; i <= k; ++i) {
            BigInt prod = binomial(k - 1, i - 1) * binomial(i + r[j] - 1, r[j] - 1);
            for (int l = 0; l < r.m(); ++l)
                if (l != j)
                    prod *= binomial(r[l] + i - 1, r[l]);
            sum += sign_power(k - i) * prod;
        }
    }
    return BigRat(sum);
}

BigRat by_genfun(const Composition& r, int k)
{
    const auto& caps = r.parts();
    MPoly base = geom_inverse_product(caps) - MPoly::constant(caps, 1);
    BigRat extracted = pow(base, static_cast<unsigned>(k)).coeff(caps);
    return extracted * make_rat(r.total(), k);
}

BigInt product_of(const std::vector<int>& v)
{
    BigInt acc(1);
    for (int x : v)
        acc *= x;
    return acc;
}

BigRat by_inclusion_exclusion(const Composition& r, int k)
{
    Composition present = r.stripped();
    BigInt s = seating_counts(present, k, SeatingKind::S);
    return make_rat(s * r.total(), product_of(present.parts()) * k);
}

BigRat by_finite_diff(const Composition& r, int k)
{
    UPoly p = UPoly::constant(1);
    BigInt denom(1);
    for (int ri : r.parts()) {
        p *= rising_poly(ri);
        denom *= factorial(ri);
    }
    BigRat a_k = delta_at_zero(p, k) / BigRat(factorial(k));
    return a_k * BigRat(factorial(k - 1) * r.total()) / BigRat(denom);
}

// c_k^(r) / |r| with r sorted and free of zeros. The memo is local to one
// top-level call, so concurrent callers never share state.
using RecurrenceMemo = std::map<std::pair<std::vector<int>, int>, BigRat>;

BigRat scaled_by_recurrence(std::vector<int> r, int k, RecurrenceMemo& memo)
{
    std::sort(r.begin(), r.end(), std::greater<>());
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    if (r.size() == 1)
        return make_rat(binomial(r[0], k), r[0]);
    auto key = std::make_pair(r, k);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    const int r1 = r[0];
    const int r2 = r[1];
    std::vector<int> merged(r.begin() + 1, r.end());
    BigRat sum(0);
    for (int l = 0; l <= std::min(r1, r2); ++l) {
        const std::array<std::int64_t, 3> blocks{l, r1 - l, r2 - l};
        BigInt weight = multinomial(r1 + r2 - l, blocks);
        merged[0] = r1 + r2 - l;
        sum += signed_term(l, BigRat(weight) * scaled_by_recurrence(merged, k, memo));
    }
    memo.emplace(std::move(key), sum);
    return sum;
}

BigRat by_recurrence(const Composition& r, int k)
{
    RecurrenceMemo memo;
    return scaled_by_recurrence(r.parts(), k, memo) * r.total();
}

BigRat hyp(std::initializer_list<BigRat> numerator, std::initializer_list<BigRat> denominator)
{
    return hypergeom_terminating(std::span(numerator.begin(), numerator.size()),
                                 std::span(denominator.begin(), denominator.size()), BigRat(1));
}

} // namespace

std::string_view method_name(Method method)
{
    switch (method) {
    case Method::explicit_sum:
        return "explicit";
    case Method::entiere:
        return "entiere";
    case Method::genfun:
        return "genfun";
    case Method::inclusion_exclusion:
        return "inclusion_exclusion";
    case Method::finite_diff:
        return "finite_diff";
    case Method::recurrence:
        return "recurrence";
    case Method::hyp3f2:
        return "hyp3f2";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name)
{
    for (Method m : all_methods)
        if (method_name(m) == name)
            return m;
    return std::nullopt;
}

BigRat c_coeff_two_species(int r1, int r2, int k, TwoSpeciesForm form)
{
    if (r1 < 0 || r2 < 0 || r1 + r2 == 0)
        throw std::domain_error("two-species form needs r1, r2 >= 0 with r1 + r2 > 0");
    if (k < 1)
        throw std::domain_error("c_k needs k >= 1");
    const int s = r1 + r2;
    if (k > s)
        return 0;
    switch (form) {
    case TwoSpeciesForm::lassalle:
        return signed_term(k - 1, BigRat(s) * hyp({BigRat(1 - k), BigRat(r1 + 1), BigRat(r2 + 1)},
                                                  {BigRat(2), BigRat(1)}));
    case TwoSpeciesForm::whipple_twice:
        return BigRat(binomial(s, k)) *
               hyp({BigRat(1 - k), BigRat(-r1), BigRat(-r2)}, {BigRat(1 - s), BigRat(1)});
    case TwoSpeciesForm::whipple_thrice:
        return BigRat(binomial(s, k) * binomial(s, r1)) *
               hyp({BigRat(-r1), BigRat(-r2), BigRat(k - s)}, {BigRat(1 - s), BigRat(-s)});
    case TwoSpeciesForm::alternating_sum: {
        BigRat sum(0);
        for (int i = 0; i <= std::min(r1, r2); ++i) {
            BigRat term = make_rat(binomial(s - i, k) * s * binomial(s - i, i) * binomial(s - 2 * i, r1 - i), s - i);
            sum += signed_term(i, term);
        }
        return sum;
    }
    }
    throw std::logic_error("unknown two-species form");
}

BigRat c_coeff(const Composition& r, int k, Method method)
{
    if (k < 1)
        throw std::domain_error("c_k needs k >= 1");
    if (method == Method::hyp3f2 && r.m() != 2)
        throw unsupported_error("hyp3f2 is only defined for two species");
    if (k > r.total())
        return 0;
    switch (method) {
    case Method::explicit_sum:
        return by_explicit_sum(r, k);
    case Method::entiere:
        return by_entiere(r, k);
    case Method::genfun:
        return by_genfun(r, k);
    case Method::inclusion_exclusion:
        return by_inclusion_exclusion(r, k);
    case Method::finite_diff:
        return by_finite_diff(r, k);
    case Method::recurrence:
        return by_recurrence(r, k);
    case Method::hyp3f2:
        return c_coeff_two_species(r[0], r[1], k, TwoSpeciesForm::lassalle);
    }
    throw std::logic_error("unknown method");
}

BigInt seating_single(int r, int k)
{
    if (r < 1 || k < 0)
        throw std::domain_error("seating_single needs r >= 1 and k >= 0");
    return binomial(k + r - 1, r - 1) * k;
}

BigInt seating_counts(const Composition& r, int k, SeatingKind which)
{
    if (k < 1)
        throw std::domain_error("seating counts need k >= 1");
    if (r.has_zero())
        throw std::domain_error("a species without representatives cannot be seated");
    if (which == SeatingKind::F) {
        BigInt prod(1);
        for (int rl : r.parts())
            prod *= seating_single(rl, k);
        return prod;
    }
    BigInt sum(0);
    for (int i = 1; i <= k; ++i) {
        BigInt prod = binomial(k, i);
        for (int rl : r.parts())
            prod *= binomial(i + rl - 1, rl) * rl;
        sum += sign_power(k - i) * prod;
    }
    return sum;
}

BigRat t_coeff(const Composition& r, int k, int j)
{
    if (j < 1 || j > r.m())
        throw std::domain_error("t_coeff: species index out of range");
    BigInt s = seating_counts(r, k, SeatingKind::S);
    return make_rat(s * r[static_cast<std::size_t>(j - 1)], product_of(r.parts()) * k);
}

std::string_view family_name(Family family)
{
    switch (family) {
    case Family::c:
        return "c";
    case Family::c_tilde:
        return "c_tilde";
    case Family::d:
        return "d";
    case Family::d_tilde:
        return "d_tilde";
    case Family::F:
        return "F";
    case Family::S:
        return "S";
    }
    return "unknown";
}

bool CoeffTable::integral(int k) const { return is_integer(at(k)); }

bool CoeffTable::all_integral() const
{
    for (const auto& [k, v] : values)
        if (!is_integer(v))
            return false;
    return true;
}

BigRat CoeffTable::at(int k) const
{
    auto it = values.find(k);
    return it == values.end() ? BigRat(0) : it->second;
}

nlohmann::ordered_json values_json(const CoeffTable& table)
{
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [k, v] : table.values)
        values[std::to_string(k)] = to_compact_string(v);
    return values;
}

nlohmann::ordered_json to_json(const CoeffTable& table)
{
    nlohmann::ordered_json out;
    out["family"] = family_name(table.family);
    out["r"] = table.r.parts();
    out["values"] = values_json(table);
    return out;
}

CoeffTable c_table(const Composition& r, Method method)
{
    CoeffTable table{Family::c, r, {}};
    if (method == Method::genfun) {
        // Incremental powers instead of one pow() per k.
        const auto& caps = r.parts();
        MPoly base = geom_inverse_product(caps) - MPoly::constant(caps, 1);
        MPoly power = MPoly::constant(caps, 1);
        for (int k = 1; k <= r.total(); ++k) {
            power *= base;
            table.values.emplace(k, power.coeff(caps) * make_rat(r.total(), k));
        }
        return table;
    }
    for (int k = 1; k <= r.total(); ++k)
        table.values.emplace(k, c_coeff(r, k, method));
    return table;
}

CoeffTable linearization_d(const Composition& r, LinearizationVariant variant)
{
    if (variant == LinearizationVariant::c_tilde) {
        CoeffTable c = c_table(r, Method::genfun);
        CoeffTable out{Family::c_tilde, r, {}};
        for (const auto& [k, v] : c.values)
            if (v != 0)
                out.values.emplace(k, v * make_rat(k, r.total()));
        return out;
    }
    UPoly p = UPoly::constant(1);
    BigInt denom(1);
    for (int ri : r.parts()) {
        p *= falling_poly(ri);
        denom *= factorial(ri);
    }
    CoeffTable out{variant == LinearizationVariant::d ? Family::d : Family::d_tilde, r, {}};
    for (const auto& [k, a] : to_falling_basis(p)) {
        if (variant == LinearizationVariant::d)
            out.values.emplace(k, a);
        else
            out.values.emplace(k, a * BigRat(factorial(k)) / BigRat(denom));
    }
    return out;
}

} // namespace gbinom
