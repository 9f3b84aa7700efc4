#include "gbinom/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "gbinom/errors.hpp"
#include "gbinom/oracles.hpp"
#include "gbinom/partitions.hpp"
#include "gbinom/series.hpp"

namespace gbinom {

namespace {

constexpr int max_partition_n = 12;
constexpr int max_species = 3;
constexpr int max_entry = 4;
constexpr int max_waring_t_degree = 6;
constexpr int max_binom2_entry = 12;

struct Sides {
    std::string lhs;
    std::string rhs;
    bool equal;
};

Sides compare(const UPoly& lhs, const UPoly& rhs)
{
    bool equal = lhs == rhs;
    return {equal ? "" : to_display_string(lhs), equal ? "" : to_display_string(rhs), equal};
}

Sides compare(const MPoly& lhs, const MPoly& rhs)
{
    bool equal = lhs == rhs;
    return {equal ? "" : lhs.to_string(), equal ? "" : rhs.to_string(), equal};
}

// Both checks must hold; failure text is taken from the first one that fails.
Sides both(const Sides& a, const Sides& b) { return a.equal ? b : a; }

void require_n(int n, int max = max_partition_n)
{
    if (n < 1)
        throw std::invalid_argument("identity needs n >= 1");
    if (n > max)
        throw budget_error("identity budget exceeded: n <= " + std::to_string(max));
}

Composition checked_composition(const std::vector<int>& r)
{
    Composition comp(r);
    if (comp.m() > max_species)
        throw budget_error("identity budget exceeded: m <= " + std::to_string(max_species));
    for (int v : comp.parts())
        if (v > max_entry)
            throw budget_error("identity budget exceeded: r_i <= " + std::to_string(max_entry));
    return comp;
}

// X^e as a UPoly.
UPoly monomial(int e, const BigRat& c = 1)
{
    std::vector<BigRat> coeffs(static_cast<std::size_t>(e) + 1, BigRat(0));
    coeffs.back() = c;
    return UPoly(std::move(coeffs));
}

// sum_i prod_k (mu_i)_{r_k} / r_k!
BigRat part_weight(const Partition& mu, const Composition& r)
{
    BigRat sum(0);
    for (int part : mu.parts()) {
        BigRat prod(1);
        for (int rk : r.parts())
            prod *= rising(BigRat(part), rk) / BigRat(factorial(rk));
        sum += prod;
    }
    return sum;
}

// sum_i F_{mu_i}(r), F_j(r) = prod_k j binom(j + r_k - 1, r_k - 1)
BigInt seating_weight(const Partition& mu, const Composition& r)
{
    BigInt sum(0);
    for (int part : mu.parts()) {
        BigInt prod(1);
        for (int rk : r.parts())
            prod *= binomial(part + rk - 1, rk - 1) * part;
        sum += prod;
    }
    return sum;
}

// sum_{|mu| = n} n!/z_mu X^{l-1} sum_i F_{mu_i}(r)
UPoly seating_lhs(int n, const Composition& r)
{
    UPoly acc;
    for (const auto& mu : partitions_of(n))
        acc += monomial(mu.length() - 1, make_rat(factorial(n) * seating_weight(mu, r), z_mu(mu)));
    return acc;
}

UPoly las_lhs_weighted(int n, const Composition& r, int p)
{
    UPoly acc;
    for (const auto& mu : partitions_of(n)) {
        BigRat w = part_weight(mu, r) / BigRat(z_mu(mu));
        if (p > 0)
            w *= BigRat(ferrers_choose(mu, p));
        acc += monomial(mu.length() - 1, w);
    }
    return acc;
}

BigInt prod_binom_shift(const Composition& r, int j)
{
    BigInt prod(1);
    for (int rl : r.parts())
        prod *= binomial(rl + j - 1, rl);
    return prod;
}

Sides check_las(const IdentityParams& p)
{
    require_n(p.n);
    Composition r = checked_composition(p.r);
    CoeffTable c = c_table(r, Method::genfun);
    UPoly rhs;
    for (int k = 1; k <= std::min(p.n, r.total()); ++k)
        rhs += shifted_binom_poly(p.n, k) * c.at(k);
    rhs *= make_rat(1, r.total());
    return compare(las_lhs(p.n, r), rhs);
}

Sides check_bigeq(const IdentityParams& p)
{
    require_n(p.n);
    Composition r = checked_composition(p.r);
    if (r.has_zero())
        throw std::domain_error("bigeq needs every r_l >= 1");
    CoeffTable c = c_table(r, Method::genfun);
    BigInt prod_r(1);
    for (int v : r.parts())
        prod_r *= v;
    UPoly rhs;
    for (int k = 1; k <= std::min(p.n, r.total()); ++k)
        rhs += rising_poly(p.n - k, k) * (c.at(k) * BigRat(factorial(k) * binomial(p.n, k)));
    rhs *= make_rat(prod_r, r.total());
    return compare(seating_lhs(p.n, r), rhs);
}

Sides check_vrais(const IdentityParams& p)
{
    require_n(p.n);
    Composition r = checked_composition(p.r);
    UPoly rhs;
    for (int k = 1; k <= p.n; ++k) {
        BigInt w = seating_counts(r, k, SeatingKind::S) * factorial(k - 1) * binomial(p.n, k);
        rhs += rising_poly(p.n - k, k) * BigRat(w);
    }
    return compare(seating_lhs(p.n, r), rhs);
}

Sides check_vraif(const IdentityParams& p)
{
    require_n(p.n);
    Composition r = checked_composition(p.r);
    UPoly rhs;
    for (int k = 1; k <= p.n; ++k) {
        BigInt w = seating_counts(r, k, SeatingKind::F) * factorial(k - 1) * binomial(p.n, k);
        rhs += rising_poly(p.n - k) * BigRat(w);
    }
    return compare(seating_lhs(p.n, r), rhs);
}

Sides check_las0p(const IdentityParams& p)
{
    require_n(p.n);
    Composition r = checked_composition(p.r);
    UPoly rhs;
    for (int k = 1; k <= p.n; ++k)
        rhs += binom_poly(p.n - k, p.n - k - 1) * make_rat(prod_binom_shift(r, k), k);
    return compare(las_lhs(p.n, r), rhs);
}

Sides check_las0pp(const IdentityParams& p)
{
    require_n(p.n);
    if (p.p < 1 || p.p > p.n)
        throw std::invalid_argument("las0pp needs 1 <= p <= n");
    Composition r = checked_composition(p.r);
    const int n = p.n;
    const int chairs = p.p;
    UPoly rhs;
    // The outer sum runs over all k <= p: terms with k > |r| do not vanish.
    for (int k = 1; k <= chairs; ++k) {
        BigRat inner(0);
        for (int j = k; j <= n - chairs + k; ++j) {
            // (p-k)_N / N! with N = n-p-j+k; equals binom(n-j-1, p-k-1)
            // whenever p > k, and [N == 0] when p == k.
            const int len = n - chairs - j + k;
            BigRat reintroduce = rising(BigRat(chairs - k), len) / BigRat(factorial(len));
            inner += reintroduce * BigRat(binomial(j - 1, k - 1) * prod_binom_shift(r, j));
        }
        rhs += binom_poly(chairs - k, chairs - k - 1) * (inner / k);
    }
    return compare(las_lhs_weighted(n, r, chairs), rhs);
}

Sides check_mac(const IdentityParams& p)
{
    require_n(p.n);
    UPoly plain;
    UPoly derived;
    for (const auto& mu : partitions_of(p.n)) {
        BigRat w = make_rat(1, z_mu(mu));
        plain += monomial(mu.length(), w);
        derived += monomial(mu.length() - 1, w * mu.length());
    }
    UPoly derived_rhs;
    for (int k = 1; k <= p.n; ++k)
        derived_rhs += shifted_binom_poly(p.n, k) * make_rat(sign_power(k - 1), k);
    return both(compare(plain, binom_poly(p.n, p.n - 1)), compare(derived, derived_rhs));
}

MPoly lift(const UPoly& p, const std::vector<int>& caps, std::size_t var)
{
    MPoly out(caps);
    Exponents e(caps.size(), 0);
    for (int i = 0; i <= p.degree(); ++i) {
        e[var] = i;
        out.add_term(e, p.coeff(i));
    }
    return out;
}

Sides check_lemma1(const IdentityParams& p)
{
    require_n(p.n);
    const int n = p.n;
    const std::vector<int> caps{n, n}; // (X, y)
    MPoly lhs(caps);
    for (const auto& mu : partitions_of(n)) {
        MPoly inner(caps);
        for (int part : mu.parts())
            inner += MPoly::monomial(caps, {0, part}) - MPoly::constant(caps, 1);
        lhs += MPoly::monomial(caps, {mu.length() - 1, 0}, make_rat(1, z_mu(mu))) * inner;
    }
    MPoly y_minus_1 = MPoly::variable(caps, 1) - MPoly::constant(caps, 1);
    MPoly rhs(caps);
    for (int k = 1; k <= n; ++k)
        rhs += lift(shifted_binom_poly(n, k), caps, 0) * pow(y_minus_1, static_cast<unsigned>(k)) * make_rat(1, k);
    return compare(lhs, rhs);
}

Sides check_waring(const IdentityParams& p)
{
    const int t_degree = p.n;
    if (t_degree < 1)
        throw std::invalid_argument("waring needs a t-degree cap >= 1");
    if (t_degree > max_waring_t_degree)
        throw budget_error("identity budget exceeded: t-degree <= " + std::to_string(max_waring_t_degree));
    if (p.r.empty() || static_cast<int>(p.r.size()) > max_species)
        throw budget_error("identity budget exceeded: 1 <= m <= " + std::to_string(max_species));
    int x_degree = 0;
    for (int cap : p.r) {
        if (cap < 0)
            throw std::invalid_argument("waring caps must be nonnegative");
        if (cap > max_entry)
            throw budget_error("identity budget exceeded: caps <= " + std::to_string(max_entry));
        x_degree += cap;
    }

    const std::vector<int>& x_caps = p.r;
    std::vector<int> caps{t_degree};
    caps.insert(caps.end(), x_caps.begin(), x_caps.end());

    MPoly lhs(caps);
    for (const auto& r : compositions_up_to(static_cast<int>(x_caps.size()), max_entry)) {
        if (r.m() != static_cast<int>(x_caps.size()))
            continue;
        bool inside = true;
        for (std::size_t i = 0; i < x_caps.size(); ++i)
            inside = inside && r[i] <= x_caps[i];
        if (!inside)
            continue;
        CoeffTable c = c_table(r, Method::genfun);
        for (const auto& [k, v] : c.values) {
            Exponents e{k};
            e.insert(e.end(), r.parts().begin(), r.parts().end());
            lhs.add_term(e, v);
        }
    }

    // h_j in the x variables, lifted so that t has exponent 0.
    auto lift_x = [&](const MPoly& h) {
        MPoly out(caps);
        for (const auto& [e, v] : h.terms()) {
            Exponents full{0};
            full.insert(full.end(), e.begin(), e.end());
            out.add_term(full, v);
        }
        return out;
    };
    std::vector<MPoly> h;
    for (int j = 0; j <= x_degree; ++j)
        h.push_back(lift_x(homogeneous_h(j, x_caps)));

    MPoly rhs(caps);
    for (int size = 1; size <= x_degree; ++size) {
        for (const auto& lambda : partitions_of(size)) {
            const int l = lambda.length();
            if (l > t_degree)
                continue;
            BigInt denom(1);
            for (int i = 1; i <= lambda.largest(); ++i)
                denom *= factorial(lambda.multiplicity(i));
            MPoly term = MPoly::monomial(caps, [&] {
                Exponents e(caps.size(), 0);
                e[0] = l;
                return e;
            }(), make_rat(factorial(l - 1) * size, denom));
            for (int part : lambda.parts())
                term *= h[static_cast<std::size_t>(part)];
            rhs += term;
        }
    }
    return compare(lhs, rhs);
}

Composition linearization_composition(const IdentityParams& p)
{
    Composition r(p.r);
    if (r.m() > max_species)
        throw budget_error("identity budget exceeded: m <= " + std::to_string(max_species));
    return r;
}

Sides check_linm(const IdentityParams& p)
{
    Composition r = linearization_composition(p);
    UPoly lhs = UPoly::constant(1);
    for (int ri : r.parts())
        lhs *= falling_poly(ri);
    UPoly rhs;
    for (int k = 1; k <= r.total(); ++k)
        rhs += falling_poly(k) * BigRat(oracle::transversal_partitions(r, k));
    Sides general = compare(lhs, rhs);
    if (r.m() != 2)
        return general;
    // Classical two-factor case: d_{r1+r2-k} = binom(r1,k) binom(r2,k) k!.
    UPoly classical;
    for (int k = 0; k <= std::min(r[0], r[1]); ++k)
        classical += falling_poly(r.total() - k) * BigRat(binomial(r[0], k) * binomial(r[1], k) * factorial(k));
    return both(general, compare(lhs, classical));
}

Sides check_linbin(const IdentityParams& p)
{
    Composition r = linearization_composition(p);
    UPoly lhs = UPoly::constant(1);
    for (int ri : r.parts())
        lhs *= binom_poly(ri);
    UPoly rhs;
    for (int k = 1; k <= r.total(); ++k)
        rhs += binom_poly(k) * BigRat(oracle::covering_choices(r, k, oracle::Covering::set));
    return compare(lhs, rhs);
}

Sides check_linlas(const IdentityParams& p)
{
    Composition r = checked_composition(p.r);
    UPoly lhs = UPoly::constant(1);
    for (int ri : r.parts())
        lhs *= rising_poly(ri) * make_rat(1, factorial(ri));
    CoeffTable c = c_table(r, Method::genfun);
    UPoly rhs;
    for (const auto& [k, v] : c.values)
        rhs += binom_poly(k) * (v * make_rat(k, r.total()));
    return compare(lhs, rhs);
}

Sides check_binom2(const IdentityParams& p)
{
    if (p.r.size() != 2)
        throw std::invalid_argument("binom2 needs exactly two entries");
    Composition r(p.r);
    const int r1 = r[0];
    const int r2 = r[1];
    if (r1 > max_binom2_entry || r2 > max_binom2_entry)
        throw budget_error("identity budget exceeded: r_i <= " + std::to_string(max_binom2_entry));
    auto normalized_rising = [](int n) { return rising_poly(n) * make_rat(1, factorial(n)); };
    UPoly lhs = normalized_rising(r1) * normalized_rising(r2);
    UPoly rhs;
    for (int l = 0; l <= std::min(r1, r2); ++l) {
        const std::array<std::int64_t, 3> blocks{l, r1 - l, r2 - l};
        rhs += normalized_rising(r1 + r2 - l) * BigRat(sign_power(l) * multinomial(r1 + r2 - l, blocks));
    }
    return compare(lhs, rhs);
}

Sides check_injections(const IdentityParams& p)
{
    if (p.n < 1 || p.k < 0 || p.k > p.n)
        throw std::invalid_argument("injections needs n >= 1 and 0 <= k <= n");
    return compare(oracle::injection_cycle_poly(p.n, p.k), rising_poly(p.n - p.k, p.k));
}

} // namespace

std::string_view identity_name(IdentityId id)
{
    switch (id) {
    case IdentityId::las:
        return "las";
    case IdentityId::bigeq:
        return "bigeq";
    case IdentityId::vrais:
        return "vrais";
    case IdentityId::vraif:
        return "vraif";
    case IdentityId::las0p:
        return "las0p";
    case IdentityId::las0pp:
        return "las0pp";
    case IdentityId::mac:
        return "mac";
    case IdentityId::lemma1:
        return "lemma1";
    case IdentityId::waring:
        return "waring";
    case IdentityId::linm:
        return "linm";
    case IdentityId::linbin:
        return "linbin";
    case IdentityId::linlas:
        return "linlas";
    case IdentityId::binom2:
        return "binom2";
    case IdentityId::injections:
        return "injections";
    }
    return "unknown";
}

std::optional<IdentityId> parse_identity(std::string_view name)
{
    for (IdentityId id : all_identities)
        if (identity_name(id) == name)
            return id;
    return std::nullopt;
}

nlohmann::ordered_json params_json(IdentityId id, const IdentityParams& params)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    switch (id) {
    case IdentityId::mac:
    case IdentityId::lemma1:
        out["n"] = params.n;
        break;
    case IdentityId::injections:
        out["n"] = params.n;
        out["k"] = params.k;
        break;
    case IdentityId::las0pp:
        out["n"] = params.n;
        out["p"] = params.p;
        out["r"] = params.r;
        break;
    case IdentityId::waring:
        out["t_degree"] = params.n;
        out["caps"] = params.r;
        break;
    case IdentityId::linm:
    case IdentityId::linbin:
    case IdentityId::linlas:
    case IdentityId::binom2:
        out["r"] = params.r;
        break;
    default:
        out["n"] = params.n;
        out["r"] = params.r;
        break;
    }
    return out;
}

nlohmann::ordered_json to_json(const IdentityReport& report)
{
    nlohmann::ordered_json out;
    out["id"] = identity_name(report.id);
    out["params"] = params_json(report.id, report.params);
    out["status"] = report.verified ? "verified" : "failed";
    if (!report.verified) {
        out["lhs"] = report.lhs;
        out["rhs"] = report.rhs;
    }
    return out;
}

IdentityReport verify(IdentityId id, const IdentityParams& params)
{
    Sides sides;
    switch (id) {
    case IdentityId::las:
        sides = check_las(params);
        break;
    case IdentityId::bigeq:
        sides = check_bigeq(params);
        break;
    case IdentityId::vrais:
        sides = check_vrais(params);
        break;
    case IdentityId::vraif:
        sides = check_vraif(params);
        break;
    case IdentityId::las0p:
        sides = check_las0p(params);
        break;
    case IdentityId::las0pp:
        sides = check_las0pp(params);
        break;
    case IdentityId::mac:
        sides = check_mac(params);
        break;
    case IdentityId::lemma1:
        sides = check_lemma1(params);
        break;
    case IdentityId::waring:
        sides = check_waring(params);
        break;
    case IdentityId::linm:
        sides = check_linm(params);
        break;
    case IdentityId::linbin:
        sides = check_linbin(params);
        break;
    case IdentityId::linlas:
        sides = check_linlas(params);
        break;
    case IdentityId::binom2:
        sides = check_binom2(params);
        break;
    case IdentityId::injections:
        sides = check_injections(params);
        break;
    }
    return IdentityReport{id, params, sides.equal, sides.lhs, sides.rhs};
}

IdentityReport verify(std::string_view id, const IdentityParams& params)
{
    auto parsed = parse_identity(id);
    if (!parsed)
        throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
    return verify(*parsed, params);
}

std::vector<IdentityParams> sweep_instances(IdentityId id, const SweepRanges& ranges)
{
    std::vector<int> ns;
    if (ranges.n)
        ns.push_back(*ranges.n);
    else
        for (int n = 1; n <= ranges.n_max; ++n)
            ns.push_back(n);

    std::vector<IdentityParams> out;
    auto with_r = [&](int min_entry) {
        for (int n : ns)
            for (const auto& r : compositions_up_to(ranges.m_max, ranges.r_max, min_entry))
                out.push_back({n, 0, 0, r.parts()});
    };
    auto r_only = [&](int m_max) {
        for (const auto& r : compositions_up_to(m_max, ranges.r_max))
            out.push_back({0, 0, 0, r.parts()});
    };

    switch (id) {
    case IdentityId::las:
    case IdentityId::las0p:
        with_r(0);
        break;
    case IdentityId::bigeq:
    case IdentityId::vrais:
    case IdentityId::vraif:
        with_r(1);
        break;
    case IdentityId::las0pp:
        for (int n : ns)
            for (int p = 1; p <= n; ++p) {
                if (ranges.p && *ranges.p != p)
                    continue;
                for (const auto& r : compositions_up_to(ranges.m_max, ranges.r_max))
                    out.push_back({n, p, 0, r.parts()});
            }
        break;
    case IdentityId::mac:
    case IdentityId::lemma1:
        for (int n : ns)
            out.push_back({n, 0, 0, {}});
        break;
    case IdentityId::waring:
        // Every cap vector with entries 0..r_max, for every t-degree cap.
        for (int t : ns)
            for (const auto& caps : compositions_up_to(ranges.m_max, ranges.r_max))
                out.push_back({t, 0, 0, caps.parts()});
        break;
    case IdentityId::linm:
    case IdentityId::linbin:
    case IdentityId::linlas:
        r_only(ranges.m_max);
        break;
    case IdentityId::binom2:
        for (const auto& r : compositions_up_to(2, ranges.r_max))
            if (r.m() == 2)
                out.push_back({0, 0, 0, r.parts()});
        break;
    case IdentityId::injections:
        for (int n : ns)
            for (int k = 0; k <= n; ++k)
                out.push_back({n, 0, k, {}});
        break;
    }
    return out;
}

UPoly las_lhs(int n, const Composition& r) { return las_lhs_weighted(n, r, 0); }

CoeffTable extract_c_from_las(int n, const Composition& r)
{
    if (n < 1)
        throw std::invalid_argument("extract_c_from_las needs n >= 1");
    UPoly residual = las_lhs(n, r);
    std::map<int, BigRat> extracted;
    // Basis element k has degree n-k, so peel from k = 1 (highest degree).
    for (int k = 1; k <= n; ++k) {
        UPoly basis = shifted_binom_poly(n, k);
        BigRat a = residual.coeff(n - k) / basis.coeff(n - k);
        if (a != 0)
            residual -= basis * a;
        extracted.emplace(k, a);
    }
    if (!residual.is_zero())
        throw std::logic_error("extract_c_from_las: left side is not in the span of the basis");

    CoeffTable table{Family::c, r, {}};
    for (const auto& [k, a] : extracted) {
        if (k <= r.total())
            table.values.emplace(k, a * r.total());
        else if (a != 0)
            throw std::logic_error("extract_c_from_las: nonzero coefficient beyond |r|");
    }
    return table;
}

} // namespace gbinom
