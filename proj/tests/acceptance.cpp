// Acceptance suite: one PASS/FAIL line per criterion, each under its own
// wall-clock limit. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gbinom/coefficients.hpp"
#include "gbinom/composition.hpp"
#include "gbinom/errors.hpp"
#include "gbinom/exactnum.hpp"
#include "gbinom/hypergeometric.hpp"
#include "gbinom/identities.hpp"
#include "gbinom/oracles.hpp"
#include "gbinom/polybasis.hpp"

using namespace gbinom;

namespace {

struct Outcome {
    long checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::function<std::string()>& describe)
    {
        ++checks;
        if (!ok && failures.size() < 5)
            failures.push_back(describe());
        else if (!ok)
            failures.emplace_back();
    }
};

std::string str(const BigRat& q) { return to_compact_string(q); }

std::string str(const Composition& r) { return to_string(r); }

// Compositions with positive entries and total in [1, n_max], any length.
std::vector<Composition> positive_compositions(int n_max)
{
    std::vector<Composition> out;
    std::vector<int> parts;
    std::function<void(int)> grow = [&](int left) {
        if (!parts.empty())
            out.emplace_back(parts);
        for (int x = 1; x <= left; ++x) {
            parts.push_back(x);
            grow(left - x);
            parts.pop_back();
        }
    };
    grow(n_max);
    return out;
}

void check_identity(Outcome& o, IdentityId id, const IdentityParams& params)
{
    auto report = verify(id, params);
    o.expect(report.verified, [&] { return to_json(report).dump(); });
}

void cross_method(Outcome& o)
{
    const Method methods[] = {Method::explicit_sum, Method::entiere,     Method::genfun,
                              Method::inclusion_exclusion, Method::finite_diff, Method::recurrence};
    for (const auto& r : compositions_up_to(3, 4)) {
        for (int k = 1; k <= r.total(); ++k) {
            BigRat reference = c_coeff(r, k, Method::genfun);
            o.expect(is_integer(reference) && reference >= 1,
                     [&] { return "c_" + std::to_string(k) + str(r) + " = " + str(reference); });
            for (Method method : methods) {
                BigRat value = c_coeff(r, k, method);
                o.expect(value == reference, [&] {
                    return std::string(method_name(method)) + " c_" + std::to_string(k) + str(r) + " = " +
                           str(value) + ", genfun = " + str(reference);
                });
            }
        }
    }
}

void single_species(Outcome& o)
{
    for (int r1 = 1; r1 <= 12; ++r1)
        for (int k = 1; k <= r1; ++k)
            for (Method method : all_methods) {
                if (method == Method::hyp3f2)
                    continue;
                BigRat value = c_coeff(Composition({r1}), k, method);
                o.expect(value == binomial(r1, k), [&] {
                    return std::string(method_name(method)) + " c_" + std::to_string(k) + "(" +
                           std::to_string(r1) + ") = " + str(value);
                });
            }
}

void two_species(Outcome& o)
{
    const TwoSpeciesForm forms[] = {TwoSpeciesForm::lassalle, TwoSpeciesForm::whipple_twice,
                                    TwoSpeciesForm::whipple_thrice, TwoSpeciesForm::alternating_sum};
    for (int r1 = 0; r1 <= 6; ++r1)
        for (int r2 = 0; r2 <= 6; ++r2) {
            if (r1 + r2 == 0)
                continue;
            Composition r({r1, r2});
            for (int k = 1; k <= r1 + r2; ++k) {
                BigRat reference = c_coeff(r, k, Method::genfun);
                for (int f = 0; f < 4; ++f) {
                    BigRat value = c_coeff_two_species(r1, r2, k, forms[f]);
                    o.expect(value == reference, [&] {
                        return "form " + std::to_string(f) + " c_" + std::to_string(k) + str(r) + " = " +
                               str(value);
                    });
                }
                o.expect(c_coeff(r, k, Method::hyp3f2) == reference,
                         [&] { return "hyp3f2 c_" + std::to_string(k) + str(r); });
            }
        }
}

void partition_sum(Outcome& o)
{
    for (const auto& r : compositions_up_to(3, 3)) {
        for (int n = 1; n <= 8; ++n)
            check_identity(o, IdentityId::las, {n, 0, 0, r.parts()});
        auto reference = c_table(r);
        for (int n = r.total(); n <= r.total() + 2; ++n) {
            auto table = extract_c_from_las(n, r);
            o.expect(table.values == reference.values, [&] {
                return "extraction at n = " + std::to_string(n) + " for " + str(r) + ": " +
                       values_json(table).dump();
            });
        }
    }
}

void identity_family(Outcome& o)
{
    for (const auto& r : compositions_up_to(3, 3))
        for (int n = 1; n <= 8; ++n)
            check_identity(o, IdentityId::las0p, {n, 0, 0, r.parts()});
    for (const auto& r : compositions_up_to(2, 3))
        for (int n = 1; n <= 6; ++n)
            for (int p = 1; p <= n; ++p)
                check_identity(o, IdentityId::las0pp, {n, p, 0, r.parts()});
    for (const auto& r : compositions_up_to(2, 3, 1))
        for (int n = 1; n <= 6; ++n) {
            check_identity(o, IdentityId::bigeq, {n, 0, 0, r.parts()});
            check_identity(o, IdentityId::vrais, {n, 0, 0, r.parts()});
        }
    for (int n = 1; n <= 8; ++n)
        check_identity(o, IdentityId::lemma1, {n, 0, 0, {}});
    for (int n = 1; n <= 12; ++n)
        check_identity(o, IdentityId::mac, {n, 0, 0, {}});
    for (const auto& caps : compositions_up_to(2, 3))
        for (int t = 1; t <= 4; ++t)
            check_identity(o, IdentityId::waring, {t, 0, 0, caps.parts()});
}

void oracle_equivalence(Outcome& o)
{
    for (const auto& r : positive_compositions(7)) {
        auto d = linearization_d(r, LinearizationVariant::d);
        for (int k = 1; k <= r.total(); ++k) {
            BigInt count = oracle::transversal_partitions(r, k);
            o.expect(BigRat(count) == d.at(k),
                     [&] { return "d_" + std::to_string(k) + str(r) + " vs " + to_string(count); });
        }
    }
    for (const auto& r : positive_compositions(6)) {
        auto ct = linearization_d(r, LinearizationVariant::c_tilde);
        auto dt = linearization_d(r, LinearizationVariant::d_tilde);
        for (int k = 1; k <= std::min(5, r.total()); ++k) {
            BigInt multi = oracle::covering_choices(r, k, oracle::Covering::multiset);
            BigInt sets = oracle::covering_choices(r, k, oracle::Covering::set);
            o.expect(BigRat(multi) == ct.at(k), [&] { return "c~_" + std::to_string(k) + str(r); });
            o.expect(BigRat(sets) == dt.at(k), [&] { return "d~_" + std::to_string(k) + str(r); });
        }
    }
    for (const auto& r : compositions_up_to(3, 2, 1))
        for (int k = 1; k <= 3; ++k) {
            BigInt f = oracle::seatings(r, k, oracle::SeatingQuery::F);
            BigInt s = oracle::seatings(r, k, oracle::SeatingQuery::S);
            o.expect(f == seating_counts(r, k, SeatingKind::F), [&] { return "F_" + std::to_string(k) + str(r); });
            o.expect(s == seating_counts(r, k, SeatingKind::S), [&] { return "S_" + std::to_string(k) + str(r); });
            BigRat sum = 0;
            for (int j = 1; j <= r.m(); ++j) {
                BigInt t = oracle::seatings(r, k, oracle::SeatingQuery::T, j);
                BigRat closed = t_coeff(r, k, j);
                o.expect(BigRat(t) == closed,
                         [&] { return "T_" + std::to_string(k) + str(r) + " j = " + std::to_string(j); });
                sum += closed;
            }
            o.expect(sum == c_coeff(r, k), [&] { return "sum_j T_" + std::to_string(k) + str(r); });
        }
}

void injections(Outcome& o)
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            check_identity(o, IdentityId::injections, {n, 0, k, {}});
}

BigRat small_positive(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> den(1, 4);
    return make_rat(num(rng), den(rng));
}

void whipple(Outcome& o)
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> size(0, 6);
    int accepted = 0;
    int attempts = 0;
    while (accepted < 250 && attempts < 5000) {
        ++attempts;
        const int n = size(rng);
        const BigRat a = small_positive(rng), b = small_positive(rng);
        const BigRat c = small_positive(rng), d = small_positive(rng);
        const BigRat minus_n(-n);
        const BigRat one(1);
        BigRat lhs, rhs;
        try {
            std::vector<BigRat> num{minus_n, a, b}, den{c, d};
            lhs = hypergeom_terminating(num, den, one);
            std::vector<BigRat> num2{minus_n, a, d - b}, den2{d, a + 1 - n - c};
            rhs = rising(c - a, n) / rising(c, n) * hypergeom_terminating(num2, den2, one);
        } catch (const pole_error&) {
            continue;
        }
        ++accepted;
        o.expect(lhs == rhs, [&] {
            return "n = " + std::to_string(n) + " a = " + str(a) + " b = " + str(b) + " c = " + str(c) +
                   " d = " + str(d);
        });

        std::vector<BigRat> num{minus_n, a, d}, den{c, d};
        std::vector<BigRat> num1{minus_n, a}, den1{c};
        const BigRat closed = rising(c - a, n) / rising(c, n);
        o.expect(hypergeom_terminating(num, den, one) == closed, [&] { return "b = d reduction"; });
        o.expect(hypergeom_terminating(num1, den1, one) == closed, [&] { return "Chu-Vandermonde"; });
    }
    o.expect(accepted >= 200, [&] { return "only " + std::to_string(accepted) + " pole-free parameter sets"; });
}

void basis_round_trip(Outcome& o)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> degree(0, 10);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<BigRat> coeffs(degree(rng) + 1);
        for (auto& q : coeffs)
            q = make_rat(num(rng), den(rng));
        UPoly p(coeffs);
        UPoly back = from_falling_basis(to_falling_basis(p));
        o.expect(back == p, [&] { return to_display_string(p); });
    }
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    void (*run)(Outcome&);
};

} // namespace

int main()
{
    const Criterion criteria[] = {
        {1, "cross-method agreement and positive integrality, m <= 3, r_i <= 4", 10, cross_method},
        {2, "single species reduces to binomial(r1, k), r1 <= 12", 1, single_species},
        {3, "two-species hypergeometric forms agree with genfun, r1, r2 <= 6", 5, two_species},
        {4, "partition-sum identity n <= 8, and n-independent extraction", 60, partition_sum},
        {5, "partition-sum, seating, Ferrers, bivariate, Macdonald and Waring identities", 120, identity_family},
        {6, "closed forms match brute-force enumeration", 60, oracle_equivalence},
        {7, "injection cycle polynomial, n <= 6", 10, injections},
        {8, "Whipple transformation and Chu-Vandermonde reduction", 5, whipple},
        {9, "falling-basis round trip on 500 random polynomials", 5, basis_round_trip},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Outcome outcome;
        std::string error;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(outcome);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && outcome.failures.empty() && seconds < criterion.limit_seconds;
        if (!ok)
            ++failed;
        std::printf("%s  %d  %s  (%ld checks, %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.title, outcome.checks, seconds, criterion.limit_seconds);
        if (!error.empty())
            std::printf("      exception: %s\n", error.c_str());
        for (const auto& f : outcome.failures)
            if (!f.empty())
                std::printf("      %s\n", f.c_str());
        if (outcome.failures.size() > 5)
            std::printf("      ... %zu failures in total\n", outcome.failures.size());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
