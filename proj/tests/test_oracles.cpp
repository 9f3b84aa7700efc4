#include "test_support.hpp"

#include "gbinom/coefficients.hpp"
#include "gbinom/errors.hpp"
#include "gbinom/oracles.hpp"

using namespace gbinom;
using namespace gbinom::oracle;

TEST_CASE("transversal partitions")
{
    CHECK(transversal_partitions(Composition({1, 1}), 1) == 1);
    CHECK(transversal_partitions(Composition({1, 1}), 2) == 1);
    CHECK(transversal_partitions(Composition({2, 2}), 3) == 4);
    CHECK(transversal_partitions(Composition({2, 2}), 2) == 2);
    CHECK(transversal_partitions(Composition({2, 2}), 1) == 0);
    // a single species: only the partition into singletons
    CHECK(transversal_partitions(Composition({4}), 4) == 1);
    CHECK(transversal_partitions(Composition({4}), 3) == 0);
    // blocks drawn from the whole of E: Stirling numbers S(4, k) for 1^4
    CHECK(transversal_partitions(Composition({1, 1, 1, 1}), 2) == 7);
    CHECK_THROWS_AS(transversal_partitions(Composition({6, 5}), 6), budget_error);
}

TEST_CASE("covering choices")
{
    CHECK(covering_choices(Composition({3}), 2, Covering::multiset) == 2);
    CHECK(covering_choices(Composition({1, 1}), 2, Covering::set) == 2);
    CHECK(covering_choices(Composition({1, 1}), 2, Covering::multiset) == 2);
    CHECK(covering_choices(Composition({3, 1}), 2, Covering::set) == 0);
    CHECK_THROWS_AS(covering_choices(Composition({5, 4}), 2, Covering::set), budget_error);
    CHECK_THROWS_AS(covering_choices(Composition({2}), 7, Covering::multiset), budget_error);
    for (int r = 1; r <= 6; ++r)
        for (int k = 1; k <= 5; ++k)
            CHECK(covering_choices(Composition({r}), k, Covering::multiset) == binomial(r - 1, k - 1));
}

TEST_CASE("seating enumeration")
{
    Composition r11({1, 1});
    CHECK(seatings(r11, 2, SeatingQuery::F) == 4);
    CHECK(seatings(r11, 2, SeatingQuery::S) == 2);
    CHECK(seatings(r11, 2, SeatingQuery::T, 1) == 1);
    CHECK(seatings(Composition({2, 1}), 2, SeatingQuery::T, 1) == 4);
    CHECK(seatings(Composition({2, 1}), 2, SeatingQuery::T, 2) == 2);
    CHECK(seatings(Composition({2, 2}), 2, SeatingQuery::T, 1) == 7);
    CHECK(seatings(Composition({2, 2}), 3, SeatingQuery::S) == 48);
    CHECK_THROWS_AS(seatings(Composition({4}), 2, SeatingQuery::F), budget_error);
    CHECK_THROWS_AS(seatings(Composition({1}), 5, SeatingQuery::F), budget_error);
    CHECK_THROWS_AS(seatings(Composition({1, 0}), 2, SeatingQuery::F), std::domain_error);
    for (int k = 1; k <= 4; ++k)
        CHECK(seatings(Composition({1}), k, SeatingQuery::F) == k);
}

TEST_CASE("injection cycle polynomials")
{
    CHECK(injection_cycle_poly(2, 1) == UPoly({BigRat(1), BigRat(1)}));
    CHECK(injection_cycle_poly(3, 1) == UPoly({BigRat(2), BigRat(3), BigRat(1)}));
    CHECK(injection_cycle_poly(5, 2) == UPoly({BigRat(24), BigRat(26), BigRat(9), BigRat(1)}));
    for (int n = 1; n <= 5; ++n)
        CHECK(injection_cycle_poly(n, n) == UPoly::constant(1));
    // k = 0: permutations of [n] by cycle count, i.e. (X)_n
    CHECK(injection_cycle_poly(4, 0) == rising_poly(4));
    CHECK_THROWS_AS(injection_cycle_poly(8, 1), budget_error);
    CHECK_THROWS_AS(injection_cycle_poly(3, 4), std::domain_error);
}

TEST_CASE("oracles agree with the closed forms at small size")
{
    for (const auto& r : compositions_up_to(3, 3)) {
        if (r.total() > 7)
            continue;
        auto d = linearization_d(r, LinearizationVariant::d);
        for (int k = 1; k <= r.total(); ++k)
            CHECK(transversal_partitions(r, k) == d.at(k));
    }
    for (const auto& r : compositions_up_to(3, 2)) {
        if (r.total() > 6)
            continue;
        auto dt = linearization_d(r, LinearizationVariant::d_tilde);
        auto ct = linearization_d(r, LinearizationVariant::c_tilde);
        for (int k = 1; k <= std::min(5, r.total()); ++k) {
            CHECK(covering_choices(r, k, Covering::set) == dt.at(k));
            CHECK(covering_choices(r, k, Covering::multiset) == ct.at(k));
        }
    }
    for (const auto& r : compositions_up_to(2, 2, 1))
        for (int k = 1; k <= 3; ++k) {
            CHECK(seatings(r, k, SeatingQuery::F) == seating_counts(r, k, SeatingKind::F));
            CHECK(seatings(r, k, SeatingQuery::S) == seating_counts(r, k, SeatingKind::S));
            for (int j = 1; j <= r.m(); ++j)
                CHECK(BigRat(seatings(r, k, SeatingQuery::T, j)) == t_coeff(r, k, j));
        }
}
