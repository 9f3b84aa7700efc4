#include <functional>
#include <set>

#include "test_support.hpp"

#include "gbinom/partitions.hpp"

using namespace gbinom;

namespace {

// Independent count: partitions of n with parts <= k.
long count_partitions(int n, int k)
{
    if (n == 0)
        return 1;
    if (k == 0)
        return 0;
    return count_partitions(n, k - 1) + (n >= k ? count_partitions(n - k, k) : 0);
}

// Brute force over cell subsets of the Ferrers diagram.
long ferrers_brute(const Partition& mu, int p)
{
    std::vector<int> row_of;
    for (int row = 0; row < mu.length(); ++row)
        for (int c = 0; c < mu[static_cast<std::size_t>(row)]; ++c)
            row_of.push_back(row);
    const int cells = static_cast<int>(row_of.size());
    long count = 0;
    for (unsigned mask = 0; mask < (1u << cells); ++mask) {
        if (__builtin_popcount(mask) != p)
            continue;
        std::set<int> rows;
        for (int c = 0; c < cells; ++c)
            if (mask & (1u << c))
                rows.insert(row_of[static_cast<std::size_t>(c)]);
        if (static_cast<int>(rows.size()) == mu.length())
            ++count;
    }
    return count;
}

} // namespace

TEST_CASE("enumeration order and counts")
{
    auto four = partitions_of(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0].parts() == std::vector<int>{4});
    CHECK(four[1].parts() == std::vector<int>{3, 1});
    CHECK(four[2].parts() == std::vector<int>{2, 2});
    CHECK(four[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(four[4].parts() == std::vector<int>{1, 1, 1, 1});

    auto zero = partitions_of(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    CHECK(count_partitions(8, 8) == 22);
    for (int n = 0; n <= 16; ++n) {
        auto all = partitions_of(n);
        CHECK(static_cast<long>(all.size()) == count_partitions(n, n));
        std::set<std::vector<int>> distinct;
        for (const auto& mu : all) {
            distinct.insert(mu.parts());
            CHECK(mu.size() == n);
        }
        CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("partition invariants")
{
    for (const auto& mu : partitions_of(10)) {
        int count = 0;
        int weighted = 0;
        for (int i = 1; i <= mu.largest(); ++i) {
            count += mu.multiplicity(i);
            weighted += i * mu.multiplicity(i);
        }
        CHECK(count == mu.length());
        CHECK(weighted == mu.size());
    }
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("z_mu")
{
    CHECK(z_mu(Partition({2, 1, 1})) == 4);
    for (int n = 1; n <= 8; ++n) {
        CHECK(z_mu(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == factorial(n));
        CHECK(z_mu(Partition({n})) == n);
    }
    // sum 1/z_mu over |mu| = n is 1 (class equation of S_n)
    for (int n = 0; n <= 10; ++n) {
        BigRat sum(0);
        for (const auto& mu : partitions_of(n))
            sum += make_rat(1, z_mu(mu));
        CHECK(sum == 1);
    }
}

TEST_CASE("Ferrers choices")
{
    CHECK(ferrers_choose(Partition({2, 1}), 2) == 2);
    CHECK(ferrers_choose(Partition({2, 1}), 3) == 1);
    CHECK(ferrers_choose(Partition({3, 2, 1}), 3) == 6);
    CHECK(ferrers_choose(Partition({3, 2, 1}), 4) == 9);
    CHECK(ferrers_choose(Partition({2, 2}), 3) == 4);
    CHECK(ferrers_choose(Partition{}, 0) == 1);
    CHECK(ferrers_choose(Partition({1}), 0) == 0);
    for (int n = 1; n <= 6; ++n)
        for (int p = 1; p <= n; ++p)
            CHECK(ferrers_choose(Partition({n}), p) == binomial(n, p));

    for (int n = 1; n <= 7; ++n) {
        for (const auto& mu : partitions_of(n)) {
            BigInt total(0);
            for (int p = 0; p <= n + 1; ++p) {
                BigInt v = ferrers_choose(mu, p);
                CHECK(v == ferrers_brute(mu, p));
                if (p < mu.length() || p > mu.size())
                    CHECK(v == 0);
                total += v;
            }
            BigInt expected(1);
            for (int part : mu.parts())
                expected *= (BigInt(1) << part) - 1;
            CHECK(total == expected);
        }
    }
}

TEST_CASE("partition text form")
{
    CHECK(to_string(Partition({3, 1, 1})) == "3,1,1");
    CHECK(parse_partition("3,1,1") == Partition({3, 1, 1}));
    CHECK(parse_partition("").empty());
    CHECK_THROWS_AS(parse_partition("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
}
