#include "gbinom/oracles.hpp"

#include <functional>
#include <string>
#include <vector>

#include "gbinom/errors.hpp"

namespace gbinom::oracle {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw budget_error("oracle budget exceeded: " + what);
}

// Species index of every element of E, in the order species 1 first.
std::vector<int> ground_set_species(const Composition& r)
{
    std::vector<int> species;
    for (int i = 0; i < r.m(); ++i)
        for (int label = 1; label <= r[static_cast<std::size_t>(i)]; ++label)
            species.push_back(i);
    return species;
}

// Every size-`size` multiset of [k] as a multiplicity vector (index 0 = chair 1).
void multisets(int k, int size, std::vector<int>& current, int from, std::vector<std::vector<int>>& out)
{
    if (size == 0) {
        out.push_back(current);
        return;
    }
    for (int e = from; e < k; ++e) {
        ++current[static_cast<std::size_t>(e)];
        multisets(k, size - 1, current, e, out);
        --current[static_cast<std::size_t>(e)];
    }
}

// Every size-`size` subset of [n] as a sorted list of 1-based labels.
void subsets(int n, int size, int from, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(current.size()) == size) {
        out.push_back(current);
        return;
    }
    for (int e = from; e <= n; ++e) {
        current.push_back(e);
        subsets(n, size, e + 1, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> all_subsets(int n, int size)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    if (size >= 0 && size <= n)
        subsets(n, size, 1, current, out);
    return out;
}

struct Seating {
    std::vector<int> delegation;
    std::vector<int> chairs;
    int doyen_chair;
};

std::vector<Seating> single_species_seatings(int r, int k)
{
    std::vector<Seating> out;
    for (int a = 1; a <= r; ++a)
        for (const auto& delegation : all_subsets(r, a))
            for (const auto& chairs : all_subsets(k, a))
                for (int c : chairs)
                    out.push_back({delegation, chairs, c});
    return out;
}

} // namespace

BigInt transversal_partitions(const Composition& r, int k)
{
    const std::vector<int> species = ground_set_species(r);
    const int size = static_cast<int>(species.size());
    require(size <= max_ground_set, "transversal partitions need |E| <= " + std::to_string(max_ground_set));
    if (k < 1)
        return 0;

    BigInt count(0);
    std::vector<int> block_of(static_cast<std::size_t>(size), 0);
    // Restricted-growth string: block_of[i] <= 1 + max(block_of[0..i-1]).
    std::function<void(int, int)> assign = [&](int i, int blocks) {
        if (i == size) {
            if (blocks != k)
                return;
            for (int b = 0; b < blocks; ++b) {
                std::vector<int> seen(static_cast<std::size_t>(r.m()), 0);
                for (int e = 0; e < size; ++e)
                    if (block_of[static_cast<std::size_t>(e)] == b &&
                        ++seen[static_cast<std::size_t>(species[static_cast<std::size_t>(e)])] > 1)
                        return;
            }
            ++count;
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block_of[static_cast<std::size_t>(i)] = b;
            assign(i + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    assign(0, 0);
    return count;
}

BigInt covering_choices(const Composition& r, int k, Covering mode)
{
    require(r.total() <= max_covering_total, "covering choices need |r| <= " + std::to_string(max_covering_total));
    require(k <= max_covering_k, "covering choices need k <= " + std::to_string(max_covering_k));
    if (k < 1)
        return 0;

    // Per species, the list of choices as chair-usage vectors.
    std::vector<std::vector<std::vector<int>>> choices;
    for (int ri : r.parts()) {
        std::vector<std::vector<int>> options;
        if (mode == Covering::multiset) {
            std::vector<int> current(static_cast<std::size_t>(k), 0);
            multisets(k, ri, current, 0, options);
        } else {
            for (const auto& subset : all_subsets(k, ri)) {
                std::vector<int> usage(static_cast<std::size_t>(k), 0);
                for (int e : subset)
                    usage[static_cast<std::size_t>(e - 1)] = 1;
                options.push_back(usage);
            }
        }
        if (options.empty())
            return 0; // a subset larger than [k]
        choices.push_back(std::move(options));
    }

    BigInt count(0);
    std::vector<int> hits(static_cast<std::size_t>(k), 0);
    std::function<void(std::size_t)> pick = [&](std::size_t species) {
        if (species == choices.size()) {
            for (int h : hits)
                if (h == 0)
                    return;
            ++count;
            return;
        }
        for (const auto& usage : choices[species]) {
            for (int e = 0; e < k; ++e)
                hits[static_cast<std::size_t>(e)] += usage[static_cast<std::size_t>(e)];
            pick(species + 1);
            for (int e = 0; e < k; ++e)
                hits[static_cast<std::size_t>(e)] -= usage[static_cast<std::size_t>(e)];
        }
    };
    pick(0);
    return count;
}

BigInt seatings(const Composition& r, int k, SeatingQuery which, int j)
{
    require(k <= max_seating_k, "seatings need k <= " + std::to_string(max_seating_k));
    for (int rl : r.parts()) {
        require(rl <= max_seating_r, "seatings need r_l <= " + std::to_string(max_seating_r));
        if (rl < 1)
            throw std::domain_error("a species without representatives cannot be seated");
    }
    if (which == SeatingQuery::T && (j < 1 || j > r.m()))
        throw std::domain_error("seatings: species index out of range");
    if (k < 1)
        return 0;

    std::vector<std::vector<Seating>> per_species;
    for (int rl : r.parts())
        per_species.push_back(single_species_seatings(rl, k));

    BigInt count(0);
    std::vector<const Seating*> chosen(per_species.size(), nullptr);
    std::function<void(std::size_t)> pick = [&](std::size_t l) {
        if (l == per_species.size()) {
            if (which != SeatingQuery::F) {
                std::vector<bool> occupied(static_cast<std::size_t>(k) + 1, false);
                for (const Seating* s : chosen)
                    for (int c : s->chairs)
                        occupied[static_cast<std::size_t>(c)] = true;
                for (int c = 1; c <= k; ++c)
                    if (!occupied[static_cast<std::size_t>(c)])
                        return;
            }
            if (which == SeatingQuery::T) {
                for (std::size_t s = 0; s < chosen.size(); ++s) {
                    const Seating& seat = *chosen[s];
                    if (static_cast<int>(s) + 1 == j) {
                        if (seat.doyen_chair != k)
                            return;
                        continue;
                    }
                    const int eldest = r[s];
                    if (seat.delegation.back() != eldest || seat.doyen_chair != seat.chairs.back())
                        return;
                }
            }
            ++count;
            return;
        }
        for (const auto& s : per_species[l]) {
            chosen[l] = &s;
            pick(l + 1);
        }
    };
    pick(0);
    return count;
}

UPoly injection_cycle_poly(int n, int k)
{
    require(n <= max_injection_n, "injection cycles need n <= " + std::to_string(max_injection_n));
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("injection_cycle_poly needs 0 <= k <= n");
    const int domain = n - k;

    std::vector<BigRat> by_cycles(static_cast<std::size_t>(domain) + 1, BigRat(0));
    std::vector<int> f(static_cast<std::size_t>(domain), 0);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

    auto count_cycles = [&]() {
        int cycles = 0;
        for (int start = 1; start <= domain; ++start) {
            // start lies on a cycle iff iterating f returns to it; count each
            // cycle once, at its smallest element.
            int x = start;
            bool smallest = true;
            for (int steps = 0; steps < domain; ++steps) {
                x = f[static_cast<std::size_t>(x - 1)];
                if (x > domain)
                    break;
                if (x == start) {
                    if (smallest)
                        ++cycles;
                    break;
                }
                if (x < start)
                    smallest = false;
            }
        }
        return cycles;
    };

    std::function<void(int)> assign = [&](int i) {
        if (i > domain) {
            by_cycles[static_cast<std::size_t>(count_cycles())] += 1;
            return;
        }
        for (int target = 1; target <= n; ++target) {
            if (used[static_cast<std::size_t>(target)])
                continue;
            used[static_cast<std::size_t>(target)] = true;
            f[static_cast<std::size_t>(i - 1)] = target;
            assign(i + 1);
            used[static_cast<std::size_t>(target)] = false;
        }
    };
    assign(1);
    return UPoly(std::move(by_cycles));
}

} // namespace gbinom::oracle
