#pragma once

// Brute-force enumerators for the combinatorial interpretations. They walk
// the objects themselves and share no code with the closed forms they are
// checked against. Each one refuses (budget_error) instead of truncating when
// the instance is too large.
//
// Elements of the ground set E = [r_1] + ... + [r_m] are (species, label)
// pairs with labels 1..r_i. The eldest member of any group is the one with
// the largest label.

#include "gbinom/composition.hpp"
#include "gbinom/exactnum.hpp"
#include "gbinom/polybasis.hpp"

namespace gbinom::oracle {

inline constexpr int max_ground_set = 10;
inline constexpr int max_covering_total = 8;
inline constexpr int max_covering_k = 6;
inline constexpr int max_seating_k = 4;
inline constexpr int max_seating_r = 3;
inline constexpr int max_injection_n = 7;

// Set partitions of E into exactly k blocks, each meeting every species at
// most once. Enumerated as restricted-growth strings.
BigInt transversal_partitions(const Composition& r, int k);

enum class Covering { multiset, set };

// m-tuples (one size-r_i multiset, or subset, of [k] per species) whose union
// is all of [k].
BigInt covering_choices(const Composition& r, int k, Covering mode);

enum class SeatingQuery { F, S, T };

// Tuples of per-species seatings (delegation D, chair set A with |A| = |D|,
// doyen chair c in A) around a table of k chairs. S adds surjectivity; T
// additionally puts species j's doyen on chair k and, for every other
// species, forces its eldest into the delegation and onto the largest chair
// of its chair set. `j` (1-based) is only read for T.
BigInt seatings(const Composition& r, int k, SeatingQuery which, int j = 1);

// sum over injections f: [n-k] -> [n] of X^{cycles of f}, where a cycle is
// an orbit closed under f inside [n-k].
UPoly injection_cycle_poly(int n, int k);

} // namespace gbinom::oracle
