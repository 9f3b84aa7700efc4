#pragma once

// Exact verification of the polynomial identities relating partition sums,
// the coefficient families and the linearization formulas. Every check is a
// coefficientwise comparison of two exactly computed polynomials.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gbinom/coefficients.hpp"
#include "gbinom/composition.hpp"
#include "gbinom/polybasis.hpp"

namespace gbinom {

enum class IdentityId {
    las,        // partition sum = (1/|r|) sum_k c_k binom(X+n-1, n-k)
    bigeq,      // n!-weighted seating sum = prod r_j/|r| sum_k c_k k! binom(n,k) (X+k)_{n-k}
    vrais,      // same left side = sum_k S_k (k-1)! binom(n,k) (X+k)_{n-k}
    vraif,      // same left side = sum_k F_k (k-1)! binom(n,k) (X)_{n-k}
    las0p,      // partition sum = sum_k (1/k) prod binom(r_l+k-1, r_l) binom(X+n-k-1, n-k)
    las0pp,     // Ferrers-weighted partition sum, graffiti on p chairs
    mac,        // sum X^l/z = binom(X+n-1, n) and its derivative form
    lemma1,     // bivariate (X, y) partition sum with y^{mu_i} - 1
    waring,     // sum c_k t^k x^r = sum_lambda t^l |lambda| (l-1)!/prod m_i! h_lambda
    linm,       // prod <x>_{r_i} = sum d_k <x>_k, d_k counted by transversal partitions
    linbin,     // prod binom(x, r_i) = sum d~_k binom(x, k), d~_k counted by covering subsets
    linlas,     // prod (x)_{r_i}/r_i! = sum c~_k binom(x, k), c~_k = k c_k / |r|
    binom2,     // two-species linearization in the rising basis
    injections, // sum over injections of X^cyc = (X+k)_{n-k}
};

inline constexpr std::array all_identities{
    IdentityId::las,    IdentityId::bigeq, IdentityId::vrais,  IdentityId::vraif,  IdentityId::las0p,
    IdentityId::las0pp, IdentityId::mac,   IdentityId::lemma1, IdentityId::waring, IdentityId::linm,
    IdentityId::linbin, IdentityId::linlas, IdentityId::binom2, IdentityId::injections};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

// Which fields are read depends on the identity: `n` is the partition size
// (the t-degree cap for waring), `p` the graffiti count for las0pp, `k` the
// codomain excess for injections, and `r` the composition (the per-variable
// caps for waring).
struct IdentityParams {
    int n = 0;
    int p = 0;
    int k = 0;
    std::vector<int> r;
};

struct IdentityReport {
    IdentityId id;
    IdentityParams params;
    bool verified = false;
    // Serialized sides, filled only on failure.
    std::string lhs;
    std::string rhs;
};

nlohmann::ordered_json params_json(IdentityId id, const IdentityParams& params);
// {"id", "params", "status"} plus "lhs"/"rhs" when the check failed.
nlohmann::ordered_json to_json(const IdentityReport& report);

// Throws budget_error when the parameters exceed the identity's enumeration
// budget and std::invalid_argument / std::domain_error on malformed ones.
IdentityReport verify(IdentityId id, const IdentityParams& params);
// As above; std::invalid_argument for an unknown identity name.
IdentityReport verify(std::string_view id, const IdentityParams& params);

struct SweepRanges {
    int n_max = 6;
    int m_max = 2;
    int r_max = 3;
    std::optional<int> n; // pin n instead of sweeping 1..n_max
    std::optional<int> p; // pin p for las0pp
};

// Parameter tuples covered by a sweep, in deterministic order.
std::vector<IdentityParams> sweep_instances(IdentityId id, const SweepRanges& ranges);

// sum_{|mu| = n} X^{l(mu)-1}/z_mu sum_i prod_k (mu_i)_{r_k}/r_k!
UPoly las_lhs(int n, const Composition& r);

// Expands las_lhs(n, r) in the basis binom(X+n-1, n-k), k = 1..n, by
// back-substitution and returns k -> |r| * coefficient for k <= min(n, |r|).
CoeffTable extract_c_from_las(int n, const Composition& r);

} // namespace gbinom
