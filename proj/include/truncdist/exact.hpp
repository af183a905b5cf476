#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "truncdist/params.hpp"
#include "truncdist/profile.hpp"

namespace truncdist {

/// Enumeration envelope: partitions of q stay desk-scale up to here.
constexpr std::uint64_t kMaxEnumerationQueries = 30;

/// All count profiles realizable at (n, m, q), each with the number of
/// transcripts mapping to it. Multiplicities sum to bin_count^q.
struct ProfileEnumeration {
    std::vector<CountProfile> profiles;
    std::vector<BigInt> multiplicities;
};

ProfileEnumeration enumerate_profiles(const Params& p);

/// Per-transcript probability in the function world: bin_count^-q,
/// the same for every transcript.
Rational seq_prob_func(const CountProfile& profile, const Params& p);

/// Per-transcript probability in the permutation world:
/// prod over parts c of capacity(capacity-1)...(capacity-c+1), divided by
/// 2^n (2^n - 1)...(2^n - q + 1). Zero when a part exceeds the bin capacity.
Rational seq_prob_perm(const CountProfile& profile, const Params& p);

/// Exact total variation distance between the two transcript distributions;
/// equals the maximal distinguishing advantage.
Rational total_variation(const Params& p);

/// KL(perm || func) in nats.
double kl_perm_func(const Params& p);

/// Exact advantage of the 1-bit balance test (m = n-1, q even, q <= 2^(n-1)):
/// sum over k with |2k-q| < sqrt(q)/2 of C(q,k) (P_perm({k,q-k}) - 2^-q).
Rational alg1_exact_advantage(const Params& p);

/// Per-k inequality audit for the balance test's advantage lower bound.
/// All checks are exact integer comparisons.
struct Alg1SharpnessReport {
    std::vector<std::uint64_t> admissible_k;
    bool binom_bound_holds = false;   // C(q,k) 2^-q >= 1/(2 sqrt(q)) for all admissible k
    bool ratio_bound_holds = false;   // p_k > 1 + (q/2)/2^n for all admissible k
    bool binom_anchor_holds = false;  // C(q,q/2) 2^-q >= 1/sqrt(2q)
    bool ratio_anchor_holds = false;  // p_{q/2} >= 1 + q/2^n
    std::optional<std::uint64_t> counterexample_k;

    bool all_hold() const {
        return binom_bound_holds && ratio_bound_holds && binom_anchor_holds &&
               ratio_anchor_holds;
    }
};

Alg1SharpnessReport alg1_sharpness_checks(const Params& p);

} // namespace truncdist
