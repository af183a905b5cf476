#pragma once

#include <cstdint>
#include <vector>

#include "truncdist/bounds.hpp"
#include "truncdist/distinguish.hpp"
#include "truncdist/params.hpp"

namespace truncdist {

/// Monte Carlo advantage estimate. adv_hat is the difference between the
/// permutation-guess rates in the two worlds; the confidence half-width is
/// the 95% normal approximation for a difference of proportions, floored
/// at 1/trials.
struct AdvantageEstimate {
    std::uint64_t trials_per_world = 0;
    double p_perm_guess_given_perm = 0.0;
    double p_perm_guess_given_func = 0.0;
    double adv_hat = 0.0;
    double ci_halfwidth_95 = 0.0;
    std::uint64_t seed = 0;

    bool operator==(const AdvantageEstimate&) const = default;
};

/// Runs `trials` independent transcripts per world. Per-trial sub-seeds are
/// derived from (seed, world, trial index) and counting is commutative, so
/// the result is bit-identical for any thread count. threads = 0 picks the
/// hardware concurrency.
AdvantageEstimate estimate_advantage(const Params& p, const DistinguisherSpec& d,
                                     std::uint64_t trials, std::uint64_t seed,
                                     unsigned threads = 0);

/// One advantage-vs-q curve point, with the matching closed-form bounds.
struct SweepRow {
    std::uint64_t q = 0;
    AdvantageEstimate estimate;
    double stam = 0.0;
    double combined = 0.0;
};

/// One estimate per q, each with an independently derived sub-seed
/// (the sub-seed depends on q, not on the position in the list).
std::vector<SweepRow> sweep(int n, int m, const std::vector<std::uint64_t>& q_list,
                            const DistinguisherSpec& d, std::uint64_t trials,
                            std::uint64_t seed, unsigned threads = 0);

/// Smallest q whose measured advantage reaches 1/2 under the given
/// distinguisher (even q only for balance).
QHalfResult q_half_montecarlo(int n, int m, const DistinguisherSpec& d,
                              std::uint64_t trials, std::uint64_t seed,
                              unsigned threads = 0);

} // namespace truncdist
