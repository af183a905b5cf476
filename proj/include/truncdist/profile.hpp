#pragma once

#include <cstdint>
#include <vector>

#include "truncdist/oracle.hpp"
#include "truncdist/params.hpp"

namespace truncdist {

/// Multiset of nonempty-bin occupancies of a transcript, in partition normal
/// form (parts sorted descending). The sufficient statistic for both worlds.
struct CountProfile {
    std::vector<std::uint32_t> counts; // descending, sum = q
    std::uint64_t q = 0;
    int bins_log2 = 0; // bin count is 2^bins_log2

    BigInt bin_count() const { return pow2(static_cast<unsigned>(bins_log2)); }

    bool operator==(const CountProfile& o) const {
        return counts == o.counts && q == o.q && bins_log2 == o.bins_log2;
    }
    bool operator<(const CountProfile& o) const { return counts < o.counts; }
};

/// Bin occupancies of a transcript, empty bins omitted, sorted descending.
CountProfile count_profile(const ReplySequence& replies, const Params& p);

/// Number of j-element index subsets with identical replies:
/// sum over parts c of C(c, j). Rejects j < 2.
BigInt col_j(const CountProfile& profile, int j);
BigInt col_j(const ReplySequence& replies, const Params& p, int j);

/// col_2 as a machine word (fits for every transcript inside the sampling
/// envelope); the hot path for the collision distinguisher.
std::uint64_t col2_u64(const CountProfile& profile);

} // namespace truncdist
