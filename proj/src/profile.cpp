#include "truncdist/profile.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace truncdist {

namespace {

// Dense tally: one pass to count, one pass over the replies to harvest and
// reset touched bins, so wide-but-sparsely-hit bin spaces cost O(q).
std::vector<std::uint32_t> tally_dense(const ReplySequence& replies, int bins_log2) {
    thread_local std::vector<std::uint32_t> scratch;
    const std::size_t bins = std::size_t(1) << bins_log2;
    if (scratch.size() < bins) scratch.resize(bins, 0);

    for (auto r : replies) ++scratch[static_cast<std::size_t>(r)];
    std::vector<std::uint32_t> counts;
    for (auto r : replies) {
        auto& c = scratch[static_cast<std::size_t>(r)];
        if (c != 0) {
            counts.push_back(c);
            c = 0;
        }
    }
    return counts;
}

std::vector<std::uint32_t> tally_sorted(const ReplySequence& replies) {
    ReplySequence sorted = replies;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint32_t> counts;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        counts.push_back(static_cast<std::uint32_t>(j - i));
        i = j;
    }
    return counts;
}

} // namespace

CountProfile count_profile(const ReplySequence& replies, const Params& p) {
    CountProfile profile;
    profile.q = replies.size();
    profile.bins_log2 = p.reply_bits();

    const bool dense = profile.bins_log2 <= 22;
    profile.counts = dense ? tally_dense(replies, profile.bins_log2) : tally_sorted(replies);
    std::sort(profile.counts.begin(), profile.counts.end(), std::greater<>());
    return profile;
}

BigInt col_j(const CountProfile& profile, int j) {
    if (j < 2) throw std::invalid_argument("col_j requires j >= 2");
    BigInt total = 0;
    for (auto c : profile.counts) total += binomial(BigInt(c), BigInt(j));
    return total;
}

BigInt col_j(const ReplySequence& replies, const Params& p, int j) {
    return col_j(count_profile(replies, p), j);
}

std::uint64_t col2_u64(const CountProfile& profile) {
    std::uint64_t total = 0;
    for (auto c : profile.counts) {
        const std::uint64_t cc = c;
        total += cc * (cc - 1) / 2;
    }
    return total;
}

} // namespace truncdist
