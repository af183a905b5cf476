#include "truncdist/oracle.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace truncdist {

namespace {

std::uint64_t checked_q(const Params& p) {
    if (p.q() > BigInt(kMaxSampleQueries))
        throw std::invalid_argument("q exceeds the sampling envelope (2^32)");
    return static_cast<std::uint64_t>(p.q());
}

void check_reply_width(const Params& p) {
    if (p.reply_bits() > kMaxReplyBits)
        throw std::invalid_argument("reply width n-m exceeds 64 bits (sampling envelope)");
}

// 256-bit value for pre-truncation permutation outputs when n > 64.
// Little-endian limbs; only the ops the sampler needs.
struct Wide {
    std::array<std::uint64_t, 4> w{};

    bool operator==(const Wide& o) const { return w == o.w; }

    std::uint64_t shifted_low64(int shift) const {
        // value >> shift, caller guarantees the result fits 64 bits
        const int limb = shift / 64;
        const int off = shift % 64;
        std::uint64_t lo = w[static_cast<std::size_t>(limb)];
        std::uint64_t hi = limb + 1 < 4 ? w[static_cast<std::size_t>(limb + 1)] : 0;
        if (off == 0) return lo;
        return (lo >> off) | (hi << (64 - off));
    }
};

struct WideHash {
    std::size_t operator()(const Wide& v) const {
        std::uint64_t h = 0x243F6A8885A308D3ULL;
        for (auto limb : v.w) h = mix64(h ^ limb);
        return static_cast<std::size_t>(h);
    }
};

Wide draw_wide(RngStream& rng, int bits) {
    Wide v;
    int remaining = bits;
    for (auto& limb : v.w) {
        if (remaining <= 0) break;
        const int take = remaining >= 64 ? 64 : remaining;
        limb = rng.next_bits(take);
        remaining -= take;
    }
    return v;
}

// Distinct draws via rejection against a hash set. Load factor stays below
// 1/2 on this path, so the expected number of redraws is < 2 per value.
std::vector<std::uint64_t> distinct_by_rejection(std::uint64_t q, int n, RngStream& rng) {
    std::vector<std::uint64_t> out;
    out.reserve(q);
    std::unordered_set<std::uint64_t> used;
    used.reserve(q * 2);
    while (out.size() < q) {
        const std::uint64_t v = rng.next_bits(n);
        if (used.insert(v).second) out.push_back(v);
    }
    return out;
}

// Partial Fisher-Yates over the explicit domain; covers dense requests
// (q > 2^(n-1)) including exhaustive q = 2^n.
std::vector<std::uint64_t> distinct_by_shuffle(std::uint64_t q, int n, RngStream& rng) {
    const std::uint64_t domain = std::uint64_t(1) << n;
    std::vector<std::uint32_t> pool(domain);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::uint64_t i = 0; i < q; ++i) {
        const std::uint64_t j = i + rng.next_below(domain - i);
        std::swap(pool[i], pool[j]);
    }
    return {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(q)};
}

} // namespace

ReplySequence sample_function_replies(const Params& p, RngStream& rng) {
    check_reply_width(p);
    const std::uint64_t q = checked_q(p);
    ReplySequence replies(q);
    const int width = p.reply_bits();
    for (auto& r : replies) r = rng.next_bits(width);
    return replies;
}

std::vector<std::uint64_t> sample_permutation_raw(const Params& p, RngStream& rng) {
    if (p.n() > 64)
        throw std::invalid_argument("raw permutation values require n <= 64");
    const std::uint64_t q = checked_q(p);
    if (q == 0) return {};
    // Dense fallback keeps exhaustive small-domain sampling O(2^n);
    // rejection is O(q) expected whenever q <= 2^(n-1).
    const bool dense = p.n() <= 24 && BigInt(q) * 2 > p.domain_size();
    return dense ? distinct_by_shuffle(q, p.n(), rng)
                 : distinct_by_rejection(q, p.n(), rng);
}

ReplySequence sample_permutation_replies(const Params& p, RngStream& rng) {
    check_reply_width(p);
    const std::uint64_t q = checked_q(p);
    const int m = p.m();

    if (p.n() <= 64) {
        std::vector<std::uint64_t> values = sample_permutation_raw(p, rng);
        for (auto& v : values) v >>= m;
        return values;
    }

    // n > 64: 2^n dwarfs the sampling envelope, so rejection never stalls.
    ReplySequence replies;
    replies.reserve(q);
    std::unordered_set<Wide, WideHash> used;
    used.reserve(q * 2);
    while (replies.size() < q) {
        const Wide v = draw_wide(rng, p.n());
        if (used.insert(v).second) replies.push_back(v.shifted_low64(m));
    }
    return replies;
}

} // namespace truncdist
