#pragma once

#include <cstdint>
#include <vector>

#include "truncdist/params.hpp"
#include "truncdist/rng.hpp"

namespace truncdist {

/// One oracle transcript: q truncated replies, each in [0, 2^(n-m)).
using ReplySequence = std::vector<std::uint64_t>;

/// Sampling works on machine words: replies must fit 64 bits and the
/// transcript must fit memory. Bounds/exact modules have no such limit.
constexpr int kMaxReplyBits = 64;
constexpr std::uint64_t kMaxSampleQueries = std::uint64_t(1) << 32;

/// Transcript of a uniform random function at q distinct queries:
/// q independent uniform (n-m)-bit values.
ReplySequence sample_function_replies(const Params& p, RngStream& rng);

/// Transcript of a uniform random permutation at q distinct queries:
/// q distinct n-bit values, each truncated to its high n-m bits.
ReplySequence sample_permutation_replies(const Params& p, RngStream& rng);

/// Pre-truncation permutation outputs (q distinct n-bit values).
/// Only available for n <= 64; used directly by the samplers and by tests
/// checking the no-repeat invariant.
std::vector<std::uint64_t> sample_permutation_raw(const Params& p, RngStream& rng);

} // namespace truncdist
