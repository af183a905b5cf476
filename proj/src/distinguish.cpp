#include "truncdist/distinguish.hpp"

#include <stdexcept>

#include "truncdist/exact.hpp"

namespace truncdist {

DistinguisherKind parse_distinguisher(const std::string& name) {
    if (name == "collision") return DistinguisherKind::collision;
    if (name == "balance") return DistinguisherKind::balance;
    if (name == "bayes") return DistinguisherKind::bayes;
    throw std::invalid_argument("unknown distinguisher: " + name);
}

std::string distinguisher_name(DistinguisherKind kind) {
    switch (kind) {
    case DistinguisherKind::collision: return "collision";
    case DistinguisherKind::balance: return "balance";
    case DistinguisherKind::bayes: return "bayes";
    }
    return "?";
}

double default_collision_threshold(const Params& p) {
    const BigInt q = p.q();
    const Quad pairs = Quad(q * (q - 1)) / 2;
    const Quad func_mean = pairs / Quad(p.bin_count());
    const Quad perm_mean = pairs * Quad(p.bin_capacity() - 1) / Quad(p.domain_size() - 1);
    return static_cast<double>((func_mean + perm_mean) / 2);
}

Guess collision_decide(const ReplySequence& replies, const Params& p, double threshold) {
    if (threshold < 0) throw std::invalid_argument("collision threshold must be >= 0");
    const double collisions =
        static_cast<double>(col2_u64(count_profile(replies, p)));
    return collisions >= threshold ? Guess::function : Guess::permutation;
}

Guess balance_decide(const ReplySequence& replies, const Params& p) {
    if (p.m() != p.n() - 1)
        throw std::invalid_argument("balance distinguisher requires m = n-1");
    if (replies.size() % 2 != 0)
        throw std::invalid_argument("balance distinguisher requires even q");
    std::int64_t ones = 0;
    for (auto r : replies) ones += static_cast<std::int64_t>(r & 1);
    const std::int64_t delta =
        std::abs(static_cast<std::int64_t>(replies.size()) - 2 * ones);
    // strict |delta| < sqrt(q)/2, compared exactly in integers
    return 4 * delta * delta < static_cast<std::int64_t>(replies.size())
               ? Guess::permutation
               : Guess::function;
}

Guess bayes_decide(const ReplySequence& replies, const Params& p) {
    const CountProfile profile = count_profile(replies, p);
    return seq_prob_perm(profile, p) >= seq_prob_func(profile, p) ? Guess::permutation
                                                                  : Guess::function;
}

Distinguisher::Distinguisher(const DistinguisherSpec& spec, const Params& p)
    : spec_(spec), params_(p) {
    switch (spec.kind) {
    case DistinguisherKind::collision:
        threshold_ = spec.threshold ? *spec.threshold : default_collision_threshold(p);
        if (threshold_ < 0) throw std::invalid_argument("collision threshold must be >= 0");
        break;
    case DistinguisherKind::balance:
        if (p.m() != p.n() - 1)
            throw std::invalid_argument("balance distinguisher requires m = n-1");
        if (p.q() % 2 != 0)
            throw std::invalid_argument("balance distinguisher requires even q");
        break;
    case DistinguisherKind::bayes: {
        // per-profile verdicts; ties go to permutation so the test is
        // deterministic and its exact advantage computable
        const ProfileEnumeration enumeration = enumerate_profiles(p);
        for (const auto& profile : enumeration.profiles) {
            const Guess g = seq_prob_perm(profile, p) >= seq_prob_func(profile, p)
                                ? Guess::permutation
                                : Guess::function;
            bayes_table_.emplace(profile.counts, g);
        }
        break;
    }
    }
}

Guess Distinguisher::decide(const ReplySequence& replies) const {
    switch (spec_.kind) {
    case DistinguisherKind::collision: {
        const double collisions =
            static_cast<double>(col2_u64(count_profile(replies, params_)));
        return collisions >= threshold_ ? Guess::function : Guess::permutation;
    }
    case DistinguisherKind::balance:
        return balance_decide(replies, params_);
    case DistinguisherKind::bayes: {
        const CountProfile profile = count_profile(replies, params_);
        return bayes_table_.at(profile.counts);
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace truncdist
