#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "truncdist/params.hpp"
#include "truncdist/profile.hpp"

namespace truncdist {

enum class Guess { permutation, function };

enum class DistinguisherKind { collision, balance, bayes };

DistinguisherKind parse_distinguisher(const std::string& name);
std::string distinguisher_name(DistinguisherKind kind);

/// A guessing strategy: kind plus an optional collision threshold.
/// balance needs m = n-1 and even q; bayes needs the enumeration envelope.
struct DistinguisherSpec {
    DistinguisherKind kind = DistinguisherKind::collision;
    std::optional<double> threshold; // collision only; default = midpoint
};

/// Midpoint of the two worlds' expected collision counts:
/// (1/2) C(q,2) [2^{-(n-m)} + (2^m-1)/(2^n-1)].
double default_collision_threshold(const Params& p);

/// Guess function iff col_2 >= threshold.
Guess collision_decide(const ReplySequence& replies, const Params& p, double threshold);

/// 1-bit replies: permutation iff 4 (#zeros - #ones)^2 < q.
Guess balance_decide(const ReplySequence& replies, const Params& p);

/// Likelihood test: permutation iff P_perm(transcript) >= P_func(transcript).
Guess bayes_decide(const ReplySequence& replies, const Params& p);

/// Bound decision state once so per-transcript calls stay cheap
/// (bayes precomputes its per-profile verdicts at construction).
class Distinguisher {
public:
    Distinguisher(const DistinguisherSpec& spec, const Params& p);

    Guess decide(const ReplySequence& replies) const;
    const DistinguisherSpec& spec() const { return spec_; }
    double threshold() const { return threshold_; }

private:
    DistinguisherSpec spec_;
    Params params_;
    double threshold_ = 0.0;
    std::map<std::vector<std::uint32_t>, Guess> bayes_table_;
};

} // namespace truncdist
