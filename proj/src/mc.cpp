#include "truncdist/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "truncdist/exact.hpp"
#include "truncdist/oracle.hpp"

namespace truncdist {

namespace {

constexpr std::uint64_t kPermWorldTag = 0x7065726d;
constexpr std::uint64_t kFuncWorldTag = 0x66756e63;
constexpr std::uint64_t kSweepTag = 0x73776565;

struct WorldCounts {
    std::uint64_t perm_guesses_in_perm_world = 0;
    std::uint64_t perm_guesses_in_func_world = 0;
};

WorldCounts run_range(const Params& p, const Distinguisher& d, std::uint64_t seed,
                      std::uint64_t begin, std::uint64_t end) {
    WorldCounts counts;
    for (std::uint64_t i = begin; i < end; ++i) {
        RngStream perm_rng(derive_seed(seed, kPermWorldTag, i));
        if (d.decide(sample_permutation_replies(p, perm_rng)) == Guess::permutation)
            ++counts.perm_guesses_in_perm_world;

        RngStream func_rng(derive_seed(seed, kFuncWorldTag, i));
        if (d.decide(sample_function_replies(p, func_rng)) == Guess::permutation)
            ++counts.perm_guesses_in_func_world;
    }
    return counts;
}

unsigned resolve_threads(unsigned requested, std::uint64_t trials) {
    unsigned threads = requested != 0 ? requested : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    // no point spinning up threads for tiny batches
    return static_cast<unsigned>(
        std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials / 64, 1)));
}

} // namespace

AdvantageEstimate estimate_advantage(const Params& p, const DistinguisherSpec& d,
                                     std::uint64_t trials, std::uint64_t seed,
                                     unsigned threads) {
    if (trials < 100) throw std::invalid_argument("trials must be >= 100");
    const Distinguisher distinguisher(d, p); // validates preconditions up front

    const unsigned worker_count = resolve_threads(threads, trials);
    std::vector<WorldCounts> partials(worker_count);
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) {
        const std::uint64_t begin = trials * t / worker_count;
        const std::uint64_t end = trials * (t + 1) / worker_count;
        workers.emplace_back([&, t, begin, end] {
            partials[t] = run_range(p, distinguisher, seed, begin, end);
        });
    }
    for (auto& w : workers) w.join();

    WorldCounts total;
    for (const auto& part : partials) {
        total.perm_guesses_in_perm_world += part.perm_guesses_in_perm_world;
        total.perm_guesses_in_func_world += part.perm_guesses_in_func_world;
    }

    AdvantageEstimate est;
    est.trials_per_world = trials;
    est.seed = seed;
    const double t_count = static_cast<double>(trials);
    est.p_perm_guess_given_perm =
        static_cast<double>(total.perm_guesses_in_perm_world) / t_count;
    est.p_perm_guess_given_func =
        static_cast<double>(total.perm_guesses_in_func_world) / t_count;
    est.adv_hat = est.p_perm_guess_given_perm - est.p_perm_guess_given_func;

    const double variance =
        est.p_perm_guess_given_perm * (1.0 - est.p_perm_guess_given_perm) / t_count +
        est.p_perm_guess_given_func * (1.0 - est.p_perm_guess_given_func) / t_count;
    est.ci_halfwidth_95 = std::max(1.96 * std::sqrt(variance), 1.0 / t_count);
    return est;
}

std::vector<SweepRow> sweep(int n, int m, const std::vector<std::uint64_t>& q_list,
                            const DistinguisherSpec& d, std::uint64_t trials,
                            std::uint64_t seed, unsigned threads) {
    std::vector<SweepRow> rows;
    rows.reserve(q_list.size());
    for (const std::uint64_t q : q_list) {
        const Params p = validate_params(n, m, q);
        SweepRow row;
        row.q = q;
        row.estimate =
            estimate_advantage(p, d, trials, derive_seed(seed, kSweepTag, q), threads);
        row.stam = stam_bound(n, m, BigInt(q));
        row.combined = combined_bound(n, m, BigInt(q));
        rows.push_back(row);
    }
    return rows;
}

QHalfResult q_half_montecarlo(int n, int m, const DistinguisherSpec& d,
                              std::uint64_t trials, std::uint64_t seed,
                              unsigned threads) {
    validate_params(n, m, BigInt(0));

    BigInt q_max = std::min(pow2(static_cast<unsigned>(n)), BigInt(kMaxSampleQueries));
    if (d.kind == DistinguisherKind::bayes)
        q_max = std::min(q_max, BigInt(kMaxEnumerationQueries));

    const auto advantage_at = [&](const BigInt& q) {
        const Params p = validate_params(n, m, q);
        return estimate_advantage(p, d, trials, derive_seed(seed, kSweepTag, p.q_u64()),
                                  threads)
            .adv_hat;
    };

    QHalfResult result;
    if (d.kind == DistinguisherKind::balance) {
        // balance is only defined at even q: search over q = 2k
        result = q_half_search(q_max / 2,
                               [&](const BigInt& k) { return advantage_at(k * 2); });
        if (result.reached) result.q *= 2;
    } else {
        result = q_half_search(q_max, advantage_at);
    }

    if (!result.reached && q_max < pow2(static_cast<unsigned>(n)))
        throw std::invalid_argument(
            "montecarlo q-half undecided within the simulation envelope");
    return result;
}

} // namespace truncdist
