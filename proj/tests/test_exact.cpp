#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "brute_force.hpp"
#include "truncdist/bounds.hpp"
#include "truncdist/exact.hpp"

using namespace truncdist;

namespace {

CountProfile make_profile(std::vector<std::uint32_t> counts, const Params& p) {
    CountProfile profile;
    profile.counts = std::move(counts);
    profile.q = 0;
    for (auto c : profile.counts) profile.q += c;
    profile.bins_log2 = p.reply_bits();
    return profile;
}

std::map<std::vector<std::uint32_t>, BigInt> multiplicity_map(const ProfileEnumeration& e) {
    std::map<std::vector<std::uint32_t>, BigInt> out;
    for (std::size_t i = 0; i < e.profiles.size(); ++i)
        out[e.profiles[i].counts] = e.multiplicities[i];
    return out;
}

} // namespace

TEST_CASE("profile enumeration on the tiny instances") {
    const auto two = multiplicity_map(enumerate_profiles(validate_params(2, 1, 2)));
    CHECK(two.at({2}) == 2);
    CHECK(two.at({1, 1}) == 2);
    CHECK(two.size() == 2);

    const auto three = multiplicity_map(enumerate_profiles(validate_params(2, 1, 3)));
    CHECK(three.at({2, 1}) == 6);
    CHECK(three.at({3}) == 2);
    CHECK(three.size() == 2);

    const auto empty = enumerate_profiles(validate_params(5, 2, 0));
    REQUIRE(empty.profiles.size() == 1);
    CHECK(empty.profiles[0].counts.empty());
    CHECK(empty.multiplicities[0] == 1);

    CHECK_THROWS_AS(enumerate_profiles(validate_params(8, 1, 31)), std::invalid_argument);
}

TEST_CASE("multiplicities sum to bin_count^q, including huge bin counts") {
    for (const auto& [n, m, q] : std::vector<std::array<int, 3>>{
             {2, 1, 2}, {3, 1, 3}, {4, 2, 4}, {8, 3, 12}, {200, 100, 5}, {256, 0, 8}}) {
        const Params p = validate_params(n, m, static_cast<std::uint64_t>(q));
        const ProfileEnumeration e = enumerate_profiles(p);
        BigInt total = 0;
        for (const auto& mult : e.multiplicities) total += mult;
        BigInt expected = 1;
        for (int i = 0; i < q; ++i) expected *= p.bin_count();
        CHECK(total == expected);
    }
}

TEST_CASE("per-sequence probabilities on the reference instances") {
    const Params p212 = validate_params(2, 1, 2);
    CHECK(seq_prob_func(make_profile({2}, p212), p212) == Rational(1, 4));
    CHECK(seq_prob_func(make_profile({1, 1}, p212), p212) == Rational(1, 4));
    CHECK(seq_prob_perm(make_profile({2}, p212), p212) == Rational(1, 6));
    CHECK(seq_prob_perm(make_profile({1, 1}, p212), p212) == Rational(1, 3));

    const Params p313 = validate_params(3, 1, 3);
    CHECK(seq_prob_func(make_profile({2, 1}, p313), p313) == Rational(1, 64));

    const Params p213 = validate_params(2, 1, 3);
    CHECK(seq_prob_perm(make_profile({3}, p213), p213) == Rational(0));

    const Params empty = validate_params(4, 2, 0);
    CHECK(seq_prob_func(make_profile({}, empty), empty) == Rational(1));
    CHECK(seq_prob_perm(make_profile({}, empty), empty) == Rational(1));
}

TEST_CASE("enumeration matches brute-force transcript counting") {
    for (const auto& [n, m, q] : std::vector<std::array<int, 3>>{
             {2, 1, 2}, {2, 1, 3}, {3, 2, 3}, {4, 1, 3}, {3, 1, 4}}) {
        const Params p = validate_params(n, m, static_cast<std::uint64_t>(q));
        const brute::Distributions brute_dist = brute::enumerate_distributions(p);

        // group brute transcripts by profile
        std::map<std::vector<std::uint32_t>, BigInt> brute_counts;
        for (const auto& t : brute_dist.transcripts)
            ++brute_counts[count_profile(t, p).counts];

        const auto enumerated = multiplicity_map(enumerate_profiles(p));
        CHECK(enumerated == brute_counts);

        // per-transcript permutation probability agrees with the product form
        for (const auto& t : brute_dist.transcripts) {
            CHECK(seq_prob_perm(count_profile(t, p), p) == brute::perm_prob(brute_dist, t));
            CHECK(seq_prob_func(count_profile(t, p), p) == brute_dist.func_each);
        }
    }
}

TEST_CASE("normalization is exact in both worlds") {
    for (int n = 1; n <= 8; n += 2) {
        for (int m = 0; m < n; m += 2) {
            const Params p = validate_params(n, m, std::min<std::uint64_t>(12, 1ull << n));
            const ProfileEnumeration e = enumerate_profiles(p);
            Rational perm_total = 0, func_total = 0;
            for (std::size_t i = 0; i < e.profiles.size(); ++i) {
                perm_total += Rational(e.multiplicities[i]) * seq_prob_perm(e.profiles[i], p);
                func_total += Rational(e.multiplicities[i]) * seq_prob_func(e.profiles[i], p);
            }
            CHECK(perm_total == Rational(1));
            CHECK(func_total == Rational(1));
        }
    }
}

TEST_CASE("total variation reference values, cross-checked by brute force") {
    CHECK(total_variation(validate_params(2, 1, 2)) == Rational(1, 6));
    CHECK(brute::total_variation(validate_params(2, 1, 2)) == Rational(1, 6));

    CHECK(total_variation(validate_params(2, 1, 3)) == Rational(1, 4));
    CHECK(brute::total_variation(validate_params(2, 1, 3)) == Rational(1, 4));

    CHECK(total_variation(validate_params(2, 1, 0)) == 0);
    CHECK(total_variation(validate_params(2, 1, 1)) == 0);
    CHECK(total_variation(validate_params(6, 3, 1)) == 0);
}

TEST_CASE("total variation is nondecreasing in q") {
    for (const auto& [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 3}}) {
        Rational prev = 0;
        for (std::uint64_t q = 0; q <= std::min<std::uint64_t>(10, 1ull << n); ++q) {
            const Rational tv = total_variation(validate_params(n, m, q));
            CHECK(tv >= prev);
            prev = tv;
        }
    }
}

TEST_CASE("KL divergence and the Pinsker chain") {
    // (1/3) ln(2/3) + (2/3) ln(4/3), summed independently here
    const double expected = std::log(2.0 / 3.0) / 3.0 + 2.0 * std::log(4.0 / 3.0) / 3.0;
    CHECK(kl_perm_func(validate_params(2, 1, 2)) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(kl_perm_func(validate_params(2, 1, 2)) == doctest::Approx(0.056633).epsilon(1e-4));

    CHECK(kl_perm_func(validate_params(4, 2, 0)) == 0.0);
    CHECK(kl_perm_func(validate_params(4, 2, 1)) == 0.0);

    // sqrt(KL/2) dominates exact TV; at (2,1,3) the right side is >= 1/4
    const double kl3 = kl_perm_func(validate_params(2, 1, 3));
    CHECK(std::sqrt(kl3 / 2.0) >= 0.25);

    for (int n = 2; n <= 6; ++n) {
        for (int m = 0; m < n; ++m) {
            for (std::uint64_t q = 2; q <= std::min<std::uint64_t>(8, 1ull << n); ++q) {
                const Params p = validate_params(n, m, q);
                const double tv = to_double(total_variation(p));
                CHECK(tv <= std::sqrt(kl_perm_func(p) / 2.0) + 1e-12);
            }
        }
    }
}

TEST_CASE("balance-test advantage: reference values and brute force") {
    CHECK(alg1_exact_advantage(validate_params(2, 1, 2)) == Rational(1, 6));
    CHECK(alg1_exact_advantage(validate_params(3, 2, 2)) == Rational(1, 14));

    // independent route: exact advantage of the decision rule over all transcripts
    for (const auto& [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 2}, {3, 2}, {3, 4}, {4, 4}}) {
        const Params p = validate_params(n, n - 1, q);
        const Rational direct = brute::advantage(
            p, [&](const ReplySequence& replies) { return balance_decide(replies, p); });
        CHECK(alg1_exact_advantage(p) == direct);
    }

    CHECK_THROWS_AS(alg1_exact_advantage(validate_params(4, 2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(alg1_exact_advantage(validate_params(4, 3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(alg1_exact_advantage(validate_params(3, 2, 6)), std::invalid_argument);
}

TEST_CASE("advantage lower bound (q/4)/2^n: true at q = 2, fails from q = 4 on") {
    // q = 2 holds for every n
    for (int n = 2; n <= 10; ++n) {
        const Params p = validate_params(n, n - 1, 2);
        CHECK(alg1_exact_advantage(p) > Rational(1, 2) / p.domain_size());
    }
    // first failure of the claimed bound: n=4, q=4 gives 29/520 < 1/16
    const Params p44 = validate_params(4, 3, 4);
    CHECK(alg1_exact_advantage(p44) == Rational(29, 520));
    CHECK(Rational(29, 520) < Rational(1, 16));
}

TEST_CASE("sharpness checks on the center-only window") {
    // q=2, n=2: C(2,1)/4 = 1/2 >= 1/(2 sqrt 2); p_1 = 4/3 > 5/4
    const Alg1SharpnessReport tiny = alg1_sharpness_checks(validate_params(2, 1, 2));
    CHECK(tiny.admissible_k == std::vector<std::uint64_t>{1});
    CHECK(tiny.binom_bound_holds);
    CHECK(tiny.ratio_bound_holds);
    CHECK(tiny.binom_anchor_holds); // equality: 2q C^2 = 16 = 2^{2q}
    CHECK_FALSE(tiny.counterexample_k.has_value());
    // the center-ratio anchor claim is numerically false: p_1 = 4/3 < 1 + 2/4
    CHECK_FALSE(tiny.ratio_anchor_holds);

    // q=4, n=4: k=2 only; C(4,2)/16 = 0.375 >= 1/4
    const Alg1SharpnessReport mid = alg1_sharpness_checks(validate_params(4, 3, 4));
    CHECK(mid.admissible_k == std::vector<std::uint64_t>{2});
    CHECK(mid.binom_bound_holds);
    CHECK(mid.ratio_bound_holds);

    // q=16, n=10: center-only window, every per-k check passes
    const Alg1SharpnessReport wide = alg1_sharpness_checks(validate_params(10, 9, 16));
    CHECK(wide.admissible_k == std::vector<std::uint64_t>{8});
    CHECK(wide.binom_bound_holds);
    CHECK(wide.ratio_bound_holds);
    CHECK(wide.binom_anchor_holds);
}

TEST_CASE("sharpness checks surface the first off-center ratio counterexample") {
    // q=18 admits k in {8, 9, 10}; the ratio bound fails off center
    const Alg1SharpnessReport r = alg1_sharpness_checks(validate_params(6, 5, 18));
    CHECK(r.admissible_k == std::vector<std::uint64_t>{8, 9, 10});
    CHECK(r.binom_bound_holds);
    CHECK_FALSE(r.ratio_bound_holds);
    REQUIRE(r.counterexample_k.has_value());
    CHECK(*r.counterexample_k == 8);
}

TEST_CASE("balance-test advantage never exceeds total variation") {
    for (const auto& [n, q] : std::vector<std::pair<int, std::uint64_t>>{
             {2, 2}, {3, 2}, {3, 4}, {4, 4}, {4, 8}, {5, 8}}) {
        const Params p = validate_params(n, n - 1, q);
        CHECK(alg1_exact_advantage(p) <= total_variation(p));
    }
}

TEST_CASE("total variation is dominated by the closed-form upper bounds") {
    for (int n = 2; n <= 6; ++n) {
        for (int m = 0; m < n; ++m) {
            for (std::uint64_t q = 0; q <= std::min<std::uint64_t>(8, 1ull << n); ++q) {
                const Params p = validate_params(n, m, q);
                const double tv = to_double(total_variation(p));
                CHECK(tv <= stam_bound(n, m, p.q()) + 1e-12);
                const double birthday_upper =
                    to_double(Rational(p.q() * (p.q() - 1)) / (p.domain_size() * 2));
                CHECK(tv <= birthday_upper + 1e-12);
            }
        }
    }
}
