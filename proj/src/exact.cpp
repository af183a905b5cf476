#include "truncdist/exact.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace truncdist {

namespace {

std::uint64_t enumeration_q(const Params& p) {
    if (p.q() > BigInt(kMaxEnumerationQueries))
        throw std::invalid_argument("q exceeds the enumeration envelope (30)");
    return static_cast<std::uint64_t>(p.q());
}

void emit_partitions(std::uint64_t remaining, std::uint32_t max_part, std::uint64_t max_parts,
                     std::vector<std::uint32_t>& current,
                     const std::function<void(const std::vector<std::uint32_t>&)>& sink) {
    if (remaining == 0) {
        sink(current);
        return;
    }
    if (max_parts == 0) return;
    std::uint32_t first = static_cast<std::uint32_t>(std::min<std::uint64_t>(remaining, max_part));
    for (std::uint32_t part = first; part >= 1; --part) {
        current.push_back(part);
        emit_partitions(remaining - part, part, max_parts - 1, current, sink);
        current.pop_back();
    }
}

BigInt factorial(std::uint64_t v) {
    BigInt out = 1;
    for (std::uint64_t i = 2; i <= v; ++i) out *= i;
    return out;
}

// Number of transcripts with occupancy multiset `parts`:
// (q! / prod part!) ways to place query indices into the occupied bins,
// times ff(B, #parts) / prod (repeat-size multiplicities)! labeled-bin choices.
BigInt profile_multiplicity(const std::vector<std::uint32_t>& parts, std::uint64_t q,
                            const BigInt& bins) {
    BigInt mult = factorial(q);
    for (auto part : parts) mult /= factorial(part);
    mult *= falling_factorial(bins, BigInt(parts.size()));
    std::map<std::uint32_t, std::uint64_t> repeats;
    for (auto part : parts) ++repeats[part];
    for (const auto& [size, times] : repeats) mult /= factorial(times);
    return mult;
}

struct Alg1Tables {
    std::uint64_t q = 0;
    std::vector<std::uint64_t> admissible_k; // ascending
    std::vector<BigInt> capacity_ff;         // ff(2^(n-1), j) for j = 0..q
    BigInt domain_ff;                        // ff(2^n, q)
    std::vector<BigInt> binom;               // C(q, k) for admissible k
};

// Shared setup for the balance-test advantage and its inequality audit.
Alg1Tables alg1_tables(const Params& p) {
    if (p.m() != p.n() - 1)
        throw std::invalid_argument("balance analysis requires m = n-1");
    if (p.q() % 2 != 0) throw std::invalid_argument("balance analysis requires even q");
    if (p.q() * 2 > p.domain_size())
        throw std::invalid_argument("balance analysis requires q <= 2^(n-1)");
    if (p.q() > BigInt(std::uint64_t(1) << 32))
        throw std::invalid_argument("q exceeds the balance-analysis envelope");

    Alg1Tables t;
    t.q = static_cast<std::uint64_t>(p.q());

    // acceptance region: |2k - q| < sqrt(q)/2, i.e. 4 (2k-q)^2 < q
    for (std::uint64_t k = 0; k <= t.q; ++k) {
        const std::int64_t d = 2 * static_cast<std::int64_t>(k) - static_cast<std::int64_t>(t.q);
        if (4 * d * d < static_cast<std::int64_t>(t.q)) t.admissible_k.push_back(k);
    }

    const BigInt capacity = p.bin_capacity(); // 2^(n-1)
    t.capacity_ff.resize(t.q + 1);
    t.capacity_ff[0] = 1;
    for (std::uint64_t j = 1; j <= t.q; ++j)
        t.capacity_ff[j] = t.capacity_ff[j - 1] * (capacity - BigInt(j - 1));
    t.domain_ff = falling_factorial(p.domain_size(), p.q());

    t.binom.reserve(t.admissible_k.size());
    for (auto k : t.admissible_k) t.binom.push_back(binomial(BigInt(t.q), BigInt(k)));
    return t;
}

} // namespace

ProfileEnumeration enumerate_profiles(const Params& p) {
    const std::uint64_t q = enumeration_q(p);
    const BigInt bins = p.bin_count();
    const std::uint64_t max_parts =
        bins < BigInt(q) ? static_cast<std::uint64_t>(bins) : q;

    ProfileEnumeration out;
    std::vector<std::uint32_t> current;
    emit_partitions(q, static_cast<std::uint32_t>(std::max<std::uint64_t>(q, 1)), max_parts,
                    current, [&](const std::vector<std::uint32_t>& parts) {
                        CountProfile profile;
                        profile.counts = parts; // already descending
                        profile.q = q;
                        profile.bins_log2 = p.reply_bits();
                        out.profiles.push_back(std::move(profile));
                        out.multiplicities.push_back(profile_multiplicity(parts, q, bins));
                    });
    return out;
}

Rational seq_prob_func(const CountProfile& profile, const Params& p) {
    BigInt denom = 1;
    const BigInt bins = p.bin_count();
    for (std::uint64_t i = 0; i < profile.q; ++i) denom *= bins;
    return Rational(1, denom);
}

Rational seq_prob_perm(const CountProfile& profile, const Params& p) {
    const BigInt capacity = p.bin_capacity();
    BigInt numer = 1;
    for (auto part : profile.counts) {
        if (BigInt(part) > capacity) return Rational(0);
        numer *= falling_factorial(capacity, BigInt(part));
    }
    const BigInt denom = falling_factorial(p.domain_size(), BigInt(profile.q));
    return Rational(numer, denom);
}

Rational total_variation(const Params& p) {
    const ProfileEnumeration enumeration = enumerate_profiles(p);
    Rational sum = 0;
    for (std::size_t i = 0; i < enumeration.profiles.size(); ++i) {
        const Rational diff = seq_prob_perm(enumeration.profiles[i], p) -
                              seq_prob_func(enumeration.profiles[i], p);
        sum += Rational(enumeration.multiplicities[i]) * abs(diff);
    }
    return sum / 2;
}

double kl_perm_func(const Params& p) {
    const ProfileEnumeration enumeration = enumerate_profiles(p);
    Quad total = 0;
    for (std::size_t i = 0; i < enumeration.profiles.size(); ++i) {
        const Rational pp = seq_prob_perm(enumeration.profiles[i], p);
        if (pp == 0) continue;
        const Rational pf = seq_prob_func(enumeration.profiles[i], p);
        const Rational mass = Rational(enumeration.multiplicities[i]) * pp;
        total += to_quad(mass) * log(to_quad(pp / pf));
    }
    return static_cast<double>(total);
}

Rational alg1_exact_advantage(const Params& p) {
    const Alg1Tables t = alg1_tables(p);
    if (t.q == 0) return Rational(0);

    // common denominator 2^q ff(2^n, q): accumulate the integer numerator
    const BigInt two_pow_q = BigInt(1) << static_cast<unsigned>(t.q);
    BigInt numer = 0;
    for (std::size_t i = 0; i < t.admissible_k.size(); ++i) {
        const std::uint64_t k = t.admissible_k[i];
        const BigInt perm_numer = two_pow_q * t.capacity_ff[k] * t.capacity_ff[t.q - k];
        numer += t.binom[i] * (perm_numer - t.domain_ff);
    }
    return Rational(numer, two_pow_q * t.domain_ff);
}

Alg1SharpnessReport alg1_sharpness_checks(const Params& p) {
    const Alg1Tables t = alg1_tables(p);
    Alg1SharpnessReport report;
    report.admissible_k = t.admissible_k;
    if (t.q == 0) {
        // no admissible k: vacuously true
        report.binom_bound_holds = report.ratio_bound_holds = true;
        report.binom_anchor_holds = report.ratio_anchor_holds = true;
        return report;
    }

    const BigInt two_pow_2q = BigInt(1) << static_cast<unsigned>(2 * t.q);
    const BigInt domain = p.domain_size();
    const BigInt half_q(t.q / 2);

    report.binom_bound_holds = true;
    report.ratio_bound_holds = true;
    for (std::size_t i = 0; i < t.admissible_k.size(); ++i) {
        const std::uint64_t k = t.admissible_k[i];
        // C(q,k) 2^-q >= 1/(2 sqrt q)  <=>  4 q C(q,k)^2 >= 2^(2q)
        const bool binom_ok = 4 * BigInt(t.q) * t.binom[i] * t.binom[i] >= two_pow_2q;
        // p_k > 1 + (q/2)/2^n  <=>  2^(q+n) ff_k ff_{q-k} > ff(2^n,q) (2^n + q/2)
        const BigInt lhs = (BigInt(1) << static_cast<unsigned>(t.q)) * domain *
                           t.capacity_ff[k] * t.capacity_ff[t.q - k];
        const bool ratio_ok = lhs > t.domain_ff * (domain + half_q);
        if (!binom_ok) report.binom_bound_holds = false;
        if (!ratio_ok) report.ratio_bound_holds = false;
        if ((!binom_ok || !ratio_ok) && !report.counterexample_k)
            report.counterexample_k = k;
    }

    // anchors at k = q/2
    const BigInt center_binom = binomial(BigInt(t.q), half_q);
    report.binom_anchor_holds = 2 * BigInt(t.q) * center_binom * center_binom >= two_pow_2q;
    const std::uint64_t half = t.q / 2;
    const BigInt anchor_lhs = (BigInt(1) << static_cast<unsigned>(t.q)) * domain *
                              t.capacity_ff[half] * t.capacity_ff[half];
    report.ratio_anchor_holds = anchor_lhs >= t.domain_ff * (domain + BigInt(t.q));
    return report;
}

} // namespace truncdist
