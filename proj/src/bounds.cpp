#include "truncdist/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/expm1.hpp>
#include <boost/math/special_functions/log1p.hpp>

#include "truncdist/exact.hpp"

namespace truncdist {

namespace {

const Quad kLog2E = Quad(1) / log(Quad(2));

Quad exp2_quad(const Quad& x) { return exp(x * log(Quad(2))); }

/// log2(q) for q >= 1.
Quad log2_q(const BigInt& q) { return log2_bigint(q); }

/// r = q / 2^{(n+m)/2} in log2 form.
Quad log2_ratio(int n, int m, const BigInt& q) {
    return log2_q(q) - Quad(n + m) / 2;
}

// Sum of log2(1 - k/2^n) for k = 1..t, exact power-sum series. Valid when
// t/2^n <= 2^-6; ~20 terms reach full quad precision.
Quad log2_product_series(int n, const BigInt& t) {
    std::vector<BigInt> power_sums; // S_j(t) = sum_{k=0..t} k^j
    power_sums.push_back(t + 1);    // S_0 counts k = 0 as well
    Quad total = 0;
    BigInt t1_pow = t + 1; // (t+1)^{j+1}
    for (int j = 1; j <= 64; ++j) {
        t1_pow *= t + 1;
        // telescoped (k+1)^{j+1} - k^{j+1} over k = 0..t
        BigInt s = t1_pow;
        for (int i = 0; i < j; ++i)
            s -= binomial(BigInt(j + 1), BigInt(i)) * power_sums[static_cast<std::size_t>(i)];
        s /= j + 1;
        power_sums.push_back(s);

        const Quad term = Quad(s) * ldexp(Quad(1) / j, -n * j);
        total += term;
        if (term < ldexp(total, -120)) break;
    }
    return -total * kLog2E;
}

// Sum of log2(1 - k/2^n) for k = 1..t; t known to be small here.
Quad log2_product_direct(int n, std::uint64_t t) {
    Quad total = 0;
    for (std::uint64_t k = 1; k <= t; ++k)
        total += boost::math::log1p(-ldexp(Quad(k), -n)) * kLog2E;
    return total;
}

} // namespace

double birthday_exact(int n, const BigInt& q) {
    if (q < 0) throw std::invalid_argument("q must be >= 0");
    if (q <= 1) return 0.0;
    const BigInt domain = pow2(static_cast<unsigned>(n));
    if (q > domain) return 1.0; // a repeat is forced

    const BigInt t = q - 1;
    // |sum log2(1-k/2^n)| >= log2(e) * sum k/2^n; once that passes 120 the
    // result is 1 to beyond double precision.
    const Quad magnitude_floor = ldexp(Quad(t * (t + 1)), -(n + 1)) * kLog2E;
    if (magnitude_floor >= 120) return 1.0;

    Quad log2_prod;
    if (t > 256 && ldexp(Quad(t), -n) <= ldexp(Quad(1), -6)) {
        log2_prod = log2_product_series(n, t);
    } else {
        // here t(t+1)/2^{n+1} < 120/log2(e) and t/2^n > 2^-6 force t < 2^14
        log2_prod = log2_product_direct(n, static_cast<std::uint64_t>(t));
    }
    return static_cast<double>(one_minus_exp2(log2_prod));
}

BirthdayChain birthday_chain(int n, const BigInt& q) {
    if (q < 0 || q > pow2(static_cast<unsigned>(n)))
        throw std::invalid_argument("birthday_chain requires 0 <= q <= 2^n");
    if (q <= 1) return {0.0, 0.0, 0.0, 0.0};

    const Quad qq(q);
    const Quad pairs = Quad(q * (q - 1)); // q(q-1) exact in the integer domain
    const Quad u = ldexp(pairs, -(n + 1));

    BirthdayChain chain{};
    chain.lower1 = static_cast<double>(-boost::math::expm1(-u));

    const Quad y = ldexp(qq, -(n + 1));
    chain.lower2 = static_cast<double>(
        one_minus_exp2(Quad(q - 1) * boost::math::log1p(-y) * kLog2E));

    if (q == pow2(static_cast<unsigned>(n))) {
        chain.upper1 = 1.0; // zero base, positive exponent
    } else {
        const Quad z = ldexp(qq, -n);
        chain.upper1 = static_cast<double>(
            one_minus_exp2(Quad(q - 1) / 2 * boost::math::log1p(-z) * kLog2E));
    }

    chain.upper2 = static_cast<double>(u);
    return chain;
}

double hall_bound(int n, int m, const BigInt& q) {
    if (q == 0) return 0.0;
    const Quad lr = log2_ratio(n, m, q);
    const Quad term1 = 5 * exp2_quad(lr * 2 / 3);
    const Quad term2 = exp2_quad(3 * lr - Quad(n - 7 * m) / 2 - 1);
    return static_cast<double>(term1 + term2);
}

BiBound bi_bound(int n, int m, const BigInt& q, double c) {
    if (c <= 0) throw std::invalid_argument("bi constant must be > 0");
    BiBound out{0.0, false};
    if (q == 0) return out;
    out.value = static_cast<double>(Quad(c) * n * exp2_quad(log2_ratio(n, m, q)));
    // window 2^{n-m} < q < 2^{(n+m)/2}, the upper edge squared to stay exact
    out.applicable = q > pow2(static_cast<unsigned>(n - m)) &&
                     q * q < pow2(static_cast<unsigned>(n + m));
    return out;
}

double gg_small_m_value(int n, int m, const BigInt& q) {
    if (q == 0) return 0.0;
    const Quad lr = log2_ratio(n, m, q);
    const Quad term1 = exp2_quad(lr * 2 / 3 + Quad(4) / 3); // 2 * 2^{1/3} r^{2/3}
    const Quad term2 = exp2_quad(lr * 3 / 2) * 2 * sqrt(Quad(2) / 3);
    const Quad term3 = exp2_quad(lr * 2);
    return static_cast<double>(term1 + term2 + term3);
}

double gg_large_m_value(int n, int m, const BigInt& q) {
    if (q == 0) return 0.0;
    const Quad lr = log2_ratio(n, m, q);
    const Quad exponent = Quad(n) / (n - m);
    const Quad term1 = 3 * exp2_quad(lr * 2 / 3);
    const Quad term2 = exp2_quad(lr + 1);
    const Quad term3 = 5 * exp2_quad(lr * 2);
    const Quad term4 = exp2_quad((lr + 1) * exponent - 1); // (1/2)(2r)^{n/(n-m)}
    return static_cast<double>(term1 + term2 + term3 + term4);
}

GgBound gg_bound(int n, int m, const BigInt& q) {
    if (3 * m <= n) return {gg_small_m_value(n, m, q), GgBranch::small_m};
    if (static_cast<double>(m) <= static_cast<double>(n) - 4.0 - std::log2(static_cast<double>(n)))
        return {gg_large_m_value(n, m, q), GgBranch::large_m};
    return {0.0, GgBranch::none};
}

double stam_bound(int n, int m, const BigInt& q) {
    const BigInt domain = pow2(static_cast<unsigned>(n));
    if (q - 1 >= domain)
        throw std::invalid_argument("stam bound requires q - 1 < 2^n");
    if (q <= 1) return 0.0;
    const BigInt numer = (pow2(static_cast<unsigned>(n - m)) - 1) * q * (q - 1);
    const BigInt denom = (domain - 1) * (domain - (q - 1));
    const Quad half_log = (log2_bigint(numer) - log2_bigint(denom)) / 2;
    return static_cast<double>(exp2_quad(half_log - 1));
}

StamSimplified stam_simplified(int n, int m, const BigInt& q) {
    StamSimplified out{0.0, 4 * q <= 3 * pow2(static_cast<unsigned>(n))};
    if (q == 0) return out;
    out.value = static_cast<double>(exp2_quad(log2_ratio(n, m, q)));
    return out;
}

double combined_bound(int n, int m, const BigInt& q) {
    if (q <= 1) return 0.0;
    const double birthday_upper =
        static_cast<double>(ldexp(Quad(q * (q - 1)), -(n + 1)));
    const double best = std::min(birthday_upper, stam_bound(n, m, q));
    return std::clamp(best, 0.0, 1.0);
}

BoundReport evaluate_bounds(const Params& p, double bi_constant) {
    BoundReport r{};
    r.n = p.n();
    r.m = p.m();
    r.q = p.q();

    r.birthday_exact = birthday_exact(p.n(), p.q());
    const BirthdayChain chain = birthday_chain(p.n(), p.q());
    r.birthday_lower1 = chain.lower1;
    r.birthday_lower2 = chain.lower2;
    r.birthday_upper1 = chain.upper1;
    r.birthday_upper2 = chain.upper2;

    r.hall = hall_bound(p.n(), p.m(), p.q());

    const BiBound bi = bi_bound(p.n(), p.m(), p.q(), bi_constant);
    r.bi = bi.value;
    r.bi_applicable = bi.applicable;

    const GgBound gg = gg_bound(p.n(), p.m(), p.q());
    r.gg_small_m = gg_small_m_value(p.n(), p.m(), p.q());
    r.gg_large_m = gg_large_m_value(p.n(), p.m(), p.q());
    r.gg_small_m_applicable = gg.branch == GgBranch::small_m;
    r.gg_large_m_applicable = gg.branch == GgBranch::large_m;

    r.stam = stam_bound(p.n(), p.m(), p.q());
    const StamSimplified simplified = stam_simplified(p.n(), p.m(), p.q());
    r.stam_simplified = simplified.value;
    r.stam_simplified_applicable = simplified.applicable;

    r.combined = combined_bound(p.n(), p.m(), p.q());
    return r;
}

QHalfResult q_half_search(const BigInt& q_max, const AdvantageCurve& curve) {
    if (q_max < 1) return {};
    if (curve(q_max) < 0.5) return {};

    // bracket: curve(lo) < 1/2 <= curve(hi)
    BigInt lo = 0;
    BigInt hi = 1;
    while (curve(hi) < 0.5) {
        lo = hi;
        hi = std::min(BigInt(hi * 2), q_max);
    }
    while (hi - lo > 1) {
        const BigInt mid = (lo + hi) / 2;
        (curve(mid) >= 0.5 ? hi : lo) = mid;
    }
    return {true, hi};
}

QHalfMethod parse_q_half_method(const std::string& name) {
    if (name == "stam") return QHalfMethod::stam;
    if (name == "birthday") return QHalfMethod::birthday;
    if (name == "combined") return QHalfMethod::combined;
    if (name == "exact") return QHalfMethod::exact;
    if (name == "montecarlo") return QHalfMethod::montecarlo;
    throw std::invalid_argument("unknown q-half method: " + name);
}

QHalfResult q_half(int n, int m, QHalfMethod method) {
    validate_params(n, m, BigInt(0));
    const BigInt q_max = pow2(static_cast<unsigned>(n));

    switch (method) {
    case QHalfMethod::stam:
        return q_half_search(q_max, [&](const BigInt& q) { return stam_bound(n, m, q); });
    case QHalfMethod::birthday:
        return q_half_search(q_max, [&](const BigInt& q) { return birthday_exact(n, q); });
    case QHalfMethod::combined:
        return q_half_search(q_max, [&](const BigInt& q) { return combined_bound(n, m, q); });
    case QHalfMethod::exact: {
        const BigInt scan_max = std::min(q_max, BigInt(kMaxEnumerationQueries));
        for (BigInt q = 2; q <= scan_max; ++q) {
            if (total_variation(validate_params(n, m, q)) >= Rational(1, 2))
                return {true, q};
        }
        if (scan_max == q_max) return {}; // whole domain scanned: not reached
        throw std::invalid_argument(
            "exact q-half undecided within the enumeration envelope (q <= 30)");
    }
    case QHalfMethod::montecarlo:
        throw std::invalid_argument("montecarlo q-half requires the simulation harness");
    }
    throw std::logic_error("unreachable");
}

} // namespace truncdist
