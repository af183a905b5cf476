#pragma once

#include <functional>
#include <string>

#include "truncdist/params.hpp"

namespace truncdist {

// Closed-form advantage bounds, evaluated in the log2 domain so that n up to
// 256 and q up to 2^n stay meaningful. Raw formula values are reported even
// when they exceed 1; only combined_bound clamps.

/// Exact full-view collision probability 1 - prod_{k=1}^{q-1} (1 - k/2^n).
double birthday_exact(int n, const BigInt& q);

/// The four-link chain around the exact collision probability:
///   lower1 = 1 - e^{-q(q-1)/2^{n+1}}
///   lower2 = 1 - (1 - q/2^{n+1})^{q-1}
///   upper1 = 1 - (1 - q/2^n)^{(q-1)/2}
///   upper2 = q(q-1)/2^{n+1}
/// lower1 <= lower2 <= exact <= upper1 holds for all q <= 2^n. upper1 <=
/// upper2 holds for q != 2; at q = 2 the link inverts (upper1 > upper2 =
/// exact, all three within a factor 1.18).
struct BirthdayChain {
    double lower1;
    double lower2;
    double upper1;
    double upper2;
};
BirthdayChain birthday_chain(int n, const BigInt& q);

/// 5 r^{2/3} + (1/2) r^3 2^{-(n-7m)/2} with r = q / 2^{(n+m)/2}.
double hall_bound(int n, int m, const BigInt& q);

/// c n q / 2^{(n+m)/2}; the O(n) constant is caller-supplied (non-normative).
/// Applicable only inside the window 2^{n-m} < q < 2^{(n+m)/2}.
struct BiBound {
    double value;
    bool applicable;
};
BiBound bi_bound(int n, int m, const BigInt& q, double c);

enum class GgBranch { small_m, large_m, none };

/// Two-branch truncation bound; branch picked by the m window
/// (m <= n/3, or n/3 < m <= n - 4 - log2 n).
struct GgBound {
    double value; // 0 when branch == none
    GgBranch branch;
};
GgBound gg_bound(int n, int m, const BigInt& q);

/// Raw branch formulas, evaluable at any (n, m, q) for reporting.
double gg_small_m_value(int n, int m, const BigInt& q);
double gg_large_m_value(int n, int m, const BigInt& q);

/// (1/2) sqrt((2^{n-m}-1) q (q-1) / ((2^n-1)(2^n-(q-1)))); requires q-1 < 2^n.
double stam_bound(int n, int m, const BigInt& q);

/// Companion form q / 2^{(m+n)/2}; upper-bounds stam_bound once q <= (3/4) 2^n.
struct StamSimplified {
    double value;
    bool applicable; // q <= (3/4) 2^n
};
StamSimplified stam_simplified(int n, int m, const BigInt& q);

/// min(1, q(q-1)/2^{n+1}, stam_bound): the tightest fully-specified
/// combination of the closed forms above.
double combined_bound(int n, int m, const BigInt& q);

/// Every closed-form bound at one (n, m, q).
struct BoundReport {
    int n;
    int m;
    BigInt q;
    double birthday_exact;
    double birthday_lower1;
    double birthday_lower2;
    double birthday_upper1;
    double birthday_upper2;
    double hall;
    double bi;
    bool bi_applicable;
    double gg_small_m;
    bool gg_small_m_applicable;
    double gg_large_m;
    bool gg_large_m_applicable;
    double stam;
    double stam_simplified;
    bool stam_simplified_applicable;
    double combined;
};
BoundReport evaluate_bounds(const Params& p, double bi_constant = 1.0);

// ----------------------------------------------------------------------------
// q_1/2 solver: smallest q at which a nondecreasing advantage curve reaches
// 1/2. For upper-bound curves this is a lower-bound estimate of the true
// threshold.

struct QHalfResult {
    bool reached = false;
    BigInt q; // meaningful only when reached
};

using AdvantageCurve = std::function<double(const BigInt& q)>;

/// Exponential bracketing + binary search over [0, q_max].
QHalfResult q_half_search(const BigInt& q_max, const AdvantageCurve& curve);

enum class QHalfMethod { stam, birthday, combined, exact, montecarlo };

QHalfMethod parse_q_half_method(const std::string& name);

/// Closed-form and exact methods. The montecarlo method lives with the
/// simulation harness (q_half_montecarlo); this overload rejects it.
QHalfResult q_half(int n, int m, QHalfMethod method);

} // namespace truncdist
