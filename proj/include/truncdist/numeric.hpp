#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace truncdist {

// Exact arithmetic: arbitrary-precision integers and rationals.
// cpp_rational keeps values normalized (lowest terms, positive denominator).
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Wide float for log-domain bound evaluation: 113-bit significand,
// enough headroom for n up to 256 without losing the small-advantage tail.
using Quad = boost::multiprecision::cpp_bin_float_quad;

inline BigInt pow2(unsigned bits) { return BigInt(1) << bits; }

/// C(n, k) as an exact integer; 0 when k > n.
BigInt binomial(const BigInt& n, const BigInt& k);

/// n (n-1) ... (n-k+1); 1 when k = 0, 0 once a factor hits zero or below.
BigInt falling_factorial(const BigInt& n, const BigInt& k);

/// Rational -> Quad without overflowing an intermediate double.
Quad to_quad(const Rational& r);

/// Rational -> double through the quad intermediary.
double to_double(const Rational& r);

/// log2 of a positive big integer, accurate to quad precision.
Quad log2_bigint(const BigInt& v);

/// 1 - 2^x for x <= 0, accurate for x near 0 (and saturating for x << 0).
Quad one_minus_exp2(const Quad& x);

// ----------------------------------------------------------------------------

/// A probability (or bound term) carried as its base-2 logarithm, so that
/// products of many tiny factors never underflow. exp2(value) is the
/// represented quantity.
struct LogProb {
    double value;

    static LogProb from_prob(double p) {
        if (p < 0.0) throw std::invalid_argument("probability must be >= 0");
        return LogProb{std::log2(p)};
    }

    double to_prob() const { return std::exp2(value); }

    // multiplication of the underlying probabilities
    LogProb operator+(const LogProb& o) const { return LogProb{value + o.value}; }
    LogProb& operator+=(const LogProb& o) {
        value += o.value;
        return *this;
    }
};

} // namespace truncdist
