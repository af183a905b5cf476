#pragma once

#include <cstdint>
#include <stdexcept>

#include "truncdist/numeric.hpp"

namespace truncdist {

/// Instance description: n-bit domain, m truncated bits, q queries.
/// Immutable once validated; replies are the high n-m bits of each output.
class Params {
public:
    int n() const { return n_; }
    int m() const { return m_; }
    const BigInt& q() const { return q_; }

    int reply_bits() const { return n_ - m_; }

    BigInt domain_size() const { return pow2(static_cast<unsigned>(n_)); }
    BigInt bin_count() const { return pow2(static_cast<unsigned>(n_ - m_)); }
    BigInt bin_capacity() const { return pow2(static_cast<unsigned>(m_)); }

    /// q as a machine word; precondition: q fits (checked).
    std::uint64_t q_u64() const {
        if (q_ > BigInt(std::numeric_limits<std::uint64_t>::max()))
            throw std::invalid_argument("q does not fit in 64 bits");
        return static_cast<std::uint64_t>(q_);
    }

    friend Params validate_params(int n, int m, const BigInt& q);

private:
    Params(int n, int m, BigInt q) : n_(n), m_(m), q_(std::move(q)) {}

    int n_;
    int m_;
    BigInt q_;
};

/// Checks 1 <= n <= 256, 0 <= m < n, 0 <= q <= 2^n.
/// Throws std::invalid_argument with a one-line reason otherwise.
Params validate_params(int n, int m, const BigInt& q);

inline Params validate_params(int n, int m, std::uint64_t q) {
    return validate_params(n, m, BigInt(q));
}

} // namespace truncdist
