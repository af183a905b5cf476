#include "truncdist/params.hpp"

namespace truncdist {

Params validate_params(int n, int m, const BigInt& q) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > 256) throw std::invalid_argument("n must be <= 256");
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (m >= n) throw std::invalid_argument("m must be < n");
    if (q < 0) throw std::invalid_argument("q must be >= 0");
    if (q > pow2(static_cast<unsigned>(n))) throw std::invalid_argument("q exceeds 2^n");
    return Params(n, m, q);
}

} // namespace truncdist
