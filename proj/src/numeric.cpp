#include "truncdist/numeric.hpp"

#include <boost/math/special_functions/expm1.hpp>

namespace truncdist {

BigInt binomial(const BigInt& n, const BigInt& k) {
    if (k < 0 || k > n) return 0;
    BigInt kk = k;
    if (n - k < kk) kk = n - k;
    BigInt num = 1;
    BigInt den = 1;
    for (BigInt i = 0; i < kk; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den; // exact: den always divides num
}

BigInt falling_factorial(const BigInt& n, const BigInt& k) {
    BigInt out = 1;
    for (BigInt i = 0; i < k; ++i) {
        BigInt factor = n - i;
        if (factor <= 0) return 0;
        out *= factor;
    }
    return out;
}

Quad to_quad(const Rational& r) {
    // numerator/denominator may each exceed double range; quad's exponent
    // field (+-16382) covers every integer this project produces.
    const Quad num(boost::multiprecision::numerator(r));
    const Quad den(boost::multiprecision::denominator(r));
    return num / den;
}

double to_double(const Rational& r) { return static_cast<double>(to_quad(r)); }

Quad log2_bigint(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log2 of non-positive integer");
    return log2(Quad(v));
}

Quad one_minus_exp2(const Quad& x) {
    if (x > 0) throw std::invalid_argument("one_minus_exp2 expects x <= 0");
    // 1 - 2^x = -expm1(x ln 2)
    static const Quad kLn2 = log(Quad(2));
    return -boost::math::expm1(x * kLn2);
}

} // namespace truncdist
