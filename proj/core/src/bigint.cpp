#include "chamberlab/bigint.hpp"

#include "chamberlab/error.hpp"

#include <stdexcept>

namespace chamberlab {

BigInt ipow(std::int64_t base, std::int64_t exponent)
{
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    BigInt r = 1;
    BigInt b = base;
    while (exponent) {
        if (exponent & 1) r *= b;
        b *= b;
        exponent >>= 1;
    }
    return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw VerificationError("division by zero");
    BigInt quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw VerificationError(to_string(den) + " does not divide " + to_string(num));
    return quot;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRational& v)
{
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

} // namespace chamberlab
