#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace chamberlab {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// q^e for small non-negative exponents.
BigInt ipow(std::int64_t base, std::int64_t exponent);

/// Exact quotient; throws VerificationError when `den` does not divide `num`.
BigInt exact_div(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

/// Adds machine integers without overflow, spilling into a BigInt only when
/// the running int64 sum would wrap. Sums are exact in any addition order.
class ExactAccumulator {
public:
    void add(std::int64_t v)
    {
        std::int64_t out;
        if (__builtin_add_overflow(small_, v, &out)) {
            big_ += small_;
            small_ = v;
        } else {
            small_ = out;
        }
    }

    void add_product(std::int64_t a, std::int64_t b)
    {
        std::int64_t prod;
        if (__builtin_mul_overflow(a, b, &prod)) {
            big_ += BigInt(a) * b;
            return;
        }
        add(prod);
    }

    void merge(const ExactAccumulator& other)
    {
        big_ += other.big_;
        add(other.small_);
    }

    BigInt value() const { return big_ + small_; }

private:
    std::int64_t small_ = 0;
    BigInt big_ = 0;
};

} // namespace chamberlab
