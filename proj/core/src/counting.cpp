#include "chamberlab/counting.hpp"

#include "chamberlab/error.hpp"

#include <string>

namespace chamberlab {

namespace {

void require_q(std::int64_t q)
{
    if (q < 2) throw PreconditionError("q must be at least 2, got " + std::to_string(q));
}

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

} // namespace

BigInt gaussian(std::int64_t b, std::int64_t a, std::int64_t q)
{
    require_q(q);
    if (a < 0 || b < 0 || a > b) return 0;
    BigInt num = 1, den = 1;
    for (std::int64_t i = 1; i <= a; ++i) {
        num *= ipow(q, b - a + i) - 1;
        den *= ipow(q, i) - 1;
    }
    return exact_div(num, den);
}

BigInt bracket(std::int64_t c, std::int64_t q)
{
    require_q(q);
    if (c < 0) throw PreconditionError("bracket needs c >= 0");
    BigInt r = 1;
    for (std::int64_t i = 1; i <= c; ++i) r *= ipow(q, i) - 1;
    return r;
}

BigInt chamber_count(std::int64_t c, std::int64_t q)
{
    require_q(q);
    if (c < 0) throw PreconditionError("chamber count needs c >= 0");
    return exact_div(bracket(c, q), ipow(q - 1, c));
}

BigInt count_skew(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t q)
{
    require_q(q);
    if (a < 0 || b < 0 || d < a + b) throw PreconditionError("count_skew needs d >= a + b >= 0");
    return gaussian(d - a, b, q) * ipow(q, a * b);
}

BigInt opposite_count(std::int64_t d, std::int64_t q)
{
    require_q(q);
    if (d < 0) throw PreconditionError("dimension must be non-negative");
    return ipow(q, choose2(d));
}

BigInt opposite_through_count(std::int64_t d, std::int64_t s, std::int64_t q)
{
    require_q(q);
    if (s < 1 || s >= d) throw PreconditionError("subspace dimension must lie in [1, d-1]");
    return ipow(q, choose2(s) + choose2(d - s));
}

BigInt flag_extension_count(std::int64_t d, std::span<const int> type, std::int64_t q)
{
    require_q(q);
    if (type.empty()) throw PreconditionError("flag must be non-empty");
    BigInt r = 1;
    std::int64_t prev = 0;
    for (int t : type) {
        if (t <= prev || t >= d) throw PreconditionError("flag type must be strictly increasing within (0, d)");
        r *= chamber_count(t - prev, q);
        prev = t;
    }
    return r * chamber_count(d - prev, q);
}

BigInt symplectic_generator_count(std::int64_t n, std::int64_t q)
{
    require_q(q);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= n; ++i) r *= ipow(q, i) + 1;
    return r;
}

std::int64_t exact_sqrt(std::int64_t q)
{
    for (std::int64_t r = 0; r * r <= q; ++r)
        if (r * r == q) return r;
    return -1;
}

BigInt hermitian_generator_count(std::int64_t n, std::int64_t q)
{
    require_q(q);
    const std::int64_t root = exact_sqrt(q);
    if (root < 0) throw PreconditionError("hermitian forms need a square q, got " + std::to_string(q));
    BigInt r = 1;
    for (std::int64_t j = 1; j <= n; ++j) r *= root * ipow(q, j - 1) + 1;
    return r;
}

BigInt max_ekr_size(std::int64_t n, std::int64_t q)
{
    return exact_div(chamber_count(2 * n, q), ipow(q, n) + 1);
}

BigInt smallest_eigenvalue(std::int64_t n, std::int64_t q)
{
    require_q(q);
    return -ipow(q, 2 * n * (n - 1));
}

BigInt eigenspace_dimension_formula(std::int64_t n, std::int64_t q)
{
    require_q(q);
    return exact_div(n * (ipow(q, 2 * n) - q), BigInt(q - 1));
}

} // namespace chamberlab
