#include <doctest.h>

#include "chamberlab/gf.hpp"

#include <set>
#include <stdexcept>
#include <vector>

using namespace chamberlab;

namespace {

// Reference arithmetic on coefficient vectors mod (p, modulus), independent
// of the lookup tables.
std::vector<unsigned> ref_mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b, unsigned p, std::span<const unsigned> m)
{
    const std::size_t e = m.size() - 1;
    std::vector<unsigned> prod(2 * e, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t k = prod.size(); k-- > e;) {
        const unsigned c = prod[k];
        if (!c) continue;
        for (std::size_t t = 0; t <= e; ++t) prod[k - e + t] = (prod[k - e + t] + p * p - c * m[t]) % p;
    }
    prod.resize(e);
    return prod;
}

std::vector<unsigned> ref_add(const std::vector<unsigned>& a, const std::vector<unsigned>& b, unsigned p)
{
    std::vector<unsigned> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

const unsigned small_orders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};

} // namespace

TEST_CASE("table arithmetic agrees with polynomial arithmetic")
{
    for (unsigned q : small_orders) {
        CAPTURE(q);
        const auto F = Field::of_order(q);
        const unsigned p = F.characteristic();
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                const auto ca = F.coefficients(static_cast<Elem>(a)), cb = F.coefficients(static_cast<Elem>(b));
                CHECK(F.coefficients(F.add(static_cast<Elem>(a), static_cast<Elem>(b))) == ref_add(ca, cb, p));
                CHECK(F.coefficients(F.mul(static_cast<Elem>(a), static_cast<Elem>(b))) == ref_mul(ca, cb, p, F.modulus()));
            }
    }
}

TEST_CASE("field axioms hold exhaustively")
{
    for (unsigned q : small_orders) {
        CAPTURE(q);
        const auto F = Field::of_order(q);
        for (unsigned a = 0; a < q; ++a) {
            const auto x = static_cast<Elem>(a);
            CHECK(F.add(x, F.neg(x)) == 0);
            CHECK(F.sub(x, x) == 0);
            CHECK(F.mul(x, 1) == x);
            if (x) CHECK(F.mul(x, F.inv(x)) == 1);
            CHECK(F.pow(x, q) == x);
            for (unsigned b = 0; b < q; ++b)
                for (unsigned c = 0; c < q; c += 3) {
                    const auto y = static_cast<Elem>(b), z = static_cast<Elem>(c);
                    CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
                    CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
                }
        }
    }
}

TEST_CASE("default moduli are the smallest irreducibles")
{
    const auto F4 = Field::of_order(4);
    CHECK(std::vector<unsigned>(F4.modulus().begin(), F4.modulus().end()) == std::vector<unsigned>{1, 1, 1});
    const auto F8 = Field::of_order(8);
    CHECK(std::vector<unsigned>(F8.modulus().begin(), F8.modulus().end()) == std::vector<unsigned>{1, 1, 0, 1});
    const auto F9 = Field::of_order(9);
    CHECK(std::vector<unsigned>(F9.modulus().begin(), F9.modulus().end()) == std::vector<unsigned>{1, 0, 1});
    // in F_4 = F_2[x]/(x^2+x+1), x is a primitive cube root of unity
    CHECK(F4.mul(2, 2) == 3);
    CHECK(F4.pow(2, 3) == 1);
}

TEST_CASE("explicit moduli are validated")
{
    CHECK_NOTHROW(Field::create(2, 3, std::vector<unsigned>{1, 0, 1, 1}));
    CHECK_THROWS_AS(Field::create(2, 2, std::vector<unsigned>{1, 0, 1}), std::invalid_argument); // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(Field::create(2, 2, std::vector<unsigned>{1, 1}), std::invalid_argument);
    const auto a = Field::create(2, 3, std::vector<unsigned>{1, 0, 1, 1});
    CHECK_FALSE(a == Field::of_order(8));
}

TEST_CASE("invalid orders are rejected")
{
    CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(512), std::invalid_argument);
    CHECK_THROWS_AS(Field::create(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::of_order(5).inv(0), std::domain_error);
}

TEST_CASE("conjugation is the involutive Frobenius with fixed field F_sqrt(q)")
{
    for (unsigned q : {4u, 9u, 16u, 25u}) {
        CAPTURE(q);
        const auto F = Field::of_order(q);
        REQUIRE(F.has_conjugation());
        const unsigned r = F.sqrt_order();
        CHECK(r * r == q);
        std::size_t fixed = 0;
        for (unsigned a = 0; a < q; ++a) {
            const auto x = static_cast<Elem>(a);
            CHECK(F.conjugate(F.conjugate(x)) == x);
            CHECK(F.conjugate(x) == F.pow(x, r));
            for (unsigned b = 0; b < q; ++b) CHECK(F.conjugate(F.mul(x, static_cast<Elem>(b))) == F.mul(F.conjugate(x), F.conjugate(static_cast<Elem>(b))));
            if (F.conjugate(x) == x) ++fixed;
        }
        CHECK(fixed == r);
    }
    CHECK_THROWS_AS(Field::of_order(8).conjugate(1), std::domain_error);
    CHECK_THROWS_AS(Field::of_order(3).sqrt_order(), std::domain_error);
}

TEST_CASE("prime power detection")
{
    CHECK(prime_power(256) == std::pair<unsigned, unsigned>{2, 8});
    CHECK(prime_power(243) == std::pair<unsigned, unsigned>{3, 5});
    CHECK_FALSE(prime_power(12).has_value());
    CHECK_FALSE(prime_power(1).has_value());
    CHECK(is_prime(251));
    CHECK_FALSE(is_prime(221));
}

TEST_CASE("smallest irreducible polynomials")
{
    const auto F2 = Field::of_order(2);
    CHECK(poly::smallest_irreducible(F2, 2) == Poly{1, 1, 1});
    CHECK(poly::smallest_irreducible(F2, 3) == Poly{1, 1, 0, 1});
    const auto F4 = Field::of_order(4);
    const auto m = poly::smallest_irreducible(F4, 2);
    CHECK(poly::is_irreducible(F4, m));
    // no root in F_4
    for (unsigned a = 0; a < 4; ++a) {
        Elem v = 0;
        for (std::size_t k = m.size(); k-- > 0;) v = F4.add(F4.mul(v, static_cast<Elem>(a)), m[k]);
        CHECK(v != 0);
    }
    CHECK_FALSE(poly::is_irreducible(F2, Poly{1, 0, 1}));
}
