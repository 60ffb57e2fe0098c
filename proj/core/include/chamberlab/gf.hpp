#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chamberlab {

/// A field element, encoded as the base-p packing of its polynomial
/// coefficients: sum c_i p^i for the class of sum c_i x^i.
using Elem = std::uint8_t;

/// Polynomial over a field, lowest degree first, trailing zeros trimmed.
using Poly = std::vector<Elem>;

/// Finite field F_q, q = p^e <= 256, with table-driven arithmetic.
///
/// A Field is a cheap-to-copy handle to immutable tables; copies share them
/// and may be used concurrently.
class Field {
public:
    static constexpr unsigned max_order = 256;

    /// Builds F_{p^e}. When `modulus` is omitted the lexicographically
    /// smallest monic irreducible of degree e is used (monics compared by
    /// their coefficient vectors read from x^{e-1} down to x^0).
    /// `modulus` lists coefficients from x^0 upward and must have degree e.
    static Field create(unsigned p, unsigned e = 1,
                        std::optional<std::vector<unsigned>> modulus = std::nullopt);

    /// Builds the default field of order q (q must be a prime power).
    static Field of_order(unsigned q);

    unsigned characteristic() const { return t_->p; }
    unsigned degree() const { return t_->e; }
    unsigned order() const { return t_->q; }
    /// Monic modulus, coefficients from x^0 to x^e.
    std::span<const unsigned> modulus() const { return t_->modulus; }

    Elem add(Elem a, Elem b) const { return t_->add[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const { return t_->add[idx(a, t_->neg[b])]; }
    Elem mul(Elem a, Elem b) const { return t_->mul[idx(a, b)]; }
    Elem neg(Elem a) const { return t_->neg[a]; }
    /// Throws std::domain_error for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const;

    /// True when q is a square, i.e. the conjugation x -> x^{sqrt q} exists.
    bool has_conjugation() const { return t_->e % 2 == 0; }
    /// sqrt(q); throws std::domain_error when q is not a square.
    unsigned sqrt_order() const;
    /// x -> x^{sqrt q}; throws std::domain_error when q is not a square.
    Elem conjugate(Elem a) const;

    /// The element whose polynomial is the given coefficient list over F_p.
    Elem from_coefficients(std::span<const unsigned> coeffs) const;
    std::vector<unsigned> coefficients(Elem a) const;

    bool operator==(const Field& o) const
    {
        return t_ == o.t_ || (t_->p == o.t_->p && t_->e == o.t_->e && t_->modulus == o.t_->modulus);
    }

    std::string describe() const;

private:
    struct Tables {
        unsigned p = 0, e = 0, q = 0;
        std::vector<unsigned> modulus;
        std::vector<Elem> add, mul, neg, inv, conj;
    };

    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::size_t idx(Elem a, Elem b) const { return std::size_t{a} * t_->q + b; }

    std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n);

/// Splits q = p^e; returns nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q);

namespace poly {

Poly trim(Poly f);
int degree(const Poly& f);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, Poly a, const Poly& m);
/// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Field& F, const Poly& f);
/// Lexicographically smallest monic irreducible of the given degree over F,
/// with the same ordering as Field::create.
Poly smallest_irreducible(const Field& F, unsigned degree);

} // namespace poly

} // namespace chamberlab
