#include "chamberlab/gf.hpp"

#include <sstream>
#include <stdexcept>

namespace chamberlab {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q)
{
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<unsigned>(p), e};
}

namespace poly {

Poly trim(Poly f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int degree(const Poly& f)
{
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Poly mul(const Field& F, const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return trim(std::move(out));
}

Poly mod(const Field& F, Poly a, const Poly& m)
{
    const int dm = degree(m);
    if (dm < 0) throw std::domain_error("polynomial modulus is zero");
    const Elem lead_inv = F.inv(m[static_cast<std::size_t>(dm)]);
    a = trim(std::move(a));
    for (int da = degree(a); da >= dm; da = degree(a)) {
        const Elem c = F.mul(a[static_cast<std::size_t>(da)], lead_inv);
        const int shift = da - dm;
        for (int k = 0; k <= dm; ++k) {
            auto& slot = a[static_cast<std::size_t>(k + shift)];
            slot = F.sub(slot, F.mul(c, m[static_cast<std::size_t>(k)]));
        }
        a = trim(std::move(a));
    }
    return a;
}

namespace {

// Monic polynomial of the given degree whose lower coefficients are the
// base-q digits of `code`, most significant digit at x^{degree-1}.
Poly monic_from_code(const Field& F, unsigned deg, std::uint64_t code)
{
    Poly f(deg + 1, 0);
    f[deg] = 1;
    for (unsigned i = 0; i < deg; ++i) {
        f[i] = static_cast<Elem>(code % F.order());
        code /= F.order();
    }
    return f;
}

std::uint64_t count_monics(const Field& F, unsigned deg)
{
    std::uint64_t n = 1;
    for (unsigned i = 0; i < deg; ++i) n *= F.order();
    return n;
}

} // namespace

bool is_irreducible(const Field& F, const Poly& f)
{
    const int d = degree(f);
    if (d < 1) return false;
    for (unsigned k = 1; 2 * k <= static_cast<unsigned>(d); ++k) {
        const std::uint64_t n = count_monics(F, k);
        for (std::uint64_t code = 0; code < n; ++code)
            if (mod(F, f, monic_from_code(F, k, code)).empty()) return false;
    }
    return true;
}

Poly smallest_irreducible(const Field& F, unsigned deg)
{
    if (deg == 0) throw std::invalid_argument("irreducible polynomial degree must be positive");
    // Codes are ordered so that x^{deg-1} is the most significant digit,
    // giving lexicographic order from the top coefficient down.
    const std::uint64_t n = count_monics(F, deg);
    for (std::uint64_t rank = 0; rank < n; ++rank) {
        Poly f = monic_from_code(F, deg, rank);
        // monic_from_code puts the least significant digit at x^0, which is
        // exactly "compare from x^{deg-1} down to x^0".
        if (is_irreducible(F, f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

} // namespace poly

Field Field::create(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus)
{
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw std::invalid_argument("field extension degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > max_order) throw std::invalid_argument("field order exceeds " + std::to_string(max_order));
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->e = e;
    t->q = static_cast<unsigned>(q);

    if (e == 1) {
        if (modulus && (modulus->size() != 2 || (*modulus)[1] % p == 0))
            throw std::invalid_argument("modulus of a prime field must have degree 1");
        t->modulus = {0, 1};
        t->add.resize(q * q);
        t->mul.resize(q * q);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                t->add[a * q + b] = static_cast<Elem>((a + b) % p);
                t->mul[a * q + b] = static_cast<Elem>((a * b) % p);
            }
    } else {
        const Field prime = create(p, 1);
        Poly m;
        if (modulus) {
            Poly given;
            for (unsigned c : *modulus) {
                if (c >= p) throw std::invalid_argument("modulus coefficient out of range for F_" + std::to_string(p));
                given.push_back(static_cast<Elem>(c));
            }
            given = poly::trim(std::move(given));
            if (poly::degree(given) != static_cast<int>(e))
                throw std::invalid_argument("modulus must have degree " + std::to_string(e));
            const Elem lead_inv = prime.inv(given.back());
            for (auto& c : given) c = prime.mul(c, lead_inv);
            if (!poly::is_irreducible(prime, given)) throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
            m = std::move(given);
        } else {
            m = poly::smallest_irreducible(prime, e);
        }
        t->modulus.assign(m.begin(), m.end());

        auto to_poly = [&](unsigned a) {
            Poly f(e, 0);
            for (unsigned i = 0; i < e; ++i) {
                f[i] = static_cast<Elem>(a % p);
                a /= p;
            }
            return f;
        };
        auto to_elem = [&](const Poly& f) {
            unsigned v = 0;
            for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) v = v * p + f[static_cast<std::size_t>(i)];
            return static_cast<Elem>(v);
        };

        t->add.resize(q * q);
        t->mul.resize(q * q);
        for (unsigned a = 0; a < q; ++a) {
            const Poly fa = to_poly(a);
            for (unsigned b = 0; b < q; ++b) {
                const Poly fb = to_poly(b);
                Poly s(e);
                for (unsigned i = 0; i < e; ++i) s[i] = prime.add(fa[i], fb[i]);
                t->add[a * q + b] = to_elem(s);
                t->mul[a * q + b] = to_elem(poly::mod(prime, poly::mul(prime, poly::trim(fa), poly::trim(fb)), m));
            }
        }
    }

    t->neg.assign(q, 0);
    t->inv.assign(q, 0);
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) {
            if (t->add[a * q + b] == 0) t->neg[a] = static_cast<Elem>(b);
            if (t->mul[a * q + b] == 1) t->inv[a] = static_cast<Elem>(b);
        }
    for (unsigned a = 1; a < q; ++a)
        if (t->mul[a * q + t->inv[a]] != 1) throw std::logic_error("field table construction failed");

    if (e % 2 == 0) {
        unsigned root = 1;
        for (unsigned i = 0; i < e / 2; ++i) root *= p;
        t->conj.resize(q);
        for (unsigned a = 0; a < q; ++a) {
            Elem r = 1;
            for (unsigned k = 0; k < root; ++k) r = t->mul[r * q + a];
            t->conj[a] = r;
        }
    }
    return Field(std::move(t));
}

Field Field::of_order(unsigned q)
{
    auto pe = prime_power(q);
    if (!pe) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return create(pe->first, pe->second);
}

Elem Field::inv(Elem a) const
{
    if (a == 0) throw std::domain_error("inverse of zero");
    return t_->inv[a];
}

Elem Field::pow(Elem a, std::uint64_t k) const
{
    Elem r = 1;
    Elem b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

unsigned Field::sqrt_order() const
{
    if (!has_conjugation()) throw std::domain_error("field order " + std::to_string(order()) + " is not a square");
    unsigned r = 1;
    for (unsigned i = 0; i < t_->e / 2; ++i) r *= t_->p;
    return r;
}

Elem Field::conjugate(Elem a) const
{
    if (!has_conjugation()) throw std::domain_error("conjugation needs a square field order, got " + std::to_string(order()));
    return t_->conj[a];
}

Elem Field::from_coefficients(std::span<const unsigned> coeffs) const
{
    if (coeffs.size() > t_->e) throw std::invalid_argument("too many coefficients for field element");
    unsigned v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= t_->p) throw std::invalid_argument("coefficient out of range");
        v = v * t_->p + coeffs[i];
    }
    return static_cast<Elem>(v);
}

std::vector<unsigned> Field::coefficients(Elem a) const
{
    std::vector<unsigned> c(t_->e, 0);
    unsigned v = a;
    for (unsigned i = 0; i < t_->e; ++i) {
        c[i] = v % t_->p;
        v /= t_->p;
    }
    return c;
}

std::string Field::describe() const
{
    std::ostringstream os;
    os << "F_" << order();
    if (degree() > 1) {
        os << " = F_" << characteristic() << "[x]/(";
        bool first = true;
        for (std::size_t i = t_->modulus.size(); i-- > 0;) {
            const unsigned c = t_->modulus[i];
            if (!c) continue;
            if (!first) os << "+";
            first = false;
            if (c != 1 || i == 0) os << c;
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

} // namespace chamberlab
