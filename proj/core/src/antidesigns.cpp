#include "chamberlab/antidesigns.hpp"

#include "chamberlab/counting.hpp"
#include "chamberlab/error.hpp"
#include "chamberlab/json_util.hpp"
#include "chamberlab/parallel.hpp"
#include "chamberlab/spectral.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

namespace chamberlab {

namespace {

int half_dim(const ChamberUniverse& u)
{
    const int d = u.ambient_dim();
    if (d < 2 || d % 2) throw PreconditionError("antidesigns live on chambers of an even-dimensional space");
    return d / 2;
}

std::int64_t to_small(const BigInt& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw CapacityError("antidesign weight does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

void require_form_space(const FormSpec& f, const ChamberUniverse& u, FormKind kind)
{
    if (f.kind() != kind) throw PreconditionError(std::string("expected a ") + to_string(kind) + " form");
    if (f.dim() != u.ambient_dim() || !(f.field() == u.field())) throw PreconditionError("form and universe live in different spaces");
}

} // namespace

WeightVector spread_antidesign(const Spread& s, UniversePtr u)
{
    const int n = half_dim(*u);
    if (s.n != n) throw PreconditionError("spread members must be n-subspaces of the universe's space");
    std::vector<bool> member(u->lattice().count(n), false);
    for (const auto& m : s.members) member[u->lattice().require_index(m)] = true;
    WeightVector v(u);
    for (std::size_t c = 0; c < u->size(); ++c)
        if (member[u->part(c, n)]) v.set(c, 1);
    return v;
}

WeightVector symplectic_antidesign(const FormSpec& f, UniversePtr u)
{
    half_dim(*u);
    require_form_space(f, *u, FormKind::alternating);
    const PolarityTable pol(f, u->lattice());
    WeightVector v(u);
    for (std::size_t c = 0; c < u->size(); ++c)
        if (pol.is_polar_chamber(*u, c)) v.set(c, 1);
    return v;
}

WeightVector unitary_antidesign(const FormSpec& f, UniversePtr u)
{
    const int n = half_dim(*u);
    require_form_space(f, *u, FormKind::hermitian);
    const std::int64_t k = to_small(chamber_count(n, u->q()) - 1);
    const PolarityTable pol(f, u->lattice());
    WeightVector v(u);
    for (std::size_t c = 0; c < u->size(); ++c) {
        if (pol.is_polar_chamber(*u, c))
            v.set(c, -k);
        else if (pol.is_generator(u->part(c, n)))
            v.set(c, 1);
    }
    return v;
}

WeightVector subspace_antidesign(const Subspace& s, UniversePtr u)
{
    const int n = half_dim(*u);
    const int k = s.dim();
    if (k < 1 || k > n) throw PreconditionError("subspace antidesign needs 1 <= dim(S) <= n, got " + std::to_string(k));
    const auto& lat = u->lattice();
    const auto idx = lat.require_index(s);
    const std::int64_t w = to_small(ipow(u->q(), k * (2 * n - k) - n));
    WeightVector v(u);
    for (std::size_t c = 0; c < u->size(); ++c) {
        if (u->part(c, k) == idx)
            v.set(c, w);
        else if (lat.skew(k, idx, 2 * n - k, u->part(c, 2 * n - k)))
            v.set(c, 1);
    }
    return v;
}

BigInt spread_mass(int n, std::int64_t q, int t)
{
    const BigInt z = chamber_count(n, q);
    return t * (ipow(q, n) + 1) * z * z;
}

BigInt symplectic_mass(int n, std::int64_t q) { return chamber_count(n, q) * symplectic_generator_count(n, q); }

BigInt subspace_mass(int n, int s, std::int64_t q) { return subspace_intersection(n, s, q) * (ipow(q, n) + 1); }

BigInt spread_intersection(int n, std::int64_t q, int t)
{
    const BigInt z = chamber_count(n, q);
    return t * z * z;
}

BigInt symplectic_intersection(int n, std::int64_t q) { return chamber_count(n, q) * symplectic_generator_count(n - 1, q); }

BigInt subspace_intersection(int n, int s, std::int64_t q)
{
    if (s < 1 || s > n) throw PreconditionError("subspace dimension must lie in [1, n]");
    return ipow(q, s * (2 * n - s) - n) * chamber_count(s, q) * chamber_count(2 * n - s, q);
}

OrthogonalityReport orthogonality_report(const WeightVector& v)
{
    const ChiFamily fam(v.universe_ptr());
    const int n = fam.n();
    const std::int64_t q = v.universe().q();
    const std::size_t P = fam.point_count(), m = fam.size();

    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c]) support.push_back(c);

    std::vector<ExactAccumulator> total(m);
    std::mutex merge;
    parallel_chunks(support.size(), [&](std::size_t b, std::size_t e, unsigned) {
        std::vector<ExactAccumulator> acc(m);
        std::vector<std::uint8_t> lv;
        for (std::size_t k = b; k < e; ++k) {
            const std::size_t c = support[k];
            fam.levels(c, lv);
            for (std::size_t p = 0; p < P; ++p)
                for (int i = 1; i <= n; ++i)
                    if (auto x = ChiFamily::value_at_level(n, i, lv[p], q)) acc[static_cast<std::size_t>(i - 1) * P + p].add_product(v[c], x);
        }
        std::lock_guard lock(merge);
        for (std::size_t k = 0; k < m; ++k) total[k].merge(acc[k]);
    });

    OrthogonalityReport r;
    r.checks_run = m;
    r.products.reserve(m);
    for (const auto& a : total) {
        r.products.push_back(a.value());
        if (r.products.back() != 0) ++r.nonzero;
    }
    return r;
}

bool verify_antidesign(const WeightVector& v) { return orthogonality_report(v).all_zero(); }

CertifiedAntidesign CertifiedAntidesign::certify(WeightVector v)
{
    const auto r = orthogonality_report(v);
    if (!r.all_zero()) throw VerificationError(std::to_string(r.nonzero) + " of " + std::to_string(r.checks_run) + " inner products with chi vectors are nonzero");
    BigInt mass = v.total();
    return CertifiedAntidesign(std::move(v), std::move(mass), r.checks_run);
}

BigRational expected_intersection(const CertifiedAntidesign& a)
{
    const int n = a.vector().universe().ambient_dim() / 2;
    return BigRational(a.mass(), ipow(a.vector().universe().q(), n) + 1);
}

std::vector<std::string> all_antidesign_families() { return {"spread", "symplectic", "unitary", "subspace"}; }

std::vector<AntidesignInstance> standard_antidesigns(UniversePtr u, const std::vector<std::string>& families)
{
    const int n = half_dim(*u);
    const auto q = static_cast<std::int64_t>(u->q());
    const auto& F = u->field();
    const bool explicit_request = !families.empty();
    const auto wanted = explicit_request ? families : all_antidesign_families();
    const auto known = all_antidesign_families();
    for (const auto& f : wanted)
        if (std::find(known.begin(), known.end(), f) == known.end())
            throw PreconditionError("unknown antidesign family '" + f + "'");
    auto want = [&](const char* name) { return std::find(wanted.begin(), wanted.end(), name) != wanted.end(); };

    std::vector<AntidesignInstance> out;
    if (want("spread")) {
        const auto s1 = field_extension_spread(F, n);
        out.push_back({"spread", {{"construction", "field-extension"}, {"t", s1.fold}}, spread_antidesign(s1, u), spread_mass(n, q, s1.fold),
                       spread_intersection(n, q, s1.fold)});
        const auto st = make_spread(enumerate_generators(FormSpec::standard_alternating(F, n)));
        out.push_back({"spread", {{"construction", "symplectic-generators"}, {"t", st.fold}}, spread_antidesign(st, u), spread_mass(n, q, st.fold),
                       spread_intersection(n, q, st.fold)});
    }
    if (want("symplectic")) {
        out.push_back({"symplectic", {{"form", "standard-alternating"}}, symplectic_antidesign(FormSpec::standard_alternating(F, n), u),
                       symplectic_mass(n, q), symplectic_intersection(n, q)});
    }
    if (want("unitary")) {
        if (F.has_conjugation()) {
            out.push_back({"unitary", {{"form", "identity-hermitian"}, {"k", json_value(chamber_count(n, q) - 1)}},
                           unitary_antidesign(FormSpec::standard_hermitian(F, 2 * n), u), 0, 0});
        } else if (explicit_request) {
            throw PreconditionError("the unitary family needs a square q, got q = " + std::to_string(q));
        }
    }
    if (want("subspace")) {
        for (int s = 1; s <= n; ++s) {
            std::vector<Vec> basis;
            for (int k = 0; k < s; ++k) {
                Vec e(static_cast<std::size_t>(2 * n), 0);
                e[static_cast<std::size_t>(k)] = 1;
                basis.push_back(std::move(e));
            }
            const auto S = Subspace::span(F, 2 * n, basis);
            out.push_back({"subspace", {{"s", s}, {"subspace", S.to_string()}}, subspace_antidesign(S, u), subspace_mass(n, s, q),
                           subspace_intersection(n, s, q)});
        }
    }
    return out;
}

nlohmann::json family_report(const AntidesignInstance& inst, const OrthogonalityReport& r)
{
    const auto& u = inst.vector.universe();
    auto params = inst.parameters;
    params["q"] = u.q();
    params["n"] = u.ambient_dim() / 2;
    return {{"family", inst.family},
            {"parameters", params},
            {"checks_run", r.checks_run},
            {"all_zero", r.all_zero()},
            {"mass", json_value(inst.vector.total())},
            {"expected_mass", json_value(inst.expected_mass)}};
}

std::vector<SpreadCount> spread_count_diagnostic(const Spread& s, UniversePtr u)
{
    const ChiFamily fam(u);
    const int n = fam.n();
    const std::int64_t q = u->q();
    const std::size_t P = fam.point_count();
    const auto v = spread_antidesign(s, u);

    std::vector<std::int64_t> a(fam.size(), 0), b(fam.size(), 0);
    std::vector<std::uint8_t> lv;
    for (std::size_t c = 0; c < u->size(); ++c) {
        if (!v[c]) continue;
        fam.levels(c, lv);
        for (std::size_t p = 0; p < P; ++p)
            for (int i = 1; i <= n; ++i) {
                const auto x = ChiFamily::value_at_level(n, i, lv[p], q);
                const std::size_t k = static_cast<std::size_t>(i - 1) * P + p;
                if (x > 0) ++a[k];
                if (x < 0) ++b[k];
            }
    }

    std::vector<SpreadCount> out;
    for (int i = 1; i <= n; ++i) {
        const BigInt zz = chamber_count(i, q) * chamber_count(n - i, q) * chamber_count(n, q);
        const BigInt ea = s.fold * gaussian(n - 1, n - i, q) * ipow(q, n - i) * zz;
        const BigInt eb = s.fold * gaussian(n - 1, i - 1, q) * ipow(q, n) * zz;
        for (std::size_t p = 0; p < P; ++p) {
            const std::size_t k = static_cast<std::size_t>(i - 1) * P + p;
            out.push_back({i, static_cast<std::uint32_t>(p), a[k], b[k], ea, eb});
        }
    }
    return out;
}

} // namespace chamberlab
