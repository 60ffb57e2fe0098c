#include "chamberlab/chambers.hpp"

#include "chamberlab/counting.hpp"
#include "chamberlab/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace chamberlab {

Flag::Flag(std::vector<Subspace> members) : members_(std::move(members))
{
    if (members_.empty()) throw PreconditionError("a flag must have at least one member");
    std::sort(members_.begin(), members_.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
    const int d = members_.front().ambient_dim();
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const auto& m = members_[i];
        if (m.ambient_dim() != d) throw PreconditionError("flag members live in different ambient spaces");
        if (m.dim() == 0 || m.dim() == d) throw PreconditionError("flag members must be proper nontrivial subspaces");
        if (i > 0) {
            if (m.dim() == members_[i - 1].dim()) throw PreconditionError("flag members must have distinct dimensions");
            if (!m.contains(members_[i - 1])) throw PreconditionError("flag members must be nested");
        }
    }
}

std::vector<int> Flag::type() const
{
    std::vector<int> t;
    for (const auto& m : members_) t.push_back(m.dim());
    return t;
}

Chamber::Chamber(const Field& F, int d, std::vector<Subspace> parts) : field_(F), d_(d), parts_(std::move(parts))
{
    if (d < 1) throw PreconditionError("chamber needs ambient dimension >= 1");
    if (static_cast<int>(parts_.size()) != d - 1) throw PreconditionError("a chamber of F_q^d has exactly d-1 parts");
    for (int i = 0; i < d - 1; ++i) {
        const auto& p = parts_[static_cast<std::size_t>(i)];
        if (p.ambient_dim() != d || !(p.field() == F)) throw PreconditionError("chamber part in the wrong space");
        if (p.dim() != i + 1) throw PreconditionError("chamber part " + std::to_string(i + 1) + " has dimension " + std::to_string(p.dim()));
        if (i > 0 && !p.contains(parts_[static_cast<std::size_t>(i - 1)])) throw PreconditionError("chamber parts are not nested");
    }
}

Chamber Chamber::from_basis(const Field& F, std::span<const Vec> basis)
{
    const int d = static_cast<int>(basis.size());
    std::vector<Subspace> parts;
    for (int i = 1; i < d; ++i) parts.push_back(Subspace::span(F, d, basis.subspan(0, static_cast<std::size_t>(i))));
    if (d > 0 && Subspace::span(F, d, basis).dim() != d) throw PreconditionError("chamber basis is not a basis");
    return Chamber(F, d, std::move(parts));
}

Subspace Chamber::part(int i) const
{
    if (i <= 0) return Subspace::zero(field_, d_);
    if (i >= d_) return Subspace::full(field_, d_);
    return parts_[static_cast<std::size_t>(i - 1)];
}

bool is_opposite(const Chamber& c, const Chamber& d)
{
    if (c.ambient_dim() != d.ambient_dim()) throw std::invalid_argument("chambers live in different ambient spaces");
    const int n = c.ambient_dim();
    for (int i = 1; i < n; ++i)
        if (!meets_trivially(c.part(i), d.part(n - i))) return false;
    return true;
}

std::uint64_t default_chamber_cap()
{
    if (const char* env = std::getenv("CHAMBERLAB_MAX_CHAMBERS")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("CHAMBERLAB_MAX_CHAMBERS is not an integer: ") + env);
        }
    }
    return 10'000'000;
}

ChamberUniverse::ChamberUniverse(const Field& F, int d) : d_(d), lattice_(F, d) {}

std::shared_ptr<const ChamberUniverse> ChamberUniverse::build(const Field& F, int d, std::uint64_t cap)
{
    if (d < 1) throw PreconditionError("chamber universe needs d >= 1");
    const BigInt expected = chamber_count(d, F.order());
    if (expected > cap)
        throw CapacityError("F_" + std::to_string(F.order()) + "^" + std::to_string(d) + " has " + to_string(expected) +
                            " chambers, above the cap of " + std::to_string(cap) + " (set CHAMBERLAB_MAX_CHAMBERS to raise it)");

    std::shared_ptr<ChamberUniverse> u(new ChamberUniverse(F, d));
    const std::size_t n = expected.convert_to<std::size_t>();
    const auto width = static_cast<std::size_t>(d - 1);
    u->parts_.reserve(n * width);

    if (d == 1) {
        u->count_ = 1;
        return u;
    }

    std::vector<std::uint32_t> stack(width);
    auto extend = [&](auto&& self, int k) -> void {
        if (k == d - 1) {
            u->parts_.insert(u->parts_.end(), stack.begin(), stack.end());
            ++u->count_;
            return;
        }
        for (std::uint32_t next : u->lattice_.covers(k, stack[static_cast<std::size_t>(k - 1)])) {
            stack[static_cast<std::size_t>(k)] = next;
            self(self, k + 1);
        }
    };
    for (std::uint32_t p = 0; p < u->lattice_.count(1); ++p) {
        stack[0] = p;
        extend(extend, 1);
    }
    if (u->count_ != n) throw VerificationError("chamber enumeration produced " + std::to_string(u->count_) + " chambers, expected " + to_string(expected));
    return u;
}

Chamber ChamberUniverse::chamber(std::size_t c) const
{
    if (c >= count_) throw std::out_of_range("chamber index out of range");
    std::vector<Subspace> p;
    for (int k = 1; k < d_; ++k) p.push_back(lattice_.at(k, part(c, k)));
    return Chamber(field(), d_, std::move(p));
}

std::optional<std::size_t> ChamberUniverse::find(std::span<const std::uint32_t> key) const
{
    const auto width = static_cast<std::size_t>(d_ - 1);
    if (key.size() != width) return std::nullopt;
    if (width == 0) return 0;
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        auto p = parts(mid);
        if (std::lexicographical_compare(p.begin(), p.end(), key.begin(), key.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < count_ && std::equal(key.begin(), key.end(), parts(lo).begin())) return lo;
    return std::nullopt;
}

std::optional<std::size_t> ChamberUniverse::find(const Chamber& c) const
{
    if (c.ambient_dim() != d_ || !(c.field() == field())) return std::nullopt;
    std::vector<std::uint32_t> key;
    for (int k = 1; k < d_; ++k) {
        auto idx = lattice_.index_of(c.part(k));
        if (!idx) return std::nullopt;
        key.push_back(*idx);
    }
    return find(key);
}

int ChamberUniverse::entry_level(std::size_t c, std::uint32_t point) const
{
    for (int k = 1; k < d_; ++k)
        if (lattice_.incident_point(point, k, part(c, k))) return k;
    return d_;
}

bool ChamberUniverse::opposite(std::size_t a, std::size_t b) const
{
    for (int s = 1; s < d_; ++s)
        if (!lattice_.skew(s, part(a, s), d_ - s, part(b, d_ - s))) return false;
    return true;
}

std::vector<std::size_t> ChamberUniverse::chambers_with_part(int s, std::uint32_t idx) const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < count_; ++c)
        if (part(c, s) == idx) out.push_back(c);
    return out;
}

std::uint64_t count_opposite(const ChamberUniverse& u, std::size_t c)
{
    std::uint64_t n = 0;
    for (std::size_t o = 0; o < u.size(); ++o)
        if (u.opposite(c, o)) ++n;
    return n;
}

namespace {

int checked_dim(const ChamberUniverse& u, const Subspace& s)
{
    if (s.dim() < 1 || s.dim() >= u.ambient_dim()) throw PreconditionError("subspace dimension must lie in [1, d-1]");
    return s.dim();
}

} // namespace

std::uint64_t count_opposite_through(const ChamberUniverse& u, std::size_t c, const Subspace& s)
{
    const int k = checked_dim(u, s);
    const auto idx = u.lattice().require_index(s);
    std::uint64_t n = 0;
    for (std::size_t o = 0; o < u.size(); ++o)
        if (u.part(o, k) == idx && u.opposite(c, o)) ++n;
    return n;
}

std::optional<BigInt> predicted_opposite_through(const ChamberUniverse& u, std::size_t c, const Subspace& s)
{
    const int k = checked_dim(u, s);
    const auto idx = u.lattice().require_index(s);
    const int d = u.ambient_dim();
    if (!u.lattice().skew(k, idx, d - k, u.part(c, d - k))) return std::nullopt;
    return opposite_through_count(d, k, u.q());
}

std::uint64_t count_flag_extensions(const ChamberUniverse& u, const Flag& f)
{
    std::vector<std::pair<int, std::uint32_t>> req;
    for (const auto& m : f.members()) req.emplace_back(m.dim(), u.lattice().require_index(m));
    std::uint64_t n = 0;
    for (std::size_t c = 0; c < u.size(); ++c) {
        bool all = true;
        for (auto [k, idx] : req)
            if (u.part(c, k) != idx) {
                all = false;
                break;
            }
        if (all) ++n;
    }
    return n;
}

BigInt predicted_flag_extensions(const Flag& f)
{
    const auto t = f.type();
    return flag_extension_count(f.ambient_dim(), t, f.members().front().field().order());
}

BruteCheck check_skew_counts(const SubspaceLattice& lat)
{
    BruteCheck r;
    const int d = lat.ambient_dim();
    const auto q = static_cast<std::int64_t>(lat.field().order());
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) {
            const BigInt want = count_skew(d, a, b, q);
            for (std::size_t i = 0; i < lat.count(a); ++i) {
                std::uint64_t n = 0;
                for (std::size_t j = 0; j < lat.count(b); ++j)
                    if (lat.skew(a, i, b, j)) ++n;
                ++r.cases;
                if (BigInt(n) != want) ++r.failures;
            }
        }
    return r;
}

BruteCheck check_flag_extensions(const ChamberUniverse& u)
{
    BruteCheck r;
    const int d = u.ambient_dim();
    if (d < 2) return r;
    const auto q = static_cast<std::int64_t>(u.q());
    const BigInt total = chamber_count(d, q);
    for (std::uint32_t mask = 1; mask < (1u << (d - 1)); ++mask) {
        std::vector<int> type;
        for (int k = 1; k < d; ++k)
            if (mask & (1u << (k - 1))) type.push_back(k);
        std::map<std::vector<std::uint32_t>, std::uint64_t> hist;
        std::vector<std::uint32_t> key(type.size());
        for (std::size_t c = 0; c < u.size(); ++c) {
            for (std::size_t t = 0; t < type.size(); ++t) key[t] = u.part(c, type[t]);
            ++hist[key];
        }
        const BigInt want = flag_extension_count(d, type, q);
        for (const auto& [flag, n] : hist) {
            ++r.cases;
            if (BigInt(n) != want) ++r.failures;
        }
        // every flag of the type extends to a chamber, so all of them must appear
        ++r.cases;
        if (BigInt(hist.size()) * want != total) ++r.failures;
    }
    return r;
}

} // namespace chamberlab
