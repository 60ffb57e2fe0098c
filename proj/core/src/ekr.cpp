#include "chamberlab/ekr.hpp"

#include "chamberlab/counting.hpp"
#include "chamberlab/error.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace chamberlab {

const char* to_string(Provenance p)
{
    switch (p) {
    case Provenance::point_classical: return "point-classical";
    case Provenance::hyperplane_classical: return "hyperplane-classical";
    case Provenance::search: return "search";
    case Provenance::imported: return "imported";
    case Provenance::custom: break;
    }
    return "custom";
}

namespace {

int half_dim(const ChamberUniverse& u)
{
    const int d = u.ambient_dim();
    if (d < 2 || d % 2) throw PreconditionError("EKR sets are studied in even ambient dimension 2n");
    return d / 2;
}

std::int64_t small(const BigInt& v) { return v.convert_to<std::int64_t>(); }

} // namespace

EkrSet::EkrSet(UniversePtr u, Bitset members, Provenance p)
    : universe_(std::move(u)), members_(std::move(members)), size_(members_.count()), provenance_(p)
{
    if (members_.size() != universe_->size()) throw std::invalid_argument("member bitset size does not match the universe");
}

EkrSet EkrSet::classical_point(UniversePtr u, const Subspace& point)
{
    const int n = half_dim(*u);
    if (point.dim() != 1) throw PreconditionError("point-classical sets need a 1-subspace");
    const auto& lat = u->lattice();
    const auto p = lat.require_index(point);
    Bitset b(u->size());
    for (std::size_t c = 0; c < u->size(); ++c)
        if (lat.incident_point(p, n, u->part(c, n))) b.set(c);
    return EkrSet(std::move(u), std::move(b), Provenance::point_classical);
}

EkrSet EkrSet::classical_hyperplane(UniversePtr u, const Subspace& hyperplane)
{
    const int n = half_dim(*u);
    if (hyperplane.dim() != 2 * n - 1) throw PreconditionError("hyperplane-classical sets need a (2n-1)-subspace");
    const auto& lat = u->lattice();
    const auto h = lat.require_index(hyperplane);
    Bitset b(u->size());
    for (std::size_t c = 0; c < u->size(); ++c)
        if (lat.contained(n, u->part(c, n), 2 * n - 1, h)) b.set(c);
    return EkrSet(std::move(u), std::move(b), Provenance::hyperplane_classical);
}

bool EkrSet::is_coclique(const Adjacency* adj) const
{
    if (coclique_) return *coclique_;
    bool ok = true;
    if (adj) {
        if (&adj->universe() != universe_.get()) throw std::invalid_argument("adjacency belongs to a different universe");
        members_.for_each([&](std::size_t c) {
            if (ok && adj->row(c).intersects(members_)) ok = false;
        });
    } else {
        const auto m = members_.indices();
        for (std::size_t a = 0; a < m.size() && ok; ++a)
            for (std::size_t b = a + 1; b < m.size(); ++b)
                if (universe_->opposite(m[a], m[b])) {
                    ok = false;
                    break;
                }
        // a chamber is never opposite itself except in dimension 1
        if (ok && universe_->ambient_dim() == 1 && size_ > 0) ok = false;
    }
    coclique_ = ok;
    return ok;
}

bool EkrSet::is_maximum(const Adjacency* adj) const
{
    if (!is_coclique(adj)) throw PreconditionError("is_maximum needs a coclique");
    return BigInt(size_) == max_ekr_size(half_dim(*universe_), universe_->q());
}

void EkrSet::write(std::ostream& os) const
{
    os << "# chamberlab ekr-set\n"
       << "q " << universe_->q() << "\n"
       << "d " << universe_->ambient_dim() << "\n"
       << "order " << ChamberUniverse::order_version << "\n"
       << "size " << size_ << "\n";
    members_.for_each([&](std::size_t c) { os << c << "\n"; });
}

EkrSet EkrSet::read(std::istream& is, UniversePtr u)
{
    std::map<std::string, std::uint64_t> header;
    Bitset b(u->size());
    std::string line;
    std::size_t lineno = 0, count = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        auto fail = [&](const std::string& why) { throw std::runtime_error("EKR set line " + std::to_string(lineno) + ": " + why); };
        if (std::isalpha(static_cast<unsigned char>(key[0]))) {
            std::uint64_t v;
            if (!(ls >> v)) fail("header '" + key + "' needs an integer");
            header[key] = v;
            continue;
        }
        std::uint64_t c;
        try {
            std::size_t used;
            c = std::stoull(key, &used);
            if (used != key.size()) fail("not a chamber index: '" + key + "'");
        } catch (const std::logic_error&) {
            fail("not a chamber index: '" + key + "'");
        }
        if (c >= u->size()) fail("chamber index " + key + " outside the universe");
        if (b.test(c)) fail("duplicate chamber index " + key);
        b.set(c);
        ++count;
    }
    auto expect = [&](const char* key, std::uint64_t want) {
        auto it = header.find(key);
        if (it == header.end()) throw std::runtime_error(std::string("EKR set header is missing '") + key + "'");
        if (it->second != want)
            throw std::runtime_error(std::string("EKR set header '") + key + "' is " + std::to_string(it->second) + ", universe has " + std::to_string(want));
    };
    expect("q", u->q());
    expect("d", static_cast<std::uint64_t>(u->ambient_dim()));
    expect("order", ChamberUniverse::order_version);
    if (header.count("size") && header["size"] != count)
        throw std::runtime_error("EKR set header announces " + std::to_string(header["size"]) + " members, file lists " + std::to_string(count));
    return EkrSet(std::move(u), std::move(b), Provenance::imported);
}

void require_maximum(const EkrSet& f, const Adjacency* adj)
{
    if (!f.is_maximum(adj)) throw PreconditionError("operation needs a maximum EKR set, got a coclique of size " + std::to_string(f.size()));
}

bool is_ratio_tight(const EkrSet& f, const Adjacency& adj)
{
    const int n = half_dim(f.universe());
    const std::size_t want = small(-smallest_eigenvalue(n, f.universe().q()));
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (!f.contains(v) && adj.row(v).intersection_count(f.members()) != want) return false;
    return true;
}

std::vector<IntersectionCheck> antidesign_intersections(const EkrSet& f, const std::vector<AntidesignInstance>& instances)
{
    require_maximum(f);
    std::vector<IntersectionCheck> out;
    for (const auto& inst : instances) {
        require_same_universe(inst.vector.universe(), f.universe());
        out.push_back({inst.family, inst.parameters, inner_product(inst.vector, f.members()), inst.expected_intersection});
    }
    return out;
}

DualityTable::DualityTable(const SubspaceLattice& lat)
{
    const int d = lat.ambient_dim();
    table_.resize(static_cast<std::size_t>(d) + 1);
    for (int s = 0; s <= d; ++s)
        for (const auto& x : lat.level(s)) table_[static_cast<std::size_t>(s)].push_back(lat.require_index(annihilator(x)));
}

namespace {

WeightProfile profile_at(const EkrSet& f, int s, std::uint32_t idx, const DualityTable* dual)
{
    const auto& u = f.universe();
    const auto& lat = u.lattice();
    const int n = u.ambient_dim() / 2;
    const std::int64_t q = u.q();

    WeightProfile w{lat.at(s, idx), s};
    if (s > n) {
        // count in the dual space: C -> C^0 with (C^0)_k = (C_{2n-k})^0, S -> S^0
        const int sd = 2 * n - s;
        const auto S0 = dual->ann(s, idx);
        w.dual = true;
        f.members().for_each([&](std::size_t c) {
            if (dual->ann(s, u.part(c, s)) == S0)
                ++w.x;
            else if (lat.skew(s, dual->ann(sd, u.part(c, sd)), sd, S0))
                ++w.y;
        });
    } else {
        f.members().for_each([&](std::size_t c) {
            if (u.part(c, s) == idx)
                ++w.x;
            else if (lat.skew(s, idx, 2 * n - s, u.part(c, 2 * n - s)))
                ++w.y;
        });
    }
    const std::int64_t size = static_cast<std::int64_t>(f.size());
    w.z = size - w.x - w.y;

    const BigInt full = chamber_count(s, q) * chamber_count(2 * n - s, q);
    const BigInt wt = ipow(q, s * (2 * n - s) - n);
    w.heavy = BigInt(w.x) == full;
    w.identity_holds = BigInt(w.y) == wt * full - BigInt(w.x) * wt;
    if (w.heavy) {
        w.bound_holds = BigInt(w.z) == BigInt(size) - full;
    } else {
        const BigInt xb = full - ipow(q, n * n - n + (n - s) * (n - s));
        const BigInt zb = BigInt(size) - ipow(q, 2 * n * n - 2 * n);
        w.bound_holds = BigInt(w.x) <= xb && BigInt(w.z) <= zb;
    }
    return w;
}

void check_level(const ChamberUniverse& u, int s)
{
    if (s < 1 || s >= u.ambient_dim()) throw PreconditionError("subspace dimension must lie in [1, 2n-1]");
}

} // namespace

WeightProfile weight_profile(const Subspace& s, const EkrSet& f)
{
    require_maximum(f);
    const auto& u = f.universe();
    check_level(u, s.dim());
    const auto idx = u.lattice().require_index(s);
    std::optional<DualityTable> dual;
    if (s.dim() > u.ambient_dim() / 2) dual.emplace(u.lattice());
    return profile_at(f, s.dim(), idx, dual ? &*dual : nullptr);
}

std::vector<WeightProfile> weight_profiles(const EkrSet& f, int s)
{
    require_maximum(f);
    const auto& u = f.universe();
    check_level(u, s);
    std::optional<DualityTable> dual;
    if (s > u.ambient_dim() / 2) dual.emplace(u.lattice());
    std::vector<WeightProfile> out;
    for (std::uint32_t i = 0; i < u.lattice().count(s); ++i) out.push_back(profile_at(f, s, i, dual ? &*dual : nullptr));
    return out;
}

HeavyAnalysis heavy_analysis(const EkrSet& f, int s)
{
    const auto profiles = weight_profiles(f, s);
    const auto& u = f.universe();
    const auto& lat = u.lattice();
    const int n = u.ambient_dim() / 2;

    HeavyAnalysis h;
    h.s = s;
    for (std::uint32_t i = 0; i < profiles.size(); ++i) {
        const auto& p = profiles[i];
        if (p.heavy) h.heavy.push_back(i);
        if (p.heavy != (p.y == 0)) h.criterion_equivalence = false;
    }
    if (s <= n)
        for (std::size_t a = 0; a < h.heavy.size(); ++a)
            for (std::size_t b = a + 1; b < h.heavy.size(); ++b)
                if (lat.skew(s, h.heavy[a], s, h.heavy[b])) h.pairwise_meet = false;
    h.bound = gaussian(2 * n - 1, std::min(s, 2 * n - s) - 1, u.q());
    h.within_bound = BigInt(h.heavy.size()) <= h.bound;
    return h;
}

std::vector<std::int64_t> LineWeights::spectrum() const
{
    std::set<std::int64_t> s(weight.begin(), weight.end());
    return {s.begin(), s.end()};
}

LineWeights line_weight_spectrum(const EkrSet& f)
{
    const auto& u = f.universe();
    if (u.ambient_dim() != 4) throw PreconditionError("line weights are defined for F_q^4 only");
    require_maximum(f);
    const auto& lat = u.lattice();
    const std::int64_t q = u.q();
    const std::size_t L = lat.count(2);

    LineWeights r;
    r.allowed = {0, 1, 2, q + 1, 2 * q + 1, (q + 1) * (q + 1)};
    r.weight.assign(L, 0);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> with_point, with_plane;
    std::set<std::uint32_t> member_lines;
    f.members().for_each([&](std::size_t c) {
        const auto l = u.part(c, 2);
        ++r.weight[l];
        ++with_point[{l, u.part(c, 1)}];
        ++with_plane[{l, u.part(c, 3)}];
        member_lines.insert(l);
    });

    r.pi_line.assign(L, false);
    r.p_line.assign(L, false);
    for (auto [key, cnt] : with_plane)
        if (cnt == q + 1 && r.weight[key.first] < (q + 1) * (q + 1)) r.pi_line[key.first] = true;
    for (auto [key, cnt] : with_point)
        if (cnt == q + 1 && r.weight[key.first] < (q + 1) * (q + 1)) r.p_line[key.first] = true;

    for (std::uint32_t l = 0; l < L; ++l) {
        if (std::find(r.allowed.begin(), r.allowed.end(), r.weight[l]) == r.allowed.end()) r.spectrum_allowed = false;
        const bool meets_all = std::none_of(member_lines.begin(), member_lines.end(), [&](std::uint32_t m) { return lat.skew(2, l, 2, m); });
        if ((r.weight[l] == (q + 1) * (q + 1)) != meets_all) r.full_weight_criterion = false;
    }
    for (std::uint32_t a = 0; a < L; ++a)
        for (std::uint32_t b = a + 1; b < L; ++b) {
            if (!lat.skew(2, a, 2, b)) continue;
            if (r.pi_line[a] && r.pi_line[b]) r.pi_lines_pairwise_meet = false;
            if (r.p_line[a] && r.p_line[b]) r.p_lines_pairwise_meet = false;
        }
    return r;
}

bool lines_pairwise_meet(const EkrSet& f)
{
    const auto& u = f.universe();
    if (u.ambient_dim() != 4) throw PreconditionError("lines_pairwise_meet is defined for F_q^4 only");
    std::set<std::uint32_t> lines;
    f.members().for_each([&](std::size_t c) { lines.insert(u.part(c, 2)); });
    const std::vector<std::uint32_t> l(lines.begin(), lines.end());
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = a + 1; b < l.size(); ++b)
            if (u.lattice().skew(2, l[a], 2, l[b])) return false;
    return true;
}

std::string Classification::describe() const
{
    switch (kind) {
    case Kind::point: return "point-classical " + witness->to_string();
    case Kind::hyperplane: return "hyperplane-classical " + witness->to_string();
    case Kind::non_classical: break;
    }
    return "non-classical";
}

Classification classify(const EkrSet& f)
{
    const auto& u = f.universe();
    const int n = half_dim(u);
    const auto& lat = u.lattice();
    Classification r;
    if (f.size() == 0) return r;

    Bitset common(lat.point_count()), covered(lat.point_count());
    common.set_all();
    f.members().for_each([&](std::size_t c) {
        common &= lat.points(n, u.part(c, n));
        covered |= lat.points(n, u.part(c, n));
    });
    if (common.any()) {
        r.kind = Classification::Kind::point;
        r.witness = lat.at(1, common.first());
        return r;
    }
    for (std::uint32_t h = 0; h < lat.count(2 * n - 1); ++h)
        if (covered.is_subset_of(lat.points(2 * n - 1, h))) {
            r.kind = Classification::Kind::hyperplane;
            r.witness = lat.at(2 * n - 1, h);
            return r;
        }
    return r;
}

} // namespace chamberlab
