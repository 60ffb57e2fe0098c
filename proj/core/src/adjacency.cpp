#include "chamberlab/adjacency.hpp"

#include "chamberlab/counting.hpp"
#include "chamberlab/error.hpp"

#include <ostream>
#include <string>

namespace chamberlab {

Adjacency::Adjacency(UniversePtr universe) : universe_(std::move(universe))
{
    const auto& u = *universe_;
    const std::size_t n = u.size();
    if (n > max_vertices)
        throw CapacityError("adjacency cache limited to " + std::to_string(max_vertices) + " chambers, universe has " + std::to_string(n));
    const int d = u.ambient_dim();
    const auto& lat = u.lattice();

    // skew_to[s][a]: chambers D whose (d-s)-part meets the s-subspace a trivially.
    std::vector<std::vector<Bitset>> skew_to(static_cast<std::size_t>(d));
    for (int s = 1; s < d; ++s) {
        const int t = d - s;
        std::vector<std::vector<std::uint32_t>> skew_list(lat.count(t));
        for (std::size_t b = 0; b < lat.count(t); ++b)
            for (std::size_t a = 0; a < lat.count(s); ++a)
                if (lat.skew(s, a, t, b)) skew_list[b].push_back(static_cast<std::uint32_t>(a));
        auto& lvl = skew_to[static_cast<std::size_t>(s)];
        lvl.assign(lat.count(s), Bitset(n));
        for (std::size_t c = 0; c < n; ++c)
            for (auto a : skew_list[u.part(c, t)]) lvl[a].set(c);
    }

    rows_.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        Bitset r(n);
        r.set_all();
        for (int s = 1; s < d; ++s) r &= skew_to[static_cast<std::size_t>(s)][u.part(c, s)];
        rows_.push_back(std::move(r));
    }
}

std::optional<std::size_t> Adjacency::regular_degree() const
{
    if (rows_.empty()) return std::nullopt;
    const std::size_t k = degree(0);
    for (std::size_t v = 1; v < rows_.size(); ++v)
        if (degree(v) != k) return std::nullopt;
    return k;
}

std::uint64_t Adjacency::edge_count() const
{
    std::uint64_t twice = 0, loops = 0;
    for (std::size_t v = 0; v < rows_.size(); ++v) {
        twice += rows_[v].count();
        if (rows_[v].test(v)) ++loops;
    }
    return (twice - loops) / 2;
}

void write_graph(std::ostream& os, const ChamberUniverse& u, GraphFormat fmt, const Adjacency* adj)
{
    const std::size_t n = u.size();
    auto is_edge = [&](std::size_t a, std::size_t b) { return adj ? adj->adjacent(a, b) : u.opposite(a, b); };
    if (fmt == GraphFormat::dimacs) {
        std::uint64_t m = 0;
        if (adj) {
            m = adj->edge_count();
        } else {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    if (is_edge(a, b)) ++m;
        }
        os << "p edge " << n << " " << m << "\n";
    }
    const char* prefix = fmt == GraphFormat::dimacs ? "e " : "";
    for (std::size_t a = 0; a < n; ++a) {
        auto emit = [&](std::size_t b) {
            if (b > a) os << prefix << a + 1 << " " << b + 1 << "\n";
        };
        if (adj) {
            adj->for_each_neighbor(a, emit);
        } else {
            for (std::size_t b = a + 1; b < n; ++b)
                if (is_edge(a, b)) emit(b);
        }
    }
}

BruteCheck check_opposite_counts(const Adjacency& adj)
{
    BruteCheck r;
    const auto& u = adj.universe();
    const BigInt want = opposite_count(u.ambient_dim(), u.q());
    for (std::size_t c = 0; c < adj.size(); ++c) {
        ++r.cases;
        if (BigInt(adj.degree(c)) != want) ++r.failures;
    }
    return r;
}

BruteCheck check_opposite_through(const Adjacency& adj)
{
    BruteCheck r;
    const auto& u = adj.universe();
    const auto& lat = u.lattice();
    const int d = u.ambient_dim();
    std::vector<std::vector<std::uint64_t>> hist(static_cast<std::size_t>(d));
    std::vector<BigInt> want(static_cast<std::size_t>(d));
    for (int s = 1; s < d; ++s) want[static_cast<std::size_t>(s)] = opposite_through_count(d, s, u.q());
    for (std::size_t c = 0; c < adj.size(); ++c) {
        for (int s = 1; s < d; ++s) hist[static_cast<std::size_t>(s)].assign(lat.count(s), 0);
        adj.for_each_neighbor(c, [&](std::size_t o) {
            for (int s = 1; s < d; ++s) ++hist[static_cast<std::size_t>(s)][u.part(o, s)];
        });
        for (int s = 1; s < d; ++s)
            for (std::size_t i = 0; i < lat.count(s); ++i) {
                const bool skew = lat.skew(s, i, d - s, u.part(c, d - s));
                ++r.cases;
                if (BigInt(hist[static_cast<std::size_t>(s)][i]) != (skew ? want[static_cast<std::size_t>(s)] : BigInt(0))) ++r.failures;
            }
    }
    return r;
}

} // namespace chamberlab
