#include "chamberlab/lattice.hpp"

#include "chamberlab/error.hpp"

#include <stdexcept>

namespace chamberlab {

namespace {

constexpr std::uint64_t max_lookup_entries = std::uint64_t{1} << 26;

} // namespace

SubspaceLattice::SubspaceLattice(Field F, int d) : field_(std::move(F)), d_(d)
{
    if (d < 1) throw PreconditionError("lattice needs ambient dimension >= 1");
    std::uint64_t entries = 1;
    for (int i = 0; i < d; ++i) {
        entries *= field_.order();
        if (entries > max_lookup_entries) throw CapacityError("ambient space too large for an interned subspace lattice");
    }

    levels_.resize(static_cast<std::size_t>(d) + 1);
    index_.resize(static_cast<std::size_t>(d) + 1);
    for (int s = 0; s <= d; ++s) {
        levels_[static_cast<std::size_t>(s)] = enumerate_subspaces(field_, d, s);
        auto& idx = index_[static_cast<std::size_t>(s)];
        idx.reserve(levels_[static_cast<std::size_t>(s)].size());
        for (std::size_t i = 0; i < levels_[static_cast<std::size_t>(s)].size(); ++i)
            idx.emplace(levels_[static_cast<std::size_t>(s)][i], static_cast<std::uint32_t>(i));
    }

    point_lookup_.assign(entries, -1);
    const auto& pts = levels_[1];
    for (std::size_t i = 0; i < pts.size(); ++i) point_lookup_[encode(pts[i].row(0))] = static_cast<std::int32_t>(i);

    points_.resize(static_cast<std::size_t>(d) + 1);
    for (int s = 0; s <= d; ++s) {
        auto& lvl = points_[static_cast<std::size_t>(s)];
        lvl.reserve(count(s));
        for (const auto& x : level(s)) {
            Bitset b(pts.size());
            if (s == 1) {
                b.set(index_[1].at(x));
            } else if (s > 1) {
                for (const auto& v : x.nonzero_vectors()) b.set(point_of(v));
            }
            lvl.push_back(std::move(b));
        }
    }

    covers_.resize(static_cast<std::size_t>(d) + 1);
    for (int s = 0; s < d; ++s) {
        auto& cv = covers_[static_cast<std::size_t>(s)];
        cv.resize(count(s));
        for (std::size_t i = 0; i < count(s); ++i)
            for (std::size_t j = 0; j < count(s + 1); ++j)
                if (contained(s, i, s + 1, j)) cv[i].push_back(static_cast<std::uint32_t>(j));
    }
    covers_[static_cast<std::size_t>(d)].resize(1);
}

std::uint64_t SubspaceLattice::encode(std::span<const Elem> v) const
{
    std::uint64_t code = 0;
    for (Elem e : v) code = code * field_.order() + e;
    return code;
}

std::uint32_t SubspaceLattice::point_of(std::span<const Elem> v) const
{
    if (static_cast<int>(v.size()) != d_) throw std::invalid_argument("vector length does not match the lattice");
    const Vec n = normalize_projective(field_, Vec(v.begin(), v.end()));
    const auto p = point_lookup_[encode(n)];
    if (p < 0) throw std::logic_error("point lookup failed");
    return static_cast<std::uint32_t>(p);
}

std::optional<std::uint32_t> SubspaceLattice::index_of(const Subspace& x) const
{
    if (x.ambient_dim() != d_ || !(x.field() == field_)) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(x.dim())];
    auto it = idx.find(x);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

std::uint32_t SubspaceLattice::require_index(const Subspace& x) const
{
    auto i = index_of(x);
    if (!i) throw std::invalid_argument("subspace " + x.to_string() + " does not belong to this lattice");
    return *i;
}

} // namespace chamberlab
