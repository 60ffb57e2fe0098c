#pragma once

#include "chamberlab/bitset.hpp"
#include "chamberlab/subspace.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace chamberlab {

/// Interned table of every subspace of F_q^d, grouped by dimension.
///
/// Subspaces of dimension s are indexed 0..count(s)-1 in sorted order. Each
/// subspace carries the set of 1-subspaces (points) it contains, so
/// incidence and trivial-intersection tests reduce to bitset operations.
class SubspaceLattice {
public:
    SubspaceLattice(Field F, int d);

    const Field& field() const { return field_; }
    int ambient_dim() const { return d_; }

    std::size_t count(int s) const { return levels_.at(static_cast<std::size_t>(s)).size(); }
    const Subspace& at(int s, std::size_t i) const { return levels_[static_cast<std::size_t>(s)][i]; }
    const std::vector<Subspace>& level(int s) const { return levels_.at(static_cast<std::size_t>(s)); }
    std::optional<std::uint32_t> index_of(const Subspace& x) const;
    /// index_of that throws when the subspace is foreign to this lattice.
    std::uint32_t require_index(const Subspace& x) const;

    std::size_t point_count() const { return count(1); }
    /// Index of the 1-subspace spanned by a nonzero vector.
    std::uint32_t point_of(std::span<const Elem> v) const;
    const Bitset& points(int s, std::size_t i) const { return points_[static_cast<std::size_t>(s)][i]; }

    bool incident_point(std::uint32_t point, int s, std::size_t i) const { return points(s, i).test(point); }
    /// Trivial intersection of an s-subspace and a t-subspace.
    bool skew(int s, std::size_t a, int t, std::size_t b) const { return !points(s, a).intersects(points(t, b)); }
    /// True when the s-subspace `small` lies in the t-subspace `big`.
    bool contained(int s, std::size_t small, int t, std::size_t big) const { return points(s, small).is_subset_of(points(t, big)); }

    /// Indices of the (s+1)-subspaces containing the given s-subspace, ascending.
    const std::vector<std::uint32_t>& covers(int s, std::size_t i) const { return covers_[static_cast<std::size_t>(s)][i]; }

private:
    std::uint64_t encode(std::span<const Elem> v) const;

    Field field_;
    int d_;
    std::vector<std::vector<Subspace>> levels_;
    std::vector<std::unordered_map<Subspace, std::uint32_t>> index_;
    std::vector<std::vector<Bitset>> points_;
    std::vector<std::vector<std::vector<std::uint32_t>>> covers_;
    std::vector<std::int32_t> point_lookup_;
};

} // namespace chamberlab
