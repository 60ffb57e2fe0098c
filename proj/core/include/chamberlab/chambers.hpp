#pragma once

#include "chamberlab/bigint.hpp"
#include "chamberlab/lattice.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace chamberlab {

/// A non-empty set of pairwise nested proper nontrivial subspaces, stored in
/// increasing dimension.
class Flag {
public:
    explicit Flag(std::vector<Subspace> members);

    int ambient_dim() const { return members_.front().ambient_dim(); }
    const std::vector<Subspace>& members() const { return members_; }
    std::vector<int> type() const;

private:
    std::vector<Subspace> members_;
};

/// A full flag C_1 < C_2 < ... < C_{d-1} of F_q^d. For d = 1 the chamber is
/// the empty flag.
class Chamber {
public:
    Chamber(const Field& F, int d, std::vector<Subspace> parts);
    /// C_i = span(v_1, ..., v_i) for a basis v_1..v_d of F_q^d.
    static Chamber from_basis(const Field& F, std::span<const Vec> basis);

    int ambient_dim() const { return d_; }
    const Field& field() const { return field_; }
    /// C_i for 0 <= i <= d, with C_0 = 0 and C_d the full space.
    Subspace part(int i) const;
    const std::vector<Subspace>& parts() const { return parts_; }

    friend bool operator==(const Chamber& a, const Chamber& b) { return a.d_ == b.d_ && a.parts_ == b.parts_; }

private:
    Field field_;
    int d_;
    std::vector<Subspace> parts_;
};

/// C and D are opposite when C_i meets D_{d-i} trivially for 1 <= i <= d-1.
bool is_opposite(const Chamber& c, const Chamber& d);

std::uint64_t default_chamber_cap();

/// All chambers of F_q^d in a fixed order: lexicographic on the tuple of
/// lattice indices (C_1, ..., C_{d-1}). The order is stable across runs for
/// fixed (q, d); `order_version` names it in exported files.
class ChamberUniverse {
public:
    static constexpr int order_version = 1;

    /// Throws CapacityError when z_d(q) exceeds `cap`.
    static std::shared_ptr<const ChamberUniverse> build(const Field& F, int d, std::uint64_t cap = default_chamber_cap());

    const Field& field() const { return lattice_.field(); }
    unsigned q() const { return field().order(); }
    int ambient_dim() const { return d_; }
    const SubspaceLattice& lattice() const { return lattice_; }
    std::size_t size() const { return count_; }

    /// Lattice indices of C_1..C_{d-1}.
    std::span<const std::uint32_t> parts(std::size_t c) const
    {
        return {parts_.data() + c * static_cast<std::size_t>(d_ - 1), static_cast<std::size_t>(d_ - 1)};
    }
    /// Lattice index of C_k for 1 <= k <= d-1.
    std::uint32_t part(std::size_t c, int k) const { return parts_[c * static_cast<std::size_t>(d_ - 1) + static_cast<std::size_t>(k - 1)]; }

    Chamber chamber(std::size_t c) const;
    std::optional<std::size_t> find(std::span<const std::uint32_t> parts) const;
    std::optional<std::size_t> find(const Chamber& c) const;

    /// Point (1-subspace index) incidence with C_k, k in [0, d].
    bool point_in_part(std::size_t c, int k, std::uint32_t point) const
    {
        if (k <= 0) return false;
        if (k >= d_) return true;
        return lattice_.incident_point(point, k, part(c, k));
    }
    /// Smallest k with the point in C_k (d when it lies in no proper part).
    int entry_level(std::size_t c, std::uint32_t point) const;

    bool opposite(std::size_t a, std::size_t b) const;

    /// Chambers whose C_s is the given s-subspace (lattice index).
    std::vector<std::size_t> chambers_with_part(int s, std::uint32_t idx) const;

private:
    ChamberUniverse(const Field& F, int d);

    int d_;
    SubspaceLattice lattice_;
    std::size_t count_ = 0;
    std::vector<std::uint32_t> parts_;
};

using UniversePtr = std::shared_ptr<const ChamberUniverse>;

// Brute-force counting verifiers; each has a closed form in counting.hpp.

std::uint64_t count_opposite(const ChamberUniverse& u, std::size_t c);

/// Chambers that contain S and are opposite to chamber c.
std::uint64_t count_opposite_through(const ChamberUniverse& u, std::size_t c, const Subspace& s);

/// Closed-form value for count_opposite_through; nullopt when S meets
/// C_{d-s} nontrivially, where the formula does not apply.
std::optional<BigInt> predicted_opposite_through(const ChamberUniverse& u, std::size_t c, const Subspace& s);

/// Chambers containing every member of the flag.
std::uint64_t count_flag_extensions(const ChamberUniverse& u, const Flag& f);
BigInt predicted_flag_extensions(const Flag& f);

/// Outcome of an exhaustive brute-force comparison against a closed form.
struct BruteCheck {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    bool pass() const { return cases > 0 && failures == 0; }
};

/// For every a-subspace A and every b with a + b <= d: the b-subspaces
/// meeting A trivially number [d-a choose b] q^{ab}.
BruteCheck check_skew_counts(const SubspaceLattice& lat);

/// For every nonempty type and every flag of that type: the chambers
/// containing it match flag_extension_count, and every flag of the type
/// occurs.
BruteCheck check_flag_extensions(const ChamberUniverse& u);

} // namespace chamberlab
