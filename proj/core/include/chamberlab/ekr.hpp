#pragma once

#include "chamberlab/adjacency.hpp"
#include "chamberlab/antidesigns.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chamberlab {

enum class Provenance { custom, point_classical, hyperplane_classical, search, imported };

const char* to_string(Provenance p);

/// A set of chambers of one universe. Coclique status is computed on first
/// request and cached.
class EkrSet {
public:
    EkrSet(UniversePtr u, Bitset members, Provenance p = Provenance::custom);

    /// Chambers whose C_n contains the point P (ambient dimension 2n).
    static EkrSet classical_point(UniversePtr u, const Subspace& point);
    /// Chambers whose C_n lies in the hyperplane H.
    static EkrSet classical_hyperplane(UniversePtr u, const Subspace& hyperplane);

    const ChamberUniverse& universe() const { return *universe_; }
    const UniversePtr& universe_ptr() const { return universe_; }
    const Bitset& members() const { return members_; }
    std::size_t size() const { return size_; }
    bool contains(std::size_t c) const { return members_.test(c); }
    Provenance provenance() const { return provenance_; }

    /// No two members opposite. Uses the adjacency rows when given.
    bool is_coclique(const Adjacency* adj = nullptr) const;
    /// |F| = z_{2n}(q) / (q^n + 1); throws PreconditionError when F is not a coclique.
    bool is_maximum(const Adjacency* adj = nullptr) const;

    /// Header lines "# chamberlab ekr-set", "q Q", "d D", "order V", "size N",
    /// then one chamber index per line, ascending.
    void write(std::ostream& os) const;
    /// Throws std::runtime_error on malformed input or a header that does not
    /// match the universe.
    static EkrSet read(std::istream& is, UniversePtr u);

    friend bool operator==(const EkrSet& a, const EkrSet& b) { return a.universe_ == b.universe_ && a.members_ == b.members_; }

private:
    UniversePtr universe_;
    Bitset members_;
    std::size_t size_;
    Provenance provenance_;
    mutable std::optional<bool> coclique_;
};

/// Throws PreconditionError unless F is a maximum EKR set.
void require_maximum(const EkrSet& f, const Adjacency* adj = nullptr);

/// Every vertex outside F has exactly q^{2n(n-1)} neighbours in F.
bool is_ratio_tight(const EkrSet& f, const Adjacency& adj);

struct IntersectionCheck {
    std::string family;
    nlohmann::json parameters;
    BigInt actual, expected;
    bool pass() const { return actual == expected; }
};

/// <v, 1_F> for each antidesign instance, next to its predicted value.
std::vector<IntersectionCheck> antidesign_intersections(const EkrSet& f, const std::vector<AntidesignInstance>& instances);

/// Counts for a subspace S of dimension s (0 < s < 2n) against a maximum set:
/// x members with C_s = S, y members with C_{2n-s} meeting S trivially,
/// z the rest.
struct WeightProfile {
    Subspace subspace;
    int s = 0;
    std::int64_t x = 0, y = 0, z = 0;
    bool heavy = false;
    bool dual = false;          // counted through annihilators (s > n)
    bool identity_holds = false; // y = w z_s z_{2n-s} - x w, w = q^{s(2n-s)-n}
    bool bound_holds = false;    // heavy: z = |F| - z_s z_{2n-s}; light: the x and z bounds
};

/// Precomputed annihilator indices on a lattice: ann(s, i) is the
/// (d-s)-subspace index of the annihilator of the s-subspace i.
class DualityTable {
public:
    explicit DualityTable(const SubspaceLattice& lat);
    std::uint32_t ann(int s, std::uint32_t i) const { return table_[static_cast<std::size_t>(s)][i]; }

private:
    std::vector<std::vector<std::uint32_t>> table_;
};

WeightProfile weight_profile(const Subspace& s, const EkrSet& f);
/// Profiles of every s-subspace, in lattice order.
std::vector<WeightProfile> weight_profiles(const EkrSet& f, int s);

struct HeavyAnalysis {
    int s = 0;
    std::vector<std::uint32_t> heavy;   // lattice indices at level s
    bool pairwise_meet = true;          // asserted for s <= n
    bool criterion_equivalence = true;  // heavy iff y = 0
    BigInt bound;                       // [2n-1 choose min(s, 2n-s) - 1]
    bool within_bound = true;
    bool pass() const { return pairwise_meet && criterion_equivalence && within_bound; }
};

HeavyAnalysis heavy_analysis(const EkrSet& f, int s);

/// Weights of the lines of PG(3, q) (ambient dimension 4) with respect to F.
struct LineWeights {
    std::vector<std::int64_t> weight;   // per 2-subspace lattice index
    std::vector<bool> pi_line, p_line;  // only for weight < (q+1)^2
    std::vector<std::int64_t> allowed;  // {0, 1, 2, q+1, 2q+1, (q+1)^2}
    bool spectrum_allowed = true;
    /// weight (q+1)^2 iff the line meets the line of every member.
    bool full_weight_criterion = true;
    bool pi_lines_pairwise_meet = true;
    bool p_lines_pairwise_meet = true;
    bool pass() const { return spectrum_allowed && full_weight_criterion && pi_lines_pairwise_meet && p_lines_pairwise_meet; }
    /// Sorted distinct weights.
    std::vector<std::int64_t> spectrum() const;
};

LineWeights line_weight_spectrum(const EkrSet& f);

/// The lines C_2 of all members pairwise meet (ambient dimension 4).
bool lines_pairwise_meet(const EkrSet& f);

struct Classification {
    enum class Kind { point, hyperplane, non_classical } kind = Kind::non_classical;
    std::optional<Subspace> witness;
    std::string describe() const;
};

/// Looks for a point in C_n of every member, then for a hyperplane
/// containing C_n of every member.
Classification classify(const EkrSet& f);

} // namespace chamberlab
