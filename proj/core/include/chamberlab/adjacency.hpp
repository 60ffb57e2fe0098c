#pragma once

#include "chamberlab/chambers.hpp"

#include <iosfwd>
#include <optional>

namespace chamberlab {

/// Cached oppositeness matrix of the Kneser graph on chambers, one bitset
/// row per chamber. Only built for universes of at most max_vertices
/// chambers; larger universes are handled by streaming the predicate.
class Adjacency {
public:
    static constexpr std::size_t max_vertices = std::size_t{1} << 14;

    explicit Adjacency(UniversePtr universe);

    const ChamberUniverse& universe() const { return *universe_; }
    const UniversePtr& universe_ptr() const { return universe_; }
    std::size_t size() const { return rows_.size(); }

    const Bitset& row(std::size_t v) const { return rows_[v]; }
    bool adjacent(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
    std::size_t degree(std::size_t v) const { return rows_[v].count(); }
    /// The common degree when every vertex has the same degree.
    std::optional<std::size_t> regular_degree() const;
    std::uint64_t edge_count() const;

    template <typename F>
    void for_each_neighbor(std::size_t v, F&& fn) const
    {
        rows_[v].for_each(fn);
    }

private:
    UniversePtr universe_;
    std::vector<Bitset> rows_;
};

/// Every chamber has exactly q^{d choose 2} neighbours.
BruteCheck check_opposite_counts(const Adjacency& adj);

/// For every chamber C and subspace S of dimension 1..d-1: the chambers
/// through S opposite to C number q^{(s choose 2) + (d-s choose 2)} when S
/// meets C_{d-s} trivially and zero otherwise.
BruteCheck check_opposite_through(const Adjacency& adj);

enum class GraphFormat { dimacs, edge_list };

/// Writes the Kneser graph with vertex numbers = chamber index + 1. DIMACS
/// output starts with "p edge N M" followed by "e u v" lines (u < v); the
/// edge list has one "u v" line per edge. Self-loops (only possible for
/// d = 1) are suppressed. Uses `adj` when given, the predicate otherwise.
void write_graph(std::ostream& os, const ChamberUniverse& u, GraphFormat fmt, const Adjacency* adj = nullptr);

} // namespace chamberlab
