#pragma once

#include "chamberlab/adjacency.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chamberlab {

enum class SearchMode { prove_alpha, enumerate_maximum };

enum class SearchStatus {
    certified,    // prove_alpha: no coclique of size target + 1 exists
    refuted,      // prove_alpha: a coclique of size target + 1 was found
    complete,     // enumerate_maximum: every coclique of size target was listed
    inconclusive, // node budget exhausted before the answer was settled
};

const char* to_string(SearchStatus s);

struct SearchOptions {
    SearchMode mode = SearchMode::prove_alpha;
    std::size_t target = 0;
    std::uint64_t node_budget = 1'000'000'000;
    /// Budget for enumerating the maximum cliques used by the bound.
    std::uint64_t clique_budget = 50'000'000;
    /// When set, every vertex outside a target-size coclique must have
    /// exactly this many neighbours inside it; branches that cannot meet it
    /// are cut. Only sound when target equals the ratio bound and the graph's
    /// least eigenvalue is -ratio_degree; callers verify the property first.
    std::optional<std::size_t> ratio_degree;
    /// Branch path from an inconclusive run; skips the subtrees it already
    /// explored.
    std::vector<std::uint32_t> resume_from;
};

struct SearchResult {
    SearchStatus status = SearchStatus::inconclusive;
    std::uint64_t nodes = 0;
    std::size_t clique_size = 0;   // size of the cliques in the bounding family
    std::size_t clique_count = 0;
    bool cliques_complete = false; // the family holds every maximum clique
    std::size_t root_bound = 0;
    /// prove_alpha + refuted: the coclique of size target + 1.
    std::optional<Bitset> witness;
    /// enumerate_maximum: cocliques of size target, sorted by member indices.
    std::vector<Bitset> cocliques;
    /// Branch path to resume from when inconclusive.
    std::vector<std::uint32_t> resume_token;
};

/// Exact branch and bound for cocliques of the Kneser graph.
///
/// The bound uses a family of cliques covering every vertex (all maximum
/// cliques when they can be listed within budget, padded with greedy
/// cliques): a coclique J inside the candidate set P meets each clique at
/// most once, so the sum over J of the number of cliques through each
/// vertex is at most the number of cliques meeting P. Branching picks the
/// clique with the fewest candidates and tries each of them, then none.
SearchResult max_coclique_search(const Adjacency& adj, const SearchOptions& opt);

std::string format_resume_token(const std::vector<std::uint32_t>& path);
std::vector<std::uint32_t> parse_resume_token(const std::string& s);

} // namespace chamberlab
