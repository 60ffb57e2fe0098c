#include "chamberlab/search.hpp"

#include "chamberlab/error.hpp"

#include <algorithm>
#include <sstream>

namespace chamberlab {

const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::certified: return "certified";
    case SearchStatus::refuted: return "refuted";
    case SearchStatus::complete: return "complete";
    case SearchStatus::inconclusive: break;
    }
    return "inconclusive";
}

std::string format_resume_token(const std::vector<std::uint32_t>& path)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "." : "") << path[i];
    return os.str();
}

std::vector<std::uint32_t> parse_resume_token(const std::string& s)
{
    std::vector<std::uint32_t> out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, '.')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(part, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used == 0 || used != part.size()) throw std::invalid_argument("malformed resume token '" + s + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

namespace {

/// Largest clique size by branch and bound with a greedy colouring bound.
class CliqueFinder {
public:
    CliqueFinder(const Adjacency& adj, std::uint64_t budget) : adj_(adj), budget_(budget) {}

    /// Clique number, or the largest size seen when the budget runs out.
    std::size_t omega(bool& exact)
    {
        Bitset all(adj_.size());
        all.set_all();
        best_ = 0;
        nodes_ = 0;
        grow(0, all);
        exact = nodes_ <= budget_;
        return best_;
    }

    /// Every clique of size k; stops early (returning false) past the budget.
    bool enumerate(std::size_t k, std::vector<Bitset>& out)
    {
        Bitset all(adj_.size()), cur(adj_.size());
        all.set_all();
        nodes_ = 0;
        return list(k, 0, cur, all, out);
    }

private:
    std::size_t colour_bound(const Bitset& cand) const
    {
        Bitset left = cand;
        std::size_t colours = 0;
        while (left.any()) {
            ++colours;
            Bitset avail = left; // greedy independent set in the graph = one colour class
            while (avail.any()) {
                const auto v = avail.first();
                left.reset(v);
                avail.reset(v);
                avail.subtract(adj_.row(v));
            }
        }
        return colours;
    }

    void grow(std::size_t size, Bitset cand)
    {
        if (++nodes_ > budget_) return;
        if (cand.none()) {
            best_ = std::max(best_, size);
            return;
        }
        if (size + colour_bound(cand) <= best_) return;
        while (cand.any()) {
            const auto v = cand.first();
            cand.reset(v);
            grow(size + 1, cand & adj_.row(v));
            if (nodes_ > budget_ || size + cand.count() <= best_) return;
        }
    }

    bool list(std::size_t k, std::size_t size, Bitset& cur, Bitset cand, std::vector<Bitset>& out)
    {
        if (++nodes_ > budget_) return false;
        if (size == k) {
            out.push_back(cur);
            return true;
        }
        if (size + cand.count() < k) return true;
        while (cand.any()) {
            const auto v = cand.first();
            cand.reset(v);
            if (size + 1 + cand.count() < k) break;
            cur.set(v);
            const bool ok = list(k, size + 1, cur, cand & adj_.row(v), out);
            cur.reset(v);
            if (!ok) return false;
        }
        return true;
    }

    const Adjacency& adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t best_ = 0;
};

class Search {
public:
    Search(const Adjacency& adj, const SearchOptions& opt, std::vector<Bitset> cliques, SearchResult& res)
        : adj_(adj), opt_(opt), cliques_(std::move(cliques)), res_(res), through_(adj.size(), 0)
    {
        for (const auto& k : cliques_) k.for_each([&](std::size_t v) { ++through_[v]; });
        goal_ = opt.mode == SearchMode::prove_alpha ? opt.target + 1 : opt.target;
    }

    std::size_t bound(const Bitset& cand) const
    {
        std::size_t live = 0;
        for (const auto& k : cliques_)
            if (k.intersects(cand)) ++live;
        std::vector<std::size_t> m;
        m.reserve(cand.count());
        cand.for_each([&](std::size_t v) { m.push_back(through_[v]); });
        std::sort(m.begin(), m.end());
        std::size_t used = 0, j = 0;
        for (; j < m.size(); ++j) {
            if (used + m[j] > live) break;
            used += m[j];
        }
        return j;
    }

    void run()
    {
        Bitset chosen(adj_.size()), cand(adj_.size());
        cand.set_all();
        res_.root_bound = bound(cand);
        resuming_ = !opt_.resume_from.empty();
        descend(chosen, 0, cand);
    }

    bool exhausted() const { return exhausted_; }
    bool stopped() const { return stopped_; }

private:
    // Forced exclusions from ratio tightness; false when the branch is dead.
    bool propagate(const Bitset& chosen, Bitset& cand) const
    {
        if (!opt_.ratio_degree) return true;
        const std::size_t want = *opt_.ratio_degree;
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t v = 0; v < adj_.size(); ++v) {
                if (chosen.test(v) || cand.test(v)) continue;
                const std::size_t in = adj_.row(v).intersection_count(chosen);
                if (in > want) return false;
                const std::size_t open = adj_.row(v).intersection_count(cand);
                if (in + open < want) return false;
                if (in == want && open) {
                    cand.subtract(adj_.row(v));
                    changed = true;
                }
            }
        }
        return true;
    }

    void descend(Bitset& chosen, std::size_t size, Bitset cand)
    {
        if (stopped_ || exhausted_) return;
        if (resuming_ && path_.size() == opt_.resume_from.size()) resuming_ = false;
        if (!resuming_) {
            if (res_.nodes >= opt_.node_budget) {
                exhausted_ = true;
                res_.resume_token = path_;
                return;
            }
            ++res_.nodes;
        }
        if (size == goal_) {
            if (opt_.mode == SearchMode::prove_alpha) {
                res_.witness = chosen;
                stopped_ = true;
            } else {
                res_.cocliques.push_back(chosen);
            }
            return;
        }
        if (!propagate(chosen, cand)) return;
        if (size + bound(cand) < goal_) return;

        std::size_t best = SIZE_MAX, pick = 0;
        for (std::size_t k = 0; k < cliques_.size(); ++k) {
            const auto c = cliques_[k].intersection_count(cand);
            if (c && c < best) {
                best = c;
                pick = k;
            }
        }
        const auto branch = (cliques_[pick] & cand).indices();
        const std::uint32_t first = resuming_ ? opt_.resume_from[path_.size()] : 0;
        for (std::uint32_t i = 0; i <= branch.size(); ++i) {
            if (i >= first) {
                path_.push_back(i);
                if (i < branch.size()) {
                    const auto v = branch[i];
                    chosen.set(v);
                    Bitset next = cand;
                    next.subtract(adj_.row(v));
                    next.reset(v);
                    descend(chosen, size + 1, std::move(next));
                    chosen.reset(v);
                } else {
                    descend(chosen, size, cand);
                }
                path_.pop_back();
                if (stopped_ || exhausted_) return;
            }
            if (i < branch.size()) cand.reset(branch[i]);
        }
    }

    const Adjacency& adj_;
    const SearchOptions& opt_;
    std::vector<Bitset> cliques_;
    SearchResult& res_;
    std::vector<std::size_t> through_;
    std::size_t goal_ = 0;
    std::vector<std::uint32_t> path_;
    bool resuming_ = false, exhausted_ = false, stopped_ = false;
};

/// Greedy maximal clique through v, adding the lowest-index candidate each step.
Bitset greedy_clique(const Adjacency& adj, std::size_t v)
{
    Bitset k(adj.size()), cand = adj.row(v);
    k.set(v);
    while (cand.any()) {
        const auto w = cand.first();
        k.set(w);
        cand &= adj.row(w);
    }
    return k;
}

} // namespace

SearchResult max_coclique_search(const Adjacency& adj, const SearchOptions& opt)
{
    if (opt.target == 0) throw PreconditionError("search target must be positive");
    SearchResult res;
    if (adj.size() == 0) {
        res.status = opt.mode == SearchMode::prove_alpha ? SearchStatus::certified : SearchStatus::complete;
        return res;
    }
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (adj.adjacent(v, v)) throw PreconditionError("coclique search needs a loopless graph");

    CliqueFinder finder(adj, opt.clique_budget);
    bool omega_exact = false;
    res.clique_size = finder.omega(omega_exact);
    std::vector<Bitset> cliques;
    res.cliques_complete = finder.enumerate(res.clique_size, cliques) && omega_exact;
    Bitset covered(adj.size());
    for (const auto& k : cliques) covered |= k;
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (!covered.test(v)) {
            cliques.push_back(greedy_clique(adj, v));
            covered |= cliques.back();
        }
    res.clique_count = cliques.size();

    Search s(adj, opt, std::move(cliques), res);
    s.run();
    if (s.exhausted()) {
        res.status = SearchStatus::inconclusive;
    } else if (opt.mode == SearchMode::prove_alpha) {
        res.status = res.witness ? SearchStatus::refuted : SearchStatus::certified;
    } else {
        res.status = SearchStatus::complete;
    }
    std::sort(res.cocliques.begin(), res.cocliques.end(), [](const Bitset& a, const Bitset& b) { return a.indices() < b.indices(); });
    return res;
}

} // namespace chamberlab
