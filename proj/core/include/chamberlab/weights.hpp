#pragma once

#include "chamberlab/chambers.hpp"

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace chamberlab {

/// Index/value pairs of the nonzero entries, ascending by index.
struct SparseWeights {
    std::size_t length = 0;
    std::vector<std::pair<std::uint32_t, std::int64_t>> entries;

    friend bool operator==(const SparseWeights&, const SparseWeights&) = default;
};

/// An integer-valued function on the chambers of a universe.
class WeightVector {
public:
    explicit WeightVector(UniversePtr u);
    WeightVector(UniversePtr u, std::vector<std::int64_t> values);

    static WeightVector ones(UniversePtr u);
    static WeightVector indicator(UniversePtr u, const Bitset& members);
    static WeightVector from_sparse(UniversePtr u, const SparseWeights& s);

    const ChamberUniverse& universe() const { return *universe_; }
    const UniversePtr& universe_ptr() const { return universe_; }
    std::size_t size() const { return values_.size(); }

    std::int64_t operator[](std::size_t c) const { return values_[c]; }
    void set(std::size_t c, std::int64_t v) { values_[c] = v; }
    const std::vector<std::int64_t>& values() const { return values_; }

    /// Sum of all entries (the mass 1^T v).
    BigInt total() const;
    std::size_t support_size() const;
    SparseWeights to_sparse() const;

    friend bool operator==(const WeightVector& a, const WeightVector& b)
    {
        return a.universe_ == b.universe_ && a.values_ == b.values_;
    }

private:
    UniversePtr universe_;
    std::vector<std::int64_t> values_;
};

/// Throws std::invalid_argument unless both live on the same universe.
void require_same_universe(const ChamberUniverse& a, const ChamberUniverse& b);

BigInt inner_product(const WeightVector& v, const WeightVector& w);
/// <v, 1_X> for a chamber set X.
BigInt inner_product(const WeightVector& v, const Bitset& members);

/// "index,value" CSV with a header line; zero entries are included.
void write_csv(std::ostream& os, const WeightVector& v);

} // namespace chamberlab
