#include "chamberlab/weights.hpp"

#include <ostream>
#include <stdexcept>

namespace chamberlab {

WeightVector::WeightVector(UniversePtr u) : universe_(std::move(u)), values_(universe_->size(), 0) {}

WeightVector::WeightVector(UniversePtr u, std::vector<std::int64_t> values) : universe_(std::move(u)), values_(std::move(values))
{
    if (values_.size() != universe_->size()) throw std::invalid_argument("weight vector length does not match the universe");
}

WeightVector WeightVector::ones(UniversePtr u)
{
    const auto n = u->size();
    return WeightVector(std::move(u), std::vector<std::int64_t>(n, 1));
}

WeightVector WeightVector::indicator(UniversePtr u, const Bitset& members)
{
    if (members.size() != u->size()) throw std::invalid_argument("chamber set size does not match the universe");
    WeightVector v(std::move(u));
    members.for_each([&](std::size_t c) { v.values_[c] = 1; });
    return v;
}

WeightVector WeightVector::from_sparse(UniversePtr u, const SparseWeights& s)
{
    if (s.length != u->size()) throw std::invalid_argument("sparse vector length does not match the universe");
    WeightVector v(std::move(u));
    for (auto [i, x] : s.entries) {
        if (i >= v.size()) throw std::out_of_range("sparse index out of range");
        v.values_[i] = x;
    }
    return v;
}

BigInt WeightVector::total() const
{
    ExactAccumulator acc;
    for (auto x : values_) acc.add(x);
    return acc.value();
}

std::size_t WeightVector::support_size() const
{
    std::size_t n = 0;
    for (auto x : values_)
        if (x) ++n;
    return n;
}

SparseWeights WeightVector::to_sparse() const
{
    SparseWeights s;
    s.length = values_.size();
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i]) s.entries.emplace_back(static_cast<std::uint32_t>(i), values_[i]);
    return s;
}

void require_same_universe(const ChamberUniverse& a, const ChamberUniverse& b)
{
    if (&a == &b) return;
    if (a.q() != b.q() || a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
        throw std::invalid_argument("weight vectors live on different chamber universes");
}

BigInt inner_product(const WeightVector& v, const WeightVector& w)
{
    require_same_universe(v.universe(), w.universe());
    ExactAccumulator acc;
    for (std::size_t i = 0; i < v.size(); ++i) acc.add_product(v[i], w[i]);
    return acc.value();
}

BigInt inner_product(const WeightVector& v, const Bitset& members)
{
    if (members.size() != v.size()) throw std::invalid_argument("chamber set size does not match the universe");
    ExactAccumulator acc;
    members.for_each([&](std::size_t c) { acc.add(v[c]); });
    return acc.value();
}

void write_csv(std::ostream& os, const WeightVector& v)
{
    os << "index,value\n";
    for (std::size_t i = 0; i < v.size(); ++i) os << i << "," << v[i] << "\n";
}

} // namespace chamberlab
