#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace chamberlab {

/// Fixed-length dynamic bitset used for point sets, adjacency rows and
/// chamber sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void set_all()
    {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void clear()
    {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const
    {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }
    std::size_t intersection_count(const Bitset& o) const
    {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }
    bool is_subset_of(const Bitset& o) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Index of the first set bit, or size() when empty.
    std::size_t first() const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return bits_;
    }

    template <typename F>
    void for_each(F&& fn) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    void trim()
    {
        if (bits_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace chamberlab

template <>
struct std::hash<chamberlab::Bitset> {
    std::size_t operator()(const chamberlab::Bitset& b) const noexcept
    {
        std::size_t h = b.size();
        for (auto w : b.words()) h = h * 0x9E3779B97F4A7C15ull ^ (w + (h >> 7));
        return h;
    }
};
