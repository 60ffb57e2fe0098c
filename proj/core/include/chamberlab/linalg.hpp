#pragma once

#include "chamberlab/bigint.hpp"

#include <cstddef>
#include <vector>

namespace chamberlab {

/// Dense row-major integer matrix.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<BigInt> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    BigInt& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Rank over Q by fraction-free (Bareiss) elimination. Every intermediate
/// division is exact; a non-zero remainder raises VerificationError.
std::size_t bareiss_rank(IntMatrix m);

} // namespace chamberlab
