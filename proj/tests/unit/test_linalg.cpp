#include <doctest.h>

#include "chamberlab/linalg.hpp"

#include <random>
#include <utility>
#include <vector>

using namespace chamberlab;

namespace {

std::size_t rational_rank(const IntMatrix& m)
{
    std::vector<std::vector<BigRational>> a(m.rows, std::vector<BigRational>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = BigRational(m(r, c));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t piv = rank;
        while (piv < m.rows && a[piv][c] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const BigRational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("Bareiss rank agrees with rational elimination")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> shape(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = static_cast<std::size_t>(shape(rng)), c = static_cast<std::size_t>(shape(rng));
        IntMatrix m(r, c);
        // low-rank products exercise the rank-deficient paths
        const std::size_t k = static_cast<std::size_t>(shape(rng)) % 4 + 1;
        IntMatrix a(r, k), b(k, c);
        for (auto& x : a.data) x = entry(rng);
        for (auto& x : b.data) x = entry(rng);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                for (std::size_t t = 0; t < k; ++t) m(i, j) += a(i, t) * b(t, j);
        if (trial % 3 == 0)
            for (auto& x : m.data) x = entry(rng);
        CAPTURE(trial);
        CHECK(bareiss_rank(m) == rational_rank(m));
    }
}

TEST_CASE("rank edge cases")
{
    CHECK(bareiss_rank(IntMatrix(0, 0)) == 0);
    CHECK(bareiss_rank(IntMatrix(3, 4)) == 0);
    IntMatrix big(2, 2);
    big(0, 0) = BigInt(1) << 200;
    big(0, 1) = 1;
    big(1, 0) = (BigInt(1) << 200) * 3;
    big(1, 1) = 3;
    CHECK(bareiss_rank(big) == 1);
    big(1, 1) = 4;
    CHECK(bareiss_rank(big) == 2);
}
