#include "chamberlab/linalg.hpp"

#include "chamberlab/error.hpp"

#include <utility>

namespace chamberlab {

std::size_t bareiss_rank(IntMatrix m)
{
    BigInt prev = 1, r;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t sel = m.rows;
        for (std::size_t i = rank; i < m.rows; ++i)
            if (m(i, c) != 0) {
                sel = i;
                break;
            }
        if (sel == m.rows) continue;
        if (sel != rank)
            for (std::size_t k = c; k < m.cols; ++k) std::swap(m(sel, k), m(rank, k));
        const BigInt& piv = m(rank, c);
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            const BigInt f = m(i, c);
            for (std::size_t k = c + 1; k < m.cols; ++k) {
                BigInt v = piv * m(i, k) - f * m(rank, k);
                boost::multiprecision::divide_qr(v, prev, m(i, k), r);
                if (r != 0) throw VerificationError("inexact division in fraction-free elimination");
            }
            m(i, c) = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

} // namespace chamberlab
