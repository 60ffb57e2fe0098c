#pragma once

#include "chamberlab/bigint.hpp"

#include <cstdint>
#include <span>

namespace chamberlab {

// Closed-form counts in the subspace lattice and the chamber geometry of
// F_q^d. All values are exact; q >= 2 is required everywhere.

/// Gaussian coefficient [b choose a]_q; zero unless 0 <= a <= b.
BigInt gaussian(std::int64_t b, std::int64_t a, std::int64_t q);

/// [c]_q = prod_{i=1}^{c} (q^i - 1), with [0]_q = 1.
BigInt bracket(std::int64_t c, std::int64_t q);

/// z_c(q), the number of chambers of F_q^c.
BigInt chamber_count(std::int64_t c, std::int64_t q);

/// Number of b-subspaces of F_q^d meeting a fixed a-subspace trivially.
BigInt count_skew(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t q);

/// Chambers of F_q^d opposite to a given chamber: q^{d choose 2}.
BigInt opposite_count(std::int64_t d, std::int64_t q);

/// Chambers of F_q^d that contain a given s-subspace S and are opposite to a
/// chamber C with S meeting C_{d-s} trivially: q^{(s choose 2) + (d-s choose 2)}.
BigInt opposite_through_count(std::int64_t d, std::int64_t s, std::int64_t q);

/// Chambers of F_q^d containing a flag of the given (strictly increasing) type.
BigInt flag_extension_count(std::int64_t d, std::span<const int> type, std::int64_t q);

/// g_n = prod_{i=1}^{n} (q^i + 1): generators of a symplectic polar space.
BigInt symplectic_generator_count(std::int64_t n, std::int64_t q);

/// t_n(q) = prod_{j=1}^{n} (sqrt(q) q^{j-1} + 1): generators of a hermitian
/// polar space of F_q^{2n}; q must be a square.
BigInt hermitian_generator_count(std::int64_t n, std::int64_t q);

/// Size of a maximum EKR-set of chambers of F_q^{2n}: z_{2n}(q) / (q^n + 1).
BigInt max_ekr_size(std::int64_t n, std::int64_t q);

/// Smallest eigenvalue of the Kneser graph on chambers of F_q^{2n}.
BigInt smallest_eigenvalue(std::int64_t n, std::int64_t q);

/// n (q^{2n} - q) / (q - 1).
BigInt eigenspace_dimension_formula(std::int64_t n, std::int64_t q);

/// Integer square root of a perfect square q, or -1.
std::int64_t exact_sqrt(std::int64_t q);

} // namespace chamberlab
