#pragma once

#include "chamberlab/adjacency.hpp"
#include "chamberlab/weights.hpp"

#include <cstdint>
#include <optional>

namespace chamberlab {

/// The vectors chi^i_P on chambers of F_q^{2n}, 1 <= i <= n, P a point:
///   chi^i_P(C) = q^i  if P lies in C_n but not in C_{n-i},
///              = -1   if P lies in C_{n+i} but not in C_n,
///              = 0    otherwise.
class ChiFamily {
public:
    /// Throws PreconditionError unless the ambient dimension is even and >= 2.
    explicit ChiFamily(UniversePtr u);

    const ChamberUniverse& universe() const { return *universe_; }
    int n() const { return n_; }
    std::size_t point_count() const { return points_; }
    /// Number of vectors, n times the number of points.
    std::size_t size() const { return static_cast<std::size_t>(n_) * points_; }

    /// Value from the entry level of P into C (smallest k with P in C_k).
    static std::int64_t value_at_level(int n, int i, int level, std::int64_t q);
    std::int64_t value(std::size_t chamber, int i, std::uint32_t point) const;

    WeightVector vector(int i, std::uint32_t point) const;

    /// Entry level of every point into the chamber; out.size() == point_count().
    void levels(std::size_t chamber, std::vector<std::uint8_t>& out) const;

private:
    UniversePtr universe_;
    int n_;
    std::size_t points_;
    std::int64_t q_;
};

/// chi^i_P for an explicit point subspace P.
WeightVector chi_vector(UniversePtr u, int i, const Subspace& point);

/// True when A v = lambda v exactly, lambda = -q^{2n(n-1)}, ambient 2n.
bool verify_smallest_eigenvector(const WeightVector& v, const Adjacency& adj);

struct EigenCheck {
    std::size_t vectors = 0;
    std::size_t vertices = 0;
    std::size_t failures = 0;
    bool all_pass() const { return failures == 0; }
};

/// Checks A chi = lambda chi for every chi^i_P at once by grouping each
/// chamber's neighbours by their parts.
EigenCheck verify_chi_eigenvectors(const Adjacency& adj);

/// Dimension of span{chi^i_P}: the rank over Q of the Gram matrix of the
/// family, which equals the rank of the family itself.
std::size_t eigenspace_dimension(const ChiFamily& family);

/// Degree and smallest eigenvalue of the Kneser graph, both verified on the
/// explicit graph. Only certify_spectrum creates one.
class SpectralCertificate {
public:
    std::size_t vertices() const { return vertices_; }
    const BigInt& degree() const { return degree_; }
    const BigInt& lambda() const { return lambda_; }
    std::size_t verified_vectors() const { return vectors_; }

private:
    friend SpectralCertificate certify_spectrum(const Adjacency& adj);
    SpectralCertificate() = default;

    std::size_t vertices_ = 0;
    BigInt degree_, lambda_;
    std::size_t vectors_ = 0;
};

/// Checks regularity with degree q^{n(2n-1)} and the chi eigen-equations;
/// throws VerificationError on any mismatch.
SpectralCertificate certify_spectrum(const Adjacency& adj);

/// Hoffman ratio bound N (-lambda) / (k - lambda).
BigRational hoffman_bound(const SpectralCertificate& cert);

} // namespace chamberlab
