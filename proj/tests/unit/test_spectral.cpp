#include <doctest.h>

#include "chamberlab/counting.hpp"
#include "chamberlab/error.hpp"
#include "chamberlab/spectral.hpp"

#if CHAMBERLAB_HAVE_EIGEN
#include <Eigen/Dense>
#endif

#include <algorithm>
#include <cmath>

using namespace chamberlab;

namespace {

// chi^i_P(C) straight from the definition on an explicit chamber.
std::int64_t literal_chi(const Chamber& c, int n, int i, const Subspace& p, std::int64_t q)
{
    std::int64_t qi = 1;
    for (int k = 0; k < i; ++k) qi *= q;
    if (c.part(n).contains(p) && !c.part(n - i).contains(p)) return qi;
    if (c.part(n + i).contains(p) && !c.part(n).contains(p)) return -1;
    return 0;
}

std::size_t rational_rank(std::vector<std::vector<BigRational>> a)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const BigRational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("chi values by entry level")
{
    // n = 2, q = 3: levels 1..4
    CHECK(ChiFamily::value_at_level(2, 1, 1, 3) == 0);
    CHECK(ChiFamily::value_at_level(2, 1, 2, 3) == 3);
    CHECK(ChiFamily::value_at_level(2, 1, 3, 3) == -1);
    CHECK(ChiFamily::value_at_level(2, 1, 4, 3) == 0);
    CHECK(ChiFamily::value_at_level(2, 2, 1, 3) == 9);
    CHECK(ChiFamily::value_at_level(2, 2, 2, 3) == 9);
    CHECK(ChiFamily::value_at_level(2, 2, 3, 3) == -1);
    CHECK(ChiFamily::value_at_level(2, 2, 4, 3) == -1);
}

TEST_CASE("chi vectors match the literal definition")
{
    const auto F = Field::of_order(3);
    const auto u = ChamberUniverse::build(F, 4);
    const ChiFamily fam(u);
    CHECK(fam.size() == 80);
    const auto& lat = u->lattice();
    for (std::uint32_t p = 0; p < lat.point_count(); p += 5)
        for (int i = 1; i <= 2; ++i) {
            const auto v = chi_vector(u, i, lat.at(1, p));
            CHECK(v == fam.vector(i, p));
            for (std::size_t c = 0; c < u->size(); c += 13) CHECK(v[c] == literal_chi(u->chamber(c), 2, i, lat.at(1, p), 3));
            // each chi has zero mass
            CHECK(v.total() == 0);
        }
    CHECK_THROWS_AS(ChiFamily(ChamberUniverse::build(F, 3)), PreconditionError);
    CHECK_THROWS_AS(chi_vector(u, 1, Subspace::coordinate(F, 4, {0, 1})), PreconditionError);
}

TEST_CASE("generic and batch eigen checks agree on F_2^4")
{
    const auto u = ChamberUniverse::build(Field::of_order(2), 4);
    const Adjacency adj(u);
    const ChiFamily fam(u);
    for (int i = 1; i <= 2; ++i)
        for (std::uint32_t p = 0; p < fam.point_count(); ++p) CHECK(verify_smallest_eigenvector(fam.vector(i, p), adj));
    CHECK_FALSE(verify_smallest_eigenvector(WeightVector::ones(u), adj));
    auto bent = fam.vector(1, 0);
    bent.set(0, bent[0] + 1);
    CHECK_FALSE(verify_smallest_eigenvector(bent, adj));
    const auto batch = verify_chi_eigenvectors(adj);
    CHECK(batch.vectors == 30);
    CHECK(batch.vertices == 315);
    CHECK(batch.all_pass());
}

TEST_CASE("eigenspace dimension: Gram route equals direct rank")
{
    const auto u = ChamberUniverse::build(Field::of_order(2), 4);
    const ChiFamily fam(u);
    std::vector<std::vector<BigRational>> rows;
    for (int i = 1; i <= 2; ++i)
        for (std::uint32_t p = 0; p < fam.point_count(); ++p) {
            const auto v = fam.vector(i, p);
            rows.emplace_back(v.values().begin(), v.values().end());
        }
    CHECK(rational_rank(rows) == 28);
    CHECK(eigenspace_dimension(fam) == 28);
}

TEST_CASE("spectral certificate")
{
    const auto u = ChamberUniverse::build(Field::of_order(2), 4);
    const Adjacency adj(u);
    const auto cert = certify_spectrum(adj);
    CHECK(cert.vertices() == 315);
    CHECK(cert.degree() == 64);
    CHECK(cert.lambda() == -16);
    CHECK(cert.verified_vectors() == 30);
    CHECK(hoffman_bound(cert) == BigRational(63));
    CHECK(hoffman_bound(cert) == BigRational(max_ekr_size(2, 2)));
}

TEST_CASE("n = 1: the complete graph on the points of a line")
{
    const auto u = ChamberUniverse::build(Field::of_order(4), 2);
    const Adjacency adj(u);
    const auto cert = certify_spectrum(adj);
    CHECK(cert.degree() == 4);
    CHECK(cert.lambda() == -1);
    CHECK(hoffman_bound(cert) == BigRational(1));
    CHECK(eigenspace_dimension(ChiFamily(u)) == 4);
}

#if CHAMBERLAB_HAVE_EIGEN
TEST_CASE("floating-point spectrum of the Kneser graph on F_2^4")
{
    const auto u = ChamberUniverse::build(Field::of_order(2), 4);
    const Adjacency adj(u);
    const auto n = static_cast<Eigen::Index>(adj.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
        adj.for_each_neighbor(static_cast<std::size_t>(a), [&](std::size_t b) { A(a, static_cast<Eigen::Index>(b)) = 1.0; });
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
    REQUIRE(es.info() == Eigen::Success);
    const auto& ev = es.eigenvalues();
    CHECK(ev(0) == doctest::Approx(-16.0).epsilon(1e-9));
    CHECK(ev(n - 1) == doctest::Approx(64.0).epsilon(1e-9));
    Eigen::Index mult = 0;
    for (Eigen::Index k = 0; k < n; ++k)
        if (std::abs(ev(k) + 16.0) < 1e-6) ++mult;
    // the chi vectors span the whole smallest eigenspace
    CHECK(mult == 28);
    CHECK(std::abs(ev(n - 2) - 64.0) > 1e-6);
}
#endif
