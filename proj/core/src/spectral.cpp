#include "chamberlab/spectral.hpp"

#include "chamberlab/counting.hpp"
#include "chamberlab/error.hpp"
#include "chamberlab/linalg.hpp"
#include "chamberlab/parallel.hpp"

#include <atomic>
#include <limits>
#include <mutex>

namespace chamberlab {

namespace {

int half_dim(const ChamberUniverse& u)
{
    const int d = u.ambient_dim();
    if (d < 2 || d % 2) throw PreconditionError("the chi vectors need an even ambient dimension 2n >= 2, got " + std::to_string(d));
    return d / 2;
}

std::int64_t small_pow(std::int64_t q, int e)
{
    std::int64_t r = 1;
    for (int k = 0; k < e; ++k) r *= q;
    return r;
}

std::int64_t lambda_small(const ChamberUniverse& u)
{
    const int n = half_dim(u);
    const BigInt l = smallest_eigenvalue(n, u.q());
    if (l < std::numeric_limits<std::int64_t>::min() / 2) throw CapacityError("eigenvalue does not fit in 64 bits");
    return l.convert_to<std::int64_t>();
}

} // namespace

ChiFamily::ChiFamily(UniversePtr u) : universe_(std::move(u))
{
    n_ = half_dim(*universe_);
    points_ = universe_->lattice().point_count();
    q_ = universe_->q();
}

std::int64_t ChiFamily::value_at_level(int n, int i, int level, std::int64_t q)
{
    if (level > n - i && level <= n) return small_pow(q, i);
    if (level > n && level <= n + i) return -1;
    return 0;
}

std::int64_t ChiFamily::value(std::size_t chamber, int i, std::uint32_t point) const
{
    if (i < 1 || i > n_) throw std::out_of_range("chi index i outside [1, n]");
    return value_at_level(n_, i, universe_->entry_level(chamber, point), q_);
}

void ChiFamily::levels(std::size_t chamber, std::vector<std::uint8_t>& out) const
{
    const int d = 2 * n_;
    out.assign(points_, static_cast<std::uint8_t>(d));
    const auto& lat = universe_->lattice();
    for (int k = d - 1; k >= 1; --k)
        lat.points(k, universe_->part(chamber, k)).for_each([&](std::size_t p) { out[p] = static_cast<std::uint8_t>(k); });
}

WeightVector ChiFamily::vector(int i, std::uint32_t point) const
{
    if (i < 1 || i > n_) throw std::out_of_range("chi index i outside [1, n]");
    if (point >= points_) throw std::out_of_range("point index out of range");
    WeightVector v(universe_);
    for (std::size_t c = 0; c < universe_->size(); ++c) v.set(c, value(c, i, point));
    return v;
}

WeightVector chi_vector(UniversePtr u, int i, const Subspace& point)
{
    if (point.dim() != 1) throw PreconditionError("chi vectors are indexed by 1-subspaces");
    const auto p = u->lattice().require_index(point);
    return ChiFamily(std::move(u)).vector(i, p);
}

bool verify_smallest_eigenvector(const WeightVector& v, const Adjacency& adj)
{
    require_same_universe(v.universe(), adj.universe());
    const std::int64_t lambda = lambda_small(adj.universe());
    std::atomic<bool> ok{true};
    parallel_chunks(adj.size(), [&](std::size_t b, std::size_t e, unsigned) {
        for (std::size_t c = b; c < e && ok; ++c) {
            ExactAccumulator acc;
            adj.for_each_neighbor(c, [&](std::size_t o) { acc.add(v[o]); });
            if (acc.value() != BigInt(lambda) * v[c]) ok = false;
        }
    });
    return ok;
}

EigenCheck verify_chi_eigenvectors(const Adjacency& adj)
{
    const auto& u = adj.universe();
    const ChiFamily fam(adj.universe_ptr());
    const int n = fam.n(), d = 2 * n;
    const std::int64_t q = u.q();
    const std::int64_t lambda = lambda_small(u);
    const auto& lat = u.lattice();
    const std::size_t P = fam.point_count();

    std::atomic<std::size_t> failures{0};
    parallel_chunks(u.size(), [&](std::size_t b, std::size_t e, unsigned) {
        // mult[k][U]: neighbours D with D_k = U; cnt[p * (d+1) + k]: neighbours with p in D_k.
        std::vector<std::vector<std::int64_t>> mult(static_cast<std::size_t>(d));
        std::vector<std::vector<std::uint32_t>> touched(static_cast<std::size_t>(d));
        for (int k = 1; k < d; ++k) mult[static_cast<std::size_t>(k)].assign(lat.count(k), 0);
        std::vector<std::int64_t> cnt(P * static_cast<std::size_t>(d + 1));
        std::vector<std::uint8_t> lv;
        for (std::size_t c = b; c < e; ++c) {
            std::int64_t deg = 0;
            adj.for_each_neighbor(c, [&](std::size_t o) {
                ++deg;
                for (int k = 1; k < d; ++k) {
                    const auto idx = u.part(o, k);
                    auto& m = mult[static_cast<std::size_t>(k)][idx];
                    if (m++ == 0) touched[static_cast<std::size_t>(k)].push_back(idx);
                }
            });
            std::fill(cnt.begin(), cnt.end(), 0);
            for (int k = 1; k < d; ++k) {
                auto& m = mult[static_cast<std::size_t>(k)];
                for (auto idx : touched[static_cast<std::size_t>(k)]) {
                    const std::int64_t w = m[idx];
                    lat.points(k, idx).for_each([&](std::size_t p) { cnt[p * static_cast<std::size_t>(d + 1) + static_cast<std::size_t>(k)] += w; });
                    m[idx] = 0;
                }
                touched[static_cast<std::size_t>(k)].clear();
            }
            fam.levels(c, lv);
            std::size_t bad = 0;
            for (std::size_t p = 0; p < P; ++p) {
                const std::int64_t* row = &cnt[p * static_cast<std::size_t>(d + 1)];
                auto at = [&](int k) { return k >= d ? deg : row[k]; };
                for (int i = 1; i <= n; ++i) {
                    const std::int64_t lhs = small_pow(q, i) * (at(n) - at(n - i)) - (at(n + i) - at(n));
                    if (lhs != lambda * ChiFamily::value_at_level(n, i, lv[p], q)) ++bad;
                }
            }
            failures += bad;
        }
    });
    return {fam.size(), u.size(), failures.load()};
}

std::size_t eigenspace_dimension(const ChiFamily& family)
{
    const auto& u = family.universe();
    const int n = family.n();
    const std::int64_t q = u.q();
    const std::size_t P = family.point_count(), m = family.size();

    std::vector<std::int64_t> gram(m * m, 0);
    std::mutex merge;
    parallel_chunks(u.size(), [&](std::size_t b, std::size_t e, unsigned) {
        std::vector<std::int64_t> local(m * m, 0);
        std::vector<std::uint8_t> lv;
        std::vector<std::pair<std::size_t, std::int64_t>> nz;
        for (std::size_t c = b; c < e; ++c) {
            family.levels(c, lv);
            nz.clear();
            for (int i = 1; i <= n; ++i)
                for (std::size_t p = 0; p < P; ++p)
                    if (auto v = ChiFamily::value_at_level(n, i, lv[p], q))
                        nz.emplace_back(static_cast<std::size_t>(i - 1) * P + p, v);
            for (auto [a, va] : nz)
                for (auto [bb, vb] : nz) local[a * m + bb] += va * vb;
        }
        std::lock_guard lock(merge);
        for (std::size_t k = 0; k < gram.size(); ++k) gram[k] += local[k];
    });

    IntMatrix g(m, m);
    for (std::size_t k = 0; k < gram.size(); ++k) g.data[k] = gram[k];
    return bareiss_rank(std::move(g));
}

SpectralCertificate certify_spectrum(const Adjacency& adj)
{
    const auto& u = adj.universe();
    const int n = half_dim(u);
    const auto k = adj.regular_degree();
    if (!k) throw VerificationError("the Kneser graph is not regular");
    const BigInt expected = opposite_count(2 * n, u.q());
    if (BigInt(*k) != expected)
        throw VerificationError("measured degree " + std::to_string(*k) + " differs from " + to_string(expected));
    const auto check = verify_chi_eigenvectors(adj);
    if (!check.all_pass()) throw VerificationError(std::to_string(check.failures) + " chi eigen-equations failed");

    SpectralCertificate cert;
    cert.vertices_ = u.size();
    cert.degree_ = *k;
    cert.lambda_ = smallest_eigenvalue(n, u.q());
    cert.vectors_ = check.vectors;
    return cert;
}

BigRational hoffman_bound(const SpectralCertificate& cert)
{
    return BigRational(BigInt(cert.vertices()) * -cert.lambda(), cert.degree() - cert.lambda());
}

} // namespace chamberlab
