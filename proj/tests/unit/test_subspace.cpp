#include <doctest.h>

#include "chamberlab/lattice.hpp"
#include "chamberlab/subspace.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace chamberlab;

namespace {

std::set<Vec> vector_set(const Subspace& s)
{
    auto v = s.nonzero_vectors();
    std::set<Vec> out(v.begin(), v.end());
    out.insert(Vec(static_cast<std::size_t>(s.ambient_dim()), 0));
    return out;
}

Elem dot(const Field& F, const Vec& a, std::span<const Elem> b)
{
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

} // namespace

TEST_CASE("spans are canonical")
{
    const auto F = Field::of_order(3);
    const auto a = Subspace::span(F, 3, {{1, 2, 0}, {0, 1, 1}});
    const auto b = Subspace::span(F, 3, {{1, 0, 1}, {2, 1, 0}, {0, 2, 2}});
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(std::hash<Subspace>{}(a) == std::hash<Subspace>{}(b));
    CHECK(Subspace::span(F, 3, {{0, 0, 0}}).dim() == 0);
    CHECK(Subspace::coordinate(F, 4, {1, 3}).dim() == 2);
    CHECK(Subspace::full(F, 3).nonzero_vectors().size() == 26);
}

TEST_CASE("intersection and sum agree with vector sets")
{
    for (unsigned q : {2u, 3u, 4u}) {
        CAPTURE(q);
        const auto F = Field::of_order(q);
        const auto lines = enumerate_subspaces(F, 3, 2);
        const auto pts = enumerate_subspaces(F, 3, 1);
        for (std::size_t i = 0; i < lines.size(); i += 2)
            for (std::size_t j = 0; j < lines.size(); j += 3) {
                const auto& A = lines[i];
                const auto& B = lines[j];
                const auto va = vector_set(A), vb = vector_set(B);
                std::set<Vec> common;
                std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::inserter(common, common.end()));
                CHECK(vector_set(intersect(A, B)) == common);
                const auto S = sum(A, B);
                CHECK(S.dim() == A.dim() + B.dim() - intersect(A, B).dim());
                CHECK(S.contains(A));
                CHECK(S.contains(B));
            }
        for (const auto& p : pts)
            for (const auto& l : lines) CHECK(meets_trivially(p, l) == !l.contains(p));
    }
}

TEST_CASE("annihilators")
{
    const auto F = Field::of_order(4);
    for (int s = 0; s <= 3; ++s)
        for (const auto& S : enumerate_subspaces(F, 3, s)) {
            const auto A = annihilator(S);
            CHECK(A.dim() == 3 - s);
            CHECK(annihilator(A) == S);
            for (const auto& v : A.nonzero_vectors())
                for (int r = 0; r < S.dim(); ++r) CHECK(dot(F, v, S.row(r)) == 0);
        }
    const auto F2 = Field::of_order(2);
    const auto a = Subspace::coordinate(F2, 4, {0});
    const auto b = Subspace::coordinate(F2, 4, {0, 1});
    // inclusion reverses
    CHECK(annihilator(a).contains(annihilator(b)));
}

TEST_CASE("enumeration is sorted and complete")
{
    const auto F = Field::of_order(2);
    const auto lines = enumerate_subspaces(F, 4, 2);
    CHECK(lines.size() == 35);
    CHECK(std::is_sorted(lines.begin(), lines.end()));
    CHECK(std::adjacent_find(lines.begin(), lines.end()) == lines.end());
    std::size_t streamed = 0;
    for_each_subspace(F, 4, 2, [&](const Subspace& s) {
        ++streamed;
        CHECK(std::binary_search(lines.begin(), lines.end(), s));
    });
    CHECK(streamed == 35);
}

TEST_CASE("projective normalization")
{
    const auto F = Field::of_order(5);
    CHECK(normalize_projective(F, {0, 3, 1}) == Vec{0, 1, 2});
    CHECK_THROWS(normalize_projective(F, {0, 0, 0}));
}

TEST_CASE("lattice incidence and indices")
{
    const auto F = Field::of_order(3);
    const SubspaceLattice lat(F, 3);
    CHECK(lat.point_count() == 13);
    CHECK(lat.count(2) == 13);
    for (std::size_t l = 0; l < lat.count(2); ++l) {
        CHECK(lat.points(2, l).count() == 4);
        CHECK(lat.covers(1, lat.points(2, l).first()).size() == 4);
        for (std::size_t p = 0; p < lat.count(1); ++p) {
            CHECK(lat.incident_point(static_cast<std::uint32_t>(p), 2, l) == lat.at(2, l).contains(lat.at(1, p)));
            CHECK(lat.skew(1, p, 2, l) == meets_trivially(lat.at(1, p), lat.at(2, l)));
        }
        CHECK(lat.require_index(lat.at(2, l)) == l);
    }
    CHECK(lat.point_of(Vec{0, 2, 2}) == lat.require_index(Subspace::span(F, 3, {{0, 1, 1}})));
    CHECK_FALSE(lat.index_of(Subspace::full(F, 4)).has_value());
    CHECK_THROWS_AS(lat.require_index(Subspace::zero(Field::of_order(2), 3)), std::invalid_argument);
}
