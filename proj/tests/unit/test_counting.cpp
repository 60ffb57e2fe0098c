#include <doctest.h>

#include "chamberlab/counting.hpp"
#include "chamberlab/error.hpp"
#include "chamberlab/subspace.hpp"

#include <set>
#include <vector>

using namespace chamberlab;

namespace {

// Number of s-subspaces of F_q^d found by taking spans of every s-tuple of
// vectors; independent of the pivot-pattern enumerator.
std::size_t spans_of_tuples(const Field& F, int d, int s)
{
    std::vector<Vec> all;
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= F.order();
    for (std::size_t code = 0; code < total; ++code) {
        Vec v(static_cast<std::size_t>(d));
        std::size_t c = code;
        for (int i = 0; i < d; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<Elem>(c % F.order());
            c /= F.order();
        }
        all.push_back(v);
    }
    std::set<Subspace> seen;
    std::vector<std::size_t> pick(static_cast<std::size_t>(s), 0);
    while (true) {
        std::vector<Vec> vs;
        for (auto k : pick) vs.push_back(all[k]);
        auto sp = Subspace::span(F, d, vs);
        if (sp.dim() == s) seen.insert(sp);
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == all.size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    return seen.size();
}

} // namespace

TEST_CASE("gaussian coefficients match enumeration")
{
    for (unsigned q : {2u, 3u}) {
        const auto F = Field::of_order(q);
        for (int d = 1; d <= 3; ++d)
            for (int s = 0; s <= d; ++s) {
                CAPTURE(q);
                CAPTURE(d);
                CAPTURE(s);
                CHECK(gaussian(d, s, q) == BigInt(spans_of_tuples(F, d, s)));
                CHECK(gaussian(d, s, q) == BigInt(enumerate_subspaces(F, d, s).size()));
            }
    }
    CHECK(gaussian(4, 2, 2) == 35);
    CHECK(gaussian(4, 2, 3) == 130);
    CHECK(gaussian(2, 5, 2) == 0);
    CHECK(gaussian(3, -1, 2) == 0);
}

TEST_CASE("known chamber counts")
{
    CHECK(chamber_count(0, 2) == 1);
    CHECK(chamber_count(1, 7) == 1);
    CHECK(chamber_count(3, 2) == 21);
    CHECK(chamber_count(4, 2) == 315);
    CHECK(chamber_count(4, 3) == 2080);
    CHECK(chamber_count(4, 4) == 8925);
    CHECK(chamber_count(6, 2) == 615195);
    // z_c = [c]_q / (q-1)^c
    for (int c = 0; c <= 6; ++c)
        for (int q : {2, 3, 4, 5}) CHECK(chamber_count(c, q) * ipow(q - 1, c) == bracket(c, q));
}

TEST_CASE("graph parameters on F_q^4")
{
    CHECK(opposite_count(4, 2) == 64);
    CHECK(opposite_count(4, 3) == 729);
    CHECK(smallest_eigenvalue(2, 2) == -16);
    CHECK(smallest_eigenvalue(2, 3) == -81);
    CHECK(max_ekr_size(2, 2) == 63);
    CHECK(max_ekr_size(2, 3) == 208);
    CHECK(max_ekr_size(2, 4) == 525);
    CHECK(eigenspace_dimension_formula(2, 2) == 28);
    CHECK(eigenspace_dimension_formula(2, 3) == 78);
    CHECK(eigenspace_dimension_formula(2, 4) == 168);
    CHECK(symplectic_generator_count(2, 2) == 15);
    CHECK(symplectic_generator_count(2, 3) == 40);
    CHECK(hermitian_generator_count(2, 4) == 27);
    CHECK(count_skew(4, 2, 2, 2) == 16);
    CHECK(opposite_through_count(4, 2, 2) == 4);
    CHECK(opposite_through_count(4, 1, 2) == 8);
}

TEST_CASE("flag extension counts")
{
    const std::vector<int> point{1};
    const std::vector<int> line{2};
    const std::vector<int> point_line{1, 2};
    CHECK(flag_extension_count(4, point, 2) == 21);
    CHECK(flag_extension_count(4, line, 2) == 9);
    CHECK(flag_extension_count(4, point_line, 2) == 3);
    // chambers through a type-{s} flag times s-subspaces = all chambers
    for (int s = 1; s < 5; ++s) {
        const std::vector<int> t{s};
        CHECK(flag_extension_count(5, t, 3) * gaussian(5, s, 3) == chamber_count(5, 3));
    }
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(gaussian(3, 1, 1), PreconditionError);
    CHECK_THROWS_AS(chamber_count(-1, 2), PreconditionError);
    CHECK_THROWS_AS(count_skew(3, 2, 2, 2), PreconditionError);
    CHECK_THROWS_AS(hermitian_generator_count(2, 3), PreconditionError);
    const std::vector<int> bad{2, 1};
    CHECK_THROWS_AS(flag_extension_count(4, bad, 2), PreconditionError);
    CHECK(exact_sqrt(49) == 7);
    CHECK(exact_sqrt(50) == -1);
}
