#include <doctest.h>

#include "chamberlab/chambers.hpp"
#include "chamberlab/counting.hpp"
#include "chamberlab/error.hpp"

#include <cstdlib>
#include <set>

using namespace chamberlab;

namespace {

// Oppositeness straight from the definition: C_i + D_{d-i} is everything.
bool opposite_by_sum(const Chamber& c, const Chamber& d)
{
    const int n = c.ambient_dim();
    for (int i = 1; i < n; ++i)
        if (sum(c.part(i), d.part(n - i)).dim() != n) return false;
    return true;
}

} // namespace

TEST_CASE("universe sizes and ordering")
{
    const auto F = Field::of_order(2);
    for (int d = 1; d <= 4; ++d) {
        const auto u = ChamberUniverse::build(F, d);
        CHECK(BigInt(u->size()) == chamber_count(d, 2));
    }
    const auto u = ChamberUniverse::build(F, 4);
    for (std::size_t c = 1; c < u->size(); ++c) {
        auto a = u->parts(c - 1), b = u->parts(c);
        CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
    }
}

TEST_CASE("find inverts chamber")
{
    const auto u = ChamberUniverse::build(Field::of_order(3), 3);
    CHECK(u->size() == 52);
    for (std::size_t c = 0; c < u->size(); ++c) {
        const auto ch = u->chamber(c);
        CHECK(u->find(ch) == c);
        for (int k = 1; k < 3; ++k) CHECK(ch.part(k).dim() == k);
    }
    CHECK_FALSE(u->find(std::vector<std::uint32_t>{0}).has_value());
    CHECK_THROWS_AS(u->chamber(u->size()), std::out_of_range);
}

TEST_CASE("chambers from a basis")
{
    const auto F = Field::of_order(2);
    const std::vector<Vec> basis{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    const std::vector<Vec> rev{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    const auto c = Chamber::from_basis(F, basis);
    const auto d = Chamber::from_basis(F, rev);
    CHECK(is_opposite(c, d));
    CHECK_FALSE(is_opposite(c, c));
    const std::vector<Vec> dependent{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    CHECK_THROWS_AS(Chamber::from_basis(F, dependent), PreconditionError);
    CHECK_THROWS_AS(Chamber(F, 3, {Subspace::coordinate(F, 3, {0, 1})}), PreconditionError);
    CHECK_THROWS_AS(Chamber(F, 3, {Subspace::coordinate(F, 3, {0}), Subspace::coordinate(F, 3, {1, 2})}), PreconditionError);
}

TEST_CASE("indexed oppositeness matches the definition")
{
    const auto u = ChamberUniverse::build(Field::of_order(2), 4);
    for (std::size_t a = 0; a < u->size(); a += 7)
        for (std::size_t b = 0; b < u->size(); ++b) {
            const bool lit = opposite_by_sum(u->chamber(a), u->chamber(b));
            CHECK(u->opposite(a, b) == lit);
            CHECK(u->opposite(b, a) == lit);
        }
    CHECK(count_opposite(*u, 0) == 64);
}

TEST_CASE("entry levels")
{
    const auto u = ChamberUniverse::build(Field::of_order(3), 4);
    const auto& lat = u->lattice();
    for (std::size_t c = 0; c < u->size(); c += 97)
        for (std::uint32_t p = 0; p < lat.point_count(); ++p) {
            const int lvl = u->entry_level(c, p);
            const auto ch = u->chamber(c);
            CHECK(ch.part(lvl).contains(lat.at(1, p)));
            CHECK_FALSE(ch.part(lvl - 1).contains(lat.at(1, p)));
            CHECK(u->point_in_part(c, lvl, p));
        }
}

TEST_CASE("flag extensions")
{
    const auto F = Field::of_order(2);
    const auto u = ChamberUniverse::build(F, 4);
    const Flag f({Subspace::coordinate(F, 4, {0, 1}), Subspace::coordinate(F, 4, {0})});
    CHECK(f.type() == std::vector<int>{1, 2});
    CHECK(count_flag_extensions(*u, f) == 3);
    CHECK(predicted_flag_extensions(f) == 3);
    CHECK(check_flag_extensions(*u).pass());
    CHECK(check_skew_counts(u->lattice()).pass());
    CHECK_THROWS_AS(Flag({Subspace::coordinate(F, 4, {0}), Subspace::coordinate(F, 4, {1, 2})}), PreconditionError);
    CHECK(u->chambers_with_part(2, 0).size() == 9);
}

TEST_CASE("opposite chambers through a subspace")
{
    const auto F = Field::of_order(2);
    const auto u = ChamberUniverse::build(F, 4);
    std::size_t applied = 0;
    for (std::size_t c = 0; c < u->size(); c += 31)
        for (int s = 1; s < 4; ++s)
            for (const auto& S : u->lattice().level(s)) {
                const auto want = predicted_opposite_through(*u, c, S);
                const auto got = count_opposite_through(*u, c, S);
                if (want) {
                    ++applied;
                    CHECK(BigInt(got) == *want);
                } else {
                    CHECK(got == 0);
                }
            }
    CHECK(applied > 0);
}

TEST_CASE("small ambient dimensions")
{
    const auto F = Field::of_order(5);
    const auto u1 = ChamberUniverse::build(F, 1);
    CHECK(u1->size() == 1);
    CHECK(u1->entry_level(0, 0) == 1);
    const auto u2 = ChamberUniverse::build(F, 2);
    CHECK(u2->size() == 6);
    CHECK(count_opposite(*u2, 0) == 5);
}

TEST_CASE("chamber cap")
{
    const auto F = Field::of_order(2);
    CHECK_THROWS_AS(ChamberUniverse::build(F, 4, 100), CapacityError);
    ::setenv("CHAMBERLAB_MAX_CHAMBERS", "20", 1);
    CHECK(default_chamber_cap() == 20);
    CHECK_THROWS_AS(ChamberUniverse::build(F, 3), CapacityError);
    ::setenv("CHAMBERLAB_MAX_CHAMBERS", "lots", 1);
    CHECK_THROWS_AS(default_chamber_cap(), std::invalid_argument);
    ::unsetenv("CHAMBERLAB_MAX_CHAMBERS");
    CHECK(default_chamber_cap() == 10'000'000);
}
