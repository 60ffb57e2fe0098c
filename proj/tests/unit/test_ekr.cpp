#include <doctest.h>

#include "chamberlab/ekr.hpp"
#include "chamberlab/error.hpp"

#include <sstream>

using namespace chamberlab;

namespace {

bool coclique_by_pairs(const EkrSet& f)
{
    const auto idx = f.members().indices();
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a; b < idx.size(); ++b)
            if (f.universe().opposite(idx[a], idx[b])) return false;
    return true;
}

struct Literal {
    std::int64_t x = 0, y = 0, z = 0;
};

// x, y, z of a subspace straight from explicit chambers.
Literal literal_profile(const EkrSet& f, const Subspace& S)
{
    const int d = f.universe().ambient_dim();
    const int s = S.dim();
    Literal r;
    f.members().for_each([&](std::size_t c) {
        const auto ch = f.universe().chamber(c);
        if (ch.part(s) == S)
            ++r.x;
        else if (meets_trivially(S, ch.part(d - s)))
            ++r.y;
        else
            ++r.z;
    });
    return r;
}

struct Fixture {
    UniversePtr u = ChamberUniverse::build(Field::of_order(2), 4);
    Adjacency adj{u};
    Subspace P = Subspace::coordinate(u->field(), 4, {1});
    Subspace H = Subspace::coordinate(u->field(), 4, {0, 1, 2});
};

} // namespace

TEST_CASE_FIXTURE(Fixture, "classical families are maximum and ratio tight")
{
    const auto fp = EkrSet::classical_point(u, P);
    const auto fh = EkrSet::classical_hyperplane(u, H);
    for (const auto* f : {&fp, &fh}) {
        CHECK(f->size() == 63);
        CHECK(coclique_by_pairs(*f));
        CHECK(f->is_coclique(&adj));
        CHECK(f->is_coclique());
        CHECK(f->is_maximum(&adj));
        CHECK(is_ratio_tight(*f, adj));
        CHECK_NOTHROW(require_maximum(*f, &adj));
    }
    CHECK(fp.provenance() == Provenance::point_classical);
    CHECK(std::string(to_string(fh.provenance())) == "hyperplane-classical");
    // P lies in H, yet the sets differ
    CHECK(H.contains(P));
    CHECK_FALSE(fp == fh);
    CHECK(classify(fp).kind == Classification::Kind::point);
    CHECK(*classify(fp).witness == P);
    CHECK(classify(fh).kind == Classification::Kind::hyperplane);
    CHECK(*classify(fh).witness == H);
    CHECK(classify(fp).describe().rfind("point-classical", 0) == 0);
}

TEST_CASE_FIXTURE(Fixture, "non-maximum and non-coclique sets")
{
    auto fp = EkrSet::classical_point(u, P);
    auto smaller = fp.members();
    smaller.reset(smaller.first());
    const EkrSet minus(u, smaller);
    CHECK(minus.is_coclique(&adj));
    CHECK_FALSE(minus.is_maximum(&adj));
    CHECK_THROWS_AS(require_maximum(minus), PreconditionError);
    CHECK_THROWS_AS(weight_profiles(minus, 1), PreconditionError);

    auto bigger = fp.members();
    for (std::size_t c = 0; c < u->size(); ++c)
        if (!bigger.test(c)) {
            bigger.set(c);
            break;
        }
    const EkrSet plus(u, bigger);
    CHECK_FALSE(plus.is_coclique(&adj));
    CHECK_FALSE(coclique_by_pairs(plus));
    CHECK_THROWS_AS(plus.is_maximum(&adj), PreconditionError);
    CHECK(classify(EkrSet(u, Bitset(u->size()))).kind == Classification::Kind::non_classical);
}

TEST_CASE_FIXTURE(Fixture, "antidesign intersections with classical sets")
{
    const auto insts = standard_antidesigns(u, {});
    for (const auto& f : {EkrSet::classical_point(u, P), EkrSet::classical_hyperplane(u, H)})
        for (const auto& chk : antidesign_intersections(f, insts)) {
            CAPTURE(chk.family);
            CHECK(chk.pass());
        }
}

TEST_CASE_FIXTURE(Fixture, "weight profiles agree with the literal counts")
{
    const auto f = EkrSet::classical_point(u, P);
    for (int s = 1; s <= 3; ++s) {
        const auto profs = weight_profiles(f, s);
        CHECK(profs.size() == u->lattice().count(s));
        for (std::size_t i = 0; i < profs.size(); ++i) {
            const auto& w = profs[i];
            const auto lit = literal_profile(f, w.subspace);
            CHECK(w.x == lit.x);
            CHECK(w.y == lit.y);
            CHECK(w.z == lit.z);
            CHECK(w.dual == (s > 2));
            CHECK(w.identity_holds);
            CHECK(w.bound_holds);
        }
    }
    const auto w = weight_profile(P, f);
    CHECK(w.heavy);
    CHECK(w.x == 21);
    CHECK(w.y == 0);
}

TEST_CASE_FIXTURE(Fixture, "heavy subspaces")
{
    const auto fp = EkrSet::classical_point(u, P);
    const auto h1 = heavy_analysis(fp, 1);
    CHECK(h1.pass());
    REQUIRE(h1.heavy.size() == 1);
    CHECK(u->lattice().at(1, h1.heavy[0]) == P);
    const auto h2 = heavy_analysis(fp, 2);
    CHECK(h2.pass());
    CHECK(h2.heavy.size() == 7);
    CHECK(h2.bound == 7);
    for (auto l : h2.heavy) CHECK(u->lattice().at(2, l).contains(P));
    CHECK(heavy_analysis(fp, 3).heavy.empty());

    const auto fh = EkrSet::classical_hyperplane(u, H);
    const auto h3 = heavy_analysis(fh, 3);
    CHECK(h3.pass());
    REQUIRE(h3.heavy.size() == 1);
    CHECK(u->lattice().at(3, h3.heavy[0]) == H);
    CHECK(heavy_analysis(fh, 2).heavy.size() == 7);
    CHECK_THROWS_AS(heavy_analysis(fh, 4), PreconditionError);
}

TEST_CASE_FIXTURE(Fixture, "line weights")
{
    for (const auto& f : {EkrSet::classical_point(u, P), EkrSet::classical_hyperplane(u, H)}) {
        const auto lw = line_weight_spectrum(f);
        CHECK(lw.pass());
        CHECK(lw.spectrum() == std::vector<std::int64_t>{0, 9});
        CHECK(lines_pairwise_meet(f));
    }
    const auto u3 = ChamberUniverse::build(Field::of_order(2), 3);
    CHECK_THROWS_AS(line_weight_spectrum(EkrSet(u3, Bitset(u3->size()))), PreconditionError);
}

TEST_CASE_FIXTURE(Fixture, "set files round trip")
{
    const auto f = EkrSet::classical_hyperplane(u, H);
    std::stringstream ss;
    f.write(ss);
    const auto g = EkrSet::read(ss, u);
    CHECK(g == f);
    CHECK(g.provenance() == Provenance::imported);

    auto parse = [&](const std::string& text) {
        std::istringstream in(text);
        return EkrSet::read(in, u);
    };
    const std::string head = "# chamberlab ekr-set\nq 2\nd 4\norder 1\n";
    CHECK(parse(head + "size 2\n0\n5\n").size() == 2);
    CHECK_THROWS_AS(parse("q 3\nd 4\norder 1\n0\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("q 2\nd 4\n0\n"), std::runtime_error);
    CHECK_THROWS_AS(parse(head + "0\n0\n"), std::runtime_error);
    CHECK_THROWS_AS(parse(head + "315\n"), std::runtime_error);
    CHECK_THROWS_AS(parse(head + "7x\n"), std::runtime_error);
    CHECK_THROWS_AS(parse(head + "size 3\n1\n"), std::runtime_error);
}
