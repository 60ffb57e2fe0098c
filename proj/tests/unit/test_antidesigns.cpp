#include <doctest.h>

#include "chamberlab/antidesigns.hpp"
#include "chamberlab/counting.hpp"
#include "chamberlab/error.hpp"
#include "chamberlab/json_util.hpp"
#include "chamberlab/parallel.hpp"
#include "chamberlab/spectral.hpp"

#include <sstream>

using namespace chamberlab;

namespace {

// Orthogonality by explicit inner products with every chi vector.
bool orthogonal_by_products(const WeightVector& v)
{
    const ChiFamily fam(v.universe_ptr());
    for (int i = 1; i <= fam.n(); ++i)
        for (std::uint32_t p = 0; p < fam.point_count(); ++p)
            if (inner_product(v, fam.vector(i, p)) != 0) return false;
    return true;
}

std::int64_t literal_subspace_weight(const Chamber& c, const Subspace& S, int n, std::int64_t q)
{
    const int s = S.dim();
    if (c.part(s) == S) return static_cast<std::int64_t>(ipow(q, s * (2 * n - s) - n));
    if (meets_trivially(S, c.part(2 * n - s))) return 1;
    return 0;
}

} // namespace

TEST_CASE("standard catalogue on F_2^4")
{
    const auto u = ChamberUniverse::build(Field::of_order(2), 4);
    const auto insts = standard_antidesigns(u, {});
    REQUIRE(insts.size() == 5); // no unitary family over F_2
    const std::int64_t masses[] = {45, 135, 45, 210, 180};
    const std::int64_t inter[] = {9, 27, 9, 42, 36};
    for (std::size_t k = 0; k < insts.size(); ++k) {
        const auto& in = insts[k];
        CAPTURE(in.family);
        CHECK(orthogonal_by_products(in.vector));
        const auto rep = orthogonality_report(in.vector);
        CHECK(rep.all_zero());
        CHECK(rep.checks_run == 30);
        CHECK(in.vector.total() == masses[k]);
        CHECK(in.expected_mass == masses[k]);
        CHECK(in.expected_intersection == inter[k]);
        const auto cert = CertifiedAntidesign::certify(in.vector);
        CHECK(expected_intersection(cert) == BigRational(inter[k]));
        const auto js = family_report(in, rep);
        CHECK(js["all_zero"] == true);
        CHECK(js["mass"] == masses[k]);
    }
    CHECK(insts[1].parameters["t"] == 3);
}

TEST_CASE("closed-form masses")
{
    CHECK(spread_mass(2, 2, 1) == 45);
    CHECK(spread_mass(2, 3, 1) == 160);
    CHECK(symplectic_mass(2, 3) == 160);
    CHECK(subspace_mass(2, 1, 3) == 1560);
    CHECK(subspace_mass(2, 2, 3) == 1440);
    CHECK(subspace_intersection(2, 1, 3) == 156);
    CHECK(spread_intersection(2, 3, 4) == 64);
    CHECK(symplectic_intersection(2, 3) == 16);
}

TEST_CASE("subspace antidesign values")
{
    const auto F = Field::of_order(3);
    const auto u = ChamberUniverse::build(F, 4);
    for (const auto& S : {Subspace::coordinate(F, 4, {2}), Subspace::span(F, 4, {{1, 1, 0, 2}, {0, 1, 2, 2}})}) {
        const auto v = subspace_antidesign(S, u);
        for (std::size_t c = 0; c < u->size(); c += 7) CHECK(v[c] == literal_subspace_weight(u->chamber(c), S, 2, 3));
        CHECK(verify_antidesign(v));
        CHECK(v.total() == subspace_mass(2, S.dim(), 3));
    }
    CHECK_THROWS_AS(subspace_antidesign(Subspace::coordinate(F, 4, {0, 1, 2}), u), PreconditionError);
}

TEST_CASE("unitary antidesign over F_4")
{
    const auto u = ChamberUniverse::build(Field::of_order(4), 4);
    const auto insts = standard_antidesigns(u, {"unitary"});
    REQUIRE(insts.size() == 1);
    const auto& v = insts[0].vector;
    CHECK(v.total() == 0);
    CHECK(insts[0].expected_intersection == 0);
    std::size_t neg = 0;
    for (auto x : v.values())
        if (x < 0) {
            CHECK(x == -4);
            ++neg;
        }
    CHECK(neg == 135);
    CHECK(verify_antidesign(v));
    CHECK_THROWS_AS(standard_antidesigns(ChamberUniverse::build(Field::of_order(3), 4), {"unitary"}), PreconditionError);
    CHECK_THROWS_AS(standard_antidesigns(u, {"nonsense"}), PreconditionError);
}

TEST_CASE("non-antidesigns are rejected")
{
    const auto u = ChamberUniverse::build(Field::of_order(2), 4);
    WeightVector one(u);
    one.set(0, 1);
    CHECK_FALSE(verify_antidesign(one));
    CHECK_FALSE(orthogonal_by_products(one));
    CHECK_THROWS_AS(CertifiedAntidesign::certify(one), VerificationError);
    const WeightVector zero(u);
    CHECK(verify_antidesign(zero));
    CHECK(CertifiedAntidesign::certify(zero).mass() == 0);
    CHECK(verify_antidesign(WeightVector::ones(u)));
}

TEST_CASE("thread count does not change results")
{
    const auto u = ChamberUniverse::build(Field::of_order(3), 4);
    const auto v = subspace_antidesign(Subspace::coordinate(u->field(), 4, {0}), u);
    WeightVector w(u);
    for (std::size_t c = 0; c < u->size(); ++c) w.set(c, static_cast<std::int64_t>(c % 5) - 2);
    set_thread_limit(1);
    const auto a = orthogonality_report(w);
    set_thread_limit(4);
    const auto b = orthogonality_report(w);
    set_thread_limit(0);
    CHECK(a.products == b.products);
    CHECK_FALSE(a.all_zero());
    CHECK(orthogonality_report(v).all_zero());
}

TEST_CASE("spread counting diagnostic")
{
    for (unsigned q : {2u, 3u}) {
        const auto u = ChamberUniverse::build(Field::of_order(q), 4);
        for (const auto& s : {field_extension_spread(u->field(), 2), make_spread(enumerate_generators(FormSpec::standard_alternating(u->field(), 2)))}) {
            const auto rows = spread_count_diagnostic(s, u);
            CHECK(rows.size() == 2 * u->lattice().point_count());
            for (const auto& r : rows) CHECK(r.pass());
        }
    }
}

TEST_CASE("weight vector IO")
{
    const auto u = ChamberUniverse::build(Field::of_order(2), 3);
    WeightVector v(u);
    v.set(2, 5);
    v.set(7, -1);
    const auto sp = v.to_sparse();
    CHECK(sp.entries.size() == 2);
    CHECK(WeightVector::from_sparse(u, sp) == v);
    CHECK(v.support_size() == 2);
    std::ostringstream os;
    write_csv(os, v);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "index,value");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 21);
    const auto other = ChamberUniverse::build(Field::of_order(3), 2);
    CHECK_THROWS_AS(inner_product(v, WeightVector::ones(other)), std::invalid_argument);
    CHECK(inner_product(v, WeightVector::ones(u)) == 4);
}

TEST_CASE("JSON encoding of exact values")
{
    CHECK(json_value(BigInt(42)) == 42);
    CHECK(json_value(BigInt(1) << 80) == "1208925819614629174706176");
    CHECK(json_value(BigRational(3, 6)) == "1/2");
    CHECK(json_value(BigRational(8, 2)) == 4);
}
