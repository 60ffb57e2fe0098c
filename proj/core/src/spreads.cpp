#include "chamberlab/spreads.hpp"

#include "chamberlab/counting.hpp"
#include "chamberlab/error.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace chamberlab {

namespace {

using Ext = Poly; // coefficient vector of length n

Ext ext_mul(const Field& F, const Ext& a, const Ext& b, const Poly& m)
{
    auto r = poly::mod(F, poly::mul(F, a, b), m);
    r.resize(a.size(), 0);
    return r;
}

} // namespace

Spread field_extension_spread(const Field& F, int n)
{
    if (n < 1) throw PreconditionError("spread needs n >= 1");
    const unsigned q = F.order();
    const auto m = poly::smallest_irreducible(F, static_cast<unsigned>(n));
    const auto un = static_cast<std::size_t>(n);

    std::vector<Ext> basis(un, Ext(un, 0)); // 1, a, ..., a^{n-1}
    for (std::size_t k = 0; k < un; ++k) basis[k][k] = 1;

    auto member = [&](const Ext& x, const Ext& y) {
        std::vector<Vec> rows;
        for (const auto& l : basis) {
            const Ext lx = ext_mul(F, l, x, m), ly = ext_mul(F, l, y, m);
            Vec v(lx);
            v.insert(v.end(), ly.begin(), ly.end());
            rows.push_back(std::move(v));
        }
        return Subspace::span(F, 2 * n, rows);
    };

    std::vector<Subspace> members;
    const Ext one = [&] { Ext e(un, 0); e[0] = 1; return e; }();
    members.push_back(member(Ext(un, 0), one));
    Ext a(un, 0);
    while (true) {
        members.push_back(member(one, a));
        std::size_t k = 0;
        while (k < un && a[k] == q - 1) a[k++] = 0;
        if (k == un) break;
        ++a[k];
    }
    std::sort(members.begin(), members.end());
    auto s = make_spread(std::move(members));
    if (s.fold != 1) throw VerificationError("field extension spread is not a 1-fold spread");
    return s;
}

std::optional<int> is_t_fold_spread(const std::vector<Subspace>& members)
{
    if (members.empty()) throw PreconditionError("a spread needs at least one member");
    const int d = members.front().ambient_dim();
    if (d % 2) throw PreconditionError("spreads live in even dimension");
    const int n = d / 2;
    std::map<Vec, int> cover;
    for (const auto& s : members) {
        if (s.ambient_dim() != d || s.dim() != n) throw PreconditionError("spread members must all be n-subspaces of F_q^{2n}");
        for (auto& v : s.nonzero_vectors()) {
            auto p = normalize_projective(s.field(), std::move(v));
            ++cover[p];
        }
    }
    // each point is counted q-1 times per member, once per nonzero scalar
    const auto& F = members.front().field();
    const BigInt points = gaussian(d, 1, F.order());
    if (BigInt(cover.size()) != points) return std::nullopt;
    const int t = cover.begin()->second / static_cast<int>(F.order() - 1);
    for (const auto& [p, c] : cover)
        if (c != t * static_cast<int>(F.order() - 1)) return std::nullopt;
    if (BigInt(members.size()) != BigInt(t) * (ipow(F.order(), n) + 1))
        throw VerificationError("uniform cover with a member count that is not t(q^n + 1)");
    return t;
}

Spread make_spread(std::vector<Subspace> members)
{
    const auto t = is_t_fold_spread(members);
    if (!t) throw VerificationError("subspaces do not cover the points uniformly");
    Spread s;
    s.n = members.front().dim();
    s.fold = *t;
    s.members = std::move(members);
    return s;
}

void write_subspaces(std::ostream& os, const std::vector<Subspace>& members)
{
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& s = members[i];
        os << "# " << i << " dim " << s.dim() << "\n";
        for (int r = 0; r < s.dim(); ++r) {
            for (int c = 0; c < s.ambient_dim(); ++c) os << (c ? " " : "") << static_cast<unsigned>(s.row(r)[static_cast<std::size_t>(c)]);
            os << "\n";
        }
    }
}

} // namespace chamberlab
