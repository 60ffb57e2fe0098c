#include "chamberlab/forms.hpp"

#include "chamberlab/error.hpp"

namespace chamberlab {

const char* to_string(FormKind k) { return k == FormKind::alternating ? "alternating" : "hermitian"; }

FormSpec::FormSpec(FormKind kind, Field F, Matrix gram) : kind_(kind), field_(std::move(F)), gram_(std::move(gram))
{
    const int d = gram_.rows;
    if (gram_.cols != d || d < 1) throw PreconditionError("Gram matrix must be square and nonempty");
    for (auto e : gram_.data)
        if (e >= field_.order()) throw PreconditionError("Gram entry outside the field");
    if (kind_ == FormKind::hermitian && !field_.has_conjugation())
        throw PreconditionError("hermitian forms need a square field order, got q = " + std::to_string(field_.order()));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (kind_ == FormKind::alternating) {
                if (i == j && gram_(i, i) != 0) throw PreconditionError("alternating Gram matrix needs a zero diagonal");
                if (gram_(j, i) != field_.neg(gram_(i, j))) throw PreconditionError("alternating Gram matrix is not skew-symmetric");
            } else if (gram_(j, i) != field_.conjugate(gram_(i, j))) {
                throw PreconditionError("hermitian Gram matrix is not conjugate-symmetric");
            }
        }
    Matrix m = gram_;
    if (static_cast<int>(rref(field_, m).size()) != d) throw PreconditionError("form is degenerate");
}

FormSpec FormSpec::standard_alternating(const Field& F, int n)
{
    if (n < 1) throw PreconditionError("alternating form needs n >= 1");
    Matrix g(2 * n, 2 * n);
    for (int b = 0; b < n; ++b) {
        g(2 * b, 2 * b + 1) = 1;
        g(2 * b + 1, 2 * b) = F.neg(1);
    }
    return FormSpec(FormKind::alternating, F, std::move(g));
}

FormSpec FormSpec::standard_hermitian(const Field& F, int d)
{
    Matrix g(d, d);
    for (int i = 0; i < d; ++i) g(i, i) = 1;
    return FormSpec(FormKind::hermitian, F, std::move(g));
}

Elem FormSpec::evaluate(std::span<const Elem> u, std::span<const Elem> v) const
{
    const int d = dim();
    if (static_cast<int>(u.size()) != d || static_cast<int>(v.size()) != d) throw std::invalid_argument("vector length does not match the form");
    Elem acc = 0;
    for (int i = 0; i < d; ++i) {
        if (!u[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < d; ++j) {
            const Elem g = gram_(i, j);
            if (!g) continue;
            acc = field_.add(acc, field_.mul(field_.mul(u[static_cast<std::size_t>(i)], g), sigma(v[static_cast<std::size_t>(j)])));
        }
    }
    return acc;
}

Subspace FormSpec::perp(const Subspace& s) const
{
    const int d = dim();
    if (s.ambient_dim() != d || !(s.field() == field_)) throw std::invalid_argument("subspace does not live in the form's space");
    // f(s, v) = sum_j c_j sigma(v_j) with c = s g; applying sigma gives the
    // linear condition sum_j sigma(c_j) v_j = 0.
    Matrix m(s.dim(), d);
    for (int r = 0; r < s.dim(); ++r)
        for (int j = 0; j < d; ++j) {
            Elem c = 0;
            for (int i = 0; i < d; ++i) c = field_.add(c, field_.mul(s.row(r)[static_cast<std::size_t>(i)], gram_(i, j)));
            m(r, j) = sigma(c);
        }
    return nullspace(field_, m);
}

bool FormSpec::is_totally_isotropic(const Subspace& s) const
{
    for (int a = 0; a < s.dim(); ++a)
        for (int b = 0; b < s.dim(); ++b)
            if (evaluate(s.row(a), s.row(b)) != 0) return false;
    return true;
}

std::vector<Subspace> enumerate_generators(const FormSpec& f)
{
    const int d = f.dim();
    if (d % 2) throw PreconditionError("generators are enumerated in even dimension only");
    std::vector<Subspace> out;
    for (auto& s : enumerate_subspaces(f.field(), d, d / 2))
        if (f.is_totally_isotropic(s)) out.push_back(std::move(s));
    return out;
}

PolarityTable::PolarityTable(const FormSpec& f, const SubspaceLattice& lat) : form_(f), d_(lat.ambient_dim())
{
    if (f.dim() != d_ || !(f.field() == lat.field())) throw PreconditionError("form and lattice live in different spaces");
    table_.resize(static_cast<std::size_t>(d_) + 1);
    for (int s = 0; s <= d_; ++s)
        for (const auto& x : lat.level(s)) table_[static_cast<std::size_t>(s)].push_back(lat.require_index(f.perp(x)));
}

bool PolarityTable::is_generator(std::uint32_t idx) const
{
    if (d_ % 2) return false;
    return perp(d_ / 2, idx) == idx;
}

bool PolarityTable::is_polar_chamber(const ChamberUniverse& u, std::size_t c) const
{
    if (d_ % 2) throw PreconditionError("polar chambers need an even ambient dimension");
    const int n = d_ / 2;
    for (int i = 1; i <= n; ++i)
        if (u.part(c, 2 * n - i) != perp(i, u.part(c, i))) return false;
    return true;
}

namespace {

bool polar_chamber(const Chamber& c, const FormSpec& f, FormKind want)
{
    if (f.kind() != want) throw PreconditionError(std::string("expected a ") + to_string(want) + " form");
    const int d = c.ambient_dim();
    if (d % 2 || d != f.dim()) throw PreconditionError("chamber and form need the same even dimension");
    const int n = d / 2;
    if (!f.is_totally_isotropic(c.part(n))) return false;
    for (int i = 1; i <= n; ++i)
        if (!(c.part(2 * n - i) == f.perp(c.part(i)))) return false;
    return true;
}

} // namespace

bool is_symplectic_chamber(const Chamber& c, const FormSpec& f) { return polar_chamber(c, f, FormKind::alternating); }
bool is_hermitian_chamber(const Chamber& c, const FormSpec& f) { return polar_chamber(c, f, FormKind::hermitian); }

} // namespace chamberlab
