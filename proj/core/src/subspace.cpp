#include "chamberlab/subspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chamberlab {

std::vector<int> rref(const Field& F, Matrix& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int k = 0; k < m.cols; ++k) std::swap(m(sel, k), m(r, k));
        const Elem s = F.inv(m(r, c));
        for (int k = c; k < m.cols; ++k) m(r, k) = F.mul(m(r, k), s);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Elem f = m(i, c);
            for (int k = c; k < m.cols; ++k) m(i, k) = F.sub(m(i, k), F.mul(f, m(r, k)));
        }
        pivots.push_back(c);
        ++r;
    }
    m.rows = r;
    m.data.resize(static_cast<std::size_t>(r) * static_cast<std::size_t>(m.cols));
    return pivots;
}

Subspace Subspace::from_rows(const Field& F, Matrix m)
{
    auto piv = rref(F, m);
    return Subspace(F, std::move(m), std::move(piv));
}

Subspace Subspace::span(const Field& F, int d, std::span<const Vec> vectors)
{
    if (d < 0) throw std::invalid_argument("negative ambient dimension");
    Matrix m(static_cast<int>(vectors.size()), d);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != d)
            throw std::invalid_argument("vector of length " + std::to_string(vectors[i].size()) + " in ambient dimension " + std::to_string(d));
        for (int k = 0; k < d; ++k) {
            if (vectors[i][static_cast<std::size_t>(k)] >= F.order()) throw std::invalid_argument("vector entry outside the field");
            m(static_cast<int>(i), k) = vectors[i][static_cast<std::size_t>(k)];
        }
    }
    return from_rows(F, std::move(m));
}

Subspace Subspace::zero(const Field& F, int d) { return from_rows(F, Matrix(0, d)); }

Subspace Subspace::full(const Field& F, int d)
{
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = 1;
    return from_rows(F, std::move(m));
}

Subspace Subspace::coordinate(const Field& F, int d, std::initializer_list<int> coords)
{
    Matrix m(static_cast<int>(coords.size()), d);
    int r = 0;
    for (int c : coords) {
        if (c < 0 || c >= d) throw std::invalid_argument("coordinate out of range");
        m(r++, c) = 1;
    }
    return from_rows(F, std::move(m));
}

bool Subspace::contains_vector(std::span<const Elem> v) const
{
    if (static_cast<int>(v.size()) != ambient_dim()) throw std::invalid_argument("vector length does not match ambient dimension");
    Vec w(v.begin(), v.end());
    for (int r = 0; r < dim(); ++r) {
        const Elem f = w[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])];
        if (!f) continue;
        for (int k = 0; k < ambient_dim(); ++k) w[static_cast<std::size_t>(k)] = field_.sub(w[static_cast<std::size_t>(k)], field_.mul(f, basis_(r, k)));
    }
    return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_dim() != ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    if (other.dim() > dim()) return false;
    for (int r = 0; r < other.dim(); ++r)
        if (!contains_vector(other.row(r))) return false;
    return true;
}

std::vector<Vec> Subspace::nonzero_vectors() const
{
    std::vector<Vec> out;
    const unsigned q = field_.order();
    std::vector<Elem> coef(static_cast<std::size_t>(dim()), 0);
    while (true) {
        // advance odometer
        int k = 0;
        while (k < dim() && coef[static_cast<std::size_t>(k)] == q - 1) coef[static_cast<std::size_t>(k++)] = 0;
        if (k == dim()) break;
        ++coef[static_cast<std::size_t>(k)];
        Vec v(static_cast<std::size_t>(ambient_dim()), 0);
        for (int r = 0; r < dim(); ++r) {
            const Elem c = coef[static_cast<std::size_t>(r)];
            if (!c) continue;
            for (int j = 0; j < ambient_dim(); ++j) v[static_cast<std::size_t>(j)] = field_.add(v[static_cast<std::size_t>(j)], field_.mul(c, basis_(r, j)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::string Subspace::to_string() const
{
    std::ostringstream os;
    os << "<";
    for (int r = 0; r < dim(); ++r) {
        if (r) os << "; ";
        for (int c = 0; c < ambient_dim(); ++c) os << (c ? " " : "") << static_cast<unsigned>(basis_(r, c));
    }
    os << ">";
    return os.str();
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b)
{
    if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.basis_.data.begin(), a.basis_.data.end(), b.basis_.data.begin(), b.basis_.data.end());
}

namespace {

void require_same_space(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspaces live in different ambient spaces");
    if (!(a.field() == b.field())) throw std::invalid_argument("subspaces live over different fields");
}

} // namespace

Subspace sum(const Subspace& a, const Subspace& b)
{
    require_same_space(a, b);
    const int d = a.ambient_dim();
    Matrix m(a.dim() + b.dim(), d);
    std::copy(a.basis().data.begin(), a.basis().data.end(), m.data.begin());
    std::copy(b.basis().data.begin(), b.basis().data.end(), m.data.begin() + static_cast<std::ptrdiff_t>(a.basis().data.size()));
    return Subspace::from_rows(a.field(), std::move(m));
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    require_same_space(a, b);
    const Field& F = a.field();
    const int d = a.ambient_dim();
    // Zassenhaus: rows (a|a) and (b|0); rows with vanishing left half span a ∩ b.
    Matrix m(a.dim() + b.dim(), 2 * d);
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < d; ++c) {
            m(r, c) = a.basis()(r, c);
            m(r, d + c) = a.basis()(r, c);
        }
    for (int r = 0; r < b.dim(); ++r)
        for (int c = 0; c < d; ++c) m(a.dim() + r, c) = b.basis()(r, c);
    auto piv = rref(F, m);
    Matrix out(0, d);
    for (int r = 0; r < m.rows; ++r) {
        if (piv[static_cast<std::size_t>(r)] < d) continue;
        out.rows += 1;
        for (int c = 0; c < d; ++c) out.data.push_back(m(r, d + c));
    }
    return Subspace::from_rows(F, std::move(out));
}

bool meets_trivially(const Subspace& a, const Subspace& b)
{
    require_same_space(a, b);
    return sum(a, b).dim() == a.dim() + b.dim();
}

bool contains(const Subspace& big, const Subspace& small)
{
    require_same_space(big, small);
    return big.contains(small);
}

Subspace nullspace(const Field& F, const Matrix& m)
{
    Matrix r = m;
    const auto piv = rref(F, r);
    const int d = m.cols;
    std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
    for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < d; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v(static_cast<std::size_t>(d), 0);
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[static_cast<std::size_t>(piv[i])] = F.neg(r(static_cast<int>(i), f));
        basis.push_back(std::move(v));
    }
    return Subspace::span(F, d, basis);
}

Subspace annihilator(const Subspace& s) { return nullspace(s.field(), s.basis()); }

void for_each_subspace(const Field& F, int d, int s, const std::function<void(const Subspace&)>& fn)
{
    if (s < 0 || s > d) throw std::invalid_argument("subspace dimension out of range");
    const unsigned q = F.order();
    std::vector<int> piv(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) piv[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
        for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < s; ++r)
            for (int c = piv[static_cast<std::size_t>(r)] + 1; c < d; ++c)
                if (!is_pivot[static_cast<std::size_t>(c)]) free.emplace_back(r, c);
        Matrix m(s, d);
        for (int r = 0; r < s; ++r) m(r, piv[static_cast<std::size_t>(r)]) = 1;
        std::vector<Elem> val(free.size(), 0);
        while (true) {
            for (std::size_t k = 0; k < free.size(); ++k) m(free[k].first, free[k].second) = val[k];
            fn(Subspace::from_rows(F, m));
            std::size_t k = 0;
            while (k < free.size() && val[k] == q - 1) val[k++] = 0;
            if (k == free.size()) break;
            ++val[k];
        }
        // next pivot combination
        int i = s - 1;
        while (i >= 0 && piv[static_cast<std::size_t>(i)] == d - s + i) --i;
        if (i < 0) break;
        ++piv[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<Subspace> enumerate_subspaces(const Field& F, int d, int s)
{
    std::vector<Subspace> out;
    for_each_subspace(F, d, s, [&](const Subspace& x) { out.push_back(x); });
    std::sort(out.begin(), out.end());
    return out;
}

Vec normalize_projective(const Field& F, Vec v)
{
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (it == v.end()) throw std::invalid_argument("zero vector has no projective point");
    const Elem s = F.inv(*it);
    for (auto& e : v) e = F.mul(e, s);
    return v;
}

} // namespace chamberlab
