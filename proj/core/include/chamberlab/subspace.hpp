#pragma once

#include "chamberlab/gf.hpp"

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace chamberlab {

using Vec = std::vector<Elem>;

/// Row-major matrix over a field, used for generating sets and Gram matrices.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    Elem& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    Elem operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    std::span<const Elem> row(int r) const { return {data.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols), static_cast<std::size_t>(cols)}; }
};

/// Row-reduces `m` in place to reduced row-echelon form and drops zero rows.
/// Returns the pivot columns.
std::vector<int> rref(const Field& F, Matrix& m);

/// A subspace of F_q^d stored by its reduced row-echelon basis. The basis is
/// canonical, so equality, ordering and hashing act on subspaces.
class Subspace {
public:
    /// Span of arbitrary vectors of length d.
    static Subspace span(const Field& F, int d, std::span<const Vec> vectors);
    static Subspace span(const Field& F, int d, std::initializer_list<Vec> vectors)
    {
        return span(F, d, std::span<const Vec>(vectors.begin(), vectors.size()));
    }
    static Subspace from_rows(const Field& F, Matrix m);
    static Subspace zero(const Field& F, int d);
    static Subspace full(const Field& F, int d);
    /// Span of the standard basis vectors e_i for the listed coordinates.
    static Subspace coordinate(const Field& F, int d, std::initializer_list<int> coords);

    const Field& field() const { return field_; }
    int ambient_dim() const { return basis_.cols; }
    int dim() const { return basis_.rows; }
    const Matrix& basis() const { return basis_; }
    std::span<const Elem> row(int r) const { return basis_.row(r); }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains_vector(std::span<const Elem> v) const;
    /// True when `other` is a subspace of this one.
    bool contains(const Subspace& other) const;

    /// All nonzero vectors, q^s - 1 of them.
    std::vector<Vec> nonzero_vectors() const;

    std::string to_string() const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.basis_.cols == b.basis_.cols && a.basis_.rows == b.basis_.rows && a.basis_.data == b.basis_.data;
    }
    /// Orders by ambient dimension, then dimension, then basis entries.
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

private:
    Subspace(Field F, Matrix m, std::vector<int> pivots) : field_(std::move(F)), basis_(std::move(m)), pivots_(std::move(pivots)) {}

    Field field_;
    Matrix basis_;
    std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool meets_trivially(const Subspace& a, const Subspace& b);
/// True when `big` contains `small`.
bool contains(const Subspace& big, const Subspace& small);

/// {v : r . v = 0 for every row r of m} (standard bilinear dot product).
Subspace nullspace(const Field& F, const Matrix& m);
/// Annihilator of S under the standard dot product; dimension d - dim S.
Subspace annihilator(const Subspace& s);

/// All s-subspaces of F_q^d, generated pivot pattern by pivot pattern and
/// returned sorted by basis entries.
std::vector<Subspace> enumerate_subspaces(const Field& F, int d, int s);

/// Streams the s-subspaces of F_q^d without materializing them, in pivot
/// pattern order (not sorted).
void for_each_subspace(const Field& F, int d, int s, const std::function<void(const Subspace&)>& fn);

/// Normalizes a nonzero vector so that its first nonzero entry is 1.
Vec normalize_projective(const Field& F, Vec v);

} // namespace chamberlab

template <>
struct std::hash<chamberlab::Subspace> {
    std::size_t operator()(const chamberlab::Subspace& s) const noexcept
    {
        std::size_t h = static_cast<std::size_t>(s.ambient_dim()) * 131u + static_cast<std::size_t>(s.dim());
        for (auto e : s.basis().data) h = h * 1099511628211ull ^ e;
        return h;
    }
};
