#pragma once

#include "chamberlab/chambers.hpp"

#include <vector>

namespace chamberlab {

enum class FormKind { alternating, hermitian };

const char* to_string(FormKind k);

/// A nondegenerate alternating or hermitian (unitary) form on F_q^d,
/// f(u, v) = sum_ij u_i g_ij sigma(v_j) with sigma the identity for
/// alternating forms and x -> x^sqrt(q) for hermitian ones.
class FormSpec {
public:
    /// Validates the Gram matrix; throws PreconditionError when it is not of
    /// the stated kind or is degenerate.
    FormSpec(FormKind kind, Field F, Matrix gram);

    /// n hyperbolic blocks [[0,1],[-1,0]] on F_q^{2n}.
    static FormSpec standard_alternating(const Field& F, int n);
    /// Identity Gram matrix on F_q^d; q must be a square.
    static FormSpec standard_hermitian(const Field& F, int d);

    FormKind kind() const { return kind_; }
    const Field& field() const { return field_; }
    int dim() const { return gram_.rows; }
    const Matrix& gram() const { return gram_; }

    Elem sigma(Elem a) const { return kind_ == FormKind::hermitian ? field_.conjugate(a) : a; }
    Elem evaluate(std::span<const Elem> u, std::span<const Elem> v) const;

    Subspace perp(const Subspace& s) const;
    bool is_totally_isotropic(const Subspace& s) const;

private:
    FormKind kind_;
    Field field_;
    Matrix gram_;
};

/// All maximal totally isotropic subspaces (dimension d/2) of an
/// even-dimensional space, in sorted order.
std::vector<Subspace> enumerate_generators(const FormSpec& f);

/// The polarity of a form tabulated on a subspace lattice: perp of the
/// s-subspace i is the (d-s)-subspace perp(s, i).
class PolarityTable {
public:
    PolarityTable(const FormSpec& f, const SubspaceLattice& lat);

    const FormSpec& form() const { return form_; }
    std::uint32_t perp(int s, std::uint32_t i) const { return table_[static_cast<std::size_t>(s)][i]; }
    bool is_generator(std::uint32_t n_subspace) const;

    /// C_{2n-i} = C_i^perp for i = 1..n (so C_n is totally isotropic).
    /// Called symplectic for alternating forms, hermitian for unitary ones.
    bool is_polar_chamber(const ChamberUniverse& u, std::size_t c) const;

private:
    FormSpec form_;
    int d_;
    std::vector<std::vector<std::uint32_t>> table_;
};

/// Literal predicates on explicit chambers; throw PreconditionError on a
/// kind mismatch or odd dimension.
bool is_symplectic_chamber(const Chamber& c, const FormSpec& f);
bool is_hermitian_chamber(const Chamber& c, const FormSpec& f);

} // namespace chamberlab
