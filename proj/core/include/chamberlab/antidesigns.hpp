#pragma once

#include "chamberlab/forms.hpp"
#include "chamberlab/spreads.hpp"
#include "chamberlab/weights.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chamberlab {

// Antidesigns: weightings orthogonal to the smallest eigenspace of the
// Kneser graph on chambers of F_q^{2n}, which is spanned by the chi^i_P.

/// 1 on chambers whose C_n is a spread member.
WeightVector spread_antidesign(const Spread& s, UniversePtr u);
/// 1 on symplectic chambers of an alternating form.
WeightVector symplectic_antidesign(const FormSpec& f, UniversePtr u);
/// -k on hermitian chambers, 1 on other chambers whose C_n is a generator,
/// 0 elsewhere; k = z_n(q) - 1.
WeightVector unitary_antidesign(const FormSpec& f, UniversePtr u);
/// q^{s(2n-s)-n} on chambers with C_s = S, 1 on chambers with S meeting
/// C_{2n-s} trivially, 0 elsewhere; 1 <= s <= n.
WeightVector subspace_antidesign(const Subspace& s, UniversePtr u);

// Closed-form masses 1^T v and intersections with a maximum EKR set.
BigInt spread_mass(int n, std::int64_t q, int t);
BigInt symplectic_mass(int n, std::int64_t q);
BigInt subspace_mass(int n, int s, std::int64_t q);
BigInt spread_intersection(int n, std::int64_t q, int t);
BigInt symplectic_intersection(int n, std::int64_t q);
BigInt subspace_intersection(int n, int s, std::int64_t q);

struct OrthogonalityReport {
    std::size_t checks_run = 0;
    std::size_t nonzero = 0;
    /// <v, chi^i_P> at index (i - 1) * points + P.
    std::vector<BigInt> products;
    bool all_zero() const { return nonzero == 0; }
};

/// Every <v, chi^i_P>, computed exactly in one pass over the support of v.
OrthogonalityReport orthogonality_report(const WeightVector& v);
bool verify_antidesign(const WeightVector& v);

/// A weight vector whose orthogonality to every chi^i_P has been checked.
class CertifiedAntidesign {
public:
    /// Throws VerificationError when some <v, chi^i_P> is nonzero.
    static CertifiedAntidesign certify(WeightVector v);

    const WeightVector& vector() const { return v_; }
    const BigInt& mass() const { return mass_; }
    std::size_t checks_run() const { return checks_; }

private:
    CertifiedAntidesign(WeightVector v, BigInt mass, std::size_t checks) : v_(std::move(v)), mass_(std::move(mass)), checks_(checks) {}

    WeightVector v_;
    BigInt mass_;
    std::size_t checks_;
};

/// 1^T v / (q^n + 1): the value of <v, 1_F> for every maximum EKR set F.
BigRational expected_intersection(const CertifiedAntidesign& a);

/// One member of the standard catalogue of antidesign instances.
struct AntidesignInstance {
    std::string family;       // spread | symplectic | unitary | subspace
    nlohmann::json parameters;
    WeightVector vector;
    BigInt expected_mass;
    BigInt expected_intersection;
};

/// Instances for the requested families on F_q^{2n}:
///   spread: the field-extension spread (t = 1) and the symplectic
///           generators as a t-fold spread;
///   symplectic: the standard alternating form;
///   unitary: the standard hermitian form (skipped unless q is a square);
///   subspace: S = span(e_1..e_s) for s = 1..n.
/// An empty list selects every family. Throws PreconditionError for an
/// unknown family name, or for unitary requested explicitly with a
/// non-square q.
std::vector<AntidesignInstance> standard_antidesigns(UniversePtr u, const std::vector<std::string>& families);
std::vector<std::string> all_antidesign_families();

/// {family, parameters, checks_run, all_zero, mass, expected_mass}.
nlohmann::json family_report(const AntidesignInstance& inst, const OrthogonalityReport& r);

/// Per (i, P) counts from the orthogonality argument for spreads: A chambers
/// with C_n in S and chi^i_P = q^i, B chambers with C_n in S and
/// chi^i_P = -1, next to their closed forms
///   A = t [n-1 choose n-i] q^{n-i} z_i z_{n-i} z_n,
///   B = t [n-1 choose i-1] q^n z_i z_{n-i} z_n.
struct SpreadCount {
    int i = 0;
    std::uint32_t point = 0;
    std::int64_t a = 0, b = 0;
    BigInt a_expected, b_expected;
    bool pass() const { return a_expected == a && b_expected == b; }
};
std::vector<SpreadCount> spread_count_diagnostic(const Spread& s, UniversePtr u);

} // namespace chamberlab
