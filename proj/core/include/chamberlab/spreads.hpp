#pragma once

#include "chamberlab/subspace.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace chamberlab {

/// A set of n-subspaces of F_q^{2n} covering every point exactly `fold` times.
struct Spread {
    int n = 0;
    int fold = 0;
    std::vector<Subspace> members;
};

/// The q^n + 1 points of PG(1, q^n) read as n-subspaces of F_q^{2n}, using
/// the polynomial basis 1, a, ..., a^{n-1} of F_{q^n} = F_q[x]/(m) with m the
/// smallest monic irreducible of degree n.
Spread field_extension_spread(const Field& F, int n);

/// The uniform number of members through each point, or nullopt when the
/// cover is not uniform. Throws PreconditionError on mixed or wrong
/// dimensions (members must be n-subspaces of F_q^{2n}).
std::optional<int> is_t_fold_spread(const std::vector<Subspace>& members);

/// Wraps verified members as a spread; throws VerificationError when the
/// cover is not uniform.
Spread make_spread(std::vector<Subspace> members);

/// One block per subspace: a header "# <index> dim <k>" followed by the
/// canonical basis rows, entries separated by spaces.
void write_subspaces(std::ostream& os, const std::vector<Subspace>& members);

} // namespace chamberlab
