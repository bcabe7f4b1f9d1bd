#pragma once

// The isomorphisms between the three realizations: psi turns a member
// monomial's exponent grid into a reverse tableau row by row, varphi carries
// a reverse tableau to the standard model by Schensted row insertion, and
// both invert exactly (extraction by reverse bumping).

#include "crystal/cartan.hpp"
#include "crystal/membership.hpp"
#include "crystal/monomial.hpp"
#include "crystal/tableaux.hpp"

#include <vector>

namespace crystal {

/// Reverse tableau of the monomial's grid: row j+1 from the bottom holds i
/// with the multiplicity of X_i(j), in weakly increasing order. Precondition
/// is_member(m, lambda); violations are a domain error.
Tableau psi(const Monomial& m, const Weight& lambda);

/// Product of X_i(j-1) over the entries i of row j (from the bottom) of a
/// reverse semistandard tableau; inverts psi.
Monomial psi_inverse(const Tableau& reverse_tableau);

/// Standard tableau obtained by row-inserting the reverse tableau's columns
/// shortest to longest (left to right), each column bottom entry first.
Tableau varphi(const Tableau& reverse_tableau);

/// Inversion record: the reconstructed reverse tableau plus the values in
/// the order reverse bumping popped them out.
struct ExtractionTrace {
    Tableau reverse_tableau;
    std::vector<int> popped;
};

ExtractionTrace varphi_inverse_trace(const Tableau& standard_tableau);
Tableau varphi_inverse(const Tableau& standard_tableau);

/// varphi after psi: the composite isomorphism from member monomials to
/// standard tableaux.
Tableau phi_map(const Monomial& m, const Weight& lambda);

}  // namespace crystal
