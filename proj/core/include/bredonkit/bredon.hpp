#pragma once

#include <array>

#include "bredonkit/chartab.hpp"
#include "bredonkit/qcomplex.hpp"

namespace bredonkit {

/// Bredon chain complex in irreducible character bases. Rows/columns are
/// grouped per cell: cells in file order, characters in frozen table
/// order.
struct BredonComplex {
    IntMat psi2;  // faces -> edge representation rings
    IntMat psi1;  // edge representation rings -> vertex representation rings
    std::vector<std::size_t> vertex_offset;  // first row of each vertex block
    std::vector<std::size_t> edge_offset;    // first column of each edge block
};

/// Assemble the differentials: the Psi1 block for an edge incidence is the
/// signed Frobenius induction matrix of its embedding label (+ at end, - at
/// origin; a loop with equal labels cancels to zero), and each Psi2 column
/// places the regular-representation coordinates of the edge stabilizer.
BredonComplex assemble(const QuotientComplex& c);

/// (H0, H1, H2) of the Bredon complex, via Smith normal form.
std::array<AbelianGroup, 3> bredon_homology(const QuotientComplex& c);

/// Fast path for complexes whose singular part is at most zero-dimensional
/// and whose quotient is connected: H0 is free of rank |FC|, higher
/// degrees equal orbit space homology. Throws SingularPartTooBig or
/// Disconnected.
std::array<AbelianGroup, 3> h_fin_via_fc(const QuotientComplex& c);

/// 1 + sum over nontrivially stabilized vertices of (class count - 1).
long fc_count(const QuotientComplex& c);

}  // namespace bredonkit
