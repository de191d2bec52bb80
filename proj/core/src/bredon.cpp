#include "bredonkit/bredon.hpp"

#include <cassert>

#include "bredonkit/errors.hpp"

namespace bredonkit {

BredonComplex assemble(const QuotientComplex& c) {
    validate_or_throw(c);
    BredonComplex b;
    std::size_t rows = 0;
    for (const auto& v : c.vertices) {
        b.vertex_offset.push_back(rows);
        rows += class_count(v.stab);
    }
    std::size_t cols = 0;
    for (const auto& e : c.edges) {
        b.edge_offset.push_back(cols);
        cols += class_count(e.stab);
    }

    b.psi1 = IntMat(rows, cols);
    for (std::size_t j = 0; j < c.edges.size(); ++j) {
        const auto& e = c.edges[j];
        auto add_block = [&](const QuotientComplex::EdgeEnd& end, int sign) {
            IntMat ind = induction_matrix_irr(c.end_label(e, end));
            const std::size_t r0 = b.vertex_offset[c.vertex_index(end.vertex)];
            for (std::size_t i = 0; i < ind.rows(); ++i)
                for (std::size_t k = 0; k < ind.cols(); ++k)
                    b.psi1.at(r0 + i, b.edge_offset[j] + k) +=
                        sign * ind.at(i, k);
        };
        add_block(e.end, +1);
        add_block(e.origin, -1);
    }

    b.psi2 = IntMat(cols, c.faces.size());
    for (std::size_t j = 0; j < c.faces.size(); ++j)
        for (const auto& t : c.faces[j].boundary) {
            const std::size_t e = c.edge_index(t.edge);
            const auto reg = regular_rep_coords(c.edges[e].stab);
            for (std::size_t k = 0; k < reg.size(); ++k)
                b.psi2.at(b.edge_offset[e] + k, j) += t.coeff * reg[k];
        }

    assert((b.psi1 * b.psi2).is_zero());
    return b;
}

std::array<AbelianGroup, 3> bredon_homology(const QuotientComplex& c) {
    BredonComplex b = assemble(c);
    IntMat top(0, b.psi1.rows());
    IntMat bottom(b.psi2.cols(), 0);
    return {chain_homology(top, b.psi1), chain_homology(b.psi1, b.psi2),
            chain_homology(b.psi2, bottom)};
}

long fc_count(const QuotientComplex& c) {
    long n = 1;
    for (const auto& v : c.vertices)
        if (v.stab != Stab::Trivial)
            n += static_cast<long>(class_count(v.stab)) - 1;
    return n;
}

std::array<AbelianGroup, 3> h_fin_via_fc(const QuotientComplex& c) {
    validate_or_throw(c);
    if (singular_dimension(c) > 0)
        throw SingularPartTooBig(
            "h_fin_via_fc requires a zero-dimensional singular part");
    if (!c.connected())
        throw Disconnected("h_fin_via_fc requires a connected quotient");
    auto orbit = quotient_homology(c);
    return {AbelianGroup(fc_count(c)), orbit[1], orbit[2]};
}

}  // namespace bredonkit
