#include "bredonkit/chartab.hpp"

#include <map>

#include "bredonkit/errors.hpp"

namespace bredonkit {

namespace {
const Eisenstein J = Eisenstein::j();
const Eisenstein J2 = Eisenstein::j2();
}  // namespace

const CharacterTable& char_table(Stab g) {
    static const std::map<Stab, CharacterTable> tables = [] {
        std::map<Stab, CharacterTable> t;
        t[Stab::Trivial] = {Stab::Trivial, {{1}}};
        t[Stab::C2] = {Stab::C2, {{1, 1}, {1, -1}}};
        t[Stab::C3] = {Stab::C3, {{1, 1, 1}, {1, J, J2}, {1, J2, J}}};
        t[Stab::V4] = {Stab::V4,
                       {{1, 1, 1, 1},
                        {1, -1, -1, 1},
                        {1, -1, 1, -1},
                        {1, 1, -1, -1}}};
        t[Stab::S3] = {Stab::S3, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}};
        t[Stab::A4] = {Stab::A4,
                       {{1, 1, 1, 1},
                        {3, -1, 0, 0},
                        {1, 1, J, J2},
                        {1, 1, J2, J}}};
        return t;
    }();
    return tables.at(g);
}

const IntMat& basis_transform(Stab g) {
    static const std::map<Stab, IntMat> transforms = [] {
        std::map<Stab, IntMat> t;
        t[Stab::Trivial] = IntMat{{1}};
        // {rho1 + rho2, rho2}
        t[Stab::C2] = IntMat{{1, 1}, {0, 1}};
        // {sum sigma_i, sigma2, sigma3}
        t[Stab::C3] = IntMat{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}};
        // {xi1, xi2 - xi1, xi3 - xi1, xi4 - xi1}
        t[Stab::V4] = IntMat{
            {1, 0, 0, 0}, {-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}};
        // {pi1, pi2 - pi1, pi3 - pi2 - pi1}
        t[Stab::S3] = IntMat{{1, 0, 0}, {-1, 1, 0}, {-1, -1, 1}};
        // {chi1, chi2 - chi1 - chi3 - chi4, chi3 - chi1, chi4 - chi1}
        t[Stab::A4] = IntMat{
            {1, 0, 0, 0}, {-1, 1, -1, -1}, {-1, 0, 1, 0}, {-1, 0, 0, 1}};
        return t;
    }();
    return transforms.at(g);
}

const IntMat& dual_basis_transform(Stab g) {
    static const std::map<Stab, IntMat> duals = [] {
        std::map<Stab, IntMat> t;
        for (Stab g : kAllStabs) {
            SnfResult s = snf(basis_transform(g));
            // basis transforms are unimodular, so d = I and the inverse
            // is v_inv * u_inv
            IntMat inv = s.v_inv * s.u_inv;
            t[g] = inv.transposed();
        }
        return t;
    }();
    return duals.at(g);
}

const std::vector<Block>& block_partition(Stab g) {
    static const std::map<Stab, std::vector<Block>> parts = [] {
        std::map<Stab, std::vector<Block>> p;
        p[Stab::Trivial] = {Block::B1};
        p[Stab::C2] = {Block::B1, Block::B2Tors};
        p[Stab::C3] = {Block::B1, Block::B3Tors, Block::B3Tors};
        p[Stab::V4] = {Block::B1, Block::B2Tors, Block::B2Tors, Block::B2Tors};
        p[Stab::S3] = {Block::B1, Block::B2Tors, Block::B3Tors};
        p[Stab::A4] = {Block::B1, Block::B2Tors, Block::B3Tors, Block::B3Tors};
        return p;
    }();
    return parts.at(g);
}

mpz_class inner_product(const ClassFunction& f, const ClassFunction& g,
                        Stab grp) {
    const auto& sizes = class_sizes(grp);
    if (f.size() != sizes.size() || g.size() != sizes.size())
        throw NonIntegralProduct("class function has wrong length for " +
                                 tag(grp));
    Eisenstein sum;
    for (std::size_t c = 0; c < sizes.size(); ++c)
        sum = sum + Eisenstein(sizes[c]) * f[c] * g[c].conj();
    if (!sum.is_rational_integer() || sum.a % order(grp) != 0)
        throw NonIntegralProduct("scalar product " + sum.str() +
                                 " is not an integer multiple of |" +
                                 tag(grp) + "|");
    return sum.a / order(grp);
}

ClassFunction restrict_chars(const ClassFunction& chi,
                             const EmbeddingLabel& emb) {
    const auto map = emb.class_map();
    if (chi.size() != class_count(emb.over))
        throw IllegalEmbedding("class function has wrong length for " +
                               tag(emb.over));
    ClassFunction out(map.size());
    for (std::size_t c = 0; c < map.size(); ++c) out[c] = chi[map[c]];
    return out;
}

IntMat induction_matrix_irr(const EmbeddingLabel& emb) {
    const auto& big = char_table(emb.over);
    const auto& small = char_table(emb.sub);
    IntMat m(big.rows.size(), small.rows.size());
    for (std::size_t i = 0; i < big.rows.size(); ++i) {
        ClassFunction down = restrict_chars(big.rows[i], emb);
        for (std::size_t j = 0; j < small.rows.size(); ++j)
            m.at(i, j) = inner_product(down, small.rows[j], emb.sub);
    }
    return m;
}

std::vector<ClassFunction> transformed_table(Stab g) {
    const auto& table = char_table(g);
    const IntMat& t = basis_transform(g);
    std::vector<ClassFunction> out(table.rows.size(),
                                   ClassFunction(class_count(g)));
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t k = 0; k < t.cols(); ++k) {
            if (t.at(i, k) == 0) continue;
            Eisenstein coeff(t.at(i, k), 0);
            for (std::size_t c = 0; c < class_count(g); ++c)
                out[i][c] = out[i][c] + coeff * table.rows[k][c];
        }
    return out;
}

IntMat split_matrix(const EmbeddingLabel& emb) {
    if (!emb.legal()) throw IllegalEmbedding("illegal embedding " + emb.str());
    if (!is_cyclic(emb.sub))
        throw IllegalEmbedding("split_matrix requires a cyclic subgroup: " +
                               emb.str());
    IntMat m;
    if (is_cyclic(emb.over)) {
        m = dual_basis_transform(emb.over) * induction_matrix_irr(emb) *
            basis_transform(emb.sub).transposed();
    } else {
        const auto over_basis = transformed_table(emb.over);
        const auto sub_basis = transformed_table(emb.sub);
        m = IntMat(over_basis.size(), sub_basis.size());
        for (std::size_t i = 0; i < over_basis.size(); ++i) {
            ClassFunction down = restrict_chars(over_basis[i], emb);
            for (std::size_t j = 0; j < sub_basis.size(); ++j)
                m.at(i, j) = inner_product(down, sub_basis[j], emb.sub);
        }
    }
    const auto& rows_part = block_partition(emb.over);
    const auto& cols_part = block_partition(emb.sub);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (rows_part[i] != cols_part[j] && m.at(i, j) != 0)
                throw SplitViolation("nonzero cross-block entry at (" +
                                     std::to_string(i) + "," +
                                     std::to_string(j) + ") of " + emb.str());
    return m;
}

std::size_t torsion_block_size(Stab g, int ell) {
    const Block want = ell == 2 ? Block::B2Tors : Block::B3Tors;
    std::size_t n = 0;
    for (Block b : block_partition(g))
        if (b == want) ++n;
    return n;
}

IntMat torsion_block(const EmbeddingLabel& emb, int ell) {
    if (ell != 2 && ell != 3)
        throw PrimeMismatch("only 2- and 3-torsion occur");
    const Stab want_sub = ell == 2 ? Stab::C2 : Stab::C3;
    if (emb.sub != want_sub)
        throw PrimeMismatch("edge stabilizer " + tag(emb.sub) +
                            " does not match prime " + std::to_string(ell));
    if (order(emb.over) % ell != 0)
        throw PrimeMismatch(std::to_string(ell) + " does not divide |" +
                            tag(emb.over) + "|");
    IntMat s = split_matrix(emb);
    const Block want = ell == 2 ? Block::B2Tors : Block::B3Tors;
    const auto& rows_part = block_partition(emb.over);
    const auto& cols_part = block_partition(emb.sub);
    std::vector<std::size_t> ri, ci;
    for (std::size_t i = 0; i < rows_part.size(); ++i)
        if (rows_part[i] == want) ri.push_back(i);
    for (std::size_t j = 0; j < cols_part.size(); ++j)
        if (cols_part[j] == want) ci.push_back(j);
    IntMat out(ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j)
            out.at(i, j) = s.at(ri[i], ci[j]);
    return out;
}

std::vector<mpz_class> regular_rep_coords(Stab g) {
    const auto& table = char_table(g);
    std::vector<mpz_class> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows) out.push_back(row[0].a);
    return out;
}

}  // namespace bredonkit
