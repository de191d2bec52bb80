#pragma once

#include <vector>

#include "bredonkit/eisenstein.hpp"
#include "bredonkit/intmat.hpp"
#include "bredonkit/stabilizer.hpp"

namespace bredonkit {

/// A class function is one Eisenstein value per conjugacy class, in the
/// frozen class order of the group.
using ClassFunction = std::vector<Eisenstein>;

/// Exact table of irreducible characters: one row per irreducible, one
/// column per conjugacy class. First row is the trivial character, first
/// column the character degrees.
struct CharacterTable {
    Stab group;
    std::vector<ClassFunction> rows;
};

const CharacterTable& char_table(Stab g);

/// Unimodular change of basis for the representation ring: each row gives
/// a new basis vector as an integer combination of irreducible characters.
const IntMat& basis_transform(Stab g);

/// Assignment of transformed-basis indices to the diagonal blocks of the
/// representation-ring splitting.
enum class Block { B1, B2Tors, B3Tors };
const std::vector<Block>& block_partition(Stab g);

/// (1/|G|) sum over classes of size * f * conj(g). Throws
/// NonIntegralProduct unless the result is a rational integer.
mpz_class inner_product(const ClassFunction& f, const ClassFunction& g,
                        Stab grp);

/// Pull a class function on `emb.over` back along the class map of the
/// embedding.
ClassFunction restrict_chars(const ClassFunction& chi,
                             const EmbeddingLabel& emb);

/// Frobenius-reciprocity induction matrix in irreducible bases: rows are
/// G-irreducibles, columns H-irreducibles; column j holds the coordinates
/// of the induced character of tau_j.
IntMat induction_matrix_irr(const EmbeddingLabel& emb);

/// Inverse transpose of basis_transform(g); the coordinate change dual to
/// the basis change. Cyclic-group modules carry these coordinates so that
/// an edge into a vertex with the same stabilizer contributes an identity
/// (or class-permutation) block.
const IntMat& dual_basis_transform(Stab g);

/// Induction matrix of the embedding in split coordinates: rows are the
/// transformed basis of `over` for noncyclic `over` and the dual
/// coordinates for cyclic `over`; columns are the dual coordinates of the
/// cyclic sub. For noncyclic `over` this equals the table of scalar
/// products of restricted transformed G-basis vectors against the
/// transformed H-basis. Block-diagonal w.r.t. block_partition (checked,
/// SplitViolation on failure).
IntMat split_matrix(const EmbeddingLabel& emb);

/// The ell-torsion block of split_matrix. Requires sub == C_ell and ell
/// dividing |over|; throws PrimeMismatch otherwise.
IntMat torsion_block(const EmbeddingLabel& emb, int ell);

/// Number of transformed-basis indices of g in the ell-torsion block.
std::size_t torsion_block_size(Stab g, int ell);

/// Coordinates of the regular representation in the irreducible basis,
/// i.e. the vector of character degrees.
std::vector<mpz_class> regular_rep_coords(Stab g);

/// Transformed character table: basis_transform(g) applied to the rows of
/// char_table(g).
std::vector<ClassFunction> transformed_table(Stab g);

}  // namespace bredonkit
