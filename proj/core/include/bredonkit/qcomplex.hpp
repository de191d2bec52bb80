#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bredonkit/intmat.hpp"
#include "bredonkit/stabilizer.hpp"

namespace bredonkit {

/// Quotient of a proper 2-dimensional cell complex with stabilizers from
/// Klein's list: 2-cells trivially stabilized, 1-cells cyclic of order at
/// most 3, incidences labeled by stabilizer embeddings.
struct QuotientComplex {
    struct Vertex {
        std::string id;
        Stab stab = Stab::Trivial;
    };
    struct EdgeEnd {
        std::string vertex;
        Variant emb = Variant::Canonical;
    };
    struct Edge {
        std::string id;
        Stab stab = Stab::Trivial;
        EdgeEnd origin, end;
    };
    struct FaceTerm {
        std::string edge;
        long coeff = 0;
    };
    struct Face {
        std::string id;
        std::vector<FaceTerm> boundary;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;

    std::size_t vertex_index(const std::string& id) const;
    std::size_t edge_index(const std::string& id) const;
    const Vertex& vertex(const std::string& id) const;

    /// Embedding label of an edge end into its vertex stabilizer.
    EmbeddingLabel end_label(const Edge& e, const EdgeEnd& end) const;

    bool connected() const;
};

/// Strict parser for the UTF-8 JSON document format; unknown keys are
/// rejected. Throws ParseError on malformed documents and ValidationError
/// (listing every violation) on invariant failures.
QuotientComplex parse_complex(const std::string& text);
QuotientComplex parse_complex_file(const std::string& path);
std::string serialize_complex(const QuotientComplex& c);

/// Re-checks all invariants of an in-memory complex; returns the list of
/// violations (empty when valid).
std::vector<std::string> validate(const QuotientComplex& c);
void validate_or_throw(const QuotientComplex& c);

struct OrbitChainComplex {
    IntMat d2;  // faces -> edges
    IntMat d1;  // edges -> vertices
};

/// Cellular chain complex of the orbit space: d1 column per edge is
/// (+1 at end) + (-1 at origin), loops cancel to zero; d2 columns hold the
/// signed face boundaries.
OrbitChainComplex orbit_chain_complex(const QuotientComplex& c);

/// Cellular homology (H0, H1, H2) of the orbit space.
std::array<AbelianGroup, 3> quotient_homology(const QuotientComplex& c);

/// -1 if all stabilizers are trivial, 0 if only vertices are nontrivially
/// stabilized, 1 if some edge is.
int singular_dimension(const QuotientComplex& c);

}  // namespace bredonkit
