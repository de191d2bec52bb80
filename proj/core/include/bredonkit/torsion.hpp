#pragma once

#include <array>
#include <string>
#include <vector>

#include "bredonkit/chartab.hpp"
#include "bredonkit/qcomplex.hpp"

namespace bredonkit {

/// The ell-torsion subcomplex of a quotient complex: vertices whose
/// stabilizer order ell divides, edges stabilized by C_ell. A graph, since
/// 2-cells are trivially stabilized.
struct TorsionGraph {
    struct Vertex {
        std::string id;
        Stab stab = Stab::Trivial;
    };
    struct End {
        std::size_t vertex = 0;  // index into vertices
        Variant emb = Variant::Canonical;
    };
    struct Edge {
        std::string id;
        End origin, end;
    };

    int ell = 2;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
};

TorsionGraph extract_torsion(const QuotientComplex& c, int ell);

/// Homology-preserving reduction: cut terminal vertices and merge interior
/// degree-two vertices whose torsion block is unimodular (C_ell always,
/// S3 for ell = 2, A4 for ell = 3), then rewrite single-vertex loop
/// components with matching end blocks to a C_ell vertex with an
/// untwisted loop. Pass canonicalize_loops = false to keep the raw labels
/// on loop components.
TorsionGraph reduce(TorsionGraph g, bool canonicalize_loops = true);

/// Connected component shapes of a reduced torsion graph. Circle doubles
/// as the ell = 3 circle; anything not matching a canonical shape is
/// Unknown.
enum class ComponentType { Circle, Edge2, Theta, Rho, Edge3, Unknown };

std::string component_name(ComponentType t);

/// One entry per connected component, ordered by lowest vertex index.
std::vector<ComponentType> classify(const TorsionGraph& g);

/// Component counts feeding the closed homology formulas.
struct TorsionInventory {
    long o2 = 0;     // 2-torsion circles
    long i2 = 0;     // Edge2 components
    long theta = 0;  // Theta components
    long rho = 0;    // Rho components
    long o3 = 0;     // 3-torsion circles
    long i3 = 0;     // Edge3 components

    long z2() const { return o2 + i2 + 3 * theta + 2 * rho; }
    long d2() const { return 2 * (i2 + theta + rho); }

    bool operator==(const TorsionInventory&) const = default;
};

/// Reduce and classify both torsion subcomplexes. Throws UnknownComponent
/// if any component is unclassifiable.
TorsionInventory inventory(const QuotientComplex& c);

/// Differential of the torsion subcomplex in torsion-block coordinates:
/// one column group per edge (width 1 for ell = 2, width 2 for ell = 3),
/// one row group per vertex, + block at the end and - block at the origin.
IntMat torsion_differential(const TorsionGraph& g);

/// (H0, H1) of the torsion graph with torsion-block coefficients.
std::array<AbelianGroup, 2> torsion_homology(const TorsionGraph& g);

}  // namespace bredonkit
