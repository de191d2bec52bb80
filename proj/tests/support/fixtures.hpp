#pragma once

// Programmatic builders for synthetic quotient complexes whose torsion
// subcomplexes reduce to the canonical component shapes, plus a seeded
// generator that glues several of them into one connected complex.

#include <random>
#include <string>
#include <vector>

#include "bredonkit/qcomplex.hpp"
#include "bredonkit/torsion.hpp"

namespace fixtures {

using bredonkit::QuotientComplex;
using bredonkit::Stab;
using bredonkit::TorsionInventory;
using bredonkit::Variant;

inline QuotientComplex from_file(const std::string& name) {
    return bredonkit::parse_complex_file(std::string(FIXTURE_DIR) + "/" +
                                         name);
}

inline const std::vector<std::string>& bundled_files() {
    static const std::vector<std::string> names = {
        "point.json",          "circle_trivial.json", "sphere.json",
        "klein.json",          "circle2.json",        "circle3.json",
        "m7.json",             "edge2_m11.json",      "theta_m5.json",
        "rho_m2.json",         "mixed_all.json",      "theta_only.json",
        "terminal_cut.json",   "adversarial_unknown.json",
        "fc_s3.json",          "fc_a4a4.json",        "fc_v4_circle.json",
        "fc_c3.json",          "fc_mixed.json"};
    return names;
}

// Each builder appends one molecule with ids prefixed by p and returns
// the inventory it contributes; the anchor vertex for bridging is p+"x0".

inline TorsionInventory add_circle2(QuotientComplex& c,
                                    const std::string& p) {
    c.vertices.push_back({p + "x0", Stab::C2});
    c.edges.push_back(
        {p + "l", Stab::C2, {p + "x0", Variant::Id}, {p + "x0", Variant::Id}});
    c.faces.push_back({p + "f", {{p + "l", 1}}});
    TorsionInventory inv;
    inv.o2 = 1;
    return inv;
}

inline TorsionInventory add_circle3(QuotientComplex& c,
                                    const std::string& p) {
    c.vertices.push_back({p + "x0", Stab::C3});
    c.edges.push_back(
        {p + "l", Stab::C3, {p + "x0", Variant::Id}, {p + "x0", Variant::Id}});
    c.faces.push_back({p + "f", {{p + "l", 1}}});
    TorsionInventory inv;
    inv.o3 = 1;
    return inv;
}

// Two S3 vertices: a doubled C2 edge (reduces to a 2-torsion circle) and
// a C3 edge between them.
inline TorsionInventory add_m7(QuotientComplex& c, const std::string& p) {
    c.vertices.push_back({p + "x0", Stab::S3});
    c.vertices.push_back({p + "x1", Stab::S3});
    c.edges.push_back({p + "d1",
                       Stab::C2,
                       {p + "x0", Variant::Canonical},
                       {p + "x1", Variant::Canonical}});
    c.edges.push_back({p + "d2",
                       Stab::C2,
                       {p + "x1", Variant::Canonical},
                       {p + "x0", Variant::Canonical}});
    c.edges.push_back({p + "e3",
                       Stab::C3,
                       {p + "x0", Variant::Canonical},
                       {p + "x1", Variant::Canonical}});
    c.faces.push_back({p + "f", {{p + "d1", 1}, {p + "d2", 1}}});
    TorsionInventory inv;
    inv.o2 = 1;
    inv.i3 = 1;
    return inv;
}

// A4 - C2 - A4 chain (reduces to Edge2) with a doubled C3 edge between
// the A4 vertices (reduces to a 3-torsion circle).
inline TorsionInventory add_edge2(QuotientComplex& c, const std::string& p) {
    c.vertices.push_back({p + "x0", Stab::A4});
    c.vertices.push_back({p + "x1", Stab::A4});
    c.vertices.push_back({p + "u", Stab::C2});
    c.edges.push_back({p + "c1",
                       Stab::C2,
                       {p + "x0", Variant::Canonical},
                       {p + "u", Variant::Id}});
    c.edges.push_back({p + "c2",
                       Stab::C2,
                       {p + "u", Variant::Id},
                       {p + "x1", Variant::Canonical}});
    c.edges.push_back({p + "y1",
                       Stab::C3,
                       {p + "x0", Variant::C123},
                       {p + "x1", Variant::C123}});
    c.edges.push_back({p + "y2",
                       Stab::C3,
                       {p + "x1", Variant::C123},
                       {p + "x0", Variant::C123}});
    c.faces.push_back({p + "f", {{p + "y1", 1}, {p + "y2", 1}}});
    TorsionInventory inv;
    inv.i2 = 1;
    inv.o3 = 1;
    return inv;
}

inline TorsionInventory add_theta(QuotientComplex& c, const std::string& p) {
    c.vertices.push_back({p + "x0", Stab::V4});
    c.vertices.push_back({p + "x1", Stab::V4});
    const Variant vars[] = {Variant::A, Variant::B, Variant::Ab};
    for (int k = 0; k < 3; ++k)
        c.edges.push_back({p + "t" + std::to_string(k),
                           Stab::C2,
                           {p + "x0", vars[k]},
                           {p + "x1", vars[k]}});
    TorsionInventory inv;
    inv.theta = 1;
    return inv;
}

// V4 with a loop on two of its order-2 subgroups and a stem to A4 on the
// third; the A4 vertex closes a 3-torsion circle through a C3 vertex.
inline TorsionInventory add_rho(QuotientComplex& c, const std::string& p) {
    c.vertices.push_back({p + "x0", Stab::V4});
    c.vertices.push_back({p + "a", Stab::A4});
    c.vertices.push_back({p + "w", Stab::C3});
    c.edges.push_back({p + "loop",
                       Stab::C2,
                       {p + "x0", Variant::A},
                       {p + "x0", Variant::B}});
    c.edges.push_back({p + "stem",
                       Stab::C2,
                       {p + "x0", Variant::Ab},
                       {p + "a", Variant::Canonical}});
    c.edges.push_back({p + "y1",
                       Stab::C3,
                       {p + "a", Variant::C123},
                       {p + "w", Variant::Id}});
    c.edges.push_back({p + "y2",
                       Stab::C3,
                       {p + "w", Variant::Id},
                       {p + "a", Variant::C123}});
    c.faces.push_back({p + "f", {{p + "y1", 1}, {p + "y2", 1}}});
    TorsionInventory inv;
    inv.rho = 1;
    inv.o3 = 1;
    return inv;
}

// m7 molecule with a dangling C2 edge to a terminal C2 vertex; reduction
// must cut it before the circle appears.
inline TorsionInventory add_terminal(QuotientComplex& c,
                                     const std::string& p) {
    TorsionInventory inv = add_m7(c, p);
    c.vertices.push_back({p + "t", Stab::C2});
    c.edges.push_back({p + "dang",
                       Stab::C2,
                       {p + "x0", Variant::Canonical},
                       {p + "t", Variant::Id}});
    return inv;
}

struct Generated {
    QuotientComplex complex;
    TorsionInventory inventory;
};

/// Connected random complex built from 1-4 molecules joined by trivially
/// stabilized bridges, with optional trivial decorations (loops, filled
/// loops, an extra face doubling).
inline Generated random_classifiable(unsigned seed) {
    std::mt19937 rng(seed);
    using Builder = TorsionInventory (*)(QuotientComplex&,
                                         const std::string&);
    static const Builder builders[] = {add_circle2, add_circle3, add_m7,
                                       add_edge2,   add_theta,   add_rho,
                                       add_terminal};
    Generated g;
    const int count = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<std::string> anchors;
    for (int i = 0; i < count; ++i) {
        const std::string prefix = "m" + std::to_string(i) + "_";
        const int pick = std::uniform_int_distribution<int>(0, 6)(rng);
        TorsionInventory part = builders[pick](g.complex, prefix);
        g.inventory.o2 += part.o2;
        g.inventory.i2 += part.i2;
        g.inventory.theta += part.theta;
        g.inventory.rho += part.rho;
        g.inventory.o3 += part.o3;
        g.inventory.i3 += part.i3;
        anchors.push_back(prefix + "x0");
    }
    for (int i = 1; i < count; ++i)
        g.complex.edges.push_back({"bridge" + std::to_string(i),
                                   Stab::Trivial,
                                   {anchors[i - 1], Variant::Canonical},
                                   {anchors[i], Variant::Canonical}});
    if (std::bernoulli_distribution(0.5)(rng)) {
        g.complex.vertices.push_back({"dec", Stab::Trivial});
        g.complex.edges.push_back({"decb",
                                   Stab::Trivial,
                                   {anchors[0], Variant::Canonical},
                                   {"dec", Variant::Canonical}});
        g.complex.edges.push_back({"decl",
                                   Stab::Trivial,
                                   {"dec", Variant::Canonical},
                                   {"dec", Variant::Canonical}});
        if (std::bernoulli_distribution(0.5)(rng))
            g.complex.faces.push_back({"decf", {{"decl", 1}}});
        if (std::bernoulli_distribution(0.3)(rng))
            g.complex.faces.push_back({"decf2", {{"decl", -1}}});
    }
    return g;
}

}  // namespace fixtures
