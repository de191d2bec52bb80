#include "bredonkit/torsion.hpp"

#include <algorithm>
#include <map>

#include "bredonkit/errors.hpp"

namespace bredonkit {

namespace {

Stab edge_stab(int ell) { return ell == 2 ? Stab::C2 : Stab::C3; }

/// Whether the ell-part of the stabilizer contributes rows to the torsion
/// subcomplex.
bool carries(Stab g, int ell) { return order(g) % ell == 0; }

/// Vertices whose incident torsion block is square unimodular, so a
/// degree-one or degree-two occurrence can be eliminated.
bool reducible_vertex(Stab g, int ell) {
    if (g == edge_stab(ell)) return true;
    if (ell == 2) return g == Stab::S3;
    return g == Stab::A4;
}

/// Twist class of an embedding variant under the order-two automorphism of
/// C3: 1 for the inverted inclusions, 0 otherwise.
int twist(Variant v) { return v == Variant::Inv || v == Variant::C132 ? 1 : 0; }

Variant twisted(Variant v, int alpha) {
    if (alpha == 0) return v;
    switch (v) {
        case Variant::Id:
            return Variant::Inv;
        case Variant::Inv:
            return Variant::Id;
        case Variant::C123:
            return Variant::C132;
        case Variant::C132:
            return Variant::C123;
        default:
            return v;  // blocks invariant under the twist
    }
}

EmbeddingLabel end_label(const TorsionGraph& g, const TorsionGraph::End& e) {
    return {edge_stab(g.ell), g.vertices[e.vertex].stab, e.emb};
}

std::vector<std::vector<std::pair<std::size_t, int>>> incidences(
    const TorsionGraph& g) {
    // per vertex: (edge index, side), side 0 = origin, 1 = end
    std::vector<std::vector<std::pair<std::size_t, int>>> inc(
        g.vertices.size());
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        inc[g.edges[j].origin.vertex].push_back({j, 0});
        inc[g.edges[j].end.vertex].push_back({j, 1});
    }
    return inc;
}

TorsionGraph drop(const TorsionGraph& g, std::size_t dead_vertex,
                  const std::vector<bool>& dead_edge,
                  const std::vector<TorsionGraph::Edge>& extra) {
    TorsionGraph out;
    out.ell = g.ell;
    std::vector<std::size_t> remap(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (i == dead_vertex) continue;
        remap[i] = out.vertices.size();
        out.vertices.push_back(g.vertices[i]);
    }
    auto copy_edge = [&](const TorsionGraph::Edge& e) {
        TorsionGraph::Edge n = e;
        n.origin.vertex = remap[e.origin.vertex];
        n.end.vertex = remap[e.end.vertex];
        out.edges.push_back(n);
    };
    for (std::size_t j = 0; j < g.edges.size(); ++j)
        if (!dead_edge[j]) copy_edge(g.edges[j]);
    for (const auto& e : extra) copy_edge(e);
    return out;
}

}  // namespace

TorsionGraph extract_torsion(const QuotientComplex& c, int ell) {
    if (ell != 2 && ell != 3)
        throw PrimeMismatch("only 2- and 3-torsion occur");
    TorsionGraph g;
    g.ell = ell;
    std::map<std::string, std::size_t> vidx;
    for (const auto& v : c.vertices)
        if (v.stab != Stab::Trivial && carries(v.stab, ell)) {
            vidx[v.id] = g.vertices.size();
            g.vertices.push_back({v.id, v.stab});
        }
    for (const auto& e : c.edges) {
        if (e.stab != edge_stab(ell)) continue;
        g.edges.push_back({e.id,
                           {vidx.at(e.origin.vertex), e.origin.emb},
                           {vidx.at(e.end.vertex), e.end.emb}});
    }
    return g;
}

TorsionGraph reduce(TorsionGraph g, bool canonicalize_loops) {
    bool changed = true;
    while (changed) {
        changed = false;
        auto inc = incidences(g);
        for (std::size_t v = 0; v < g.vertices.size() && !changed; ++v) {
            if (!reducible_vertex(g.vertices[v].stab, g.ell)) continue;
            if (inc[v].size() == 1) {
                // Terminal cut: the edge column eliminates the vertex rows.
                std::vector<bool> dead(g.edges.size(), false);
                dead[inc[v][0].first] = true;
                g = drop(g, v, dead, {});
                changed = true;
            } else if (inc[v].size() == 2 &&
                       inc[v][0].first != inc[v][1].first) {
                // Interior merge: splice the two edges, carrying the twist
                // mismatch onto the far end of the second one.
                const auto& e1 = g.edges[inc[v][0].first];
                const auto& e2 = g.edges[inc[v][1].first];
                const TorsionGraph::End& near1 =
                    inc[v][0].second ? e1.end : e1.origin;
                const TorsionGraph::End& far1 =
                    inc[v][0].second ? e1.origin : e1.end;
                const TorsionGraph::End& near2 =
                    inc[v][1].second ? e2.end : e2.origin;
                const TorsionGraph::End& far2 =
                    inc[v][1].second ? e2.origin : e2.end;
                const int alpha = twist(near1.emb) ^ twist(near2.emb);
                TorsionGraph::Edge merged;
                merged.id = e1.id + "+" + e2.id;
                merged.origin = far1;
                merged.end = {far2.vertex, twisted(far2.emb, alpha)};
                std::vector<bool> dead(g.edges.size(), false);
                dead[inc[v][0].first] = dead[inc[v][1].first] = true;
                g = drop(g, v, dead, {merged});
                changed = true;
            }
        }
    }
    if (!canonicalize_loops) return g;
    // Loop components over S3 or A4 with matching end blocks carry the
    // same homology as an untwisted C_ell loop; rewrite them to it.
    auto inc = incidences(g);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (inc[v].size() != 2 || inc[v][0].first != inc[v][1].first) continue;
        auto& e = g.edges[inc[v][0].first];
        if (!reducible_vertex(g.vertices[v].stab, g.ell)) continue;
        if (twist(e.origin.emb) != twist(e.end.emb)) continue;
        g.vertices[v].stab = edge_stab(g.ell);
        e.origin.emb = e.end.emb = Variant::Id;
    }
    return g;
}

std::string component_name(ComponentType t) {
    switch (t) {
        case ComponentType::Circle:
            return "Circle";
        case ComponentType::Edge2:
            return "Edge2";
        case ComponentType::Theta:
            return "Theta";
        case ComponentType::Rho:
            return "Rho";
        case ComponentType::Edge3:
            return "Edge3";
        default:
            return "Unknown";
    }
}

namespace {

ComponentType classify_component(const TorsionGraph& g,
                                 const std::vector<std::size_t>& vs,
                                 const std::vector<std::size_t>& es) {
    const int ell = g.ell;
    if (vs.size() == 1 && es.size() == 1) {
        const auto& e = g.edges[es[0]];
        if (g.vertices[vs[0]].stab == edge_stab(ell) &&
            e.origin.emb == e.end.emb)
            return ComponentType::Circle;
        return ComponentType::Unknown;
    }
    if (vs.size() == 2 && es.size() == 1) {
        const Stab s0 = g.vertices[vs[0]].stab;
        const Stab s1 = g.vertices[vs[1]].stab;
        if (ell == 2 && s0 == Stab::A4 && s1 == Stab::A4)
            return ComponentType::Edge2;
        if (ell == 3 && s0 == Stab::S3 && s1 == Stab::S3)
            return ComponentType::Edge3;
        return ComponentType::Unknown;
    }
    if (ell == 2 && vs.size() == 2 && es.size() == 3) {
        if (g.vertices[vs[0]].stab != Stab::V4 ||
            g.vertices[vs[1]].stab != Stab::V4)
            return ComponentType::Unknown;
        std::vector<Variant> seen;
        for (std::size_t j : es) {
            const auto& e = g.edges[j];
            if (e.origin.vertex == e.end.vertex) return ComponentType::Unknown;
            if (e.origin.emb != e.end.emb) return ComponentType::Unknown;
            seen.push_back(e.origin.emb);
        }
        std::sort(seen.begin(), seen.end());
        if (seen == std::vector<Variant>{Variant::A, Variant::B, Variant::Ab})
            return ComponentType::Theta;
        return ComponentType::Unknown;
    }
    if (ell == 2 && vs.size() == 2 && es.size() == 2) {
        std::size_t v4 = vs[0], a4 = vs[1];
        if (g.vertices[v4].stab != Stab::V4) std::swap(v4, a4);
        if (g.vertices[v4].stab != Stab::V4 ||
            g.vertices[a4].stab != Stab::A4)
            return ComponentType::Unknown;
        std::vector<Variant> at_v4;
        std::size_t loops = 0, bridges = 0;
        for (std::size_t j : es) {
            const auto& e = g.edges[j];
            if (e.origin.vertex == v4 && e.end.vertex == v4) {
                ++loops;
                at_v4.push_back(e.origin.emb);
                at_v4.push_back(e.end.emb);
            } else {
                ++bridges;
                at_v4.push_back(e.origin.vertex == v4 ? e.origin.emb
                                                      : e.end.emb);
            }
        }
        if (loops != 1 || bridges != 1) return ComponentType::Unknown;
        std::sort(at_v4.begin(), at_v4.end());
        if (at_v4 == std::vector<Variant>{Variant::A, Variant::B, Variant::Ab})
            return ComponentType::Rho;
        return ComponentType::Unknown;
    }
    return ComponentType::Unknown;
}

}  // namespace

std::vector<ComponentType> classify(const TorsionGraph& g) {
    std::vector<std::size_t> parent(g.vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges)
        parent[find(e.origin.vertex)] = find(e.end.vertex);

    std::vector<ComponentType> out;
    std::map<std::size_t, std::pair<std::vector<std::size_t>,
                                    std::vector<std::size_t>>>
        comp;
    std::vector<std::size_t> roots;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const std::size_t r = find(v);
        if (!comp.contains(r)) roots.push_back(r);
        comp[r].first.push_back(v);
    }
    for (std::size_t j = 0; j < g.edges.size(); ++j)
        comp[find(g.edges[j].origin.vertex)].second.push_back(j);
    for (std::size_t r : roots)
        out.push_back(classify_component(g, comp[r].first, comp[r].second));
    return out;
}

TorsionInventory inventory(const QuotientComplex& c) {
    TorsionInventory inv;
    for (int ell : {2, 3}) {
        TorsionGraph g = reduce(extract_torsion(c, ell));
        for (ComponentType t : classify(g)) {
            switch (t) {
                case ComponentType::Circle:
                    ++(ell == 2 ? inv.o2 : inv.o3);
                    break;
                case ComponentType::Edge2:
                    ++inv.i2;
                    break;
                case ComponentType::Theta:
                    ++inv.theta;
                    break;
                case ComponentType::Rho:
                    ++inv.rho;
                    break;
                case ComponentType::Edge3:
                    ++inv.i3;
                    break;
                default:
                    throw UnknownComponent(
                        "unclassifiable component in the " +
                        std::to_string(ell) + "-torsion subcomplex");
            }
        }
    }
    return inv;
}

IntMat torsion_differential(const TorsionGraph& g) {
    std::vector<std::size_t> offset;
    std::size_t rows = 0;
    for (const auto& v : g.vertices) {
        offset.push_back(rows);
        rows += torsion_block_size(v.stab, g.ell);
    }
    const std::size_t width = g.ell == 2 ? 1 : 2;
    IntMat d(rows, width * g.edges.size());
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        auto add = [&](const TorsionGraph::End& e, int sign) {
            IntMat b = torsion_block(end_label(g, e), g.ell);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t k = 0; k < b.cols(); ++k)
                    d.at(offset[e.vertex] + i, width * j + k) +=
                        sign * b.at(i, k);
        };
        add(g.edges[j].end, +1);
        add(g.edges[j].origin, -1);
    }
    return d;
}

std::array<AbelianGroup, 2> torsion_homology(const TorsionGraph& g) {
    IntMat d = torsion_differential(g);
    IntMat top(0, d.rows());
    IntMat bottom(d.cols(), 0);
    return {chain_homology(top, d), chain_homology(d, bottom)};
}

}  // namespace bredonkit
