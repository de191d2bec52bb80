#include "bredonkit/qcomplex.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bredonkit/errors.hpp"

namespace bredonkit {

using nlohmann::json;

std::size_t QuotientComplex::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return i;
    throw std::out_of_range("unknown vertex id " + id);
}

std::size_t QuotientComplex::edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return i;
    throw std::out_of_range("unknown edge id " + id);
}

const QuotientComplex::Vertex& QuotientComplex::vertex(
    const std::string& id) const {
    return vertices[vertex_index(id)];
}

EmbeddingLabel QuotientComplex::end_label(const Edge& e,
                                          const EdgeEnd& end) const {
    return EmbeddingLabel{e.stab, vertex(end.vertex).stab, end.emb};
}

bool QuotientComplex::connected() const {
    if (vertices.empty()) return true;
    std::vector<std::size_t> parent(vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges)
        parent[find(vertex_index(e.origin.vertex))] =
            find(vertex_index(e.end.vertex));
    const std::size_t root = find(0);
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (find(i) != root) return false;
    return true;
}

namespace {

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.contains(key))
            throw ParseError("unknown key \"" + key + "\" in " + where);
}

}  // namespace

QuotientComplex parse_complex(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("document is not a JSON object");
    require_keys(doc, {"vertices", "edges", "faces"}, "document");

    QuotientComplex c;
    try {
        for (const auto& jv : doc.value("vertices", json::array())) {
            require_keys(jv, {"id", "stab"}, "vertex");
            auto stab = parse_stab(jv.at("stab").get<std::string>());
            if (!stab)
                throw ParseError("unknown stabilizer tag \"" +
                                 jv.at("stab").get<std::string>() + "\"");
            c.vertices.push_back({jv.at("id").get<std::string>(), *stab});
        }
        auto parse_end = [](const json& je) {
            require_keys(je, {"v", "emb"}, "edge endpoint");
            auto emb = parse_variant(je.at("emb").get<std::string>());
            if (!emb)
                throw ParseError("unknown embedding variant \"" +
                                 je.at("emb").get<std::string>() + "\"");
            return QuotientComplex::EdgeEnd{je.at("v").get<std::string>(),
                                            *emb};
        };
        for (const auto& je : doc.value("edges", json::array())) {
            require_keys(je, {"id", "stab", "origin", "end"}, "edge");
            auto stab = parse_stab(je.at("stab").get<std::string>());
            if (!stab)
                throw ParseError("unknown stabilizer tag \"" +
                                 je.at("stab").get<std::string>() + "\"");
            c.edges.push_back({je.at("id").get<std::string>(), *stab,
                               parse_end(je.at("origin")),
                               parse_end(je.at("end"))});
        }
        for (const auto& jf : doc.value("faces", json::array())) {
            require_keys(jf, {"id", "boundary"}, "face");
            QuotientComplex::Face f{jf.at("id").get<std::string>(), {}};
            for (const auto& jt : jf.at("boundary")) {
                require_keys(jt, {"e", "c"}, "boundary term");
                f.boundary.push_back(
                    {jt.at("e").get<std::string>(), jt.at("c").get<long>()});
            }
            c.faces.push_back(std::move(f));
        }
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    validate_or_throw(c);
    return c;
}

QuotientComplex parse_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

std::string serialize_complex(const QuotientComplex& c) {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& v : c.vertices)
        doc["vertices"].push_back({{"id", v.id}, {"stab", tag(v.stab)}});
    doc["edges"] = json::array();
    for (const auto& e : c.edges)
        doc["edges"].push_back(
            {{"id", e.id},
             {"stab", tag(e.stab)},
             {"origin",
              {{"v", e.origin.vertex}, {"emb", variant_name(e.origin.emb)}}},
             {"end", {{"v", e.end.vertex}, {"emb", variant_name(e.end.emb)}}}});
    doc["faces"] = json::array();
    for (const auto& f : c.faces) {
        json terms = json::array();
        for (const auto& t : f.boundary)
            terms.push_back({{"e", t.edge}, {"c", t.coeff}});
        doc["faces"].push_back({{"id", f.id}, {"boundary", terms}});
    }
    return doc.dump(2) + "\n";
}

std::vector<std::string> validate(const QuotientComplex& c) {
    std::vector<std::string> bad;
    std::set<std::string> vids, eids, fids;
    for (const auto& v : c.vertices)
        if (!vids.insert(v.id).second)
            bad.push_back("duplicate vertex id \"" + v.id + "\"");
    for (const auto& e : c.edges)
        if (!eids.insert(e.id).second)
            bad.push_back("duplicate edge id \"" + e.id + "\"");
    for (const auto& f : c.faces)
        if (!fids.insert(f.id).second)
            bad.push_back("duplicate face id \"" + f.id + "\"");

    bool refs_ok = true;
    for (const auto& e : c.edges) {
        if (!is_cyclic(e.stab))
            bad.push_back("edge \"" + e.id + "\" has non-cyclic stabilizer " +
                          tag(e.stab));
        for (const auto* end : {&e.origin, &e.end}) {
            if (!vids.contains(end->vertex)) {
                bad.push_back("edge \"" + e.id + "\" references unknown vertex \"" +
                              end->vertex + "\"");
                refs_ok = false;
                continue;
            }
            const Stab over = c.vertex(end->vertex).stab;
            if (!EmbeddingLabel::legal(e.stab, over, end->emb))
                bad.push_back("IllegalEmbedding: edge \"" + e.id + "\" (" +
                              tag(e.stab) + ") into vertex \"" + end->vertex +
                              "\" (" + tag(over) + ") with variant " +
                              variant_name(end->emb));
        }
    }
    for (const auto& f : c.faces)
        for (const auto& t : f.boundary)
            if (!eids.contains(t.edge)) {
                bad.push_back("face \"" + f.id + "\" references unknown edge \"" +
                              t.edge + "\"");
                refs_ok = false;
            }

    // Boundary-of-boundary check; only meaningful once references resolve.
    if (refs_ok && bad.empty()) {
        OrbitChainComplex cc = orbit_chain_complex(c);
        if (!(cc.d1 * cc.d2).is_zero())
            bad.push_back("face boundaries are not cycles (d1 * d2 != 0)");
    }
    return bad;
}

void validate_or_throw(const QuotientComplex& c) {
    auto bad = validate(c);
    if (!bad.empty()) throw ValidationError(std::move(bad));
}

OrbitChainComplex orbit_chain_complex(const QuotientComplex& c) {
    IntMat d1(c.vertices.size(), c.edges.size());
    for (std::size_t j = 0; j < c.edges.size(); ++j) {
        d1.at(c.vertex_index(c.edges[j].end.vertex), j) += 1;
        d1.at(c.vertex_index(c.edges[j].origin.vertex), j) -= 1;
    }
    IntMat d2(c.edges.size(), c.faces.size());
    for (std::size_t j = 0; j < c.faces.size(); ++j)
        for (const auto& t : c.faces[j].boundary)
            d2.at(c.edge_index(t.edge), j) += t.coeff;
    return {d2, d1};
}

std::array<AbelianGroup, 3> quotient_homology(const QuotientComplex& c) {
    OrbitChainComplex cc = orbit_chain_complex(c);
    IntMat top(0, c.vertices.size());
    IntMat bottom(c.faces.size(), 0);
    return {chain_homology(top, cc.d1), chain_homology(cc.d1, cc.d2),
            chain_homology(cc.d2, bottom)};
}

int singular_dimension(const QuotientComplex& c) {
    int dim = -1;
    for (const auto& v : c.vertices)
        if (v.stab != Stab::Trivial) dim = 0;
    for (const auto& e : c.edges)
        if (e.stab != Stab::Trivial) return 1;
    return dim;
}

}  // namespace bredonkit
