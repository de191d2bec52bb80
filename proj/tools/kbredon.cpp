// kbredon: validate quotient complexes, compute Bredon homology and
// equivariant K-homology by the direct and split pipelines, inspect
// torsion subcomplexes, and replay the bundled Bianchi table.

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bredonkit/bredon.hpp"
#include "bredonkit/errors.hpp"
#include "bredonkit/formulas.hpp"
#include "bredonkit/qcomplex.hpp"
#include "bredonkit/torsion.hpp"

using namespace bredonkit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitInternal = 3;

json group_json(const AbelianGroup& g) {
    json t = json::array();
    for (const auto& d : g.torsion) t.push_back(d.get_str());
    return {{"rank", g.rank}, {"torsion", t}, {"pretty", g.str()}};
}

AbelianGroup group_from_json(const json& j) {
    AbelianGroup g(j.at("rank").get<long>());
    for (const auto& d : j.value("torsion", json::array()))
        g.torsion.emplace_back(d.get<long>());
    return g;
}

struct ComputeResult {
    std::array<AbelianGroup, 3> h;
    std::optional<KHomology> k;
    std::string k_note;
};

ComputeResult finish(std::array<AbelianGroup, 3> h) {
    ComputeResult r{std::move(h), std::nullopt, ""};
    try {
        r.k = k_from_bredon(r.h);
    } catch (const TorsionInH2& e) {
        r.k_note = e.what();
    }
    return r;
}

ComputeResult compute_direct(const QuotientComplex& c) {
    return finish(bredon_homology(c));
}

ComputeResult compute_split(const QuotientComplex& c) {
    TorsionInventory inv = inventory(c);
    return finish(
        split_bredon(quotient_homology(c), h_psi2(inv), h_psi3(inv)));
}

void print_result(const std::string& mode, const ComputeResult& r,
                  bool as_json, json& out) {
    if (as_json) {
        json jr = {{"H0", group_json(r.h[0])},
                   {"H1", group_json(r.h[1])},
                   {"H2", group_json(r.h[2])}};
        if (r.k) {
            jr["K0"] = group_json(r.k->k0);
            jr["K1"] = group_json(r.k->k1);
        } else {
            jr["k_note"] = r.k_note;
        }
        out[mode] = jr;
        return;
    }
    std::cout << "[" << mode << "]\n";
    std::cout << "  H0 = " << r.h[0].str() << "\n";
    std::cout << "  H1 = " << r.h[1].str() << "\n";
    std::cout << "  H2 = " << r.h[2].str() << "\n";
    if (r.k) {
        std::cout << "  K0 = " << r.k->k0.str() << "\n";
        std::cout << "  K1 = " << r.k->k1.str() << "\n";
    } else {
        std::cout << "  K  : " << r.k_note << "\n";
    }
}

void print_graph(const TorsionGraph& g) {
    for (const auto& v : g.vertices)
        std::cout << "    vertex " << v.id << " : " << tag(v.stab) << "\n";
    for (const auto& e : g.edges)
        std::cout << "    edge " << e.id << " : "
                  << g.vertices[e.origin.vertex].id << " ("
                  << variant_name(e.origin.emb) << ") -> "
                  << g.vertices[e.end.vertex].id << " ("
                  << variant_name(e.end.emb) << ")\n";
    if (g.vertices.empty() && g.edges.empty()) std::cout << "    (empty)\n";
}

int cmd_validate(const std::string& path) {
    QuotientComplex c;
    try {
        c = parse_complex_file(path);
    } catch (const ValidationError& e) {
        std::cout << "invalid:\n";
        for (const auto& m : e.violations) std::cout << "  " << m << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cout << "invalid:\n  " << e.what() << "\n";
        return kExitInvalid;
    }
    std::cout << "valid: " << c.vertices.size() << " vertices, "
              << c.edges.size() << " edges, " << c.faces.size()
              << " faces\n";
    return kExitOk;
}

int cmd_compute(const std::string& path, const std::string& mode,
                const std::string& format) {
    const bool as_json = format == "json";
    QuotientComplex c = parse_complex_file(path);
    json out;
    bool want_direct = mode == "direct" || mode == "both";
    bool want_split = mode == "split" || mode == "both";

    std::optional<ComputeResult> direct, split;
    if (want_split) {
        try {
            split = compute_split(c);
        } catch (const UnknownComponent& e) {
            std::cerr << "warning: " << e.what()
                      << "; falling back to direct mode\n";
            if (as_json) out["warning"] = e.what();
            want_split = false;
            want_direct = true;
        }
    }
    if (want_direct) direct = compute_direct(c);

    if (direct) print_result("direct", *direct, as_json, out);
    if (split) print_result("split", *split, as_json, out);

    int rc = kExitOk;
    if (direct && split) {
        const bool agree = direct->h == split->h;
        if (as_json)
            out["agreement"] = agree ? "AGREE" : "DISAGREE";
        else
            std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
        if (!agree) rc = kExitMismatch;
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return rc;
}

int cmd_torsion(const std::string& path, int ell, bool raw) {
    QuotientComplex c = parse_complex_file(path);
    TorsionGraph g = extract_torsion(c, ell);
    std::cout << "extracted " << ell << "-torsion subcomplex:\n";
    print_graph(g);
    if (!raw) {
        g = reduce(g);
        std::cout << "reduced:\n";
        print_graph(g);
    }
    auto types = classify(g);
    std::cout << "components:";
    if (types.empty()) std::cout << " none";
    bool unknown = false;
    for (ComponentType t : types) {
        std::cout << " " << component_name(t);
        if (t == ComponentType::Unknown) unknown = true;
    }
    std::cout << "\n";
    auto h = torsion_homology(g);
    std::cout << "H0 = " << h[0].str() << "\nH1 = " << h[1].str() << "\n";
    if (unknown) {
        std::cout << "inventory: refused (unclassified component)\n";
    } else {
        TorsionInventory inv = inventory(c);
        if (ell == 2)
            std::cout << "inventory: o2=" << inv.o2 << " i2=" << inv.i2
                      << " theta=" << inv.theta << " rho=" << inv.rho
                      << " z2=" << inv.z2() << " d2=" << inv.d2() << "\n";
        else
            std::cout << "inventory: o3=" << inv.o3 << " i3=" << inv.i3
                      << "\n";
    }
    return kExitOk;
}

TorsionInventory inventory_from_components(const json& row) {
    TorsionInventory inv;
    for (const auto& t : row.value("c2", json::array())) {
        const std::string s = t.get<std::string>();
        if (s == "Circle")
            ++inv.o2;
        else if (s == "Edge2")
            ++inv.i2;
        else if (s == "Theta")
            ++inv.theta;
        else if (s == "Rho")
            ++inv.rho;
        else
            throw ParseError("unknown 2-torsion component \"" + s + "\"");
    }
    for (const auto& t : row.value("c3", json::array())) {
        const std::string s = t.get<std::string>();
        if (s == "Circle3")
            ++inv.o3;
        else if (s == "Edge3")
            ++inv.i3;
        else
            throw ParseError("unknown 3-torsion component \"" + s + "\"");
    }
    return inv;
}

int cmd_table(const std::string& dataset) {
    std::ifstream in(dataset);
    if (!in) throw ParseError("cannot open " + dataset);
    json rows = json::parse(in);

    long matched = 0;
    std::vector<std::string> bad;
    for (const auto& row : rows) {
        const std::string label = row.at("label").get<std::string>();
        const long beta1 = row.at("beta1").get<long>();
        const long beta2 = beta1 - 1;  // vanishing naive Euler characteristic
        TorsionInventory inv = inventory_from_components(row);

        std::array<AbelianGroup, 3> orbit = {
            AbelianGroup(1), AbelianGroup(beta1), AbelianGroup(beta2)};
        auto h = split_bredon(orbit, h_psi2(inv), h_psi3(inv));
        KHomology k = k_from_bredon(h);

        AbelianGroup want_h0 = group_from_json(row.at("h0"));
        AbelianGroup want_h1(row.at("h1_extra_rank").get<long>() + beta1);

        const bool ok = h[0] == want_h0 && h[1] == want_h1;
        std::cout << label << ": H0 = " << h[0].str() << " (expected "
                  << want_h0.str() << "), H1 = " << h[1].str()
                  << " (expected " << want_h1.str() << "), K0 = "
                  << k.k0.str() << ", K1 = " << k.k1.str()
                  << (ok ? "" : "  MISMATCH") << "\n";
        if (ok)
            ++matched;
        else
            bad.push_back(label);
    }
    std::cout << matched << "/" << rows.size() << " match\n";
    if (!bad.empty()) {
        std::cout << "mismatched rows:";
        for (const auto& l : bad) std::cout << " " << l;
        std::cout << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bredon homology and equivariant K-homology toolkit"};
    app.require_subcommand(1);

    std::string path, mode = "both", format = "text";
    std::string dataset = std::string(KBREDON_DATA_DIR) + "/appendix.json";
    int ell = 2;
    bool raw = false;

    auto* validate = app.add_subcommand("validate", "Check a complex file");
    validate->add_option("file", path)->required();

    auto* compute =
        app.add_subcommand("compute", "Bredon homology and K-homology");
    compute->add_option("file", path)->required();
    compute->add_option("--mode", mode)
        ->check(CLI::IsMember({"direct", "split", "both"}));
    compute->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));

    auto* torsion =
        app.add_subcommand("torsion", "Inspect a torsion subcomplex");
    torsion->add_option("file", path)->required();
    torsion->add_option("--ell", ell)->required()->check(CLI::IsMember({2, 3}));
    torsion->add_flag("--raw", raw, "Skip reduction");

    auto* table =
        app.add_subcommand("table", "Replay the bundled Bianchi table");
    table->add_option("--dataset", dataset);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (compute->parsed()) return cmd_compute(path, mode, format);
        if (torsion->parsed()) return cmd_torsion(path, ell, raw);
        return cmd_table(dataset);
    } catch (const SplitViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const NotAComplex& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const NonIntegralProduct& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
