#include <benchmark/benchmark.h>

#include <string>

#include "bredonkit/bredon.hpp"
#include "bredonkit/torsion.hpp"

using namespace bredonkit;

namespace {

/// n disjoint copies of the three-edge two-vertex 2-torsion shape, plus a
/// trivially-stabilized filled loop per copy to exercise all degrees.
QuotientComplex theta_chain(int n) {
    QuotientComplex c;
    for (int i = 0; i < n; ++i) {
        const std::string s = std::to_string(i);
        c.vertices.push_back({"p" + s, Stab::V4});
        c.vertices.push_back({"q" + s, Stab::V4});
        const Variant vars[] = {Variant::A, Variant::B, Variant::Ab};
        for (int k = 0; k < 3; ++k)
            c.edges.push_back({"e" + s + "_" + std::to_string(k),
                               Stab::C2,
                               {"p" + s, vars[k]},
                               {"q" + s, vars[k]}});
        c.vertices.push_back({"t" + s, Stab::Trivial});
        c.edges.push_back({"l" + s,
                           Stab::Trivial,
                           {"t" + s, Variant::Canonical},
                           {"t" + s, Variant::Canonical}});
        c.faces.push_back({"f" + s, {{"l" + s, 1}}});
    }
    return c;
}

void BM_bredon_direct(benchmark::State& state) {
    QuotientComplex c = theta_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto h = bredon_homology(c);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_bredon_direct)->Arg(1)->Arg(4)->Arg(16);

void BM_torsion_reduce(benchmark::State& state) {
    QuotientComplex c = theta_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto g = reduce(extract_torsion(c, 2));
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_torsion_reduce)->Arg(1)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
