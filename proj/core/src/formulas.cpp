#include "bredonkit/formulas.hpp"

#include "bredonkit/errors.hpp"

namespace bredonkit {

std::pair<AbelianGroup, AbelianGroup> h_psi2(long z2, long d2, long o2) {
    if (d2 % 2 != 0)
        throw OddD2("d2 = " + std::to_string(d2) + " is odd");
    AbelianGroup h0(z2, std::vector<mpz_class>(d2 / 2, 2));
    return {h0, AbelianGroup(o2)};
}

std::pair<AbelianGroup, AbelianGroup> h_psi2(const TorsionInventory& inv) {
    return h_psi2(inv.z2(), inv.d2(), inv.o2);
}

std::pair<AbelianGroup, AbelianGroup> h_psi3(long o3, long i3) {
    AbelianGroup h(2 * o3 + i3);
    return {h, h};
}

std::pair<AbelianGroup, AbelianGroup> h_psi3(const TorsionInventory& inv) {
    return h_psi3(inv.o3, inv.i3);
}

std::array<AbelianGroup, 3> split_bredon(
    const std::array<AbelianGroup, 3>& orbit,
    const std::pair<AbelianGroup, AbelianGroup>& p2,
    const std::pair<AbelianGroup, AbelianGroup>& p3) {
    if (orbit[0] != AbelianGroup(1))
        throw Disconnected("orbit space H0 is " + orbit[0].str() +
                           ", expected Z");
    return {direct_sum(direct_sum(orbit[0], p2.first), p3.first),
            direct_sum(direct_sum(orbit[1], p2.second), p3.second),
            orbit[2]};
}

KHomology k_from_bredon(const std::array<AbelianGroup, 3>& h) {
    if (!h[2].torsion_free())
        throw TorsionInH2("H2 = " + h[2].str() +
                          " has torsion; the extension does not split");
    return {direct_sum(h[0], h[2]), h[1]};
}

KHomology corollary_k(const BianchiSummary& s) {
    const auto& inv = s.inventory;
    auto p2 = h_psi2(inv);
    const long extra3 = 2 * inv.o3 + inv.i3;
    KHomology k;
    k.k0 = AbelianGroup(1 + s.beta2 + inv.z2() + extra3, p2.first.torsion);
    k.k1 = AbelianGroup(s.beta1 + inv.o2 + extra3,
                        invariant_factors(s.h1_orbit_torsion));
    return k;
}

AbelianGroup h0_from_fc(long count_fc) {
    return AbelianGroup(count_fc);
}

}  // namespace bredonkit
