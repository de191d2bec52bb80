#pragma once

#include <array>
#include <utility>

#include "bredonkit/abelian.hpp"
#include "bredonkit/torsion.hpp"

namespace bredonkit {

/// Inventory-level description of a Bianchi quotient: Betti numbers of the
/// orbit space plus the torsion component counts. beta2 = beta1 - 1 for
/// genuine Bianchi input (vanishing naive Euler characteristic).
struct BianchiSummary {
    long beta1 = 0;
    long beta2 = 0;
    std::vector<mpz_class> h1_orbit_torsion;
    TorsionInventory inventory;
};

/// Equivariant K-homology in degrees 0 and 1; everything else follows by
/// 2-periodicity.
struct KHomology {
    AbelianGroup k0, k1;
    bool operator==(const KHomology&) const = default;
};

/// Closed form for the 2-torsion subcomplex homology:
/// (Z^z2 (+) (Z/2)^(d2/2), Z^o2). Throws OddD2 when d2 is odd.
std::pair<AbelianGroup, AbelianGroup> h_psi2(long z2, long d2, long o2);
std::pair<AbelianGroup, AbelianGroup> h_psi2(const TorsionInventory& inv);

/// Closed form for the 3-torsion subcomplex homology:
/// (Z^(2 o3 + i3), Z^(2 o3 + i3)).
std::pair<AbelianGroup, AbelianGroup> h_psi3(long o3, long i3);
std::pair<AbelianGroup, AbelianGroup> h_psi3(const TorsionInventory& inv);

/// Degree-wise direct sum of orbit homology with the two torsion
/// contributions; top degree is orbit homology alone. Requires a connected
/// orbit space (H0 = Z), else throws Disconnected.
std::array<AbelianGroup, 3> split_bredon(
    const std::array<AbelianGroup, 3>& orbit,
    const std::pair<AbelianGroup, AbelianGroup>& p2,
    const std::pair<AbelianGroup, AbelianGroup>& p3);

/// K0 = H0 (+) H2, K1 = H1. The short exact sequence splits only when H2
/// is torsion-free; otherwise throws TorsionInH2 rather than guessing the
/// extension.
KHomology k_from_bredon(const std::array<AbelianGroup, 3>& h);

/// K0 = Z^(1 + beta2 + z2 + 2 o3 + i3) (+) (Z/2)^(d2/2),
/// K1 = Z^(beta1 + o2 + 2 o3 + i3) (+) orbit H1 torsion.
KHomology corollary_k(const BianchiSummary& s);

/// Degree-zero Bredon homology of a complex with at most zero-dimensional
/// singular part: free on the finite-order conjugacy classes.
AbelianGroup h0_from_fc(long count_fc);

}  // namespace bredonkit
