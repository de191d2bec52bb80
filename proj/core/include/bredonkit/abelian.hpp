#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bredonkit {

/// Finitely generated abelian group in canonical form: free rank plus
/// invariant factors d1 | d2 | ... , each > 1.
struct AbelianGroup {
    long rank = 0;
    std::vector<mpz_class> torsion;

    AbelianGroup() = default;
    explicit AbelianGroup(long r, std::vector<mpz_class> t = {})
        : rank(r), torsion(std::move(t)) {}

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool torsion_free() const { return torsion.empty(); }

    bool operator==(const AbelianGroup&) const = default;

    /// Canonical rendering: free part first, invariant factors ascending,
    /// e.g. "Z^3 (+) Z/2".
    std::string str() const;
};

/// Direct sum, re-canonicalizing the invariant factors.
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Canonicalize an arbitrary multiset of torsion coefficients (each > 1)
/// into a divisibility chain.
std::vector<mpz_class> invariant_factors(std::vector<mpz_class> coeffs);

}  // namespace bredonkit
