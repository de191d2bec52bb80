#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bredonkit/errors.hpp"
#include "bredonkit/intmat.hpp"
#include "support/oracle.hpp"

using namespace bredonkit;

namespace {

IntMat random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> entry(-9, 9);
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    return m;
}

void check_certificate(const IntMat& a) {
    SnfResult s = snf(a);
    CHECK(s.u * s.d * s.v == a);
    CHECK(s.u * s.u_inv == IntMat::identity(a.rows()));
    CHECK(s.v * s.v_inv == IntMat::identity(a.cols()));
    auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        if (diag[i] == 0) CHECK(diag[i + 1] == 0);
    }
}

}  // namespace

TEST_CASE("matrix basics") {
    IntMat a{{1, 2}, {3, 4}};
    IntMat b{{0, 1}, {1, 0}};
    CHECK((a * b) == IntMat{{2, 1}, {4, 3}});
    CHECK(a.transposed() == IntMat{{1, 3}, {2, 4}});
    CHECK((-a) == IntMat{{-1, -2}, {-3, -4}});
    CHECK(a.submatrix(0, 1, 1, 2) == IntMat{{2}});
    CHECK_FALSE(a.is_zero());
    CHECK(IntMat(3, 2).is_zero());
    CHECK(IntMat::identity(2) == IntMat{{1, 0}, {0, 1}});
}

TEST_CASE("snf on known matrices") {
    SUBCASE("divisor chain") {
        SnfResult s = snf(IntMat{{2, 4}, {6, 8}});
        CHECK(s.diagonal() == std::vector<mpz_class>{2, 4});
    }
    SUBCASE("identity") {
        SnfResult s = snf(IntMat::identity(3));
        CHECK(s.rank() == 3);
        CHECK(s.nontrivial_divisors().empty());
    }
    SUBCASE("zero matrix") {
        SnfResult s = snf(IntMat(2, 3));
        CHECK(s.rank() == 0);
        CHECK(s.u * s.d * s.v == IntMat(2, 3));
    }
    SUBCASE("empty shapes") {
        CHECK(snf(IntMat(0, 4)).rank() == 0);
        CHECK(snf(IntMat(4, 0)).rank() == 0);
        CHECK(snf(IntMat(0, 0)).rank() == 0);
    }
    SUBCASE("single negative entry") {
        SnfResult s = snf(IntMat{{-6}});
        CHECK(s.diagonal() == std::vector<mpz_class>{6});
        CHECK(s.u * s.d * s.v == IntMat{{-6}});
    }
}

TEST_CASE("snf certificates against determinantal divisors") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int iter = 0; iter < 60; ++iter) {
        IntMat a = random_matrix(rng, dim(rng), dim(rng));
        CAPTURE(a.str());
        check_certificate(a);
        SnfResult s = snf(a);
        // determinantal-divisor ratios reproduce the nonzero diagonal
        auto expect = oracle::invariant_factors(a);
        auto diag = s.diagonal();
        CHECK(expect.size() == s.rank());
        for (std::size_t i = 0; i < expect.size(); ++i)
            CHECK(diag[i] == expect[i]);
        CHECK(rank(a) == oracle::q_rank(a));
    }
}

TEST_CASE("chain homology") {
    SUBCASE("circle") {
        // one 0-cell, one loop: d1 = 0 (1x1)
        IntMat d1(1, 1);
        CHECK(chain_homology(IntMat(0, 1), d1) == AbelianGroup(1));
        CHECK(chain_homology(d1, IntMat(1, 0)) == AbelianGroup(1));
    }
    SUBCASE("torsion cokernel") {
        IntMat d2{{-2}, {2}};
        AbelianGroup h = chain_homology(IntMat(0, 2), d2);
        CHECK(h == AbelianGroup(1, {2}));
        CHECK(chain_homology(d2, IntMat(1, 0)) == AbelianGroup(0));
    }
    SUBCASE("two-column differential with kernel") {
        IntMat d{{-1, -1}, {1, 1}};
        CHECK(chain_homology(IntMat(0, 2), d) == AbelianGroup(1));
        CHECK(chain_homology(d, IntMat(2, 0)) == AbelianGroup(1));
    }
    SUBCASE("middle degree of a two-step complex") {
        // 0 -> Z -(2, -2)^T-> Z^2 -(1,1)-> Z -> 0
        IntMat d1{{1, 1}};
        IntMat d2{{2}, {-2}};
        CHECK(chain_homology(d1, d2) == AbelianGroup(0, {2}));
    }
    SUBCASE("rejects non-complexes") {
        IntMat d1{{1, 0}};
        IntMat d2{{1}, {0}};
        CHECK_THROWS_AS(chain_homology(d1, d2), NotAComplex);
    }
    SUBCASE("matches the oracle on random complexes") {
        // build d_succ with columns in ker(d_n) by construction:
        // d_n = (M | -M), d_succ columns of shape (x, x)^T
        std::mt19937 rng(7);
        for (int iter = 0; iter < 30; ++iter) {
            IntMat m = random_matrix(rng, 3, 3);
            IntMat d_n(3, 6);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    d_n.at(i, j) = m.at(i, j);
                    d_n.at(i, j + 3) = -m.at(i, j);
                }
            IntMat x = random_matrix(rng, 3, 2);
            IntMat d_succ(6, 2);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    d_succ.at(i, j) = x.at(i, j);
                    d_succ.at(i + 3, j) = x.at(i, j);
                }
            CAPTURE(iter);
            CHECK(chain_homology(d_n, d_succ) ==
                  oracle::homology(d_n, d_succ));
        }
    }
}

TEST_CASE("abelian group canonical form") {
    CHECK(AbelianGroup(0).str() == "0");
    CHECK(AbelianGroup(1).str() == "Z");
    CHECK(AbelianGroup(3, {2}).str() == "Z^3 (+) Z/2");
    CHECK(AbelianGroup(0, {2, 4}).str() == "Z/2 (+) Z/4");
    CHECK(invariant_factors({2, 3}) == std::vector<mpz_class>{6});
    CHECK(invariant_factors({4, 6}) == std::vector<mpz_class>{2, 12});
    CHECK(direct_sum(AbelianGroup(1, {2}), AbelianGroup(2, {3})) ==
          AbelianGroup(3, {6}));
}
