#pragma once

#include <gmpxx.h>

#include <string>

namespace bredonkit {

/// Exact element of Z[j], j = e^{2 pi i / 3}, reduced by j^2 = -1 - j.
/// These are the only irrationalities needed by the character tables in
/// scope (C3 and A4).
struct Eisenstein {
    mpz_class a;  // rational part
    mpz_class b;  // coefficient of j

    Eisenstein() = default;
    Eisenstein(long x) : a(x) {}
    Eisenstein(mpz_class x, mpz_class y) : a(std::move(x)), b(std::move(y)) {}

    static Eisenstein j() { return {0, 1}; }
    static Eisenstein j2() { return {-1, -1}; }

    bool operator==(const Eisenstein&) const = default;

    Eisenstein operator+(const Eisenstein& o) const {
        return {a + o.a, b + o.b};
    }
    Eisenstein operator-(const Eisenstein& o) const {
        return {a - o.a, b - o.b};
    }
    Eisenstein operator-() const { return {-a, -b}; }
    Eisenstein operator*(const Eisenstein& o) const {
        // (a1 + b1 j)(a2 + b2 j), with j^2 = -1 - j
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }

    /// Complex conjugate: j conjugates to j^2.
    Eisenstein conj() const { return {a - b, -b}; }

    bool is_rational_integer() const { return b == 0; }

    std::string str() const;
};

}  // namespace bredonkit
