#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "bredonkit/abelian.hpp"

namespace bredonkit {

/// Dense exact integer matrix. Zero rows or columns are first-class:
/// boundary maps of top and bottom degree are empty, not absent.
class IntMat {
  public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMat(std::initializer_list<std::initializer_list<long>> init);

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const IntMat&) const = default;
    bool is_zero() const;

    IntMat operator*(const IntMat& other) const;
    IntMat operator-() const;
    IntMat transposed() const;

    /// Rows [r0, r1) and columns [c0, c1).
    IntMat submatrix(std::size_t r0, std::size_t r1, std::size_t c0,
                     std::size_t c1) const;

    void swap_rows(std::size_t i, std::size_t k);
    void swap_cols(std::size_t j, std::size_t k);
    /// row i += q * row k
    void add_row(std::size_t i, std::size_t k, const mpz_class& q);
    /// col j += q * col k
    void add_col(std::size_t j, std::size_t k, const mpz_class& q);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string str() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Smith normal form certificate: a = u * d * v with u, v unimodular and
/// d diagonal, d1 | d2 | ... >= 0.
struct SnfResult {
    IntMat u, d, v;
    /// Inverses of the transforms, maintained alongside.
    IntMat u_inv, v_inv;

    std::size_t rank() const;
    /// Diagonal entries > 1, in divisibility order.
    std::vector<mpz_class> nontrivial_divisors() const;
    std::vector<mpz_class> diagonal() const;
};

/// Deterministic SNF: minimal-absolute-value pivot, ties broken by lowest
/// row then column index.
SnfResult snf(const IntMat& a);

std::size_t rank(const IntMat& a);

/// Homology ker(d_n) / im(d_succ) of a two-step integral complex.
/// Throws NotAComplex unless d_n * d_succ = 0.
AbelianGroup chain_homology(const IntMat& d_n, const IntMat& d_succ);

}  // namespace bredonkit
