#include "bredonkit/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "bredonkit/errors.hpp"

namespace bredonkit {

std::string AbelianGroup::str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " (+) ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

std::vector<mpz_class> invariant_factors(std::vector<mpz_class> coeffs) {
    // Repeated gcd/lcm exchange converges to a divisibility chain.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            for (std::size_t k = i + 1; k < coeffs.size(); ++k) {
                if (coeffs[k] % coeffs[i] == 0) continue;
                mpz_class g, l;
                mpz_gcd(g.get_mpz_t(), coeffs[i].get_mpz_t(),
                        coeffs[k].get_mpz_t());
                mpz_lcm(l.get_mpz_t(), coeffs[i].get_mpz_t(),
                        coeffs[k].get_mpz_t());
                coeffs[i] = g;
                coeffs[k] = l;
                changed = true;
            }
        }
    }
    std::erase_if(coeffs, [](const mpz_class& d) { return d == 1; });
    std::sort(coeffs.begin(), coeffs.end());
    return coeffs;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<mpz_class> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    return AbelianGroup(a.rank + b.rank, invariant_factors(std::move(t)));
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init)
        for (long x : row) data_.emplace_back(x);
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const mpz_class& x) { return x == 0; });
}

IntMat IntMat::operator*(const IntMat& other) const {
    IntMat r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                r.at(i, j) += x * other.at(k, j);
        }
    return r;
}

IntMat IntMat::operator-() const {
    IntMat r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

IntMat IntMat::transposed() const {
    IntMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMat IntMat::submatrix(std::size_t r0, std::size_t r1, std::size_t c0,
                         std::size_t c1) const {
    IntMat r(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) r.at(i - r0, j - c0) = at(i, j);
    return r;
}

void IntMat::swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
}

void IntMat::swap_cols(std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, j), at(i, k));
}

void IntMat::add_row(std::size_t i, std::size_t k, const mpz_class& q) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) += q * at(k, j);
}

void IntMat::add_col(std::size_t j, std::size_t k, const mpz_class& q) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) += q * at(i, k);
}

void IntMat::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMat::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j);
        os << "]";
    }
    return os.str();
}

std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) != 0) ++r;
    return r;
}

std::vector<mpz_class> SnfResult::nontrivial_divisors() const {
    std::vector<mpz_class> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) > 1) out.push_back(d.at(i, i));
    return out;
}

std::vector<mpz_class> SnfResult::diagonal() const {
    std::vector<mpz_class> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

// Elementary operations on d mirrored into the certificate factors so that
// u * d * v stays equal to the input at every step.
struct SnfWork {
    IntMat d, u, v, u_inv, v_inv;

    void row_swap(std::size_t i, std::size_t k) {
        d.swap_rows(i, k);
        u.swap_cols(i, k);
        u_inv.swap_rows(i, k);
    }
    void col_swap(std::size_t j, std::size_t k) {
        d.swap_cols(j, k);
        v.swap_rows(j, k);
        v_inv.swap_cols(j, k);
    }
    // row i += q * row k on d
    void row_add(std::size_t i, std::size_t k, const mpz_class& q) {
        d.add_row(i, k, q);
        u.add_col(k, i, -q);
        u_inv.add_row(i, k, q);
    }
    // col j += q * col k on d
    void col_add(std::size_t j, std::size_t k, const mpz_class& q) {
        d.add_col(j, k, q);
        v.add_row(k, j, -q);
        v_inv.add_col(j, k, q);
    }
    void row_negate(std::size_t i) {
        d.negate_row(i);
        u.negate_col(i);
        u_inv.negate_row(i);
    }
};

// Minimal |entry| in d[t.., t..], ties by lowest row then column.
bool find_pivot(const IntMat& d, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const mpz_class& x = d.at(i, j);
            if (x == 0) continue;
            mpz_class a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfResult snf(const IntMat& a) {
    SnfWork w{a, IntMat::identity(a.rows()), IntMat::identity(a.cols()),
              IntMat::identity(a.rows()), IntMat::identity(a.cols())};
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(w.d, t, pi, pj)) break;
        if (pi != t) w.row_swap(t, pi);
        if (pj != t) w.col_swap(t, pj);

        for (;;) {
            // Clear column t below the pivot.
            bool dirty = false;
            for (std::size_t i = t + 1; i < w.d.rows(); ++i) {
                if (w.d.at(i, t) == 0) continue;
                mpz_class q = w.d.at(i, t) / w.d.at(t, t);
                w.row_add(i, t, -q);
                if (w.d.at(i, t) != 0) dirty = true;
            }
            // Clear row t right of the pivot.
            for (std::size_t j = t + 1; j < w.d.cols(); ++j) {
                if (w.d.at(t, j) == 0) continue;
                mpz_class q = w.d.at(t, j) / w.d.at(t, t);
                w.col_add(j, t, -q);
                if (w.d.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // A smaller remainder appeared; re-center on it.
                find_pivot(w.d, t, pi, pj);
                if (pi != t) w.row_swap(t, pi);
                if (pj != t) w.col_swap(t, pj);
                continue;
            }
            // Row and column are clear; enforce that the pivot divides the
            // rest of the submatrix.
            bool divides = true;
            for (std::size_t i = t + 1; divides && i < w.d.rows(); ++i)
                for (std::size_t j = t + 1; divides && j < w.d.cols(); ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.row_add(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.d.at(t, t) < 0) w.row_negate(t);
    }
    return SnfResult{w.u, w.d, w.v, w.u_inv, w.v_inv};
}

std::size_t rank(const IntMat& a) { return snf(a).rank(); }

AbelianGroup chain_homology(const IntMat& d_n, const IntMat& d_succ) {
    if (d_n.cols() != d_succ.rows())
        throw NotAComplex("dimension mismatch between differentials");
    if (!(d_n * d_succ).is_zero())
        throw NotAComplex("d_n * d_succ is not the zero map");

    const std::size_t c = d_n.cols();
    SnfResult s = snf(d_n);
    const std::size_t r1 = s.rank();

    // In the coordinates y = V x the kernel of d_n is exactly the span of
    // the last c - r1 unit vectors, so project V * d_succ onto those rows.
    IntMat proj = s.v * d_succ;
    for (std::size_t i = 0; i < r1; ++i)
        for (std::size_t j = 0; j < proj.cols(); ++j)
            if (proj.at(i, j) != 0)
                throw NotAComplex("image does not land in the kernel");
    IntMat m = proj.submatrix(r1, c, 0, proj.cols());

    SnfResult sm = snf(m);
    AbelianGroup h;
    h.rank = static_cast<long>((c - r1) - sm.rank());
    h.torsion = sm.nontrivial_divisors();
    return h;
}

}  // namespace bredonkit
