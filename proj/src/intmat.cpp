#include "galmod/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace galmod {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::mul(const IntegerMatrix& other) const {
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

Integer IntegerMatrix::determinant() const {
    // Bareiss fraction-free elimination.
    std::size_t n = rows_;
    IntegerMatrix a(*this);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = t;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::vector<Integer> SNFResult::diagonal() const {
    std::vector<Integer> d;
    std::size_t n = std::min(D.rows(), D.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(D.at(i, i));
    return d;
}

namespace {

struct SnfWork {
    IntegerMatrix D, U, V;

    explicit SnfWork(const IntegerMatrix& M)
        : D(M), U(IntegerMatrix::identity(M.rows())), V(IntegerMatrix::identity(M.cols())) {}

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D.at(a, j), D.at(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D.at(i, a), D.at(i, b));
        for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    }
    // row[a] -= q * row[b]
    void row_op(std::size_t a, std::size_t b, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < D.cols(); ++j) D.at(a, j) -= q * D.at(b, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) -= q * U.at(b, j);
    }
    // col[a] -= q * col[b]
    void col_op(std::size_t a, std::size_t b, const Integer& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < D.rows(); ++i) D.at(i, a) -= q * D.at(i, b);
        for (std::size_t i = 0; i < V.rows(); ++i) V.at(i, a) -= q * V.at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < D.cols(); ++j) D.at(a, j) = -D.at(a, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) = -U.at(a, j);
    }
};

}  // namespace

SNFResult snf(const IntegerMatrix& M) {
    SnfWork w(M);
    std::size_t r = M.rows(), c = M.cols();
    std::size_t n = std::min(r, c);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // locate the entry of least nonzero magnitude in the trailing block
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    const Integer& e = w.D.at(i, j);
                    if (e == 0) continue;
                    if (!found ||
                        mpz_cmpabs(e.get_mpz_t(), w.D.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) {
                // trailing block is zero; done
                t = n;
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            // clear column t and row t by nearest-integer division (the
            // gcd-pivoting loop: remainders shrink, so this terminates)
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (w.D.at(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.D.at(i, t).get_mpz_t(), w.D.at(t, t).get_mpz_t());
                w.row_op(i, t, q);
                if (w.D.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (w.D.at(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.D.at(t, j).get_mpz_t(), w.D.at(t, t).get_mpz_t());
                w.col_op(j, t, q);
                if (w.D.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide every entry of the trailing block for the
            // divisibility chain; if not, fold the offending row in and redo
            bool divides_all = true;
            for (std::size_t i = t + 1; i < r && divides_all; ++i)
                for (std::size_t j = t + 1; j < c; ++j) {
                    if (!mpz_divisible_p(w.D.at(i, j).get_mpz_t(), w.D.at(t, t).get_mpz_t())) {
                        w.row_op(t, i, Integer(-1));  // row t += row i
                        divides_all = false;
                        break;
                    }
                }
            if (divides_all) break;
        }
        if (t >= n) break;
    }

    for (std::size_t t = 0; t < n; ++t)
        if (w.D.at(t, t) < 0) w.negate_row(t);

    return SNFResult{std::move(w.U), std::move(w.D), std::move(w.V)};
}

}  // namespace galmod
