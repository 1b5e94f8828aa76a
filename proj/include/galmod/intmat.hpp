#pragma once

#include <cstddef>
#include <vector>

#include "galmod/rational.hpp"

namespace galmod {

// Dense integer matrix with arbitrary-precision entries.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntegerMatrix mul(const IntegerMatrix& other) const;
    bool operator==(const IntegerMatrix& other) const = default;

    // Exact determinant (square matrices), fraction-free Bareiss elimination.
    Integer determinant() const;

private:
    std::size_t rows_, cols_;
    std::vector<Integer> data_;
};

// Smith normal form D = U * M * V with U, V unimodular and
// d1 | d2 | ... >= 0 on the diagonal of D.
struct SNFResult {
    IntegerMatrix U, D, V;

    std::vector<Integer> diagonal() const;
};

SNFResult snf(const IntegerMatrix& M);

}  // namespace galmod
