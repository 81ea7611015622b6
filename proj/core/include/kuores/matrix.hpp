#pragma once

#include <optional>
#include <vector>

#include "kuores/error.hpp"

namespace kuores {

// Minimal dense square-capable matrix. Entries need no default constructor;
// the matrix is built from an explicit fill value or a row list.
template <class T>
class Matrix {
public:
    Matrix(size_t rows, size_t cols, const T& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(size_t i, size_t j) {
        for (size_t k = 0; k < cols_; ++k) std::swap(a_[i * cols_ + k], a_[j * cols_ + k]);
    }

private:
    size_t rows_, cols_;
    std::vector<T> a_;
};

// Exact determinant over an integral domain by fraction-free Bareiss
// elimination. Every division is exact (Sylvester's identity); pivot search
// takes the first nonzero entry in the column, with sign tracking on swaps.
template <class T>
T det_bareiss(Matrix<T> m) {
    if (m.rows() != m.cols())
        throw UndefinedOperation("determinant of a non-square matrix");
    const size_t n = m.rows();
    if (n == 0)
        throw UndefinedOperation("determinant of an empty matrix");

    bool negate = false;
    std::optional<T> prev;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return m.at(k, k).zero_like();
        if (pivot != k) {
            m.swap_rows(pivot, k);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = prev ? exact_div(num, *prev) : num;
            }
            m.at(i, k) = m.at(i, k).zero_like();
        }
        prev = m.at(k, k);
    }
    T det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

} // namespace kuores
