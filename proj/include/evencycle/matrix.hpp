#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "evencycle/errors.hpp"
#include "evencycle/field.hpp"
#include "evencycle/ring4.hpp"

namespace evencycle {

/// Dense square matrix, row-major.
template <class T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

    Matrix(std::size_t n, std::vector<T> entries) : n_(n), data_(std::move(entries))
    {
        if (data_.size() != n * n)
            throw UsageError("Matrix: expected " + std::to_string(n * n) + " entries, got " +
                             std::to_string(data_.size()));
    }

    static Matrix identity(std::size_t n, const T& zero, const T& one)
    {
        Matrix m(n, zero);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = one;
        return m;
    }

    std::size_t size() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < n_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using MatrixF = Matrix<FieldElem>;
using MatrixE = Matrix<RingElem>;

inline MatrixE lift(const Ring& ring, const MatrixF& a)
{
    MatrixE out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            out(i, j) = ring.lift(a(i, j));
    return out;
}

inline MatrixF project(const Ring& ring, const MatrixE& m)
{
    MatrixF out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out(i, j) = ring.project(m(i, j));
    return out;
}

}  // namespace evencycle
