#pragma once

#include "superext/scalar.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace superext {

struct Entry {
    std::size_t col;
    Scalar value;

    friend bool operator==(const Entry& a, const Entry& b) { return a.col == b.col && a.value == b.value; }
};

// Sorted by column, no stored zeros.
using SparseVector = std::vector<Entry>;
using Vector = std::vector<Scalar>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t dim);
Scalar sparse_at(const SparseVector& v, std::size_t col);
// y += a * x
void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);
SparseVector add(const SparseVector& x, const SparseVector& y);
SparseVector scaled(const SparseVector& x, const Scalar& a);
Scalar dot(const SparseVector& x, const Vector& y);
Vector scaled(const Vector& x, const Scalar& a);
bool is_zero(const Vector& v);

// Sparse row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_dense(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
    static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
    static Matrix kron(const Matrix& a, const Matrix& b);
    static Matrix direct_sum(const Matrix& a, const Matrix& b);
    static Matrix vstack(const std::vector<Matrix>& blocks);
    static Matrix hstack(const std::vector<Matrix>& blocks);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SparseVector& row(std::size_t i) const { return data_[i]; }
    void set_row(std::size_t i, SparseVector r);
    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void add_to(std::size_t i, std::size_t j, const Scalar& v);

    std::size_t nnz() const;
    bool is_zero() const;
    bool is_diagonal() const;
    Scalar trace() const;

    Matrix transpose() const;
    Vector apply(const Vector& v) const;
    SparseVector apply(const SparseVector& v) const;
    Vector column(std::size_t j) const;
    std::vector<Vector> to_dense() const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;
    Matrix scaled(const Scalar& a) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector> data_;
};

// Accumulates entries in any order, then freezes into a Matrix.
class MatrixBuilder {
public:
    MatrixBuilder(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
    void add(std::size_t i, std::size_t j, const Scalar& v);
    Matrix build() const;

private:
    std::size_t cols_;
    std::vector<std::map<std::size_t, Scalar>> rows_;
};

// Super commutator AB - (-1)^{ab} BA of homogeneous operators.
Matrix supercommutator(const Matrix& a, int parity_a, const Matrix& b, int parity_b);

}  // namespace superext
