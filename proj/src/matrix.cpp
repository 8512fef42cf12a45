#include "superext/matrix.hpp"

#include "superext/errors.hpp"

#include <algorithm>
#include <string>

namespace superext {

SparseVector to_sparse(const Vector& v) {
    SparseVector out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) out.push_back({k, v[k]});
    }
    return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
    Vector out(dim);
    for (const auto& e : v) out[e.col] = e.value;
    return out;
}

Scalar sparse_at(const SparseVector& v, std::size_t col) {
    auto it = std::lower_bound(v.begin(), v.end(), col, [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != v.end() && it->col == col) return it->value;
    return Scalar();
}

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
    if (a.is_zero() || x.empty()) return;
    SparseVector out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].col < x[j].col)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].col < y[i].col) {
            out.push_back({x[j].col, a * x[j].value});
            ++j;
        } else {
            Scalar s = y[i].value + a * x[j].value;
            if (!s.is_zero()) out.push_back({x[j].col, std::move(s)});
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

SparseVector add(const SparseVector& x, const SparseVector& y) {
    SparseVector out = x;
    axpy(out, Scalar(1), y);
    return out;
}

SparseVector scaled(const SparseVector& x, const Scalar& a) {
    if (a.is_zero()) return {};
    SparseVector out;
    out.reserve(x.size());
    for (const auto& e : x) out.push_back({e.col, e.value * a});
    return out;
}

Scalar dot(const SparseVector& x, const Vector& y) {
    Scalar s;
    for (const auto& e : x) {
        if (!y[e.col].is_zero()) s += e.value * y[e.col];
    }
    return s;
}

Vector scaled(const Vector& x, const Scalar& a) {
    Vector out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!x[k].is_zero()) out[k] = x[k] * a;
    }
    return out;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.data_[k].push_back({k, Scalar(1)});
    return m;
}

Matrix Matrix::from_dense(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ValidationError("ragged dense matrix");
        m.data_[i] = to_sparse(rows[i]);
    }
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, std::move(rows[i]));
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw ValidationError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) {
            if (!columns[j][i].is_zero()) m.data_[i].push_back({j, columns[j][i]});
        }
    }
    return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Matrix m(rows, cols);
    m.data_[i].push_back({j, Scalar(1)});
    return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < b.rows_; ++k) {
            auto& out = m.data_[i * b.rows_ + k];
            for (const auto& ea : a.data_[i]) {
                for (const auto& eb : b.data_[k]) out.push_back({ea.col * b.cols_ + eb.col, ea.value * eb.value});
            }
        }
    }
    return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) m.data_[i] = a.data_[i];
    for (std::size_t i = 0; i < b.rows_; ++i) {
        auto& out = m.data_[a.rows_ + i];
        for (const auto& e : b.data_[i]) out.push_back({a.cols_ + e.col, e.value});
    }
    return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    Matrix m(0, blocks.front().cols_);
    for (const auto& b : blocks) {
        if (b.cols_ != m.cols_) throw ValidationError("vstack column mismatch");
        m.data_.insert(m.data_.end(), b.data_.begin(), b.data_.end());
        m.rows_ += b.rows_;
    }
    return m;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    Matrix m(blocks.front().rows_, 0);
    for (const auto& b : blocks) {
        if (b.rows_ != m.rows_) throw ValidationError("hstack row mismatch");
        for (std::size_t i = 0; i < b.rows_; ++i) {
            for (const auto& e : b.data_[i]) m.data_[i].push_back({m.cols_ + e.col, e.value});
        }
        m.cols_ += b.cols_;
    }
    return m;
}

void Matrix::set_row(std::size_t i, SparseVector r) {
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (r[k].col >= cols_ || r[k].value.is_zero() || (k > 0 && r[k - 1].col >= r[k].col)) {
            throw ValidationError("invalid sparse row");
        }
    }
    data_[i] = std::move(r);
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
    return sparse_at(data_[i], j);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_ || j >= cols_) throw ValidationError("matrix index out of range");
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) {
        if (v.is_zero()) {
            r.erase(it);
        } else {
            it->value = v;
        }
    } else if (!v.is_zero()) {
        r.insert(it, {j, v});
    }
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
    if (v.is_zero()) return;
    set(i, j, at(i, j) + v);
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.empty(); });
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& e : data_[i]) {
            if (e.col != i) return false;
        }
    }
    return true;
}

Scalar Matrix::trace() const {
    Scalar s;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += at(i, i);
    return s;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& e : data_[i]) t.data_[e.col].push_back({i, e.value});
    }
    return t;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw ValidationError("apply: dimension mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(data_[i], v);
    return out;
}

SparseVector Matrix::apply(const SparseVector& v) const {
    return to_sparse(apply(superext::to_dense(v, cols_)));
}

Vector Matrix::column(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

std::vector<Vector> Matrix::to_dense() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (const auto& r : data_) out.push_back(superext::to_dense(r, cols_));
    return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k) m.data_[k] = data_.at(idx[k]);
    return m;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    std::vector<std::ptrdiff_t> where(cols_, -1);
    for (std::size_t k = 0; k < idx.size(); ++k) where.at(idx[k]) = static_cast<std::ptrdiff_t>(k);
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& e : data_[i]) {
            if (where[e.col] >= 0) m.data_[i].push_back({static_cast<std::size_t>(where[e.col]), e.value});
        }
        std::sort(m.data_[i].begin(), m.data_[i].end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    }
    return m;
}

Matrix Matrix::scaled(const Scalar& a) const {
    Matrix m(rows_, cols_);
    if (a.is_zero()) return m;
    for (std::size_t i = 0; i < rows_; ++i) m.data_[i] = superext::scaled(data_[i], a);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix product: dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    Vector acc(b.cols_);
    std::vector<char> touched(b.cols_, 0);
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        cols.clear();
        for (const auto& ea : a.data_[i]) {
            for (const auto& eb : b.data_[ea.col]) {
                if (!touched[eb.col]) {
                    touched[eb.col] = 1;
                    cols.push_back(eb.col);
                    acc[eb.col] = ea.value * eb.value;
                } else {
                    acc[eb.col] += ea.value * eb.value;
                }
            }
        }
        std::sort(cols.begin(), cols.end());
        for (std::size_t c : cols) {
            if (!acc[c].is_zero()) m.data_[i].push_back({c, std::move(acc[c])});
            acc[c] = Scalar();
            touched[c] = 0;
        }
    }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix sum: dimension mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < a.rows_; ++i) axpy(m.data_[i], Scalar(1), b.data_[i]);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix difference: dimension mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < a.rows_; ++i) axpy(m.data_[i], Scalar(-1), b.data_[i]);
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        const auto& x = a.data_[i];
        const auto& y = b.data_[i];
        if (x.size() != y.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k].col != y[k].col || x[k].value != y[k].value) return false;
        }
    }
    return true;
}

void MatrixBuilder::add(std::size_t i, std::size_t j, const Scalar& v) {
    if (v.is_zero()) return;
    if (i >= rows_.size() || j >= cols_) throw ValidationError("builder index out of range");
    auto [it, inserted] = rows_[i].try_emplace(j, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) rows_[i].erase(it);
    }
}

Matrix MatrixBuilder::build() const {
    std::vector<SparseVector> rows(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        rows[i].reserve(rows_[i].size());
        for (const auto& [c, v] : rows_[i]) rows[i].push_back({c, v});
    }
    return Matrix::from_rows(cols_, std::move(rows));
}

Matrix supercommutator(const Matrix& a, int parity_a, const Matrix& b, int parity_b) {
    Matrix ab = a * b;
    Matrix ba = b * a;
    return (parity_a & parity_b & 1) ? ab + ba : ab - ba;
}

}  // namespace superext
