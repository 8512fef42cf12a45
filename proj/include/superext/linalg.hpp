#pragma once

#include "superext/matrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace superext {

using Parity = std::uint8_t;

// Incremental echelon form with monic pivots; rows are reduced on insertion.
class Echelon {
public:
    explicit Echelon(std::size_t cols);

    // Returns true when the row enlarges the span.
    bool insert(SparseVector row);
    bool in_span(SparseVector row) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return pivot_of_.size(); }
    std::vector<std::size_t> pivots() const;
    // Unique reduced row echelon form of the span, rows ordered by pivot.
    Matrix rref() const;

private:
    void reduce(SparseVector& row) const;

    std::vector<std::ptrdiff_t> pivot_of_;
    std::vector<SparseVector> rows_;
};

struct RowReduction {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    Matrix rref;
};

RowReduction row_reduce(const Matrix& m);

struct RankOptions {
    std::size_t modular_threshold = 5000;
    bool split_components = true;
};

std::size_t rank(const Matrix& m, const RankOptions& options = {});

// Rank contributions split by the parity of the source column; the matrix must preserve parity.
std::array<std::size_t, 2> rank_by_parity(const Matrix& m, const std::vector<Parity>& col_parity,
                                          const RankOptions& options = {});

// Rank over F_p with i mapped to a square root of -1; nullopt if some entry is not p-integral.
std::optional<std::size_t> modular_rank(const Matrix& m, std::uint64_t p, std::uint64_t sqrt_minus_one);

class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient);

    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace span_rows(const Matrix& rows);
    static Subspace full(std::size_t ambient);
    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<Vector> basis_vectors() const;
    // Basis vectors as columns of an ambient x dim matrix.
    Matrix basis_columns() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    // Coordinates with respect to the echelon basis; nullopt if v is outside.
    std::optional<Vector> coordinates(const Vector& v) const;
    // Coordinate indices spanning a complement.
    std::vector<std::size_t> complement_indices() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace column_space(const Matrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

struct SubspaceOps {
    Subspace sum;
    Subspace intersection;
    std::size_t quotient_dim = 0;  // dim (a+b)/b
};

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);
std::size_t quotient_dim(const Subspace& a);

std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Matrix& a);


// Coordinates with respect to a fixed list of independent vectors (not necessarily echelon).
class CoordinateSystem {
public:
    CoordinateSystem() = default;
    CoordinateSystem(std::size_t ambient, std::vector<Vector> basis);

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient_dim() const { return span_.ambient_dim(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const Subspace& span() const { return span_; }
    std::optional<Vector> coordinates(const Vector& v) const;
    // Like coordinates() but throws when v lies outside the span.
    Vector require(const Vector& v, const char* what) const;
    Vector combine(const Vector& coords) const;

private:
    std::vector<Vector> basis_;
    Subspace span_;
    Matrix echelon_to_basis_;  // dim x dim
};

}  // namespace superext
