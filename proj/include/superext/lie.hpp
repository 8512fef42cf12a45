#pragma once

#include "superext/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superext {

struct ValidationIssue {
    std::string axiom;                 // "parity", "antisymmetry", "jacobi", "action", ...
    std::vector<std::size_t> witness;  // basis indices
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

// A faithful matrix picture of the algebra, kept when the constructor has one.
struct MatrixRealization {
    std::vector<Parity> module_parity;
    std::vector<Matrix> matrices;  // one per basis element
};

// Finite-dimensional Lie superalgebra given by structure constants on a homogeneous basis.
class LieSuperalgebra {
public:
    LieSuperalgebra() = default;
    explicit LieSuperalgebra(std::vector<Parity> parity);

    std::size_t dim() const { return parity_.size(); }
    const std::vector<Parity>& parity() const { return parity_; }
    Parity parity(std::size_t i) const { return parity_[i]; }
    std::size_t even_dim() const;
    std::size_t odd_dim() const;
    std::vector<std::size_t> indices_of_parity(Parity z) const;

    const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    // Sets [x_i, x_j] and the partner [x_j, x_i] = -(-1)^{|i||j|} [x_i, x_j].
    void set_bracket(std::size_t i, std::size_t j, SparseVector value);
    // Sets only the ordered pair; used to build deliberately broken tables.
    void set_bracket_raw(std::size_t i, std::size_t j, SparseVector value);
    Vector bracket(const Vector& x, const Vector& y) const;
    // Column j holds the coordinates of [x_i, x_j].
    Matrix ad(std::size_t i) const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(std::size_t i) const;

    const std::vector<std::size_t>& cartan() const { return cartan_; }
    const std::vector<std::size_t>& nilpos() const { return nilpos_; }
    const std::vector<std::size_t>& nilneg() const { return nilneg_; }
    void set_cartan(std::vector<std::size_t> idx) { cartan_ = std::move(idx); }
    void set_nilpos(std::vector<std::size_t> idx) { nilpos_ = std::move(idx); }
    void set_nilneg(std::vector<std::size_t> idx) { nilneg_ = std::move(idx); }

    const std::optional<std::vector<int>>& z_grading() const { return z_grading_; }
    void set_z_grading(std::vector<int> degrees) { z_grading_ = std::move(degrees); }

    const std::optional<MatrixRealization>& realization() const { return realization_; }
    void set_realization(MatrixRealization r) { realization_ = std::move(r); }

    std::string superdim() const;

    friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b);

private:
    std::vector<Parity> parity_;
    std::vector<SparseVector> table_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> cartan_;
    std::vector<std::size_t> nilpos_;
    std::vector<std::size_t> nilneg_;
    std::optional<std::vector<int>> z_grading_;
    std::optional<MatrixRealization> realization_;
};

ValidationReport validate(const LieSuperalgebra& l);
void require_valid(const LieSuperalgebra& l, const char* what = "algebra");

LieSuperalgebra abelian(std::size_t even, std::size_t odd);
LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b);

// Structure constants of the span of homogeneous matrices closed under the super commutator.
LieSuperalgebra from_matrix_basis(const std::vector<Matrix>& basis, const std::vector<Parity>& module_parity);

// New basis y_j = sum_i p(i, j) x_i; p must be invertible and parity-homogeneous per column.
LieSuperalgebra change_basis(const LieSuperalgebra& l, const Matrix& p);

struct Subalgebra {
    LieSuperalgebra algebra;
    Matrix inclusion;  // dim(L) x dim(sub), columns are the chosen basis
};

// Subalgebra on homogeneous spanning vectors (closure is checked, not generated).
Subalgebra subalgebra(const LieSuperalgebra& l, const std::vector<Vector>& basis);

struct QuotientAlgebra {
    LieSuperalgebra algebra;
    Matrix projection;  // dim(L/I) x dim(L)
    Matrix section;     // dim(L) x dim(L/I)
};

QuotientAlgebra quotient(const LieSuperalgebra& l, const Subspace& ideal);

bool is_ideal(const LieSuperalgebra& l, const Subspace& s);
Subspace bracket_span(const LieSuperalgebra& l, const Subspace& a, const Subspace& b);
Subspace parity_part(const LieSuperalgebra& l, Parity z);
// Homogeneous basis of a graded subspace of a graded space.
std::vector<Vector> homogeneous_basis(const Subspace& s, const std::vector<Parity>& parity);

}  // namespace superext
