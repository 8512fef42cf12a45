#pragma once

#include "superext/lie.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superext {

struct PointData {
    Scalar point;
    std::size_t multiplicity = 1;
};

struct Ideal {
    Subspace space;
    std::vector<Vector> generators;

    std::size_t dim() const { return space.dim(); }
};

// Finite-dimensional commutative associative unital algebra given by a multiplication table.
class CommutativeAlgebra {
public:
    CommutativeAlgebra() = default;
    CommutativeAlgebra(std::size_t dim, Vector unit, std::vector<SparseVector> table);

    std::size_t dim() const { return dim_; }
    const Vector& unit() const { return unit_; }
    const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    Vector multiply(const Vector& a, const Vector& b) const;
    // Matrix of b -> a * b.
    Matrix multiplication_by(const Vector& a) const;
    Matrix multiplication_by(std::size_t i) const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
    std::string label(std::size_t i) const;

    const std::vector<PointData>& points() const { return points_; }
    const std::vector<Ideal>& maximal_ideals() const { return maximal_; }
    void set_points(std::vector<PointData> points, std::vector<Ideal> maximal);

    // Coordinates of the generator t when the algebra is a quotient of C[t].
    const std::optional<Vector>& generator() const { return generator_; }
    void set_generator(Vector t) { generator_ = std::move(t); }

    // Basis indices r with b_r * b_r = b_r.
    std::vector<std::size_t> idempotent_basis() const;

private:
    std::size_t dim_ = 0;
    Vector unit_;
    std::vector<SparseVector> table_;
    std::vector<std::string> labels_;
    std::vector<PointData> points_;
    std::vector<Ideal> maximal_;
    std::optional<Vector> generator_;
};

ValidationReport validate(const CommutativeAlgebra& a);

enum class PointBasis { monomial, local };

// C[t] / prod (t - a_i)^{n_i}. The monomial basis is 1, t, ..., t^{d-1}; the local basis is
// e_i (t - a_i)^k with e_i the primitive idempotents.
CommutativeAlgebra build_multipoint(const std::vector<PointData>& points, PointBasis basis = PointBasis::monomial);

bool is_ideal(const CommutativeAlgebra& a, const Subspace& s);
Ideal generated_ideal(const CommutativeAlgebra& a, const std::vector<Vector>& generators);
Ideal ideal_product(const CommutativeAlgebra& a, const Ideal& i, const Ideal& j);
Ideal ideal_power(const CommutativeAlgebra& a, const Ideal& i, std::size_t k);
Ideal ideal_sum(const CommutativeAlgebra& a, const Ideal& i, const Ideal& j);
Ideal ideal_intersection(const CommutativeAlgebra& a, const Ideal& i, const Ideal& j);
// Indices of recorded points whose maximal ideal contains I.
std::vector<std::size_t> support(const CommutativeAlgebra& a, const Ideal& i);

struct IdealOps {
    Ideal product;
    Ideal sum;
    Ideal intersection;
    std::vector<Ideal> powers;  // I^1, ..., I^k
    std::vector<std::size_t> support_i;
    std::vector<std::size_t> support_j;
    bool disjoint_supports = false;
    bool coprime = false;                   // I + J = A
    bool product_equals_intersection = false;
};

IdealOps ideal_ops(const CommutativeAlgebra& a, const Ideal& i, const Ideal& j, std::size_t max_power = 3);

struct CommutativeQuotient {
    CommutativeAlgebra algebra;
    Matrix projection;  // dim(A/J) x dim(A)
    Matrix section;     // dim(A) x dim(A/J)
};

// The first basis vector of the quotient is the image of the unit when the unit is not in J.
CommutativeQuotient quotient(const CommutativeAlgebra& a, const Ideal& j);

// Cyclic group of order 1, 2 or 4 acting on A and optionally on a Lie superalgebra.
struct GroupAction {
    std::size_t order = 1;
    Matrix on_algebra;
    std::optional<Matrix> on_lie;
    bool free_on_points = false;
};

// t -> zeta t with zeta a primitive root of unity of the given order.
GroupAction scaling_action(const CommutativeAlgebra& a, std::size_t order, std::optional<Matrix> on_lie = std::nullopt);
// Checks orders and automorphism laws; the Lie part is checked against l when present.
ValidationReport validate(const GroupAction& act, const CommutativeAlgebra& a, const LieSuperalgebra* l = nullptr);
// x -> (-1)^{|x|} x.
Matrix parity_automorphism(const LieSuperalgebra& l);

struct FixedSubalgebra {
    CommutativeAlgebra algebra;
    Matrix embedding;  // dim(A) x dim(A^G)
};

FixedSubalgebra fixed_subalgebra(const CommutativeAlgebra& a, const GroupAction& act);

}  // namespace superext
