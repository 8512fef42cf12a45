#pragma once

#include "superext/linalg.hpp"

#include <optional>
#include <vector>

namespace superext {

// Polynomials are coefficient vectors, constant term first.
using Polynomial = std::vector<Scalar>;

Polynomial minimal_polynomial(const Matrix& a);

// All roots in Q(i) counted once each; complete is false when an irreducible factor of
// degree >= 2 remains.
std::vector<Scalar> polynomial_roots(const Polynomial& p, bool& complete);

// Distinct eigenvalues when the matrix is diagonalizable over Q(i).
std::optional<std::vector<Scalar>> eigenvalues(const Matrix& a);

struct WeightSpace {
    Vector weight;          // eigenvalue of each operator
    std::vector<Vector> basis;
};

// Joint eigenspaces of commuting operators on a space of dimension dim.
// Throws NonDiagonalizable when the joint action does not split over Q(i).
std::vector<WeightSpace> simultaneous_eigenspaces(const std::vector<Matrix>& ops, std::size_t dim);

}  // namespace superext
