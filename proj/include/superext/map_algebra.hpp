#pragma once

#include "superext/comm.hpp"
#include "superext/lie.hpp"

#include <memory>

namespace superext {

// g (x) B with basis slot i * dim(B) + r for x_i (x) b_r.
struct MapAlgebra {
    LieSuperalgebra algebra;
    LieSuperalgebra g;
    CommutativeAlgebra b;

    std::size_t index(std::size_t i, std::size_t r) const { return i * b.dim() + r; }
};

MapAlgebra tensor_algebra(const LieSuperalgebra& g, const CommutativeAlgebra& b);

struct AlgebraHom {
    std::shared_ptr<const LieSuperalgebra> source;
    std::shared_ptr<const LieSuperalgebra> target;
    Matrix matrix;  // dim(target) x dim(source)
};

// Parity and bracket preservation on all basis pairs.
ValidationReport validate(const AlgebraHom& f);

struct EquivariantSubalgebra {
    LieSuperalgebra algebra;
    AlgebraHom inclusion;
};

// Fixed points of x (x) b -> act.on_lie(x) (x) act.on_algebra(b); the Lie part defaults to the identity.
// Toral elements of the ambient Cartan that are fixed come first and become the recorded Cartan.
EquivariantSubalgebra equivariant_subalgebra(const MapAlgebra& m, const GroupAction& act);

struct Evaluation {
    MapAlgebra target;
    CommutativeQuotient quotient;
    AlgebraHom hom;
};

// g (x) B -> g (x) B/J.
Evaluation evaluation_hom(const MapAlgebra& m, const Ideal& j);

// x (x) b -> b(a) x onto g, for a recorded point a of B.
AlgebraHom point_evaluation(const MapAlgebra& m, std::size_t point);

AlgebraHom compose(const AlgebraHom& second, const AlgebraHom& first);

}  // namespace superext
