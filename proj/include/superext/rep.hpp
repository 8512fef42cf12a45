#pragma once

#include "superext/lie.hpp"
#include "superext/map_algebra.hpp"
#include "superext/spectral.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace superext {

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

inline AlgebraPtr share(const LieSuperalgebra& l) { return std::make_shared<const LieSuperalgebra>(l); }

class Representation {
public:
    Representation() = default;
    Representation(AlgebraPtr algebra, std::vector<Parity> parity, std::vector<Matrix> action);

    const LieSuperalgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    std::size_t dim() const { return parity_.size(); }
    const std::vector<Parity>& parity() const { return parity_; }
    Parity parity(std::size_t i) const { return parity_[i]; }
    const Matrix& action(std::size_t i) const { return action_[i]; }
    const std::vector<Matrix>& actions() const { return action_; }
    Matrix act(const Vector& x) const;
    std::string superdim() const;
    // (-1)^{|v|} on basis vectors.
    Matrix parity_operator() const;

private:
    AlgebraPtr algebra_;
    std::vector<Parity> parity_;
    std::vector<Matrix> action_;
};

ValidationReport validate(const Representation& r);
void require_valid(const Representation& r, const char* what = "representation");

// Basis indices whose iterated brackets span the algebra.
std::vector<std::size_t> generating_set(const LieSuperalgebra& l);

Representation trivial_rep(AlgebraPtr l, std::size_t even, std::size_t odd = 0);
Representation adjoint_rep(AlgebraPtr l);
// From the recorded matrix realization; throws ValidationError when there is none.
Representation defining_rep(AlgebraPtr l);

// rho*(x)_{ba} = -(-1)^{|x||a|} rho(x)_{ab}.
Representation dual(const Representation& r);
// rho(x) (x) 1 + P^{|x|} (x) rho(x), basis slot a * dim(r2) + b.
Representation tensor(const Representation& r1, const Representation& r2);
Representation direct_sum(const Representation& r1, const Representation& r2);
Representation pullback(const Representation& r, const AlgebraHom& f);
Representation restrict_to(const Representation& r, AlgebraPtr sub, const Matrix& inclusion);
// Module over l1 (+) l2 on V1 (x) V2.
Representation outer_tensor(const Representation& r1, const Representation& r2);

// Action on an invariant subspace spanned by homogeneous vectors.
Representation on_subspace(const Representation& r, const std::vector<Vector>& basis);
// Same module in the basis given by the columns of p (homogeneous, invertible).
Representation change_basis(const Representation& r, const Matrix& p);

struct WeightData {
    std::vector<WeightSpace> spaces;
    // Homogeneous vectors killed by every nilpos element, grouped by weight.
    std::vector<WeightSpace> highest;
};

WeightData weight_theory(const Representation& r);
// Basis of weight vectors, homogeneous, evens first inside each weight.
std::vector<Vector> weight_basis(const Representation& r);

Subspace spin_up(const Representation& r, const std::vector<Vector>& seeds);
// Smallest graded submodule containing the seeds.
Subspace spin_up_graded(const Representation& r, const std::vector<Vector>& seeds);
Subspace invariants(const Representation& r);

struct HomSpace {
    std::vector<Matrix> even;
    std::vector<Matrix> odd;
};

// Homogeneous F: V1 -> V2 with F rho1(x) = (-1)^{|F||x|} rho2(x) F.
HomSpace hom_space(const Representation& r1, const Representation& r2);

struct SuperCommutant {
    std::vector<Matrix> even;
    std::vector<Matrix> odd;
    std::optional<Matrix> phi;  // odd with phi^2 = -1 when one was found
};

SuperCommutant super_commutant(const Representation& r);

// Even or odd invertible module map r1 -> r2, when one exists among the hom-space basis.
std::optional<Matrix> isomorphism(const Representation& r1, const Representation& r2);

// Burnside test: rho(x_i) and the parity operator generate all of End(V).
bool is_irreducible(const Representation& r);

struct Summand {
    Representation rep;
    Matrix basis;  // dim(r) x dim(summand)
    std::size_t iso_class = 0;
};

struct Decomposition {
    std::vector<Summand> summands;
    std::vector<std::size_t> multiplicities;  // per isomorphism class
    Matrix change_of_basis;                   // columns: summand bases in order
};

Decomposition decompose(const Representation& r);

struct IrreducibleProduct {
    Representation rep;
    bool halved = false;
    std::optional<Matrix> basis;  // columns spanning V-hat inside V1 (x) V2 when halved
};

IrreducibleProduct irreducible_product(const Representation& r1, const Representation& r2);
std::size_t kappa(const std::vector<Representation>& family);

// Irreducible osp(1|2) module of highest weight lambda times the top defining weight,
// built inside V(lambda - 1) (x) V(1); the basis consists of weight vectors.
Representation build_osp12_irrep(AlgebraPtr osp12, std::size_t lambda);

}  // namespace superext
