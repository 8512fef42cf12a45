#pragma once

#include "superext/lie.hpp"
#include "superext/smith.hpp"

#include <string>
#include <vector>

namespace superext {

enum class ClassicalKind { gl, sl, osp, p, q };

ClassicalKind parse_classical_kind(const std::string& name);

// gl(m|n), sl(m|n): both parameters; osp(1|2n), p(n), q(n): n only.
LieSuperalgebra build_classical(ClassicalKind kind, std::size_t m, std::size_t n);

LieSuperalgebra gl(std::size_t m, std::size_t n);
LieSuperalgebra sl(std::size_t m, std::size_t n);
// Matrices on C^{1|2n} preserving the even form diag(1) + [[0, I], [-I, 0]].
LieSuperalgebra osp_1_2n(std::size_t n);
// [[A, B], [C, -A^t]] in gl(n+1|n+1) with A traceless, B symmetric, C antisymmetric.
LieSuperalgebra periplectic(std::size_t n);
// [[A, B], [B, A]] in gl(n|n).
LieSuperalgebra queer(std::size_t n);

struct Root {
    Vector weight;  // values on the recorded Cartan basis
    Parity parity = 0;
    std::size_t multiplicity = 0;
    bool positive = false;
};

struct RootData {
    std::vector<Root> roots;
    std::vector<Vector> coroots;       // Cartan coordinates, scaled so alpha(h_alpha) = 2
    bool lattice_from_coroots = false; // false when even coroots do not cut out a lattice
    std::vector<Vector> weight_lattice;  // basis of Lambda
    std::vector<Vector> root_lattice;    // basis of Q
    std::vector<mpz_class> quotient;     // elementary divisors of Lambda/Q, 0 for a free summand
    IntMatrix class_map;                 // Lambda coordinates -> invariant-factor coordinates

    std::size_t cartan_dim() const;
    // Class of an integral weight in Lambda/Q: one residue per nontrivial invariant factor.
    std::vector<mpz_class> weight_class(const Vector& weight) const;
    std::string quotient_string() const;
};

RootData root_data(const LieSuperalgebra& l);

// Weight of each basis element under the recorded Cartan; throws NonDiagonalizable otherwise.
std::vector<Vector> basis_weights(const LieSuperalgebra& l);

}  // namespace superext
