#pragma once

#include "superext/rep.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace superext {

// Canonical monomial of the super exterior algebra: even indices ascending, then odd
// indices ascending (odd indices may repeat).
using Word = std::vector<std::uint32_t>;

// sum_{i+j=p} C(even, i) * multichoose(odd, j)
std::size_t exterior_dim(std::size_t even, std::size_t odd, std::size_t p);

// Weights used to cut a complex down to its weight-zero part.
struct ToralData {
    std::vector<Vector> algebra_weights;
    std::vector<Vector> module_weights;
};

enum class Side { chains, cochains };

// Basis of Lambda^p g (x) M: pairs (word, module index), optionally of weight zero only.
// A chain w (x) m has weight wt(w) + wt(m); the dual cochain has weight wt(m) - wt(w).
class ChainBasis {
public:
    ChainBasis() = default;
    ChainBasis(const LieSuperalgebra& l, const std::vector<Parity>& module_parity, std::size_t p, Side side,
               const ToralData* toral = nullptr);

    std::size_t degree() const { return degree_; }
    std::size_t dim() const { return elements_.size(); }
    std::size_t module_dim() const { return module_dim_; }
    // Every word of degree p, including those without a basis element of weight zero.
    const std::vector<Word>& words() const { return words_; }
    const Word& word(std::size_t k) const { return words_[elements_[k].first]; }
    std::size_t module_index(std::size_t k) const { return elements_[k].second; }
    Parity parity(std::size_t k) const { return parity_[k]; }
    const std::vector<Parity>& parity() const { return parity_; }
    std::array<std::size_t, 2> parity_dims() const;
    // Index of (word, module index), or -1 when the pair is not in the basis.
    std::ptrdiff_t find(const Word& w, std::size_t m) const;

private:
    std::size_t degree_ = 0;
    std::size_t module_dim_ = 0;
    std::vector<Word> words_;
    std::vector<std::pair<std::size_t, std::size_t>> elements_;
    std::vector<Parity> parity_;
    struct WordHash {
        std::size_t operator()(const Word& w) const;
    };
    std::unordered_map<Word, std::size_t, WordHash> word_index_;
    std::unordered_map<std::uint64_t, std::size_t> element_index_;
};

struct ComplexOptions {
    // Restrict to weight zero under the recorded Cartan when it acts diagonalizably.
    bool toral = true;
    bool cocycles = false;
};

// Weights of L and M when the Cartan acts diagonally on both bases; nullopt otherwise.
std::optional<ToralData> toral_data(const LieSuperalgebra& l, const Representation& m);

// Same module in a basis of weight vectors when one exists.
Representation weight_adapted(const Representation& m);

// d_p : Lambda^p g (x) V -> Lambda^{p-1} g (x) V.
Matrix boundary(const Representation& v, const ChainBasis& source, const ChainBasis& target);
// d^p : Hom(Lambda^p g, M) -> Hom(Lambda^{p+1} g, M); cochain basis elements are dual to chain basis elements.
Matrix coboundary(const Representation& m, const ChainBasis& source, const ChainBasis& target);

// Hom(V, U) with (x.F) = rho_U(x) F - (-1)^{|x||F|} F rho_V(x); basis index u * dim V + v.
Representation hom_module(const Representation& v, const Representation& u);

struct CochainComplex {
    Representation module;           // coefficients in the basis the complex uses
    std::vector<ChainBasis> spaces;  // degrees 0..p_max+1
    std::vector<Matrix> d;           // d[p] : degree p -> degree p+1
    bool reduced = false;
};

CochainComplex cochain_complex(const Representation& m, std::size_t p_max, const ComplexOptions& options = {});
// Standalone form of d^p on Hom(Lambda^p g (x) V, U).
Matrix coboundary(std::size_t p, const Representation& v, const Representation& u);

struct DegreeDims {
    std::size_t degree = 0;
    std::size_t even = 0;
    std::size_t odd = 0;
    std::vector<Vector> cocycles;  // representatives in the (possibly reduced) cochain basis when requested

    std::size_t total() const { return even + odd; }
    friend bool operator==(const DegreeDims& a, const DegreeDims& b) {
        return a.degree == b.degree && a.even == b.even && a.odd == b.odd;
    }
};

DegreeDims homology(const Representation& v, std::size_t p, const ComplexOptions& options = {});
DegreeDims cohomology(const Representation& u, std::size_t p, const ComplexOptions& options = {});
// Ext^p(V, U) from the hom cocomplex, cross-checked against H^p(L, V* (x) U).
DegreeDims ext(const Representation& v, const Representation& u, std::size_t p, const ComplexOptions& options = {});
// Number of ext() cross-checks that agreed since the process started.
std::size_t ext_checks_passed();

struct LhsReport {
    DegreeDims e10;                 // H^1(L/I, M)
    DegreeDims e01;                 // Hom_{L/I}(I/[I,I], M)
    DegreeDims e20;                 // H^2(L/I, M)
    DegreeDims transgression_kernel;
    DegreeDims h1;                  // H^1(L, M), computed directly
    bool reconstruction_check = false;
};

// I must be an ideal acting by zero on M.
LhsReport lhs_low_degree(const Representation& m, const Subspace& ideal, const ComplexOptions& options = {});

}  // namespace superext
