#include "oracle.hpp"
#include "samples.hpp"
#include "superext/cohomology.hpp"
#include "superext/errors.hpp"
#include "superext/guards.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace superext;

namespace {

AlgebraPtr osp12() {
    static const AlgebraPtr l = share(osp_1_2n(1));
    return l;
}

struct Truncated {
    MapAlgebra map;
    AlgebraPtr algebra;
    AlgebraHom ev0;
};

Truncated osp_over_dual_numbers() {
    MapAlgebra m = tensor_algebra(*osp12(), build_multipoint({{Scalar(0), 2}}));
    AlgebraPtr l = share(m.algebra);
    const AlgebraHom ev = point_evaluation(m, 0);
    return {m, l, AlgebraHom{l, osp12(), ev.matrix}};
}

Subspace g_tensor_m(const Truncated& t) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < t.map.g.dim(); ++i) {
        Vector e(t.algebra->dim());
        e[t.map.index(i, 1)] = 1;
        basis.push_back(e);
    }
    return Subspace::span(t.algebra->dim(), basis);
}

// dim H^p from dense ranks of the full (unreduced) coboundaries.
std::array<std::size_t, 2> dense_cohomology(const Representation& m, std::size_t p) {
    const auto& l = m.algebra();
    const ChainBasis here(l, m.parity(), p, Side::cochains);
    const ChainBasis up(l, m.parity(), p + 1, Side::cochains);
    std::array<std::size_t, 2> out{};
    for (Parity z = 0; z < 2; ++z) {
        std::vector<std::size_t> cols;
        for (std::size_t k = 0; k < here.dim(); ++k) {
            if (here.parity(k) == z) cols.push_back(k);
        }
        const Matrix d_out = coboundary(m, here, up).select_cols(cols);
        std::size_t in_rank = 0;
        if (p > 0) {
            const ChainBasis down(l, m.parity(), p - 1, Side::cochains);
            std::vector<std::size_t> dcols;
            for (std::size_t k = 0; k < down.dim(); ++k) {
                if (down.parity(k) == z) dcols.push_back(k);
            }
            in_rank = oracle::dense_rank(coboundary(m, down, here).select_cols(dcols));
        }
        out[z] = cols.size() - oracle::dense_rank(d_out) - in_rank;
    }
    return out;
}

bool preserves_parity(const Matrix& d, const ChainBasis& source, const ChainBasis& target) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (const auto& e : d.row(i)) {
            if (target.parity(i) != source.parity(e.col)) return false;
        }
    }
    return true;
}

}  // namespace

TEST(ChainSpace, DimensionFormula) {
    EXPECT_EQ(exterior_dim(3, 2, 0), 1u);
    EXPECT_EQ(exterior_dim(3, 2, 2), 12u);
    EXPECT_GT(exterior_dim(3, 2, 7), 0u);
    EXPECT_EQ(exterior_dim(3, 0, 4), 0u);
    const Representation v = defining_rep(osp12());
    for (std::size_t p = 0; p <= 4; ++p) {
        const ChainBasis b(*osp12(), v.parity(), p, Side::chains);
        EXPECT_EQ(b.dim(), exterior_dim(3, 2, p) * 3);
        // Words are distinct and canonical.
        std::set<Word> seen(b.words().begin(), b.words().end());
        EXPECT_EQ(seen.size(), b.words().size());
    }
    const ChainBasis zero(*osp12(), v.parity(), 0, Side::cochains);
    EXPECT_EQ(zero.dim(), v.dim());
}

TEST(ChainSpace, GuardOnLargeSpaces) {
    const std::size_t saved = guard_chain_dim();
    set_guard_chain_dim(50);
    const Representation v = adjoint_rep(osp12());
    EXPECT_THROW(ChainBasis(*osp12(), v.parity(), 3, Side::cochains), GuardExceeded);
    set_guard_chain_dim(saved);
}

TEST(Boundary, AbelianTrivialIsZero) {
    const auto l = share(abelian(2, 2));
    const Representation c = trivial_rep(l, 1);
    for (std::size_t p = 1; p <= 4; ++p) {
        const ChainBasis s(*l, c.parity(), p, Side::chains);
        const ChainBasis t(*l, c.parity(), p - 1, Side::chains);
        EXPECT_TRUE(boundary(c, s, t).is_zero());
    }
}

TEST(Boundary, DegreeOneIsTheAction) {
    // d_1(x (x) v) = (-1)^{eps_1} x.v with eps_1 = 1.
    const Representation v = defining_rep(osp12());
    const ChainBasis s(*osp12(), v.parity(), 1, Side::chains);
    const ChainBasis t(*osp12(), v.parity(), 0, Side::chains);
    const Matrix d = boundary(v, s, t);
    for (std::size_t k = 0; k < s.dim(); ++k) {
        const std::size_t x = s.word(k)[0];
        const std::size_t m = s.module_index(k);
        Vector expected = v.action(x).column(m);
        for (auto& e : expected) e = -e;
        EXPECT_EQ(d.column(k), expected);
    }
}

TEST(Boundary, SquaresToZero) {
    for (const auto& m : {adjoint_rep(osp12()), defining_rep(osp12()), defining_rep(share(queer(1)))}) {
        for (std::size_t p = 1; p <= 3; ++p) {
            const auto& l = m.algebra();
            const ChainBasis a(l, m.parity(), p + 1, Side::chains);
            const ChainBasis b(l, m.parity(), p, Side::chains);
            const ChainBasis c(l, m.parity(), p - 1, Side::chains);
            const Matrix d2 = boundary(m, a, b);
            const Matrix d1 = boundary(m, b, c);
            EXPECT_TRUE((d1 * d2).is_zero());
            EXPECT_TRUE(preserves_parity(d2, a, b));
        }
    }
}

TEST(Coboundary, DegreeZeroTrivialIsZero) {
    const Representation c = trivial_rep(osp12(), 1);
    const ChainBasis s(*osp12(), c.parity(), 0, Side::cochains);
    const ChainBasis t(*osp12(), c.parity(), 1, Side::cochains);
    EXPECT_TRUE(coboundary(c, s, t).is_zero());
}

TEST(Coboundary, DegreeOneIsMinusBracket) {
    const auto l = share(gl(2, 1));
    const Representation c = trivial_rep(l, 1);
    const ChainBasis s(*l, c.parity(), 1, Side::cochains);
    const ChainBasis t(*l, c.parity(), 2, Side::cochains);
    const Matrix d = coboundary(c, s, t);
    // phi = dual basis functional of x_k; d phi(x ^ y) = -phi([x, y]).
    for (std::size_t row = 0; row < t.dim(); ++row) {
        const Word& w = t.word(row);
        const SparseVector& br = l->bracket(w[0], w[1]);
        for (std::size_t k = 0; k < s.dim(); ++k) EXPECT_EQ(d.at(row, k), -sparse_at(br, s.word(k)[0]));
    }
}

TEST(Coboundary, SquaresToZeroOnPeriplectic) {
    const auto l = share(periplectic(2));
    const Representation c = trivial_rep(l, 1);
    const ChainBasis a(*l, c.parity(), 1, Side::cochains);
    const ChainBasis b(*l, c.parity(), 2, Side::cochains);
    const ChainBasis d3(*l, c.parity(), 3, Side::cochains);
    const Matrix d1 = coboundary(c, a, b);
    const Matrix d2 = coboundary(c, b, d3);
    EXPECT_TRUE((d2 * d1).is_zero());
    EXPECT_TRUE(preserves_parity(d2, b, d3));
}

TEST(Complex, RandomizedSquaresVanish) {
    std::mt19937 rng(20240611);
    for (const auto& s : samples::random_samples(rng, 40)) {
        const Representation& m = s.module;
        ASSERT_TRUE(validate(m).ok()) << s.name;
        const auto& l = m.algebra();
        std::vector<ChainBasis> co;
        std::vector<ChainBasis> ch;
        for (std::size_t p = 0; p <= 3; ++p) {
            co.emplace_back(l, m.parity(), p, Side::cochains);
            ch.emplace_back(l, m.parity(), p, Side::chains);
        }
        for (std::size_t p = 0; p + 2 <= 3; ++p) {
            const Matrix a = coboundary(m, co[p], co[p + 1]);
            const Matrix b = coboundary(m, co[p + 1], co[p + 2]);
            EXPECT_TRUE((b * a).is_zero()) << s.name << " cochains p=" << p;
            const Matrix c = boundary(m, ch[p + 2], ch[p + 1]);
            const Matrix e = boundary(m, ch[p + 1], ch[p]);
            EXPECT_TRUE((e * c).is_zero()) << s.name << " chains p=" << p;
        }
    }
}

TEST(Cohomology, InvariantsOfAdjointOsp) {
    EXPECT_EQ(cohomology(adjoint_rep(osp12()), 0).total(), 0u);
    const Representation v = defining_rep(osp12());
    EXPECT_EQ(cohomology(tensor(v, dual(v)), 0).total(), 1u);
}

TEST(Cohomology, AbelianDegreeOne) {
    const DegreeDims h = cohomology(trivial_rep(share(abelian(2, 1)), 1), 1);
    EXPECT_EQ(h.even, 2u);
    EXPECT_EQ(h.odd, 1u);
}

TEST(Cohomology, SlTwoHasNoDegreeOne) {
    const auto l = share(sl(2, 0));
    // Independent: H^1(g, C) = (g / [g, g])*.
    const Subspace full = Subspace::full(l->dim());
    EXPECT_EQ(l->dim() - bracket_span(*l, full, full).dim(), 0u);
    EXPECT_EQ(cohomology(trivial_rep(l, 1), 1).total(), 0u);
    EXPECT_EQ(cohomology(trivial_rep(l, 1), 3).total(), 1u);
}

TEST(Cohomology, MatchesDenseOracle) {
    std::mt19937 rng(7);
    for (const auto& s : samples::random_samples(rng, 24)) {
        for (std::size_t p = 0; p <= 1; ++p) {
            const DegreeDims h = cohomology(s.module, p);
            const auto dense = dense_cohomology(s.module, p);
            EXPECT_EQ(h.even, dense[0]) << s.name << " p=" << p;
            EXPECT_EQ(h.odd, dense[1]) << s.name << " p=" << p;
        }
    }
}

TEST(Cohomology, ToralReductionAgreesWithFullComplex) {
    const Truncated t = osp_over_dual_numbers();
    const Representation v = pullback(defining_rep(osp12()), t.ev0);
    const Representation ad = adjoint_rep(t.algebra);
    const ComplexOptions full{false, false};
    for (const auto& m : {trivial_rep(t.algebra, 1), v, tensor(v, dual(v))}) {
        for (std::size_t p = 0; p <= 2; ++p) EXPECT_EQ(cohomology(m, p), cohomology(m, p, full)) << p;
    }
    EXPECT_EQ(cohomology(ad, 1), cohomology(ad, 1, full));
    for (std::size_t p = 0; p <= 2; ++p) {
        EXPECT_EQ(homology(adjoint_rep(osp12()), p), homology(adjoint_rep(osp12()), p, full)) << p;
    }
}

TEST(Cohomology, ReducedComplexIsSmaller) {
    const Truncated t = osp_over_dual_numbers();
    const Representation c = trivial_rep(t.algebra, 1);
    const CochainComplex reduced = cochain_complex(c, 1);
    const CochainComplex full = cochain_complex(c, 1, {false, false});
    EXPECT_TRUE(reduced.reduced);
    EXPECT_FALSE(full.reduced);
    EXPECT_LT(reduced.spaces[2].dim(), full.spaces[2].dim());
    EXPECT_TRUE((reduced.d[1] * reduced.d[0]).is_zero());
}

TEST(Cohomology, TrivialCoefficientsScale) {
    for (const auto& l : {osp12(), share(abelian(1, 1)), share(samples::odd_heisenberg())}) {
        for (std::size_t p = 0; p <= 2; ++p) {
            const DegreeDims c = cohomology(trivial_rep(l, 1), p);
            const DegreeDims v = cohomology(trivial_rep(l, 2, 1), p);
            // V = C^{2|1}: even part picks up H_0 (x) V_0 + H_1 (x) V_1.
            EXPECT_EQ(v.even, 2 * c.even + c.odd);
            EXPECT_EQ(v.odd, 2 * c.odd + c.even);
        }
    }
}

TEST(Cohomology, CocycleRepresentatives) {
    const auto l = share(abelian(2, 1));
    const DegreeDims h = cohomology(trivial_rep(l, 1), 1, {true, true});
    ASSERT_EQ(h.cocycles.size(), 3u);
    const ChainBasis s(*l, std::vector<Parity>{0}, 1, Side::cochains);
    const ChainBasis t(*l, std::vector<Parity>{0}, 2, Side::cochains);
    const Matrix d = coboundary(trivial_rep(l, 1), s, t);
    for (const auto& z : h.cocycles) EXPECT_TRUE(is_zero(d.apply(z)));
}

TEST(Homology, EulerCharacteristicOnEvenAlgebras) {
    for (const auto& m : {trivial_rep(share(sl(2, 0)), 1), adjoint_rep(share(sl(2, 0))),
                          trivial_rep(share(samples::even_heisenberg()), 1), defining_rep(share(gl(2, 0)))}) {
        const auto& l = m.algebra();
        for (Parity z = 0; z < 2; ++z) {
            long chain = 0;
            long homol = 0;
            for (std::size_t p = 0; p <= l.dim(); ++p) {
                const ChainBasis b(l, m.parity(), p, Side::chains);
                const long sign = p % 2 ? -1 : 1;
                chain += sign * static_cast<long>(b.parity_dims()[z]);
                const DegreeDims h = homology(m, p, {false, false});
                homol += sign * static_cast<long>(z ? h.odd : h.even);
            }
            EXPECT_EQ(chain, homol);
        }
    }
}

TEST(Homology, DegreeZeroIsCoinvariants) {
    const Representation v = defining_rep(osp12());
    EXPECT_EQ(homology(v, 0).total(), 0u);
    EXPECT_EQ(homology(trivial_rep(osp12(), 1, 1), 0).total(), 2u);
}

TEST(HomModule, IsAModuleAndMatchesTensor) {
    const Representation v = defining_rep(osp12());
    const Representation ad = adjoint_rep(osp12());
    const Representation h = hom_module(v, ad);
    EXPECT_TRUE(validate(h).ok());
    EXPECT_TRUE(isomorphism(h, tensor(dual(v), ad)).has_value());
    // Invariants of Hom(V, U) are module maps.
    EXPECT_EQ(cohomology(h, 0).total(), hom_space(v, ad).even.size() + hom_space(v, ad).odd.size());
}

TEST(HomModule, SpecFacingCoboundary) {
    const Representation v = defining_rep(osp12());
    const Matrix d0 = coboundary(0, v, v);
    const Matrix d1 = coboundary(1, v, v);
    EXPECT_TRUE((d1 * d0).is_zero());
    EXPECT_EQ(d0.cols(), 9u);
}

TEST(Ext, SchurInDegreeZero) {
    const Representation v = defining_rep(osp12());
    EXPECT_EQ(ext(v, v, 0).total(), 1u);
    const Representation q = defining_rep(share(queer(1)));
    const DegreeDims e = ext(q, q, 0);
    EXPECT_EQ(e.even, 1u);
    EXPECT_EQ(e.odd, 1u);
}

TEST(Ext, OspIrreduciblesHaveNoExtensions) {
    for (std::size_t a = 0; a <= 2; ++a) {
        for (std::size_t b = 0; b <= 2; ++b) {
            EXPECT_EQ(ext(build_osp12_irrep(osp12(), a), build_osp12_irrep(osp12(), b), 1).total(), 0u);
        }
    }
}

TEST(Ext, EvaluationSelfExtension) {
    const Truncated t = osp_over_dual_numbers();
    const Representation v = defining_rep(osp12());
    const Representation ev = pullback(v, t.ev0);
    const DegreeDims e = ext(ev, ev, 1);
    EXPECT_EQ(e.total(), 1u);
    // Cross-check: hom_g(g (x) V, V).
    const HomSpace h = hom_space(tensor(adjoint_rep(osp12()), v), v);
    EXPECT_EQ(e.total(), h.even.size() + h.odd.size());
}

TEST(Lhs, TrivialCoefficientsOverDualNumbers) {
    const Truncated t = osp_over_dual_numbers();
    const LhsReport r = lhs_low_degree(trivial_rep(t.algebra, 1), g_tensor_m(t));
    EXPECT_TRUE(r.reconstruction_check);
    EXPECT_EQ(r.h1.total(), 0u);
    EXPECT_EQ(r.e10.total() + r.transgression_kernel.total(), 0u);
}

TEST(Lhs, AbelianReconstruction) {
    const auto l = share(abelian(3, 0));
    const Subspace ideal = Subspace::coordinate(3, {2});
    const LhsReport r = lhs_low_degree(trivial_rep(l, 1), ideal);
    EXPECT_EQ(r.e10.total(), 2u);
    EXPECT_EQ(r.transgression_kernel.total(), 1u);
    EXPECT_EQ(r.h1.total(), 3u);
}

TEST(Lhs, EndomorphismModuleOverDualNumbers) {
    const Truncated t = osp_over_dual_numbers();
    const Representation v = defining_rep(osp12());
    const Representation m = pullback(tensor(v, dual(v)), t.ev0);
    const LhsReport r = lhs_low_degree(m, g_tensor_m(t));
    EXPECT_TRUE(r.reconstruction_check);
    EXPECT_EQ(r.h1, cohomology(m, 1, {false, false}));
    EXPECT_EQ(r.h1.total(), 1u);
}

TEST(Lhs, HeisenbergTransgressionIsNonzero) {
    // Center I = span(z): E2^{0,1} = C but the class dz = -x^y survives in H^2 of the quotient.
    const auto l = share(samples::even_heisenberg());
    const LhsReport r = lhs_low_degree(trivial_rep(l, 1), Subspace::coordinate(3, {2}));
    EXPECT_EQ(r.e01.total(), 1u);
    EXPECT_EQ(r.transgression_kernel.total(), 0u);
    EXPECT_EQ(r.e10.total(), 2u);
    EXPECT_EQ(r.h1.total(), 2u);
}

TEST(Lhs, Preconditions) {
    const Truncated t = osp_over_dual_numbers();
    const Representation v = adjoint_rep(t.algebra);
    EXPECT_THROW(lhs_low_degree(v, g_tensor_m(t)), ValidationError);
    EXPECT_THROW(lhs_low_degree(trivial_rep(t.algebra, 1), Subspace::coordinate(t.algebra->dim(), {0})), ValidationError);
}
