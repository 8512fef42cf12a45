#include "oracle.hpp"
#include "superext/classical.hpp"
#include "superext/comm.hpp"
#include "superext/errors.hpp"
#include "superext/map_algebra.hpp"

#include <gtest/gtest.h>

using namespace superext;

namespace {

CommutativeAlgebra points(std::initializer_list<std::pair<Scalar, std::size_t>> pts, PointBasis basis = PointBasis::monomial) {
    std::vector<PointData> data;
    for (const auto& [a, n] : pts) data.push_back({a, n});
    return build_multipoint(data, basis);
}

// dim m / m^2 for an ideal m.
std::size_t cotangent_dim(const CommutativeAlgebra& a, const Ideal& m) {
    return m.dim() - ideal_power(a, m, 2).dim();
}

Vector t_power(std::size_t dim, std::size_t k) {
    Vector v(dim);
    v[k] = 1;
    return v;
}

}  // namespace

TEST(Multipoint, DoublePointAtZero) {
    const auto a = points({{0, 2}});
    EXPECT_EQ(a.dim(), 2u);
    EXPECT_TRUE(validate(a).ok());
    const Ideal& m = a.maximal_ideals()[0];
    EXPECT_EQ(m.space, Subspace::span(2, {t_power(2, 1)}));
    EXPECT_EQ(cotangent_dim(a, m), 1u);
}

TEST(Multipoint, TwoSimplePointsSplit) {
    const auto a = points({{0, 1}, {1, 1}}, PointBasis::local);
    EXPECT_EQ(a.dim(), 2u);
    EXPECT_TRUE(validate(a).ok());
    // C + C: two orthogonal idempotents summing to 1.
    EXPECT_EQ(a.idempotent_basis().size(), 2u);
    EXPECT_TRUE(to_dense(a.product(0, 1), 2) == Vector(2));
    EXPECT_EQ(a.unit(), (Vector{1, 1}));
}

TEST(Multipoint, TriplePointNilpotency) {
    const auto a = points({{0, 3}});
    const Ideal& m = a.maximal_ideals()[0];
    EXPECT_EQ(ideal_power(a, m, 3).dim(), 0u);
    EXPECT_EQ(ideal_power(a, m, 2).space, Subspace::span(3, {t_power(3, 2)}));
    EXPECT_EQ(cotangent_dim(a, m), 1u);
}

TEST(Multipoint, RejectsRepeatedPoints) {
    EXPECT_THROW(points({{1, 1}, {1, 2}}), ValidationError);
    EXPECT_THROW(points({{1, 0}}), ValidationError);
}

TEST(Multipoint, CrtProperties) {
    for (auto basis : {PointBasis::monomial, PointBasis::local}) {
        const auto a = points({{0, 2}, {1, 1}, {Scalar::i(), 3}}, basis);
        EXPECT_EQ(a.dim(), 6u);
        EXPECT_TRUE(validate(a).ok());
        const auto& ms = a.maximal_ideals();
        Ideal all = ideal_power(a, ms[0], 2);
        all = ideal_product(a, all, ideal_power(a, ms[1], 1));
        all = ideal_product(a, all, ideal_power(a, ms[2], 3));
        EXPECT_EQ(all.dim(), 0u);
        for (std::size_t i = 0; i < ms.size(); ++i) {
            EXPECT_EQ(a.dim() - ms[i].dim(), 1u);
            for (std::size_t j = i + 1; j < ms.size(); ++j) EXPECT_EQ(ideal_sum(a, ms[i], ms[j]).dim(), a.dim());
        }
    }
}

TEST(Multipoint, LocalBasisIdempotentsAreToralFriendly) {
    const auto a = points({{0, 2}, {1, 2}}, PointBasis::local);
    EXPECT_EQ(a.idempotent_basis().size(), 2u);
    EXPECT_EQ(a.label(1), "e1*t");
    EXPECT_EQ(a.label(3), "e2*(t-1)");
}

TEST(Ideals, PowersOfMaximalIdeal) {
    const auto a = points({{0, 3}});
    const auto ops = ideal_ops(a, a.maximal_ideals()[0], a.maximal_ideals()[0], 3);
    EXPECT_EQ(ops.powers[1].space, Subspace::span(3, {t_power(3, 2)}));
    EXPECT_EQ(ops.powers[2].dim(), 0u);
}

TEST(Ideals, CoprimeProductIsIntersection) {
    const auto a = points({{0, 1}, {1, 1}});
    const auto ops = ideal_ops(a, a.maximal_ideals()[0], a.maximal_ideals()[1]);
    EXPECT_TRUE(ops.coprime);
    EXPECT_EQ(ops.sum.dim(), 2u);
    EXPECT_EQ(ops.product.dim(), 0u);
    EXPECT_TRUE(ops.product_equals_intersection);
    EXPECT_TRUE(ops.disjoint_supports);
}

TEST(Ideals, SupportOfPowers) {
    const auto a = points({{0, 2}, {1, 1}});
    const Ideal& m0 = a.maximal_ideals()[0];
    EXPECT_EQ(support(a, m0), std::vector<std::size_t>{0});
    EXPECT_EQ(support(a, ideal_power(a, m0, 2)), std::vector<std::size_t>{0});
    EXPECT_NE(ideal_power(a, m0, 2).space, m0.space);
}

TEST(Ideals, RejectsNonIdeal) {
    const auto a = points({{0, 3}});
    const Ideal bogus{Subspace::span(3, {t_power(3, 1)}), {}};
    EXPECT_THROW(ideal_product(a, bogus, bogus), ValidationError);
}

TEST(Fixed, TrivialGroupFixesEverything) {
    const auto a = points({{0, 2}, {3, 1}});
    const auto act = scaling_action(a, 1);
    EXPECT_TRUE(act.free_on_points);
    EXPECT_EQ(fixed_subalgebra(a, act).algebra.dim(), a.dim());
}

TEST(Fixed, SignFlipOnTwoPoints) {
    const auto a = points({{1, 1}, {-1, 1}});
    const auto act = scaling_action(a, 2);
    EXPECT_TRUE(act.free_on_points);
    // Independent oracle: t^k -> (-1)^k t^k in the monomial basis, fixed space = ker(G - 1).
    oracle::DenseMatrix g_minus_1{{0, 0}, {0, -2}};
    EXPECT_EQ(fixed_subalgebra(a, act).algebra.dim(), 2 - oracle::dense_rank(g_minus_1));
    EXPECT_EQ(fixed_subalgebra(a, act).algebra.dim(), 1u);
}

TEST(Fixed, SignFlipOnFourthRoots) {
    const auto a = points({{1, 1}, {-1, 1}, {Scalar::i(), 1}, {-Scalar::i(), 1}});
    const auto act = scaling_action(a, 2);
    oracle::DenseMatrix g_minus_1(4, std::vector<Scalar>(4));
    for (std::size_t k = 0; k < 4; ++k) g_minus_1[k][k] = (k % 2 ? Scalar(-1) : Scalar(1)) - Scalar(1);
    const auto f = fixed_subalgebra(a, act);
    EXPECT_EQ(f.algebra.dim(), 4 - oracle::dense_rank(g_minus_1));
    EXPECT_EQ(f.algebra.dim(), 2u);
    EXPECT_TRUE(validate(f.algebra).ok());
    EXPECT_EQ(f.algebra.label(1), "t^2");
    EXPECT_TRUE(scaling_action(a, 4).free_on_points);
}

TEST(Fixed, NonFreeAndInvalidActions) {
    EXPECT_FALSE(scaling_action(points({{0, 2}}), 2).free_on_points);
    EXPECT_THROW(scaling_action(points({{0, 1}, {1, 1}}), 2), ValidationError);
    EXPECT_THROW(scaling_action(points({{0, 1}}), 3), ValidationError);
}

TEST(MapAlgebra, TensorWithPointIsCopy) {
    const auto g = osp_1_2n(1);
    const auto m = tensor_algebra(g, points({{0, 1}}));
    ASSERT_EQ(m.algebra.dim(), g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = 0; j < g.dim(); ++j) EXPECT_EQ(m.algebra.bracket(i, j), g.bracket(i, j));
    }
}

TEST(MapAlgebra, CurrentAlgebraOverDualNumbers) {
    const auto g = osp_1_2n(1);
    const auto m = tensor_algebra(g, points({{0, 2}}));
    EXPECT_EQ(m.algebra.superdim(), "(6|4)");
    EXPECT_TRUE(validate(m.algebra).ok());
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = 0; j < g.dim(); ++j) EXPECT_TRUE(m.algebra.bracket(m.index(i, 1), m.index(j, 1)).empty());
    }
}

TEST(MapAlgebra, ValidAcrossFamilies) {
    for (const auto& g : {sl(2, 0), gl(1, 1), periplectic(2)}) {
        const auto m = tensor_algebra(g, points({{0, 1}, {1, 2}}, PointBasis::local));
        EXPECT_TRUE(validate(m.algebra).ok()) << g.superdim();
        EXPECT_NO_THROW(basis_weights(m.algebra));
    }
}

TEST(Equivariant, TrivialGroupGivesEverything) {
    const auto g = sl(2, 0);
    const auto b = points({{0, 2}});
    const auto m = tensor_algebra(g, b);
    const auto e = equivariant_subalgebra(m, scaling_action(b, 1));
    EXPECT_EQ(e.algebra.dim(), m.algebra.dim());
}

TEST(Equivariant, SlTwoOverSignFlip) {
    const auto g = sl(2, 0);
    const auto b = points({{1, 1}, {-1, 1}});
    const auto m = tensor_algebra(g, b);
    const auto e = equivariant_subalgebra(m, scaling_action(b, 2));
    EXPECT_EQ(e.algebra.dim(), 3u);
    // The image is g (x) span{1}.
    std::vector<Vector> expect;
    for (std::size_t i = 0; i < g.dim(); ++i) expect.push_back(t_power(m.algebra.dim(), m.index(i, 0)));
    EXPECT_EQ(column_space(e.inclusion.matrix), Subspace::span(m.algebra.dim(), expect));
    EXPECT_TRUE(validate(e.inclusion).ok());
}

TEST(Equivariant, OspWithParityTwist) {
    const auto g = osp_1_2n(1);
    const auto b = points({{1, 1}, {-1, 1}, {Scalar::i(), 1}, {-Scalar::i(), 1}});
    const auto m = tensor_algebra(g, b);
    const auto e = equivariant_subalgebra(m, scaling_action(b, 2, parity_automorphism(g)));
    // Oracle: even part pairs with even powers of t, odd part with odd powers.
    std::size_t even = 0;
    std::size_t odd = 0;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
            if (g.parity(i) == k % 2) (g.parity(i) ? odd : even) += 1;
        }
    }
    EXPECT_EQ(e.algebra.even_dim(), even);
    EXPECT_EQ(e.algebra.odd_dim(), odd);
    EXPECT_EQ(e.algebra.superdim(), "(6|4)");
    EXPECT_TRUE(validate(e.algebra).ok());
    EXPECT_FALSE(e.algebra.cartan().empty());
}

TEST(Evaluation, ZeroIdealIsIdentity) {
    const auto g = sl(2, 0);
    const auto b = points({{0, 2}});
    const auto m = tensor_algebra(g, b);
    const auto ev = evaluation_hom(m, Ideal{Subspace(b.dim()), {}});
    EXPECT_EQ(ev.hom.matrix, Matrix::identity(m.algebra.dim()));
}

TEST(Evaluation, KernelIsGTensorJ) {
    const auto g = osp_1_2n(1);
    for (const auto& b : {points({{0, 2}}), points({{0, 1}, {1, 1}})}) {
        const auto m = tensor_algebra(g, b);
        const Ideal& j = b.maximal_ideals()[0];
        const auto ev = evaluation_hom(m, j);
        EXPECT_TRUE(validate(ev.hom).ok());
        EXPECT_EQ(oracle::dense_rank(ev.hom.matrix), g.dim() * (b.dim() - j.dim()));
        std::vector<Vector> gj;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            for (const auto& v : j.space.basis_vectors()) {
                Vector w(m.algebra.dim());
                for (std::size_t r = 0; r < b.dim(); ++r) w[m.index(i, r)] = v[r];
                gj.push_back(w);
            }
        }
        const Subspace kernel = kernel_basis(ev.hom.matrix);
        EXPECT_EQ(kernel.dim(), g.dim());
        EXPECT_EQ(kernel, Subspace::span(m.algebra.dim(), gj));
    }
}

TEST(Evaluation, FreeOrbitsGiveSurjectiveRestriction) {
    const auto g = osp_1_2n(1);
    const auto b = points({{1, 2}, {-1, 2}});
    const auto m = tensor_algebra(g, b);
    const auto act = scaling_action(b, 2, parity_automorphism(g));
    ASSERT_TRUE(act.free_on_points);
    const auto e = equivariant_subalgebra(m, act);
    for (std::size_t p = 0; p < b.points().size(); ++p) {
        const auto composite = compose(point_evaluation(m, p), e.inclusion);
        EXPECT_TRUE(validate(composite).ok());
        EXPECT_EQ(oracle::dense_rank(composite.matrix), g.dim());
    }
    // Evaluation at m^2 on a free orbit is also onto g (x) B/m^2.
    const Ideal j = ideal_power(b, b.maximal_ideals()[0], 2);
    const auto ev = evaluation_hom(m, j);
    EXPECT_EQ(oracle::dense_rank(ev.hom.matrix * e.inclusion.matrix), ev.target.algebra.dim());
}
