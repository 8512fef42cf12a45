#include "superext/classical.hpp"
#include "superext/errors.hpp"
#include "superext/io.hpp"
#include "superext/map_algebra.hpp"

#include <gtest/gtest.h>

using namespace superext;

TEST(Json, ScalarLiterals) {
    EXPECT_EQ(to_json(Scalar(mpq_class(-3, 4))), "-3/4");
    EXPECT_EQ(scalar_from_json(Json("1/2+1/3*i")), Scalar(mpq_class(1, 2), mpq_class(1, 3)));
    EXPECT_EQ(scalar_from_json(Json(5)), Scalar(5));
    EXPECT_THROW(scalar_from_json(Json(0.5)), ValidationError);
}

TEST(Json, AlgebraRoundTrip) {
    for (const auto& l : {osp_1_2n(1), gl(1, 1), periplectic(2), queer(1), sl(2, 1),
                          tensor_algebra(osp_1_2n(1), build_multipoint({{Scalar(0), 2}})).algebra}) {
        const Json j = to_json(l);
        const LieSuperalgebra back = algebra_from_json(j);
        EXPECT_TRUE(back == l) << l.superdim();
        EXPECT_EQ(to_json(back).dump(), j.dump());
        EXPECT_EQ(back.realization().has_value(), l.realization().has_value());
    }
}

TEST(Json, OddSquaresAreStoredOnTheDiagonal) {
    const LieSuperalgebra q = queer(1);
    const Json j = to_json(q);
    bool diagonal = false;
    for (const auto& b : j["brackets"]) {
        EXPECT_LE(b[0].get<std::size_t>(), b[1].get<std::size_t>());
        if (b[0] == b[1]) diagonal = true;
    }
    EXPECT_TRUE(diagonal);
}

TEST(Json, AlgebraFormatMatchesContract) {
    const Json j = to_json(osp_1_2n(1));
    EXPECT_EQ(j["dim"], 5);
    for (const char* key : {"parity", "labels", "brackets", "cartan", "nilpos", "nilneg"}) EXPECT_TRUE(j.contains(key));
}

TEST(Json, BrokenAlgebraIsRejected) {
    Json j = to_json(osp_1_2n(1));
    j["brackets"][0][2][0][1] = "7";
    EXPECT_THROW(algebra_from_json(j), ValidationError);
    Json k = to_json(osp_1_2n(1));
    k["parity"][0] = 2;
    EXPECT_THROW(algebra_from_json(k), ValidationError);
    EXPECT_THROW(algebra_from_json(Json::object()), ValidationError);
}

TEST(Json, ModuleRoundTrip) {
    const AlgebraPtr g = share(osp_1_2n(1));
    const Representation v = tensor(defining_rep(g), adjoint_rep(g));
    const Json j = to_json(v);
    const Representation back = module_from_json(j, g);
    EXPECT_EQ(back.parity(), v.parity());
    for (std::size_t i = 0; i < g->dim(); ++i) EXPECT_EQ(back.action(i), v.action(i));
    EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Json, BrokenModuleIsRejected) {
    const AlgebraPtr g = share(osp_1_2n(1));
    Json j = to_json(defining_rep(g));
    j["action"][0].push_back(Json::array({0, 0, "1"}));
    EXPECT_THROW(module_from_json(j, g), ValidationError);
    Json k = to_json(defining_rep(g));
    k["action"].erase(0);
    EXPECT_THROW(module_from_json(k, g), ValidationError);
}

TEST(Json, CommutativeAlgebraForms) {
    const CommutativeAlgebra a = comm_from_json(Json::parse(R"({"points": [["0", 2], ["1", 1]], "basis": "local"})"));
    EXPECT_EQ(a.dim(), 3u);
    EXPECT_EQ(a.points().size(), 2u);
    const CommutativeAlgebra b = comm_from_json(to_json(a));
    EXPECT_EQ(b.dim(), 3u);
    EXPECT_EQ(b.unit(), a.unit());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(b.product(i, j), a.product(i, j));
    }
    EXPECT_THROW(comm_from_json(Json::parse(R"({"points": [["0", 0]]})")), ValidationError);
}

TEST(Json, DegreeDimsReport) {
    DegreeDims d;
    d.degree = 1;
    d.even = 2;
    const Json j = to_json(d);
    EXPECT_EQ(j.dump(), R"({"degree":1,"even_dim":2,"odd_dim":0})");
}
