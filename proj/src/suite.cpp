#include "superext/suite.hpp"

#include "superext/errors.hpp"

namespace superext {

namespace {

AlgebraPtr osp12() {
    static const AlgebraPtr g = share(osp_1_2n(1));
    return g;
}

Representation irrep(std::size_t lambda) {
    return build_osp12_irrep(osp12(), lambda);
}

std::string v_label(std::size_t lambda) {
    return "V(" + std::to_string(lambda) + ")";
}

LieSuperalgebra truncated(const LieSuperalgebra& g, std::size_t n) {
    return tensor_algebra(g, build_multipoint({{Scalar(0), n}})).algebra;
}

LieSuperalgebra heisenberg(Parity generators) {
    LieSuperalgebra l(std::vector<Parity>{0, generators, generators});
    l.set_bracket(1, 2, {{0, Scalar(1)}});
    l.set_labels({"z", "x", "y"});
    return l;
}

EvaluationFamily at_points(const std::vector<std::size_t>& lambdas) {
    EvaluationFamily f;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        f.entries.push_back({i, 1, irrep(lambdas[i])});
        f.label += (i ? " (x) ev" : "ev") + std::to_string(i) + " " + v_label(lambdas[i]);
    }
    return f;
}

std::vector<VerifyReport> h1aC_suite(SuiteScale scale) {
    std::vector<VerifyReport> out;
    out.push_back(verify_h1aC(abelian(2, 1), "abelian(2|1)"));
    out.push_back(verify_h1aC(heisenberg(0), "even heisenberg"));
    out.push_back(verify_h1aC(heisenberg(1), "odd heisenberg"));
    out.push_back(verify_h1aC(gl(1, 1), "gl(1|1)"));
    out.push_back(verify_h1aC(osp_1_2n(1), "osp(1|2)"));
    if (scale == SuiteScale::full) out.push_back(verify_h1aC(truncated(osp_1_2n(1), 3), "osp(1|2) (x) C[t]/(t^3)"));
    return out;
}

std::vector<VerifyReport> vanishing_suite(SuiteScale scale) {
    std::vector<VerifyReport> out;
    const std::size_t top = scale == SuiteScale::full ? 3 : 2;
    for (std::size_t n = 1; n <= top; ++n) {
        out.push_back(verify_vanishing_trivial(truncated(osp_1_2n(1), n), "osp(1|2) (x) C[t]/(t^" + std::to_string(n) + ")"));
    }
    if (scale == SuiteScale::full) out.push_back(verify_vanishing_trivial(truncated(periplectic(2), 2), "p(2) (x) C[t]/(t^2)"));
    const CommutativeAlgebra b =
        build_multipoint({{Scalar(1), 1}, {Scalar(-1), 1}, {Scalar::i(), 1}, {-Scalar::i(), 1}});
    const MapAlgebra m = tensor_algebra(osp_1_2n(1), b);
    const EquivariantSubalgebra fixed = equivariant_subalgebra(m, scaling_action(b, 2, parity_automorphism(m.g)));
    out.push_back(verify_vanishing_trivial(fixed.algebra, "(osp(1|2) (x) C[t]/(t^4 - 1))^Z2"));
    return out;
}

std::vector<VerifyReport> kunneth_suite(SuiteScale scale) {
    std::vector<VerifyReport> out;
    const std::size_t top = scale == SuiteScale::full ? 2 : 1;
    for (std::size_t a = 0; a <= top; ++a) {
        for (std::size_t n = 0; n <= 2; ++n) {
            const std::size_t b = (a + 1) % (top + 1);
            out.push_back(verify_kunneth({irrep(a), irrep(a), irrep(b), irrep(b), n, v_label(a) + ", " + v_label(b)}));
        }
    }
    return out;
}

std::vector<VerifyReport> irreducible_product_suite(SuiteScale scale) {
    std::vector<VerifyReport> out;
    const AlgebraPtr q = share(queer(1));
    out.push_back(verify_irreducible_product(defining_rep(q), defining_rep(q), "q(1) defining"));
    const std::size_t top = scale == SuiteScale::full ? 2 : 1;
    for (std::size_t a = 0; a <= top; ++a) {
        for (std::size_t b = 0; b <= top; ++b) {
            out.push_back(verify_irreducible_product(irrep(a), irrep(b), "osp(1|2) " + v_label(a) + ", " + v_label(b)));
        }
    }
    return out;
}

std::vector<VerifyReport> ext1_evaluation_suite(SuiteScale scale) {
    std::vector<VerifyReport> out;
    const Truncation t = make_truncation(osp12(), {{Scalar(0), 2}});
    const std::size_t top = scale == SuiteScale::full ? 2 : 1;
    for (std::size_t l = 0; l <= top; ++l) {
        for (std::size_t mu = 0; mu <= top; ++mu) out.push_back(verify_ext1_evaluation(t, at_points({l}), at_points({mu})));
    }
    return out;
}

std::vector<VerifyReport> h1_evaluation_suite() {
    std::vector<VerifyReport> out;
    const Representation ad = adjoint_rep(osp12());
    const Truncation one = make_truncation(osp12(), {{Scalar(0), 2}});
    out.push_back(verify_h1_evaluation(one, {{{0, 1, ad}}, "ev0 adjoint"}));
    out.push_back(verify_h1_evaluation(one, {{{0, 1, irrep(0)}}, "ev0 trivial"}));
    const Truncation two = make_truncation(osp12(), {{Scalar(0), 2}, {Scalar(1), 2}});
    out.push_back(verify_h1_evaluation(two, {{{0, 1, ad}, {1, 1, irrep(1)}}, "ev0 adjoint (x) ev1 V(1)"}));
    return out;
}

std::vector<VerifyReport> thm_main_suite(SuiteScale scale) {
    std::vector<VerifyReport> out;
    const std::vector<Scalar> points{Scalar(0), Scalar(1)};
    auto run = [&](std::vector<std::size_t> v, std::vector<std::size_t> w) {
        ThmMainConfig c{osp12(), points, 1, {}, {}, ""};
        for (auto l : v) c.v.push_back(irrep(l));
        for (auto l : w) c.v_prime.push_back(irrep(l));
        c.label = at_points(v).label + " vs " + at_points(w).label;
        out.push_back(verify_thm_main(c));
    };
    run({1, 1}, {2, 2});
    run({1, 2}, {1, 0});
    run({1, 2}, {1, 2});
    if (scale == SuiteScale::full) {
        run({0, 2}, {1, 0});
        run({2, 1}, {2, 2});
        run({0, 0}, {0, 0});
        run({2, 2}, {2, 2});
    }
    return out;
}

std::vector<VerifyReport> blocks_suite(SuiteScale scale, std::size_t jobs) {
    std::vector<VerifyReport> out;
    auto wrap = [&](const Truncation& t, const std::vector<EvaluationFamily>& family, const std::string& label) {
        VerifyReport r;
        r.name = "blocks";
        Json labels = Json::array();
        for (const auto& f : family) labels.push_back(f.label);
        r.inputs = {{"label", label}, {"family", labels}};
        r.expected = {{"verdict", "pass"}};
        BlocksOptions options;
        options.jobs = jobs;
        const BlocksReport b = blocks(t, family, options);
        r.computed = b.to_json();
        r.pass = b.verdict == "pass";
        out.push_back(std::move(r));
    };
    std::vector<EvaluationFamily> single;
    for (std::size_t l = 0; l <= 3; ++l) single.push_back(at_points({l}));
    wrap(make_truncation(osp12(), {{Scalar(0), 2}}), single, "osp(1|2) (x) C[t]/(t^2)");
    if (scale == SuiteScale::full) {
        std::vector<EvaluationFamily> pairs;
        for (std::size_t a = 0; a <= 2; ++a) {
            for (std::size_t b = 0; b <= 2; ++b) pairs.push_back(at_points({a, b}));
        }
        wrap(make_truncation(osp12(), {{Scalar(0), 2}, {Scalar(1), 2}}), pairs, "osp(1|2) (x) C[t]/(t^2 (t - 1)^2)");
    }
    return out;
}

}  // namespace

SuiteScale parse_scale(const std::string& name) {
    if (name == "small") return SuiteScale::small;
    if (name == "full") return SuiteScale::full;
    throw ValidationError("scale must be \"small\" or \"full\", got \"" + name + "\"");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"h1aC",          "vanishing",       "kunneth",  "irreducible_product",
                                                "ext1_evaluation", "h1_evaluation", "thm_main", "blocks"};
    return names;
}

std::vector<VerifyReport> run_suite(const std::string& name, SuiteScale scale, std::size_t jobs) {
    if (name == "all") {
        std::vector<VerifyReport> out;
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, scale, jobs);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        return out;
    }
    if (name == "h1aC") return h1aC_suite(scale);
    if (name == "vanishing") return vanishing_suite(scale);
    if (name == "kunneth") return kunneth_suite(scale);
    if (name == "irreducible_product") return irreducible_product_suite(scale);
    if (name == "ext1_evaluation") return ext1_evaluation_suite(scale);
    if (name == "h1_evaluation") return h1_evaluation_suite();
    if (name == "thm_main") return thm_main_suite(scale);
    if (name == "blocks") return blocks_suite(scale, jobs);
    throw ValidationError("unknown suite \"" + name + "\"");
}

}  // namespace superext
