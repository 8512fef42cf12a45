#include "superext/classical.hpp"
#include "superext/cohomology.hpp"
#include "superext/errors.hpp"
#include "superext/guards.hpp"
#include "superext/io.hpp"
#include "superext/suite.hpp"
#include "superext/theorem.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace superext;

namespace {

struct Globals {
    std::size_t jobs = 1;
    std::size_t guard = 0;
    bool pretty = false;
    std::string output;
};

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open \"" + path + "\"");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError("\"" + path + "\" is not valid JSON: " + e.what());
    }
}

// "0:2,1:1" -> points 0 and 1 with multiplicities 2 and 1; a bare "a" means multiplicity 1.
std::vector<PointData> parse_points(const std::string& text) {
    std::vector<PointData> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        PointData p;
        p.point = Scalar::parse(item.substr(0, colon));
        if (colon != std::string::npos) {
            try {
                const long n = std::stol(item.substr(colon + 1));
                if (n < 1) throw ValidationError("multiplicities must be positive");
                p.multiplicity = static_cast<std::size_t>(n);
            } catch (const std::logic_error&) {
                throw ValidationError("bad multiplicity in \"" + item + "\"");
            }
        }
        out.push_back(p);
    }
    if (out.empty()) throw ValidationError("no points given");
    return out;
}

struct ClassicalParams {
    std::string kind;
    std::size_t m = 0;
    std::size_t n = 1;
};

LieSuperalgebra build_g(const ClassicalParams& s) {
    return build_classical(parse_classical_kind(s.kind), s.m, s.n);
}

// An algebra file, with its map-algebra description when it was built over points.
struct LoadedAlgebra {
    AlgebraPtr algebra;
    std::optional<MapAlgebra> map;
    AlgebraPtr g;
};

LoadedAlgebra load_algebra(const std::string& path) {
    const Json j = read_json(path);
    LoadedAlgebra out;
    out.algebra = share(algebra_from_json(j));
    if (j.contains("map")) {
        const Json& m = j.at("map");
        ClassicalParams s{m.at("g").at("kind").get<std::string>(), m.at("g").at("m").get<std::size_t>(),
                m.at("g").at("n").get<std::size_t>()};
        const LieSuperalgebra g = build_g(s);
        MapAlgebra rebuilt = tensor_algebra(g, comm_from_json(m));
        if (!(rebuilt.algebra == *out.algebra)) throw ValidationError("\"map\" does not describe the stored algebra");
        out.g = share(g);
        out.map = std::move(rebuilt);
    }
    return out;
}

bool is_osp12(const LieSuperalgebra& g) {
    return g.superdim() == "(3|2)" && g == osp_1_2n(1);
}

Representation build_module(const LoadedAlgebra& a, const std::string& kind, std::size_t lambda, std::size_t even,
                            std::size_t odd, std::optional<std::size_t> point) {
    AlgebraPtr base = a.algebra;
    if (point) {
        if (!a.map) throw ValidationError("--point needs an algebra built with --points");
        base = a.g;
    }
    Representation v;
    if (kind == "trivial" || kind == "triv") {
        v = trivial_rep(base, even, odd);
    } else if (kind == "adjoint") {
        v = adjoint_rep(base);
    } else if (kind == "defining") {
        v = defining_rep(base);
    } else if (kind == "dual-defining") {
        v = dual(defining_rep(base));
    } else if (kind == "irrep") {
        if (!is_osp12(*base)) throw ValidationError("irrep modules are built for osp(1|2) only");
        v = build_osp12_irrep(base, lambda);
    } else {
        throw ValidationError("unknown module kind \"" + kind + "\"");
    }
    if (!point) return v;
    if (*point >= a.map->b.points().size()) throw ValidationError("--point is out of range");
    AlgebraHom ev = point_evaluation(*a.map, *point);
    ev.source = a.algebra;
    ev.target = base;
    return pullback(v, ev);
}

// "triv", "trivial", "adjoint" or a module file.
Representation resolve_module(const LoadedAlgebra& a, const std::string& name) {
    if (name == "triv" || name == "trivial") return trivial_rep(a.algebra, 1);
    if (name == "adjoint") return adjoint_rep(a.algebra);
    return module_from_json(read_json(name), a.algebra);
}

Json roots_json(const LieSuperalgebra& l) {
    const RootData d = root_data(l);
    Json roots = Json::array();
    for (const auto& r : d.roots) {
        Json w = Json::array();
        for (const auto& x : r.weight) w.push_back(to_json(x));
        roots.push_back({{"weight", w}, {"parity", r.parity}, {"multiplicity", r.multiplicity}, {"positive", r.positive}});
    }
    return {{"roots", roots},
            {"cartan_dim", d.cartan_dim()},
            {"lattice_from_coroots", d.lattice_from_coroots},
            {"weight_lattice_quotient", d.quotient_string()}};
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        if (width.size() < r.size()) width.resize(r.size(), 0);
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) line += (c ? "  " : "") + pad(r[c], c + 1 < r.size() ? width[c] : 0);
        os << line << "\n";
    }
    return os.str();
}

std::string dims_cell(const Json& d) {
    return "(" + std::to_string(d.at("even_dim").get<std::size_t>()) + "|" +
           std::to_string(d.at("odd_dim").get<std::size_t>()) + ")";
}

std::string text(const Json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string report_label(const Json& inputs) {
    for (const char* key : {"label", "algebra", "family"}) {
        if (inputs.contains(key)) return text(inputs[key]);
    }
    if (inputs.contains("V")) return text(inputs["V"]) + " -> " + text(inputs["V'"]);
    return "";
}

std::string pretty(const Json& j) {
    if (j.contains("even_dim") && j.contains("degree")) {
        return render_table({{"degree", "even", "odd"},
                             {text(j["degree"]), text(j["even_dim"]), text(j["odd_dim"])}});
    }
    if (j.contains("reports")) {
        std::vector<std::vector<std::string>> rows{{"name", "label", "result"}};
        for (const auto& r : j["reports"]) {
            rows.push_back({text(r["name"]), report_label(r["inputs"]), r["pass"].get<bool>() ? "PASS" : "FAIL"});
        }
        return render_table(rows) + text(j["passed"]) + " passed, " + text(j["failed"]) + " failed\n";
    }
    if (j.contains("ext_table") && j.contains("verdict")) {
        const Json& t = j["ext_table"];
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{"Ext^1"};
        for (std::size_t i = 0; i < t["labels"].size(); ++i) head.push_back(std::to_string(i));
        head.push_back("component");
        head.push_back("fiber");
        rows.push_back(head);
        for (std::size_t i = 0; i < t["labels"].size(); ++i) {
            std::vector<std::string> row{std::to_string(i) + " " + text(t["labels"][i])};
            for (const auto& c : t["cells"][i]) row.push_back(dims_cell(c["ext1"]));
            row.push_back(text(j["components"][i]));
            row.push_back(text(j["fibers"][i]));
            rows.push_back(row);
        }
        return render_table(rows) + "verdict: " + text(j["verdict"]) + "\n";
    }
    if (j.contains("E2_10")) {
        std::vector<std::vector<std::string>> rows{{"term", "dims"}};
        for (const char* k : {"E2_10", "E2_01", "E2_20", "transgression_kernel", "h1"}) rows.push_back({k, dims_cell(j[k])});
        rows.push_back({"reconstruction_check", text(j["reconstruction_check"])});
        return render_table(rows);
    }
    if (j.contains("brackets") && j.contains("parity")) {
        std::size_t odd = 0;
        for (const auto& p : j["parity"]) odd += p.get<std::size_t>();
        const std::size_t dim = j["parity"].size();
        std::ostringstream os;
        os << "superdim (" << dim - odd << "|" << odd << "), " << j["brackets"].size() << " nonzero brackets\n";
        if (j.contains("labels")) {
            for (const auto& l : j["labels"]) os << "  " << text(l) << "\n";
        }
        return os.str();
    }
    return j.dump(2) + "\n";
}

void emit(const Globals& g, const Json& j) {
    const std::string out = g.pretty ? pretty(j) : j.dump() + "\n";
    if (g.output.empty()) {
        std::cout << out;
        return;
    }
    std::ofstream f(g.output);
    if (!f) throw ValidationError("cannot write \"" + g.output + "\"");
    f << out;
}

void require_degree(long degree) {
    if (degree < 0) throw ValidationError("--degree must be nonnegative");
}

int fail(const char* kind, const std::string& message, int code) {
    const Json payload{{"error", kind}, {"message", message}, {"exit_code", code}};
    std::cerr << payload.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology and Ext for Lie superalgebras and their map superalgebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--jobs", g.jobs, "Worker threads for Ext tables and suites")->check(CLI::PositiveNumber);
    app.add_option("--guard-dim", g.guard, "Largest algebra dimension accepted (default 200 or SUPEREXT_GUARD_DIM)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--pretty", g.pretty, "Aligned text instead of JSON");
    app.add_option("--output", g.output, "Write the result to a file");
    std::function<Json()> job;

    // algebra
    auto* algebra = app.add_subcommand("algebra", "Build, validate or inspect Lie superalgebras");
    algebra->require_subcommand(1);
    ClassicalParams params;
    std::string points_text;
    std::string basis = "local";
    auto* a_build = algebra->add_subcommand("build", "Classical superalgebra, optionally tensored with C[t]/prod (t - a)^n");
    a_build->add_option("--kind", params.kind, "gl, sl, osp, p or q")->required();
    a_build->add_option("--m", params.m, "First parameter of gl(m|n), sl(m|n)");
    a_build->add_option("--n", params.n, "n of gl(m|n), sl(m|n), osp(1|2n), p(n), q(n)");
    a_build->add_option("--points", points_text, "Points with multiplicities, e.g. 0:2,1:1");
    a_build->add_option("--basis", basis, "Basis of the truncation: local or monomial")
        ->check(CLI::IsMember({"local", "monomial"}));
    a_build->callback([&] {
        job = [&] {
            const LieSuperalgebra base = build_g(params);
            if (points_text.empty()) return to_json(base);
            Json b{{"basis", basis}, {"points", Json::array()}};
            for (const auto& p : parse_points(points_text)) b["points"].push_back(Json::array({to_json(p.point), p.multiplicity}));
            const MapAlgebra m = tensor_algebra(base, comm_from_json(b));
            Json out = to_json(m.algebra);
            b["g"] = {{"kind", params.kind}, {"m", params.m}, {"n", params.n}};
            out["map"] = b;
            return out;
        };
    });
    std::string algebra_path;
    auto* a_validate = algebra->add_subcommand("validate", "Check the superalgebra axioms of an algebra file");
    a_validate->add_option("--algebra", algebra_path)->required();
    a_validate->callback([&] {
        job = [&] {
            const LoadedAlgebra a = load_algebra(algebra_path);
            return Json{{"valid", true}, {"dim", a.algebra->dim()}, {"superdim", a.algebra->superdim()}};
        };
    });
    auto* a_roots = algebra->add_subcommand("roots", "Roots and the weight lattice quotient");
    a_roots->add_option("--algebra", algebra_path)->required();
    a_roots->callback([&] { job = [&] { return roots_json(*load_algebra(algebra_path).algebra); }; });

    // module
    auto* module = app.add_subcommand("module", "Build or decompose modules");
    module->require_subcommand(1);
    std::string module_kind;
    std::size_t lambda = 0;
    std::size_t even = 1;
    std::size_t odd = 0;
    std::optional<std::size_t> point;
    auto* m_build = module->add_subcommand("build", "Trivial, adjoint, defining or osp(1|2) irreducible modules");
    m_build->add_option("--algebra", algebra_path)->required();
    m_build->add_option("--kind", module_kind, "trivial, adjoint, defining, dual-defining or irrep")->required();
    m_build->add_option("--lambda", lambda, "Highest weight of V(lambda), dimension 2 lambda + 1");
    m_build->add_option("--even", even, "Even dimension of a trivial module");
    m_build->add_option("--odd", odd, "Odd dimension of a trivial module");
    m_build->add_option("--point", point, "Build over g and pull back along evaluation at this point");
    m_build->callback([&] {
        job = [&] { return to_json(build_module(load_algebra(algebra_path), module_kind, lambda, even, odd, point)); };
    });
    std::string left_path;
    std::string right_path;
    auto* m_tensor = module->add_subcommand("tensor", "Tensor product of two modules");
    m_tensor->add_option("--algebra", algebra_path)->required();
    m_tensor->add_option("--left", left_path)->required();
    m_tensor->add_option("--right", right_path)->required();
    m_tensor->callback([&] {
        job = [&] {
            const LoadedAlgebra a = load_algebra(algebra_path);
            return to_json(tensor(resolve_module(a, left_path), resolve_module(a, right_path)));
        };
    });
    std::string module_path;
    auto* m_decompose = module->add_subcommand("decompose", "Split a module into irreducible summands");
    m_decompose->add_option("--algebra", algebra_path)->required();
    m_decompose->add_option("--module", module_path)->required();
    m_decompose->callback([&] {
        job = [&] {
            const LoadedAlgebra a = load_algebra(algebra_path);
            const Decomposition d = decompose(resolve_module(a, module_path));
            Json summands = Json::array();
            for (const auto& s : d.summands) {
                const auto o = static_cast<std::size_t>(std::count(s.rep.parity().begin(), s.rep.parity().end(), 1));
                summands.push_back({{"even_dim", s.rep.dim() - o}, {"odd_dim", o}, {"iso_class", s.iso_class}});
            }
            return Json{{"summands", summands}, {"multiplicities", d.multiplicities}};
        };
    });

    // cohomology
    long degree = 1;
    bool homology_flag = false;
    bool cocycles = false;
    auto* cohom = app.add_subcommand("cohomology", "H^p(L, M), or H_p(L, M) with --homology");
    cohom->add_option("--algebra", algebra_path)->required();
    cohom->add_option("--module", module_path, "triv, adjoint or a module file")->required();
    cohom->add_option("--degree", degree);
    cohom->add_flag("--homology", homology_flag);
    cohom->add_flag("--cocycles", cocycles, "Include cocycle representatives");
    cohom->callback([&] {
        job = [&] {
            require_degree(degree);
            const LoadedAlgebra a = load_algebra(algebra_path);
            const Representation m = resolve_module(a, module_path);
            ComplexOptions options;
            options.cocycles = cocycles;
            const auto p = static_cast<std::size_t>(degree);
            return to_json(homology_flag ? homology(m, p, options) : cohomology(m, p, options));
        };
    });

    // ext
    std::string from_path;
    std::string to_path;
    auto* ext_cmd = app.add_subcommand("ext", "Ext^p(V, U), cross-checked against H^p(L, V* (x) U)");
    ext_cmd->add_option("--algebra", algebra_path)->required();
    ext_cmd->add_option("--from", from_path, "V: triv, adjoint or a module file")->required();
    ext_cmd->add_option("--to", to_path, "U: triv, adjoint or a module file")->required();
    ext_cmd->add_option("--degree", degree);
    ext_cmd->callback([&] {
        job = [&] {
            require_degree(degree);
            const LoadedAlgebra a = load_algebra(algebra_path);
            return to_json(ext(resolve_module(a, from_path), resolve_module(a, to_path), static_cast<std::size_t>(degree)));
        };
    });

    // lhs
    std::string ideal_text;
    std::optional<std::size_t> ideal_point;
    std::size_t ideal_order = 1;
    auto* lhs = app.add_subcommand("lhs", "Low-degree spectral sequence data for an ideal acting by zero");
    lhs->add_option("--algebra", algebra_path)->required();
    lhs->add_option("--module", module_path)->required();
    auto* by_index = lhs->add_option("--ideal", ideal_text, "Basis indices spanning the ideal, e.g. 5,6,7");
    auto* by_point = lhs->add_option("--ideal-point", ideal_point, "Use g (x) m^N for the maximal ideal of this point");
    lhs->add_option("--ideal-order", ideal_order, "N in g (x) m^N")->check(CLI::PositiveNumber);
    by_index->excludes(by_point);
    lhs->callback([&] {
        job = [&] {
            const LoadedAlgebra a = load_algebra(algebra_path);
            const Representation m = resolve_module(a, module_path);
            const std::size_t dim = a.algebra->dim();
            Subspace ideal;
            if (ideal_point) {
                if (!a.map) throw ValidationError("--ideal-point needs an algebra built with --points");
                const auto& b = a.map->b;
                if (*ideal_point >= b.points().size()) throw ValidationError("--ideal-point is out of range");
                const Ideal power = ideal_power(b, b.maximal_ideals()[*ideal_point], ideal_order);
                std::vector<Vector> span;
                for (std::size_t i = 0; i < a.map->g.dim(); ++i) {
                    for (const auto& v : power.space.basis_vectors()) {
                        Vector x(dim);
                        for (std::size_t r = 0; r < v.size(); ++r) x[a.map->index(i, r)] = v[r];
                        span.push_back(std::move(x));
                    }
                }
                ideal = Subspace::span(dim, span);
            } else if (!ideal_text.empty()) {
                std::vector<std::size_t> indices;
                std::stringstream ss(ideal_text);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    try {
                        indices.push_back(std::stoul(item));
                    } catch (const std::logic_error&) {
                        throw ValidationError("bad ideal index \"" + item + "\"");
                    }
                    if (indices.back() >= dim) throw ValidationError("ideal index out of range");
                }
                ideal = Subspace::coordinate(dim, indices);
            } else {
                throw ValidationError("give --ideal or --ideal-point");
            }
            return to_json(lhs_low_degree(m, ideal));
        };
    });

    // verify
    std::string suite = "all";
    std::string scale = "small";
    auto* verify = app.add_subcommand("verify", "Run verification suites and report pass/fail with evidence");
    verify->add_option("--suite", suite, "all or one of the named suites");
    verify->add_option("--scale", scale, "small or full")->check(CLI::IsMember({"small", "full"}));
    bool verify_failed = false;
    verify->callback([&] {
        job = [&] {
            const auto reports = run_suite(suite, parse_scale(scale), g.jobs);
            Json list = Json::array();
            std::size_t passed = 0;
            for (const auto& r : reports) {
                list.push_back(r.to_json());
                passed += r.pass ? 1 : 0;
            }
            verify_failed = passed != reports.size();
            return Json{{"suite", suite},
                        {"scale", scale},
                        {"reports", list},
                        {"passed", passed},
                        {"failed", reports.size() - passed},
                        {"pass", !verify_failed}};
        };
    });

    // blocks
    std::string block_points = "0,1";
    std::size_t lambda_max = 2;
    std::size_t multiplicity = 2;
    bool twisted = false;
    auto* blocks_cmd =
        app.add_subcommand("blocks", "Linkage components against spectral characters for osp(1|2) evaluation modules");
    blocks_cmd->add_option("--points", block_points, "Points carrying one V(lambda) each, e.g. 0,1");
    blocks_cmd->add_option("--lambda-max", lambda_max, "lambda ranges over 0..max at every point");
    blocks_cmd->add_option("--multiplicity", multiplicity, "Truncation order at every point")->check(CLI::PositiveNumber);
    blocks_cmd->add_flag("--twisted", twisted, "Restrict to the fixed points of t -> -t and the parity automorphism");
    blocks_cmd->callback([&] {
        job = [&] {
            std::vector<PointData> pts;
            for (auto p : parse_points(block_points)) pts.push_back({p.point, multiplicity});
            const AlgebraPtr osp = share(osp_1_2n(1));
            const Truncation t = make_truncation(osp, pts);
            std::vector<Representation> irreps;
            for (std::size_t l = 0; l <= lambda_max; ++l) irreps.push_back(build_osp12_irrep(osp, l));
            std::vector<EvaluationFamily> family;
            std::vector<std::size_t> choice(pts.size(), 0);
            while (true) {
                EvaluationFamily f;
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    f.entries.push_back({i, 1, irreps[choice[i]]});
                    f.label += (i ? " (x) ev" : "ev") + pts[i].point.to_string() + " V(" + std::to_string(choice[i]) + ")";
                }
                family.push_back(std::move(f));
                std::size_t k = pts.size();
                while (k > 0 && choice[k - 1] == lambda_max) choice[--k] = 0;
                if (k == 0) break;
                ++choice[k - 1];
            }
            BlocksOptions options;
            options.jobs = g.jobs;
            if (twisted) {
                const EquivariantSubalgebra fixed = equivariant_subalgebra(t.map, scaling_action(t.b, 2, parity_automorphism(*osp)));
                options.restriction = Restriction{share(fixed.algebra), fixed.inclusion.matrix};
            }
            return blocks(t, family, options).to_json();
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("validation_error", e.what(), 2);
    }
    try {
        if (g.guard) set_guard_dim(g.guard);
        emit(g, job());
        return verify_failed ? 1 : 0;
    } catch (const ValidationError& e) {
        return fail(e.kind(), e.what(), 2);
    } catch (const GuardExceeded& e) {
        return fail(e.kind(), e.what(), 3);
    } catch (const OracleMismatch& e) {
        return fail(e.kind(), e.what(), 4);
    } catch (const Error& e) {
        return fail(e.kind(), e.what(), 5);
    } catch (const Json::exception& e) {
        return fail("validation_error", e.what(), 2);
    } catch (const std::exception& e) {
        return fail("internal_error", e.what(), 1);
    }
}
