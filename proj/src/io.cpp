#include "superext/io.hpp"

#include "superext/errors.hpp"

#include <algorithm>
#include <string>

namespace superext {

namespace {

std::size_t index_from(const Json& j, std::size_t bound, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw ValidationError(std::string(what) + ": expected a nonnegative integer index");
    }
    const auto v = j.get<std::size_t>();
    if (v >= bound) throw ValidationError(std::string(what) + ": index " + std::to_string(v) + " out of range");
    return v;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<Parity> parity_from(const Json& j) {
    if (!j.is_array()) throw ValidationError("\"parity\" must be an array");
    std::vector<Parity> out;
    for (const auto& p : j) {
        if (!p.is_number_integer() || (p.get<int>() != 0 && p.get<int>() != 1)) {
            throw ValidationError("parity entries must be 0 or 1");
        }
        out.push_back(static_cast<Parity>(p.get<int>()));
    }
    return out;
}

std::vector<std::size_t> indices_from(const Json& j, std::size_t bound, const char* what) {
    std::vector<std::size_t> out;
    if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
    for (const auto& x : j) out.push_back(index_from(x, bound, what));
    return out;
}

Json sparse_to_json(const SparseVector& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(Json::array({e.col, to_json(e.value)}));
    return out;
}

SparseVector sparse_from_json(const Json& j, std::size_t bound) {
    if (!j.is_array()) throw ValidationError("sparse vector must be an array of [index, value] pairs");
    SparseVector out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw ValidationError("sparse entry must be [index, value]");
        const Scalar v = scalar_from_json(e[1]);
        if (!v.is_zero()) out.push_back({index_from(e[0], bound, "sparse entry"), v});
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    for (std::size_t k = 1; k < out.size(); ++k) {
        if (out[k].col == out[k - 1].col) throw ValidationError("repeated index in sparse vector");
    }
    return out;
}

}  // namespace

Json to_json(const Scalar& s) {
    return s.to_string();
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) {
        try {
            return Scalar::parse(j.get<std::string>());
        } catch (const ValidationError&) {
            throw;
        } catch (const std::exception& e) {
            throw ValidationError("bad scalar literal \"" + j.get<std::string>() + "\": " + e.what());
        }
    }
    throw ValidationError("scalars must be strings such as \"1/2\" or \"1+1/3*i\"");
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (const auto& e : m.row(i)) out.push_back(Json::array({i, e.col, to_json(e.value)}));
    }
    return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) throw ValidationError("matrix must be an array of [row, col, value] triples");
    Matrix m(rows, cols);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) throw ValidationError("matrix entry must be [row, col, value]");
        m.add_to(index_from(e[0], rows, "matrix row"), index_from(e[1], cols, "matrix column"), scalar_from_json(e[2]));
    }
    return m;
}

Json to_json(const LieSuperalgebra& l) {
    Json out;
    out["dim"] = l.dim();
    out["parity"] = l.parity();
    Json labels = Json::array();
    for (std::size_t i = 0; i < l.labels().size(); ++i) labels.push_back(l.labels()[i]);
    out["labels"] = labels;
    Json brackets = Json::array();
    for (std::size_t i = 0; i < l.dim(); ++i) {
        for (std::size_t j = i; j < l.dim(); ++j) {
            if (!l.bracket(i, j).empty()) brackets.push_back(Json::array({i, j, sparse_to_json(l.bracket(i, j))}));
        }
    }
    out["brackets"] = brackets;
    out["cartan"] = l.cartan();
    out["nilpos"] = l.nilpos();
    out["nilneg"] = l.nilneg();
    if (l.z_grading()) out["z_grading"] = *l.z_grading();
    if (const auto& r = l.realization()) {
        const std::size_t n = r->module_parity.size();
        Json mats = Json::array();
        for (const auto& m : r->matrices) mats.push_back(to_json(m));
        out["realization"] = {{"module_parity", r->module_parity}, {"dim", n}, {"matrices", mats}};
    }
    return out;
}

LieSuperalgebra algebra_from_json(const Json& j) {
    const auto parity = parity_from(field(j, "parity"));
    if (j.contains("dim") && j.at("dim") != parity.size()) throw ValidationError("\"dim\" disagrees with \"parity\"");
    const std::size_t n = parity.size();
    LieSuperalgebra l(parity);
    if (j.contains("labels") && !j.at("labels").empty()) l.set_labels(j.at("labels").get<std::vector<std::string>>());
    if (j.contains("brackets")) {
        for (const auto& b : j.at("brackets")) {
            if (!b.is_array() || b.size() != 3) throw ValidationError("bracket entry must be [i, j, [[k, c], ...]]");
            const std::size_t x = index_from(b[0], n, "bracket");
            const std::size_t y = index_from(b[1], n, "bracket");
            if (x > y) throw ValidationError("brackets are stored for i <= j only");
            l.set_bracket(x, y, sparse_from_json(b[2], n));
        }
    }
    if (j.contains("cartan")) l.set_cartan(indices_from(j.at("cartan"), n, "cartan"));
    if (j.contains("nilpos")) l.set_nilpos(indices_from(j.at("nilpos"), n, "nilpos"));
    if (j.contains("nilneg")) l.set_nilneg(indices_from(j.at("nilneg"), n, "nilneg"));
    if (j.contains("z_grading")) {
        auto deg = j.at("z_grading").get<std::vector<int>>();
        if (deg.size() != n) throw ValidationError("z_grading has the wrong length");
        l.set_z_grading(std::move(deg));
    }
    if (j.contains("realization")) {
        const Json& r = j.at("realization");
        MatrixRealization real;
        real.module_parity = parity_from(field(r, "module_parity"));
        const std::size_t d = real.module_parity.size();
        const Json& mats = field(r, "matrices");
        if (!mats.is_array() || mats.size() != n) throw ValidationError("realization needs one matrix per basis element");
        for (const auto& m : mats) real.matrices.push_back(matrix_from_json(m, d, d));
        l.set_realization(std::move(real));
    }
    require_valid(l, "algebra from JSON");
    return l;
}

Json to_json(const Representation& r) {
    Json out;
    out["dim"] = r.dim();
    out["parity"] = r.parity();
    Json action = Json::array();
    for (const auto& m : r.actions()) action.push_back(to_json(m));
    out["action"] = action;
    return out;
}

Representation module_from_json(const Json& j, AlgebraPtr algebra) {
    const auto parity = parity_from(field(j, "parity"));
    if (j.contains("dim") && j.at("dim") != parity.size()) throw ValidationError("\"dim\" disagrees with \"parity\"");
    const Json& action = field(j, "action");
    if (!action.is_array() || action.size() != algebra->dim()) {
        throw ValidationError("module needs one action matrix per algebra basis element");
    }
    std::vector<Matrix> mats;
    for (const auto& m : action) mats.push_back(matrix_from_json(m, parity.size(), parity.size()));
    Representation r(std::move(algebra), parity, std::move(mats));
    require_valid(r, "module from JSON");
    return r;
}

Json to_json(const CommutativeAlgebra& a) {
    Json out;
    out["dim"] = a.dim();
    Json unit = Json::array();
    for (const auto& x : a.unit()) unit.push_back(to_json(x));
    out["unit"] = unit;
    Json mult = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            if (!a.product(i, j).empty()) mult.push_back(Json::array({i, j, sparse_to_json(a.product(i, j))}));
        }
    }
    out["mult"] = mult;
    if (!a.labels().empty()) out["labels"] = a.labels();
    return out;
}

CommutativeAlgebra comm_from_json(const Json& j) {
    if (j.contains("points")) {
        std::vector<PointData> points;
        for (const auto& p : j.at("points")) {
            if (!p.is_array() || p.size() != 2 || !p[1].is_number_integer() || p[1].get<long>() < 1) {
                throw ValidationError("points must be [[\"a\", n], ...] with n >= 1");
            }
            points.push_back({scalar_from_json(p[0]), p[1].get<std::size_t>()});
        }
        PointBasis basis = PointBasis::monomial;
        if (j.contains("basis")) {
            const auto b = j.at("basis").get<std::string>();
            if (b == "local") {
                basis = PointBasis::local;
            } else if (b != "monomial") {
                throw ValidationError("basis must be \"monomial\" or \"local\"");
            }
        }
        return build_multipoint(points, basis);
    }
    const std::size_t n = field(j, "dim").get<std::size_t>();
    Vector unit;
    for (const auto& x : field(j, "unit")) unit.push_back(scalar_from_json(x));
    if (unit.size() != n) throw ValidationError("unit has the wrong length");
    std::vector<SparseVector> table(n * n);
    for (const auto& m : field(j, "mult")) {
        if (!m.is_array() || m.size() != 3) throw ValidationError("mult entry must be [i, j, [[k, c], ...]]");
        const std::size_t x = index_from(m[0], n, "mult");
        const std::size_t y = index_from(m[1], n, "mult");
        table[x * n + y] = sparse_from_json(m[2], n);
        table[y * n + x] = table[x * n + y];
    }
    CommutativeAlgebra a(n, std::move(unit), std::move(table));
    if (j.contains("labels")) a.set_labels(j.at("labels").get<std::vector<std::string>>());
    const auto report = validate(a);
    if (!report.ok()) throw ValidationError("commutative algebra from JSON: " + report.summary());
    return a;
}

Json to_json(const DegreeDims& d) {
    Json out;
    out["degree"] = d.degree;
    out["even_dim"] = d.even;
    out["odd_dim"] = d.odd;
    if (!d.cocycles.empty()) {
        Json c = Json::array();
        for (const auto& v : d.cocycles) c.push_back(sparse_to_json(to_sparse(v)));
        out["cocycles"] = c;
    }
    return out;
}

Json to_json(const LhsReport& r) {
    Json out;
    out["E2_10"] = to_json(r.e10);
    out["E2_01"] = to_json(r.e01);
    out["E2_20"] = to_json(r.e20);
    out["transgression_kernel"] = to_json(r.transgression_kernel);
    out["h1"] = to_json(r.h1);
    out["reconstruction_check"] = r.reconstruction_check;
    return out;
}

}  // namespace superext
