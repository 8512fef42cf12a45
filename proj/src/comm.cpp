#include "superext/comm.hpp"

#include "superext/errors.hpp"

#include <algorithm>

namespace superext {

namespace {

constexpr std::size_t kMaxIssues = 64;

std::string power_label(const std::string& base, std::size_t k) {
    if (k == 0) return "1";
    if (k == 1) return base;
    return base + "^" + std::to_string(k);
}

std::string linear_factor(const Scalar& a) {
    if (a.is_zero()) return "t";
    const Scalar neg = -a;
    std::string s = neg.to_string();
    if (s.front() != '-') s = "+" + s;
    return "(t" + s + ")";
}

std::string combination_label(const Vector& v, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const Scalar& c = v[j];
        if (c.is_zero()) continue;
        std::string coef;
        if (c == Scalar(1)) {
            coef = out.empty() ? "" : "+";
        } else if (c == Scalar(-1)) {
            coef = "-";
        } else {
            const std::string s = c.to_string();
            coef = (out.empty() || s.front() == '-') ? s : "+" + s;
            coef += "*";
        }
        out += coef + names[j];
    }
    return out.empty() ? "0" : out;
}

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

// Same algebra on the basis given by the columns `basis` (coordinates in the old basis).
CommutativeAlgebra rebase(const CommutativeAlgebra& a, const std::vector<Vector>& basis, std::vector<std::string> labels) {
    const CoordinateSystem cs(a.dim(), basis);
    const std::size_t n = basis.size();
    std::vector<SparseVector> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            table[i * n + j] = to_sparse(cs.require(a.multiply(basis[i], basis[j]), "rebase: product outside span"));
            table[j * n + i] = table[i * n + j];
        }
    }
    CommutativeAlgebra out(n, cs.require(a.unit(), "rebase: unit outside span"), std::move(table));
    out.set_labels(std::move(labels));
    if (a.generator()) {
        if (auto t = cs.coordinates(*a.generator())) out.set_generator(*t);
    }
    return out;
}

std::vector<Ideal> maximal_ideals_for(const CommutativeAlgebra& a, const std::vector<PointData>& points) {
    std::vector<Ideal> out;
    for (const auto& p : points) {
        Vector g = *a.generator();
        for (std::size_t k = 0; k < g.size(); ++k) g[k] -= p.point * a.unit()[k];
        out.push_back(generated_ideal(a, {g}));
    }
    return out;
}

void require_ideal(const CommutativeAlgebra& a, const Ideal& i, const char* what) {
    if (i.space.ambient_dim() != a.dim()) throw ValidationError(std::string(what) + ": ideal lives in a different algebra");
    if (!is_ideal(a, i.space)) throw ValidationError(std::string(what) + ": subspace is not an ideal");
}

Matrix power_of(const Matrix& m, std::size_t k) {
    Matrix out = Matrix::identity(m.rows());
    for (std::size_t e = 0; e < k; ++e) out = out * m;
    return out;
}

}  // namespace

CommutativeAlgebra::CommutativeAlgebra(std::size_t dim, Vector unit, std::vector<SparseVector> table)
    : dim_(dim), unit_(std::move(unit)), table_(std::move(table)) {
    if (unit_.size() != dim_) throw ValidationError("commutative algebra: unit has the wrong length");
    if (table_.size() != dim_ * dim_) throw ValidationError("commutative algebra: multiplication table has the wrong size");
    for (const auto& v : table_) {
        for (const auto& e : v) {
            if (e.col >= dim_) throw ValidationError("commutative algebra: product index out of range");
        }
    }
}

Vector CommutativeAlgebra::multiply(const Vector& a, const Vector& b) const {
    SparseVector acc;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            axpy(acc, a[i] * b[j], product(i, j));
        }
    }
    return to_dense(acc, dim_);
}

Matrix CommutativeAlgebra::multiplication_by(const Vector& a) const {
    MatrixBuilder m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            for (const auto& e : product(i, j)) m.add(e.col, j, a[i] * e.value);
        }
    }
    return m.build();
}

Matrix CommutativeAlgebra::multiplication_by(std::size_t i) const { return multiplication_by(unit_vector(dim_, i)); }

std::string CommutativeAlgebra::label(std::size_t i) const {
    if (i < labels_.size()) return labels_[i];
    return "b" + std::to_string(i);
}

void CommutativeAlgebra::set_points(std::vector<PointData> points, std::vector<Ideal> maximal) {
    if (points.size() != maximal.size()) throw ValidationError("each point needs its maximal ideal");
    points_ = std::move(points);
    maximal_ = std::move(maximal);
}

std::vector<std::size_t> CommutativeAlgebra::idempotent_basis() const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < dim_; ++r) {
        const auto& sq = product(r, r);
        if (sq.size() == 1 && sq[0].col == r && sq[0].value.is_one()) out.push_back(r);
    }
    return out;
}

ValidationReport validate(const CommutativeAlgebra& a) {
    ValidationReport report;
    const std::size_t n = a.dim();
    std::size_t comm = 0;
    std::size_t assoc = 0;
    std::size_t unit = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector bi = unit_vector(n, i);
        if (a.multiply(a.unit(), bi) != bi && unit++ < kMaxIssues) {
            report.issues.push_back({"unit", {i}, "1 * b_i != b_i"});
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a.product(i, j) != a.product(j, i) && comm++ < kMaxIssues) {
                report.issues.push_back({"commutativity", {i, j}, "b_i b_j != b_j b_i"});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix li = a.multiplication_by(i);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Vector left = a.multiply(to_dense(a.product(i, j), n), unit_vector(n, k));
                const Vector right = li.apply(to_dense(a.product(j, k), n));
                if (left != right && assoc++ < kMaxIssues) {
                    report.issues.push_back({"associativity", {i, j, k}, "(b_i b_j) b_k != b_i (b_j b_k)"});
                }
            }
        }
    }
    return report;
}

CommutativeAlgebra build_multipoint(const std::vector<PointData>& points, PointBasis basis) {
    if (points.empty()) throw ValidationError("multipoint algebra needs at least one point");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].multiplicity == 0) throw ValidationError("point multiplicity must be at least 1");
        for (std::size_t j = 0; j < i; ++j) {
            if (points[i].point == points[j].point) {
                throw ValidationError("repeated point " + points[i].point.to_string());
            }
        }
    }
    // f = prod (t - a)^n, constant term first.
    Vector f{Scalar(1)};
    for (const auto& p : points) {
        for (std::size_t e = 0; e < p.multiplicity; ++e) {
            Vector g(f.size() + 1);
            for (std::size_t k = 0; k < f.size(); ++k) {
                g[k + 1] += f[k];
                g[k] -= p.point * f[k];
            }
            f = std::move(g);
        }
    }
    const std::size_t d = f.size() - 1;
    std::vector<Vector> powers{unit_vector(d, 0)};
    for (std::size_t m = 1; m + 1 < 2 * d; ++m) {
        const Vector& prev = powers.back();
        Vector next(d);
        for (std::size_t k = 0; k + 1 < d; ++k) next[k + 1] = prev[k];
        const Scalar top = prev[d - 1];
        if (!top.is_zero()) {
            for (std::size_t k = 0; k < d; ++k) next[k] -= top * f[k];
        }
        powers.push_back(std::move(next));
    }
    std::vector<SparseVector> table(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) table[i * d + j] = to_sparse(powers[i + j]);
    }
    CommutativeAlgebra mono(d, unit_vector(d, 0), std::move(table));
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < d; ++k) labels.push_back(power_label("t", k));
    mono.set_labels(labels);
    mono.set_generator(powers.size() > 1 ? powers[1] : powers[0]);
    if (d == 1) mono.set_generator(Vector{points[0].point});
    if (basis == PointBasis::monomial) {
        mono.set_points(points, maximal_ideals_for(mono, points));
        return mono;
    }

    // Primitive idempotents from the generalized eigenspaces of multiplication by t.
    const Matrix lt = mono.multiplication_by(*mono.generator());
    std::vector<Vector> eigen_basis;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Matrix shifted = lt - Matrix::identity(d).scaled(points[i].point);
        for (const auto& v : kernel_basis(power_of(shifted, points[i].multiplicity)).basis_vectors()) {
            eigen_basis.push_back(v);
            owner.push_back(i);
        }
    }
    const CoordinateSystem cs(d, eigen_basis);
    const Vector c = cs.require(mono.unit(), "idempotents: unit outside the eigenspace sum");
    std::vector<Vector> local;
    labels.clear();
    for (std::size_t i = 0; i < points.size(); ++i) {
        Vector e(d);
        for (std::size_t k = 0; k < eigen_basis.size(); ++k) {
            if (owner[k] != i) continue;
            for (std::size_t j = 0; j < d; ++j) e[j] += c[k] * eigen_basis[k][j];
        }
        Vector shift = *mono.generator();
        for (std::size_t j = 0; j < d; ++j) shift[j] -= points[i].point * mono.unit()[j];
        Vector v = e;
        const std::string name = "e" + std::to_string(i + 1);
        for (std::size_t k = 0; k < points[i].multiplicity; ++k) {
            local.push_back(v);
            labels.push_back(k == 0 ? name : name + "*" + power_label(linear_factor(points[i].point), k));
            v = mono.multiply(v, shift);
        }
    }
    CommutativeAlgebra out = rebase(mono, local, labels);
    out.set_points(points, maximal_ideals_for(out, points));
    return out;
}

bool is_ideal(const CommutativeAlgebra& a, const Subspace& s) {
    for (const auto& v : s.basis_vectors()) {
        const Matrix lv = a.multiplication_by(v);
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (!s.contains(lv.column(j))) return false;
        }
    }
    return true;
}

Ideal generated_ideal(const CommutativeAlgebra& a, const std::vector<Vector>& generators) {
    std::vector<Vector> span;
    for (const auto& g : generators) {
        if (g.size() != a.dim()) throw ValidationError("ideal generator has the wrong length");
        const Matrix lg = a.multiplication_by(g);
        for (std::size_t j = 0; j < a.dim(); ++j) span.push_back(lg.column(j));
    }
    return {Subspace::span(a.dim(), span), generators};
}

Ideal ideal_product(const CommutativeAlgebra& a, const Ideal& i, const Ideal& j) {
    require_ideal(a, i, "ideal product");
    require_ideal(a, j, "ideal product");
    std::vector<Vector> span;
    const auto jb = j.space.basis_vectors();
    for (const auto& u : i.space.basis_vectors()) {
        for (const auto& v : jb) span.push_back(a.multiply(u, v));
    }
    return {Subspace::span(a.dim(), span), {}};
}

Ideal ideal_power(const CommutativeAlgebra& a, const Ideal& i, std::size_t k) {
    if (k == 0) return {Subspace::full(a.dim()), {a.unit()}};
    Ideal out = i;
    for (std::size_t e = 1; e < k; ++e) out = ideal_product(a, out, i);
    return out;
}

Ideal ideal_sum(const CommutativeAlgebra& a, const Ideal& i, const Ideal& j) {
    require_ideal(a, i, "ideal sum");
    require_ideal(a, j, "ideal sum");
    std::vector<Vector> gens = i.generators;
    gens.insert(gens.end(), j.generators.begin(), j.generators.end());
    return {sum(i.space, j.space), gens};
}

Ideal ideal_intersection(const CommutativeAlgebra& a, const Ideal& i, const Ideal& j) {
    require_ideal(a, i, "ideal intersection");
    require_ideal(a, j, "ideal intersection");
    return {intersection(i.space, j.space), {}};
}

std::vector<std::size_t> support(const CommutativeAlgebra& a, const Ideal& i) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < a.maximal_ideals().size(); ++k) {
        if (a.maximal_ideals()[k].space.contains(i.space)) out.push_back(k);
    }
    return out;
}

IdealOps ideal_ops(const CommutativeAlgebra& a, const Ideal& i, const Ideal& j, std::size_t max_power) {
    IdealOps out;
    out.product = ideal_product(a, i, j);
    out.sum = ideal_sum(a, i, j);
    out.intersection = ideal_intersection(a, i, j);
    for (std::size_t k = 1; k <= max_power; ++k) {
        out.powers.push_back(k == 1 ? i : ideal_product(a, out.powers.back(), i));
    }
    out.support_i = support(a, i);
    out.support_j = support(a, j);
    out.disjoint_supports = std::none_of(out.support_i.begin(), out.support_i.end(), [&](std::size_t p) {
        return std::find(out.support_j.begin(), out.support_j.end(), p) != out.support_j.end();
    });
    out.coprime = out.sum.dim() == a.dim();
    out.product_equals_intersection = out.product.space == out.intersection.space;
    if (out.coprime && !out.product_equals_intersection) {
        throw OracleMismatch("coprime ideals with IJ != I cap J");
    }
    return out;
}

CommutativeQuotient quotient(const CommutativeAlgebra& a, const Ideal& j) {
    require_ideal(a, j, "quotient");
    const std::size_t n = a.dim();
    Echelon ech(n);
    std::vector<Vector> all = j.space.basis_vectors();
    for (const auto& v : all) ech.insert(to_sparse(v));
    std::vector<Vector> chosen;
    std::vector<std::string> names;
    std::vector<Vector> candidates{a.unit()};
    for (std::size_t k = 0; k < n; ++k) candidates.push_back(unit_vector(n, k));
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (!ech.insert(to_sparse(candidates[c]))) continue;
        chosen.push_back(candidates[c]);
        names.push_back(c == 0 ? std::string("1") : a.label(c - 1));
    }
    const std::size_t q = chosen.size();
    const std::size_t off = all.size();
    all.insert(all.end(), chosen.begin(), chosen.end());
    const CoordinateSystem cs(n, all);
    auto project = [&](const Vector& v) {
        const Vector c = cs.require(v, "quotient: vector outside the ambient space");
        return Vector(c.begin() + static_cast<std::ptrdiff_t>(off), c.end());
    };
    std::vector<Vector> proj_cols;
    for (std::size_t k = 0; k < n; ++k) proj_cols.push_back(project(unit_vector(n, k)));
    std::vector<SparseVector> table(q * q);
    for (std::size_t x = 0; x < q; ++x) {
        for (std::size_t y = 0; y < q; ++y) table[x * q + y] = to_sparse(project(a.multiply(chosen[x], chosen[y])));
    }
    CommutativeQuotient out{CommutativeAlgebra(q, project(a.unit()), std::move(table)),
                            Matrix::from_columns(q, proj_cols), Matrix::from_columns(n, chosen)};
    out.algebra.set_labels(names);
    if (a.generator()) out.algebra.set_generator(project(*a.generator()));
    return out;
}

GroupAction scaling_action(const CommutativeAlgebra& a, std::size_t order, std::optional<Matrix> on_lie) {
    Scalar zeta;
    switch (order) {
        case 1: zeta = 1; break;
        case 2: zeta = -1; break;
        case 4: zeta = Scalar::i(); break;
        default: throw ValidationError("group order must be 1, 2 or 4");
    }
    if (!a.generator()) throw ValidationError("scaling action needs an algebra generated by t");
    const std::size_t n = a.dim();
    std::vector<Vector> powers{a.unit()};
    for (std::size_t k = 1; k < n; ++k) powers.push_back(a.multiply(powers.back(), *a.generator()));
    const Matrix t = Matrix::from_columns(n, powers);
    const auto tinv = inverse(t);
    if (!tinv) throw ValidationError("scaling action: powers of t do not form a basis");
    Matrix diag(n, n);
    Scalar z = 1;
    for (std::size_t k = 0; k < n; ++k) {
        diag.set(k, k, z);
        z *= zeta;
    }
    GroupAction act{order, t * diag * *tinv, std::move(on_lie), false};
    const auto report = validate(act, a);
    if (!report.ok()) throw ValidationError("t -> zeta t is not an automorphism: " + report.summary());

    bool free = true;
    const auto& pts = a.points();
    for (const auto& p : pts) {
        Scalar image = p.point * zeta;
        auto it = std::find_if(pts.begin(), pts.end(), [&](const PointData& q) { return q.point == image; });
        if (it == pts.end() || it->multiplicity != p.multiplicity) free = false;
        if (order > 1 && p.point.is_zero()) free = false;
    }
    act.free_on_points = free && !pts.empty();
    return act;
}

ValidationReport validate(const GroupAction& act, const CommutativeAlgebra& a, const LieSuperalgebra* l) {
    ValidationReport report;
    const std::size_t n = a.dim();
    if (act.order != 1 && act.order != 2 && act.order != 4) report.issues.push_back({"order", {}, "order must be 1, 2 or 4"});
    if (act.on_algebra.rows() != n || act.on_algebra.cols() != n) {
        report.issues.push_back({"shape", {}, "generator on the algebra has the wrong size"});
        return report;
    }
    const Matrix& g = act.on_algebra;
    if (power_of(g, act.order) != Matrix::identity(n)) report.issues.push_back({"order", {}, "generator^order != 1"});
    if (g.apply(a.unit()) != a.unit()) report.issues.push_back({"unit", {}, "generator does not fix the unit"});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Vector lhs = g.apply(to_dense(a.product(i, j), n));
            const Vector rhs = a.multiply(g.column(i), g.column(j));
            if (lhs != rhs && report.issues.size() < kMaxIssues) {
                report.issues.push_back({"multiplicative", {i, j}, "g(b_i b_j) != g(b_i) g(b_j)"});
            }
        }
    }
    if (act.on_lie && l) {
        const Matrix& h = *act.on_lie;
        const std::size_t m = l->dim();
        if (h.rows() != m || h.cols() != m) {
            report.issues.push_back({"lie-shape", {}, "generator on the Lie superalgebra has the wrong size"});
            return report;
        }
        if (power_of(h, act.order) != Matrix::identity(m)) report.issues.push_back({"lie-order", {}, "generator^order != 1"});
        for (std::size_t j = 0; j < m; ++j) {
            for (const auto& e : to_sparse(h.column(j))) {
                if (l->parity(e.col) != l->parity(j)) {
                    report.issues.push_back({"lie-parity", {j}, "generator does not preserve parity"});
                    break;
                }
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                const Vector lhs = h.apply(to_dense(l->bracket(i, j), m));
                const Vector rhs = l->bracket(h.column(i), h.column(j));
                if (lhs != rhs && report.issues.size() < kMaxIssues) {
                    report.issues.push_back({"lie-bracket", {i, j}, "g[x_i,x_j] != [g x_i, g x_j]"});
                }
            }
        }
    }
    return report;
}

Matrix parity_automorphism(const LieSuperalgebra& l) {
    Matrix p(l.dim(), l.dim());
    for (std::size_t i = 0; i < l.dim(); ++i) p.set(i, i, Scalar(l.parity(i) ? -1 : 1));
    return p;
}

FixedSubalgebra fixed_subalgebra(const CommutativeAlgebra& a, const GroupAction& act) {
    const auto report = validate(GroupAction{act.order, act.on_algebra, std::nullopt, act.free_on_points}, a);
    if (!report.ok()) throw ValidationError("invalid group action: " + report.summary());
    const std::size_t n = a.dim();
    const Subspace fixed = kernel_basis(act.on_algebra - Matrix::identity(n));
    std::vector<Vector> basis{a.unit()};
    Echelon ech(n);
    ech.insert(to_sparse(a.unit()));
    for (const auto& v : fixed.basis_vectors()) {
        if (ech.insert(to_sparse(v))) basis.push_back(v);
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back(a.label(k));
    std::vector<std::string> labels;
    for (const auto& v : basis) labels.push_back(v == a.unit() ? std::string("1") : combination_label(v, names));
    FixedSubalgebra out{rebase(a, basis, labels), Matrix::from_columns(n, basis)};
    return out;
}

}  // namespace superext
