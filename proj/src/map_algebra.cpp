#include "superext/map_algebra.hpp"

#include "superext/errors.hpp"
#include "superext/guards.hpp"

#include <algorithm>

namespace superext {

MapAlgebra tensor_algebra(const LieSuperalgebra& g, const CommutativeAlgebra& b) {
    const std::size_t nb = b.dim();
    check_algebra_dim(g.dim() * nb, "g (x) B");
    std::vector<Parity> parity;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t r = 0; r < nb; ++r) {
            parity.push_back(g.parity(i));
            labels.push_back(nb == 1 ? g.label(i) : g.label(i) + "⊗" + b.label(r));
        }
    }
    LieSuperalgebra l(parity);
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = 0; j < g.dim(); ++j) {
            const SparseVector& c = g.bracket(i, j);
            if (c.empty()) continue;
            for (std::size_t r = 0; r < nb; ++r) {
                for (std::size_t s = 0; s < nb; ++s) {
                    const SparseVector& prod = b.product(r, s);
                    SparseVector out;
                    for (const auto& e : c) {
                        for (const auto& u : prod) out.push_back({e.col * nb + u.col, e.value * u.value});
                    }
                    std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
                    l.set_bracket_raw(i * nb + r, j * nb + s, std::move(out));
                }
            }
        }
    }
    l.set_labels(labels);
    std::vector<std::size_t> cartan;
    for (auto h : g.cartan()) {
        for (auto r : b.idempotent_basis()) cartan.push_back(h * nb + r);
    }
    std::sort(cartan.begin(), cartan.end());
    l.set_cartan(cartan);
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (auto x : g.nilpos()) {
        for (std::size_t r = 0; r < nb; ++r) pos.push_back(x * nb + r);
    }
    for (auto x : g.nilneg()) {
        for (std::size_t r = 0; r < nb; ++r) neg.push_back(x * nb + r);
    }
    l.set_nilpos(pos);
    l.set_nilneg(neg);
    if (g.z_grading()) {
        std::vector<int> deg;
        for (std::size_t i = 0; i < g.dim(); ++i) deg.insert(deg.end(), nb, (*g.z_grading())[i]);
        l.set_z_grading(deg);
    }
    return {std::move(l), g, b};
}

ValidationReport validate(const AlgebraHom& f) {
    ValidationReport report;
    const auto& src = *f.source;
    const auto& dst = *f.target;
    if (f.matrix.rows() != dst.dim() || f.matrix.cols() != src.dim()) {
        report.issues.push_back({"shape", {}, "matrix does not match source and target"});
        return report;
    }
    for (std::size_t k = 0; k < dst.dim(); ++k) {
        for (const auto& e : f.matrix.row(k)) {
            if (dst.parity(k) != src.parity(e.col)) {
                report.issues.push_back({"parity", {e.col, k}, "map mixes parities"});
                return report;
            }
        }
    }
    std::vector<Vector> images;
    for (std::size_t i = 0; i < src.dim(); ++i) images.push_back(f.matrix.column(i));
    for (std::size_t i = 0; i < src.dim(); ++i) {
        for (std::size_t j = i; j < src.dim(); ++j) {
            const Vector lhs = f.matrix.apply(to_dense(src.bracket(i, j), src.dim()));
            if (lhs != dst.bracket(images[i], images[j]) && report.issues.size() < 64) {
                report.issues.push_back({"bracket", {i, j}, "f[x_i,x_j] != [f x_i, f x_j]"});
            }
        }
    }
    return report;
}

EquivariantSubalgebra equivariant_subalgebra(const MapAlgebra& m, const GroupAction& act) {
    const std::size_t n = m.algebra.dim();
    if (act.on_algebra.rows() != m.b.dim()) throw ValidationError("group action does not match the commutative factor");
    const Matrix on_lie = act.on_lie ? *act.on_lie : Matrix::identity(m.g.dim());
    const auto report = validate(GroupAction{act.order, act.on_algebra, on_lie, act.free_on_points}, m.b, &m.g);
    if (!report.ok()) throw ValidationError("invalid group action: " + report.summary());
    const Matrix phi = Matrix::kron(on_lie, act.on_algebra);
    const Subspace fixed = kernel_basis(phi - Matrix::identity(n));

    std::vector<Vector> cartan_vectors;
    for (auto h : m.algebra.cartan()) {
        Vector e(n);
        e[h] = 1;
        cartan_vectors.push_back(e);
    }
    const Subspace toral = intersection(Subspace::span(n, cartan_vectors), fixed);
    std::vector<Vector> basis = toral.basis_vectors();
    Echelon ech(n);
    for (const auto& v : basis) ech.insert(to_sparse(v));
    for (const auto& v : homogeneous_basis(fixed, m.algebra.parity())) {
        if (ech.insert(to_sparse(v))) basis.push_back(v);
    }
    std::stable_partition(basis.begin() + static_cast<std::ptrdiff_t>(toral.dim()), basis.end(), [&](const Vector& v) {
        for (std::size_t k = 0; k < n; ++k) {
            if (!v[k].is_zero()) return m.algebra.parity(k) == 0;
        }
        return true;
    });
    Subalgebra sub = subalgebra(m.algebra, basis);
    std::vector<std::size_t> cartan(toral.dim());
    for (std::size_t k = 0; k < cartan.size(); ++k) cartan[k] = k;
    sub.algebra.set_cartan(cartan);
    auto source = std::make_shared<const LieSuperalgebra>(sub.algebra);
    auto target = std::make_shared<const LieSuperalgebra>(m.algebra);
    return {sub.algebra, AlgebraHom{source, target, sub.inclusion}};
}

Evaluation evaluation_hom(const MapAlgebra& m, const Ideal& j) {
    CommutativeQuotient q = quotient(m.b, j);
    MapAlgebra target = tensor_algebra(m.g, q.algebra);
    const Matrix matrix = Matrix::kron(Matrix::identity(m.g.dim()), q.projection);
    AlgebraHom hom{std::make_shared<const LieSuperalgebra>(m.algebra), std::make_shared<const LieSuperalgebra>(target.algebra),
                   matrix};
    return {std::move(target), std::move(q), std::move(hom)};
}

AlgebraHom point_evaluation(const MapAlgebra& m, std::size_t point) {
    if (point >= m.b.maximal_ideals().size()) throw ValidationError("point index out of range");
    const CommutativeQuotient q = quotient(m.b, m.b.maximal_ideals()[point]);
    if (q.algebra.dim() != 1 || q.algebra.unit() != Vector{Scalar(1)}) {
        throw OracleMismatch("residue field at a point is not spanned by the unit");
    }
    return {std::make_shared<const LieSuperalgebra>(m.algebra), std::make_shared<const LieSuperalgebra>(m.g),
            Matrix::kron(Matrix::identity(m.g.dim()), q.projection)};
}

AlgebraHom compose(const AlgebraHom& second, const AlgebraHom& first) {
    if (second.matrix.cols() != first.matrix.rows()) throw ValidationError("homomorphisms do not compose");
    return {first.source, second.target, second.matrix * first.matrix};
}

}  // namespace superext
