#include "superext/lie.hpp"

#include "superext/errors.hpp"
#include "superext/guards.hpp"

#include <algorithm>
#include <sstream>

namespace superext {

namespace {

constexpr std::size_t kMaxIssuesPerAxiom = 64;

SparseVector sparse_bracket(const LieSuperalgebra& l, const SparseVector& x, const SparseVector& y) {
    SparseVector out;
    for (const auto& a : x) {
        for (const auto& b : y) axpy(out, a.value * b.value, l.bracket(a.col, b.col));
    }
    return out;
}

SparseVector unit(std::size_t k) {
    return {{k, Scalar(1)}};
}

}  // namespace

std::string ValidationReport::summary() const {
    if (issues.empty()) return "valid";
    std::ostringstream os;
    const auto& first = issues.front();
    os << issues.size() << " violation(s); first: " << first.axiom << " at (";
    for (std::size_t k = 0; k < first.witness.size(); ++k) os << (k ? "," : "") << first.witness[k];
    os << ")";
    if (!first.detail.empty()) os << ": " << first.detail;
    return os.str();
}

LieSuperalgebra::LieSuperalgebra(std::vector<Parity> parity) : parity_(std::move(parity)) {
    for (auto z : parity_) {
        if (z > 1) throw ValidationError("parity entries must be 0 or 1");
    }
    table_.resize(parity_.size() * parity_.size());
}

std::size_t LieSuperalgebra::even_dim() const {
    return static_cast<std::size_t>(std::count(parity_.begin(), parity_.end(), 0));
}

std::size_t LieSuperalgebra::odd_dim() const {
    return dim() - even_dim();
}

std::vector<std::size_t> LieSuperalgebra::indices_of_parity(Parity z) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < dim(); ++k) {
        if (parity_[k] == z) out.push_back(k);
    }
    return out;
}

void LieSuperalgebra::set_bracket(std::size_t i, std::size_t j, SparseVector value) {
    if (i >= dim() || j >= dim()) throw ValidationError("bracket index out of range");
    for (const auto& e : value) {
        if (e.col >= dim()) throw ValidationError("bracket coordinate out of range");
    }
    const bool both_odd = parity_[i] && parity_[j];
    table_[j * dim() + i] = both_odd ? value : scaled(value, Scalar(-1));
    table_[i * dim() + j] = std::move(value);
}

void LieSuperalgebra::set_bracket_raw(std::size_t i, std::size_t j, SparseVector value) {
    table_.at(i * dim() + j) = std::move(value);
}

Vector LieSuperalgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw ValidationError("bracket: vector length mismatch");
    return to_dense(sparse_bracket(*this, to_sparse(x), to_sparse(y)), dim());
}

Matrix LieSuperalgebra::ad(std::size_t i) const {
    Matrix m(dim(), dim());
    std::vector<SparseVector> rows(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        for (const auto& e : bracket(i, j)) rows[e.col].push_back({j, e.value});
    }
    return Matrix::from_rows(dim(), std::move(rows));
}

void LieSuperalgebra::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != dim()) throw ValidationError("label count does not match dimension");
    labels_ = std::move(labels);
}

std::string LieSuperalgebra::label(std::size_t i) const {
    if (i < labels_.size()) return labels_[i];
    return "x" + std::to_string(i);
}

std::string LieSuperalgebra::superdim() const {
    return "(" + std::to_string(even_dim()) + "|" + std::to_string(odd_dim()) + ")";
}

bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b) {
    if (a.parity_ != b.parity_ || a.labels_ != b.labels_ || a.cartan_ != b.cartan_ || a.nilpos_ != b.nilpos_ ||
        a.nilneg_ != b.nilneg_) {
        return false;
    }
    for (std::size_t k = 0; k < a.table_.size(); ++k) {
        const auto& x = a.table_[k];
        const auto& y = b.table_[k];
        if (x.size() != y.size()) return false;
        for (std::size_t e = 0; e < x.size(); ++e) {
            if (x[e].col != y[e].col || x[e].value != y[e].value) return false;
        }
    }
    return true;
}

ValidationReport validate(const LieSuperalgebra& l) {
    ValidationReport report;
    const std::size_t n = l.dim();
    std::size_t parity_issues = 0;
    std::size_t anti_issues = 0;
    std::size_t jacobi_issues = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Parity z = l.parity(i) ^ l.parity(j);
            for (const auto& e : l.bracket(i, j)) {
                if (l.parity(e.col) != z && parity_issues++ < kMaxIssuesPerAxiom) {
                    report.issues.push_back({"parity", {i, j, e.col}, "bracket leaves the expected parity"});
                }
            }
            const SparseVector partner =
                scaled(l.bracket(j, i), Scalar((l.parity(i) && l.parity(j)) ? 1 : -1));
            if (j >= i) {
                SparseVector diff = l.bracket(i, j);
                axpy(diff, Scalar(-1), partner);
                if (!diff.empty() && anti_issues++ < kMaxIssuesPerAxiom) {
                    report.issues.push_back({"antisymmetry", {i, j}, "[x_i,x_j] != -(-1)^{|i||j|}[x_j,x_i]"});
                }
            }
        }
    }
    // With antisymmetry in place the Jacobiator is super-alternating, so sorted triples suffice.
    const bool sorted = anti_issues == 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = sorted ? i : 0; j < n; ++j) {
            const Scalar sij((l.parity(i) && l.parity(j)) ? -1 : 1);
            for (std::size_t k = sorted ? j : 0; k < n; ++k) {
                // [x_i,[x_j,x_k]] = [[x_i,x_j],x_k] + (-1)^{|i||j|} [x_j,[x_i,x_k]]
                SparseVector lhs = sparse_bracket(l, unit(i), l.bracket(j, k));
                axpy(lhs, Scalar(-1), sparse_bracket(l, l.bracket(i, j), unit(k)));
                axpy(lhs, -sij, sparse_bracket(l, unit(j), l.bracket(i, k)));
                if (!lhs.empty() && jacobi_issues++ < kMaxIssuesPerAxiom) {
                    report.issues.push_back({"jacobi", {i, j, k}, "super Jacobi identity fails"});
                }
            }
        }
    }
    return report;
}

void require_valid(const LieSuperalgebra& l, const char* what) {
    const auto r = validate(l);
    if (!r.ok()) throw ValidationError(std::string(what) + " is not a Lie superalgebra: " + r.summary());
}

LieSuperalgebra abelian(std::size_t even, std::size_t odd) {
    std::vector<Parity> p(even, 0);
    p.insert(p.end(), odd, 1);
    LieSuperalgebra l(p);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < even; ++k) labels.push_back("a" + std::to_string(k));
    for (std::size_t k = 0; k < odd; ++k) labels.push_back("b" + std::to_string(k));
    l.set_labels(labels);
    return l;
}

LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b) {
    std::vector<Parity> p = a.parity();
    p.insert(p.end(), b.parity().begin(), b.parity().end());
    check_algebra_dim(p.size(), "direct sum");
    LieSuperalgebra l(p);
    const std::size_t off = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) l.set_bracket_raw(i, j, a.bracket(i, j));
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            SparseVector v;
            for (const auto& e : b.bracket(i, j)) v.push_back({e.col + off, e.value});
            l.set_bracket_raw(off + i, off + j, std::move(v));
        }
    }
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < a.dim(); ++k) labels.push_back(a.label(k) + "@1");
    for (std::size_t k = 0; k < b.dim(); ++k) labels.push_back(b.label(k) + "@2");
    l.set_labels(labels);
    auto shifted = [off](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
        std::vector<std::size_t> out = x;
        for (auto k : y) out.push_back(k + off);
        return out;
    };
    l.set_cartan(shifted(a.cartan(), b.cartan()));
    l.set_nilpos(shifted(a.nilpos(), b.nilpos()));
    l.set_nilneg(shifted(a.nilneg(), b.nilneg()));
    return l;
}

namespace {

Parity matrix_parity(const Matrix& m, const std::vector<Parity>& module_parity, bool& homogeneous) {
    int z = -1;
    homogeneous = true;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (const auto& e : m.row(i)) {
            const int here = module_parity[i] ^ module_parity[e.col];
            if (z < 0) z = here;
            if (z != here) homogeneous = false;
        }
    }
    return static_cast<Parity>(z < 0 ? 0 : z);
}

Vector flatten(const Matrix& m) {
    Vector v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (const auto& e : m.row(i)) v[i * m.cols() + e.col] = e.value;
    }
    return v;
}

}  // namespace

LieSuperalgebra from_matrix_basis(const std::vector<Matrix>& basis, const std::vector<Parity>& module_parity) {
    check_algebra_dim(basis.size(), "matrix superalgebra");
    const std::size_t n = module_parity.size();
    std::vector<Parity> parity;
    std::vector<Vector> flat;
    for (const auto& m : basis) {
        if (m.rows() != n || m.cols() != n) throw ValidationError("basis matrix has the wrong size");
        bool homogeneous = true;
        parity.push_back(matrix_parity(m, module_parity, homogeneous));
        if (!homogeneous) throw ValidationError("basis matrix is not parity-homogeneous");
        flat.push_back(flatten(m));
    }
    const CoordinateSystem coords(n * n, flat);
    LieSuperalgebra l(parity);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const Matrix c = supercommutator(basis[i], parity[i], basis[j], parity[j]);
            const auto x = coords.coordinates(flatten(c));
            if (!x) throw ValidationError("matrix span is not closed under the super commutator");
            l.set_bracket(i, j, to_sparse(*x));
        }
    }
    l.set_realization({module_parity, basis});
    return l;
}

LieSuperalgebra change_basis(const LieSuperalgebra& l, const Matrix& p) {
    const std::size_t n = l.dim();
    if (p.rows() != n || p.cols() != n) throw ValidationError("change of basis has the wrong size");
    const auto inv = inverse(p);
    if (!inv) throw ValidationError("change of basis is not invertible");
    std::vector<Parity> parity(n);
    std::vector<Vector> cols(n);
    for (std::size_t a = 0; a < n; ++a) {
        cols[a] = p.column(a);
        int z = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (cols[a][i].is_zero()) continue;
            if (z >= 0 && z != l.parity(i)) throw ValidationError("change of basis mixes parities");
            z = l.parity(i);
        }
        parity[a] = static_cast<Parity>(z < 0 ? 0 : z);
    }
    LieSuperalgebra out(parity);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) out.set_bracket(a, b, to_sparse(inv->apply(l.bracket(cols[a], cols[b]))));
    }
    if (l.realization()) {
        MatrixRealization r{l.realization()->module_parity, {}};
        for (std::size_t a = 0; a < n; ++a) {
            const std::size_t m = r.module_parity.size();
            Matrix acc(m, m);
            for (std::size_t i = 0; i < n; ++i) {
                if (!cols[a][i].is_zero()) acc = acc + l.realization()->matrices[i].scaled(cols[a][i]);
            }
            r.matrices.push_back(std::move(acc));
        }
        out.set_realization(std::move(r));
    }
    return out;
}

Subalgebra subalgebra(const LieSuperalgebra& l, const std::vector<Vector>& basis) {
    const CoordinateSystem coords(l.dim(), basis);
    std::vector<Parity> parity;
    for (const auto& v : basis) {
        int z = -1;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            if (z >= 0 && z != l.parity(i)) throw ValidationError("subalgebra basis vector is not homogeneous");
            z = l.parity(i);
        }
        if (z < 0) throw ValidationError("subalgebra basis contains zero");
        parity.push_back(static_cast<Parity>(z));
    }
    LieSuperalgebra sub(parity);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a; b < basis.size(); ++b) {
            const auto c = coords.coordinates(l.bracket(basis[a], basis[b]));
            if (!c) throw ValidationError("subspace is not closed under the bracket");
            sub.set_bracket(a, b, to_sparse(*c));
        }
    }
    std::vector<std::string> labels;
    for (const auto& v : basis) {
        const auto nz = to_sparse(v);
        labels.push_back(nz.size() == 1 && nz[0].value.is_one() ? l.label(nz[0].col) : "y" + std::to_string(labels.size()));
    }
    sub.set_labels(labels);
    std::vector<std::size_t> cartan;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const auto nz = to_sparse(basis[a]);
        if (nz.size() == 1 && std::find(l.cartan().begin(), l.cartan().end(), nz[0].col) != l.cartan().end()) {
            cartan.push_back(a);
        }
    }
    sub.set_cartan(cartan);
    return {sub, Matrix::from_columns(l.dim(), basis)};
}

bool is_ideal(const LieSuperalgebra& l, const Subspace& s) {
    for (const auto& v : s.basis_vectors()) {
        for (std::size_t i = 0; i < l.dim(); ++i) {
            Vector e(l.dim());
            e[i] = 1;
            if (!s.contains(l.bracket(e, v))) return false;
        }
    }
    return true;
}

QuotientAlgebra quotient(const LieSuperalgebra& l, const Subspace& ideal) {
    if (ideal.ambient_dim() != l.dim()) throw ValidationError("ideal lives in the wrong space");
    if (!is_ideal(l, ideal)) throw ValidationError("subspace is not an ideal");
    homogeneous_basis(ideal, l.parity());
    const auto keep = ideal.complement_indices();
    const std::size_t q = keep.size();
    Matrix projection(q, l.dim());
    for (std::size_t j = 0; j < l.dim(); ++j) {
        Vector v(l.dim());
        v[j] = 1;
        SparseVector rest = to_sparse(v);
        for (std::size_t k = 0; k < ideal.pivots().size(); ++k) {
            const Scalar c = sparse_at(rest, ideal.pivots()[k]);
            if (!c.is_zero()) axpy(rest, -c, ideal.basis().row(k));
        }
        for (std::size_t a = 0; a < q; ++a) {
            const Scalar c = sparse_at(rest, keep[a]);
            if (!c.is_zero()) projection.set(a, j, c);
        }
    }
    std::vector<Parity> parity;
    for (auto k : keep) parity.push_back(l.parity(k));
    LieSuperalgebra out(parity);
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = a; b < q; ++b) out.set_bracket(a, b, to_sparse(projection.apply(to_dense(l.bracket(keep[a], keep[b]), l.dim()))));
    }
    std::vector<std::string> labels;
    std::vector<std::size_t> cartan;
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t a = 0; a < q; ++a) {
        labels.push_back(l.label(keep[a]));
        auto has = [&](const std::vector<std::size_t>& xs) { return std::find(xs.begin(), xs.end(), keep[a]) != xs.end(); };
        if (has(l.cartan())) cartan.push_back(a);
        if (has(l.nilpos())) pos.push_back(a);
        if (has(l.nilneg())) neg.push_back(a);
    }
    out.set_labels(labels);
    out.set_cartan(cartan);
    out.set_nilpos(pos);
    out.set_nilneg(neg);
    Matrix section(l.dim(), q);
    for (std::size_t a = 0; a < q; ++a) section.set(keep[a], a, 1);
    return {out, projection, section};
}

Subspace bracket_span(const LieSuperalgebra& l, const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != l.dim() || b.ambient_dim() != l.dim()) throw ValidationError("bracket_span: dimension mismatch");
    std::vector<Vector> out;
    const auto va = a.basis_vectors();
    const auto vb = b.basis_vectors();
    for (const auto& x : va) {
        for (const auto& y : vb) out.push_back(l.bracket(x, y));
    }
    return Subspace::span(l.dim(), out);
}

Subspace parity_part(const LieSuperalgebra& l, Parity z) {
    return Subspace::coordinate(l.dim(), l.indices_of_parity(z));
}

std::vector<Vector> homogeneous_basis(const Subspace& s, const std::vector<Parity>& parity) {
    // The echelon basis of a graded subspace is homogeneous, and conversely.
    std::vector<Vector> even;
    std::vector<Vector> odd;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        const auto& row = s.basis().row(r);
        const Parity z = parity[row.front().col];
        for (const auto& e : row) {
            if (parity[e.col] != z) throw ValidationError("subspace is not graded");
        }
        (z ? odd : even).push_back(to_dense(row, s.ambient_dim()));
    }
    for (auto& v : odd) even.push_back(std::move(v));
    return even;
}

}  // namespace superext
