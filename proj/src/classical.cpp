#include "superext/classical.hpp"

#include "superext/errors.hpp"
#include "superext/guards.hpp"
#include "superext/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace superext {

namespace {

std::string unit_label(std::size_t n, std::size_t a, std::size_t b) {
    if (n <= 9) return "E" + std::to_string(a + 1) + std::to_string(b + 1);
    return "E(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

std::string label_of(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (const auto& e : m.row(i)) {
            const Scalar& c = e.value;
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
            out += coef + unit_label(m.rows(), i, e.col);
        }
    }
    return out.empty() ? "0" : out;
}

// Triangular data from a regular diagonal element d: [d, X] = w X decides the sign of X.
void record_triangular(LieSuperalgebra& l, const std::vector<Matrix>& basis, const Vector& d, bool odd_by_degree) {
    std::vector<std::size_t> cartan;
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (odd_by_degree && l.parity(k) == 1) {
            ((*l.z_grading())[k] > 0 ? pos : neg).push_back(k);
            continue;
        }
        const Matrix& x = basis[k];
        Scalar w;
        bool set = false;
        for (std::size_t i = 0; i < x.rows() && !set; ++i) {
            for (const auto& e : x.row(i)) {
                w = d[i] - d[e.col];
                set = true;
                break;
            }
        }
        if (w.is_zero()) {
            if (x.is_diagonal() && l.parity(k) == 0) cartan.push_back(k);
        } else if (sgn(w.re()) > 0) {
            pos.push_back(k);
        } else {
            neg.push_back(k);
        }
    }
    l.set_cartan(cartan);
    l.set_nilpos(pos);
    l.set_nilneg(neg);
}

LieSuperalgebra finish(const std::vector<Matrix>& basis, const std::vector<Parity>& module_parity,
                       const char* what) {
    LieSuperalgebra l = from_matrix_basis(basis, module_parity);
    std::vector<std::string> labels;
    for (const auto& m : basis) labels.push_back(label_of(m));
    l.set_labels(labels);
    (void)what;
    return l;
}

std::vector<Parity> block_parity(std::size_t m, std::size_t n) {
    std::vector<Parity> p(m, 0);
    p.insert(p.end(), n, 1);
    return p;
}

Vector descending(std::size_t n, long start, long step) {
    Vector d;
    for (std::size_t k = 0; k < n; ++k) d.emplace_back(start - step * static_cast<long>(k));
    return d;
}

}  // namespace

ClassicalKind parse_classical_kind(const std::string& name) {
    if (name == "gl") return ClassicalKind::gl;
    if (name == "sl") return ClassicalKind::sl;
    if (name == "osp") return ClassicalKind::osp;
    if (name == "p") return ClassicalKind::p;
    if (name == "q") return ClassicalKind::q;
    throw ValidationError("unknown classical family \"" + name + "\" (expected gl, sl, osp, p, q)");
}

LieSuperalgebra build_classical(ClassicalKind kind, std::size_t m, std::size_t n) {
    switch (kind) {
        case ClassicalKind::gl: return gl(m, n);
        case ClassicalKind::sl: return sl(m, n);
        case ClassicalKind::osp: return osp_1_2n(n);
        case ClassicalKind::p: return periplectic(n);
        case ClassicalKind::q: return queer(n);
    }
    throw ValidationError("unknown classical family");
}

LieSuperalgebra gl(std::size_t m, std::size_t n) {
    const std::size_t size = m + n;
    if (size == 0) throw ValidationError("gl(0|0) is empty");
    check_algebra_dim(size * size, "gl(m|n)");
    std::vector<Matrix> basis;
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) basis.push_back(Matrix::unit(size, size, a, b));
    }
    LieSuperalgebra l = finish(basis, block_parity(m, n), "gl");
    record_triangular(l, basis, descending(size, static_cast<long>(size), 1), false);
    require_valid(l, "gl(m|n)");
    return l;
}

LieSuperalgebra sl(std::size_t m, std::size_t n) {
    const std::size_t size = m + n;
    if (size < 2) throw ValidationError("sl(m|n) requires m + n >= 2");
    check_algebra_dim(size * size - 1, "sl(m|n)");
    const auto p = block_parity(m, n);
    std::vector<Matrix> basis;
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            if (a != b) {
                basis.push_back(Matrix::unit(size, size, a, b));
            } else if (a + 1 < size) {
                Matrix h = Matrix::unit(size, size, a, a);
                h.set(a + 1, a + 1, Scalar((p[a] ^ p[a + 1]) ? 1 : -1));
                basis.push_back(h);
            }
        }
    }
    LieSuperalgebra l = finish(basis, p, "sl");
    record_triangular(l, basis, descending(size, static_cast<long>(size), 1), false);
    require_valid(l, "sl(m|n)");
    return l;
}

LieSuperalgebra osp_1_2n(std::size_t n) {
    if (n == 0) throw ValidationError("osp(1|2n) requires n >= 1");
    const std::size_t size = 1 + 2 * n;
    check_algebra_dim(2 * n * n + 3 * n, "osp(1|2n)");
    const auto p = block_parity(1, 2 * n);
    Matrix gram(size, size);
    gram.set(0, 0, 1);
    for (std::size_t k = 0; k < n; ++k) {
        gram.set(1 + k, 1 + n + k, 1);
        gram.set(1 + n + k, 1 + k, -1);
    }
    std::vector<Matrix> basis;
    for (Parity z = 0; z < 2; ++z) {
        std::vector<std::pair<std::size_t, std::size_t>> unknowns;
        for (std::size_t c = 0; c < size; ++c) {
            for (std::size_t d = 0; d < size; ++d) {
                if ((p[c] ^ p[d]) == z) unknowns.emplace_back(c, d);
            }
        }
        // B(X e_a, e_b) + (-1)^{|X||a|} B(e_a, X e_b) = 0 for all a, b.
        MatrixBuilder eqs(size * size, unknowns.size());
        for (std::size_t a = 0; a < size; ++a) {
            const Scalar s((z & p[a]) ? -1 : 1);
            for (std::size_t b = 0; b < size; ++b) {
                for (std::size_t u = 0; u < unknowns.size(); ++u) {
                    const auto [c, d] = unknowns[u];
                    if (d == a) eqs.add(a * size + b, u, gram.at(c, b));
                    if (d == b) eqs.add(a * size + b, u, s * gram.at(a, c));
                }
            }
        }
        const Subspace ker = kernel_basis(eqs.build());
        for (const auto& v : ker.basis_vectors()) {
            Matrix x(size, size);
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                if (!v[u].is_zero()) x.set(unknowns[u].first, unknowns[u].second, v[u]);
            }
            basis.push_back(std::move(x));
        }
    }
    LieSuperalgebra l = finish(basis, p, "osp");
    Vector d{0};
    for (std::size_t k = 0; k < n; ++k) d.emplace_back(static_cast<long>(n - k));
    for (std::size_t k = 0; k < n; ++k) d.emplace_back(-static_cast<long>(n - k));
    record_triangular(l, basis, d, false);
    require_valid(l, "osp(1|2n)");
    return l;
}

LieSuperalgebra periplectic(std::size_t n) {
    if (n < 2) throw ValidationError("p(n) requires n >= 2");
    const std::size_t r = n + 1;
    const std::size_t size = 2 * r;
    check_algebra_dim(2 * r * r - 1, "p(n)");
    const auto p = block_parity(r, r);
    std::vector<Matrix> basis;
    std::vector<int> degree;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            Matrix x(size, size);
            if (i != j) {
                x.set(i, j, 1);
                x.set(r + j, r + i, -1);
            } else if (i + 1 < r) {
                x.set(i, i, 1);
                x.set(i + 1, i + 1, -1);
                x.set(r + i, r + i, -1);
                x.set(r + i + 1, r + i + 1, 1);
            } else {
                continue;
            }
            basis.push_back(std::move(x));
            degree.push_back(0);
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            Matrix x(size, size);
            x.set(i, r + j, 1);
            x.set(j, r + i, 1);
            basis.push_back(std::move(x));
            degree.push_back(1);
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            Matrix x(size, size);
            x.set(r + i, j, 1);
            x.set(r + j, i, -1);
            basis.push_back(std::move(x));
            degree.push_back(-1);
        }
    }
    LieSuperalgebra l = finish(basis, p, "p");
    l.set_z_grading(degree);
    Vector d;
    for (std::size_t i = 0; i < r; ++i) d.emplace_back(static_cast<long>(n) - 2 * static_cast<long>(i));
    for (std::size_t i = 0; i < r; ++i) d.emplace_back(-(static_cast<long>(n) - 2 * static_cast<long>(i)));
    record_triangular(l, basis, d, true);
    require_valid(l, "p(n)");
    return l;
}

LieSuperalgebra queer(std::size_t n) {
    if (n == 0) throw ValidationError("q(n) requires n >= 1");
    const std::size_t size = 2 * n;
    check_algebra_dim(2 * n * n, "q(n)");
    const auto p = block_parity(n, n);
    std::vector<Matrix> basis;
    for (Parity z = 0; z < 2; ++z) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Matrix x(size, size);
                if (z == 0) {
                    x.set(i, j, 1);
                    x.set(n + i, n + j, 1);
                } else {
                    x.set(i, n + j, 1);
                    x.set(n + i, j, 1);
                }
                basis.push_back(std::move(x));
            }
        }
    }
    LieSuperalgebra l = finish(basis, p, "q");
    Vector d = descending(n, static_cast<long>(n), 1);
    const Vector dd = d;
    d.insert(d.end(), dd.begin(), dd.end());
    // Odd diagonal elements have weight zero and stay outside the triangular data.
    std::vector<std::size_t> cartan;
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (Parity z = 0; z < 2; ++z) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t k = z * n * n + i * n + j;
                if (i < j) pos.push_back(k);
                if (i > j) neg.push_back(k);
                if (i == j && z == 0) cartan.push_back(k);
            }
        }
    }
    l.set_cartan(cartan);
    l.set_nilpos(pos);
    l.set_nilneg(neg);
    require_valid(l, "q(n)");
    return l;
}

}  // namespace superext

namespace superext {

namespace {

mpq_class real_part(const Scalar& s, const char* what) {
    if (!s.is_real()) throw ValidationError(std::string(what) + ": weight lattice needs real weights");
    return s.re();
}

mpz_class denominator_lcm(const std::vector<Vector>& rows) {
    mpz_class den = 1;
    for (const auto& r : rows) {
        for (const auto& x : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.re().get_den_mpz_t());
    }
    return den;
}

// Rows of rational vectors times den, as integers.
IntMatrix scale_to_int(const std::vector<Vector>& rows, const mpz_class& den) {
    IntMatrix out;
    for (const auto& r : rows) {
        std::vector<mpz_class> row;
        for (const auto& x : r) {
            const mpq_class v = x.re() * den;
            row.push_back(v.get_num());
        }
        out.push_back(std::move(row));
    }
    return out;
}

Matrix to_matrix(const IntMatrix& a, std::size_t cols) {
    Matrix m(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (a[i][j] != 0) m.set(i, j, Scalar(mpq_class(a[i][j])));
        }
    }
    return m;
}

Vector combine(const std::vector<Vector>& basis, const Vector& coords, std::size_t ambient) {
    Vector out(ambient);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_zero()) continue;
        for (std::size_t j = 0; j < ambient; ++j) out[j] += coords[k] * basis[k][j];
    }
    return out;
}

// Z-basis of the column span of an integer matrix (rows x cols), via Smith form.
std::vector<Vector> column_lattice(const IntMatrix& m, std::size_t rows, std::size_t cols) {
    const SmithForm f = smith_normal_form(m, cols);
    const auto uinv = inverse(to_matrix(f.u, rows));
    if (!uinv) throw OracleMismatch("Smith form: U is not invertible");
    std::vector<Vector> out;
    for (std::size_t k = 0; k < f.diagonal.size(); ++k) {
        if (f.diagonal[k] == 0) continue;
        Vector v = uinv->column(k);
        for (auto& x : v) x *= Scalar(mpq_class(f.diagonal[k]));
        out.push_back(std::move(v));
    }
    return out;
}

bool supported_in(const Vector& v, const std::vector<std::size_t>& idx) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero() && std::find(idx.begin(), idx.end(), j) == idx.end()) return false;
    }
    return true;
}

bool lex_positive(const Vector& w) {
    for (const auto& x : w) {
        if (sgn(x.re()) != 0) return sgn(x.re()) > 0;
        if (sgn(x.im()) != 0) return sgn(x.im()) > 0;
    }
    return false;
}

}  // namespace

std::vector<Vector> basis_weights(const LieSuperalgebra& l) {
    if (l.cartan().empty()) throw ValidationError("algebra has no recorded Cartan subalgebra");
    std::vector<Matrix> ads;
    for (auto h : l.cartan()) ads.push_back(l.ad(h));
    std::vector<Vector> out(l.dim());
    for (std::size_t j = 0; j < l.dim(); ++j) {
        for (const auto& a : ads) {
            const Vector col = a.column(j);
            for (std::size_t i = 0; i < col.size(); ++i) {
                if (i != j && !col[i].is_zero()) {
                    throw NonDiagonalizable("basis vector " + l.label(j) + " is not a Cartan weight vector");
                }
            }
            out[j].push_back(col[j]);
        }
    }
    return out;
}

std::size_t RootData::cartan_dim() const {
    if (!roots.empty()) return roots.front().weight.size();
    if (!weight_lattice.empty()) return weight_lattice.front().size();
    return 0;
}

std::vector<mpz_class> RootData::weight_class(const Vector& weight) const {
    if (class_map.empty()) return {};
    const CoordinateSystem cs(weight.size(), weight_lattice);
    const auto c = cs.coordinates(weight);
    if (!c) throw ValidationError("weight lies outside the span of the roots");
    std::vector<mpz_class> ints;
    for (const auto& x : *c) {
        if (!x.is_integer()) throw ValidationError("weight is not integral");
        ints.push_back(x.re().get_num());
    }
    std::vector<mpz_class> out;
    for (std::size_t k = 0; k < class_map.size(); ++k) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < ints.size(); ++j) s += class_map[k][j] * ints[j];
        if (quotient[k] != 0) {
            s %= quotient[k];
            if (s < 0) s += quotient[k];
        }
        out.push_back(s);
    }
    return out;
}

std::string RootData::quotient_string() const {
    if (quotient.empty()) return "0";
    std::string out;
    for (const auto& d : quotient) {
        if (!out.empty()) out += " x ";
        out += d == 0 ? std::string("Z") : "Z/" + d.get_str();
    }
    return out;
}

RootData root_data(const LieSuperalgebra& l) {
    if (l.cartan().empty()) throw ValidationError("algebra has no recorded Cartan subalgebra");
    const std::size_t r = l.cartan().size();
    std::vector<Matrix> ads;
    for (auto h : l.cartan()) ads.push_back(l.ad(h));
    std::vector<WeightSpace> spaces;
    try {
        spaces = simultaneous_eigenspaces(ads, l.dim());
    } catch (const NonDiagonalizable&) {
        basis_weights(l);
        throw;
    }

    RootData out;
    std::vector<std::pair<Vector, std::vector<Vector>>> root_vectors;  // even parts, for coroots
    for (const auto& space : spaces) {
        if (std::all_of(space.weight.begin(), space.weight.end(), [](const Scalar& x) { return x.is_zero(); })) continue;
        const auto homogeneous = homogeneous_basis(Subspace::span(l.dim(), space.basis), l.parity());
        std::array<std::vector<Vector>, 2> parts;
        for (const auto& v : homogeneous) {
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (!v[j].is_zero()) {
                    parts[l.parity(j)].push_back(v);
                    break;
                }
            }
        }
        for (Parity z = 0; z < 2; ++z) {
            if (parts[z].empty()) continue;
            Root root{space.weight, z, parts[z].size(), false};
            root.positive = l.nilpos().empty() ? lex_positive(space.weight) : supported_in(parts[z].front(), l.nilpos());
            out.roots.push_back(root);
        }
        root_vectors.emplace_back(space.weight, parts[0]);
    }

    // Coroots from even pairs [e, f] with e in g_alpha, f in g_{-alpha}.
    std::vector<Vector> cartan_units;
    for (auto h : l.cartan()) {
        Vector e(l.dim());
        e[h] = 1;
        cartan_units.push_back(e);
    }
    const CoordinateSystem cartan_cs(l.dim(), cartan_units);
    for (const auto& [alpha, evens] : root_vectors) {
        if (evens.empty() || !lex_positive(alpha)) continue;
        Vector minus = alpha;
        for (auto& x : minus) x = -x;
        auto it = std::find_if(root_vectors.begin(), root_vectors.end(), [&](const auto& p) { return p.first == minus; });
        if (it == root_vectors.end()) continue;
        bool found = false;
        for (const auto& e : evens) {
            for (const auto& f : it->second) {
                const auto c = cartan_cs.coordinates(l.bracket(e, f));
                if (!c) continue;
                Scalar value;
                for (std::size_t k = 0; k < r; ++k) value += (*c)[k] * alpha[k];
                if (value.is_zero()) continue;
                Vector h = *c;
                const Scalar s = Scalar(2) / value;
                for (auto& x : h) x *= s;
                out.coroots.push_back(std::move(h));
                found = true;
                break;
            }
            if (found) break;
        }
    }

    // Span of the roots and lattice data in coordinates along a root basis W.
    std::vector<Vector> w_basis;
    Echelon ech(r);
    for (const auto& root : out.roots) {
        if (ech.insert(to_sparse(root.weight))) w_basis.push_back(root.weight);
    }
    const std::size_t s = w_basis.size();
    if (s == 0) return out;
    for (const auto& v : w_basis) {
        for (const auto& x : v) real_part(x, "root data");
    }
    const CoordinateSystem w_cs(r, w_basis);
    std::vector<Vector> root_coords;
    for (const auto& root : out.roots) root_coords.push_back(w_cs.require(root.weight, "root data: root outside span"));

    std::vector<Vector> pairing;  // coroot x W
    for (const auto& c : out.coroots) {
        Vector row;
        for (const auto& w : w_basis) {
            Scalar v;
            for (std::size_t k = 0; k < r; ++k) v += c[k] * w[k];
            row.push_back(v);
        }
        pairing.push_back(std::move(row));
    }
    const bool full = !pairing.empty() && rank(Matrix::from_rows(s, [&] {
        std::vector<SparseVector> rows;
        for (const auto& p : pairing) rows.push_back(to_sparse(p));
        return rows;
    }())) == s;

    if (!full) {
        // Lambda := Q; the quotient is trivial.
        out.lattice_from_coroots = false;
        std::vector<Vector> transposed(s, Vector(root_coords.size()));
        for (std::size_t j = 0; j < root_coords.size(); ++j) {
            for (std::size_t k = 0; k < s; ++k) transposed[k][j] = root_coords[j][k];
        }
        const mpz_class den = denominator_lcm(transposed);
        for (auto v : column_lattice(scale_to_int(transposed, den), s, root_coords.size())) {
            for (auto& x : v) x /= Scalar(mpq_class(den));
            out.root_lattice.push_back(combine(w_basis, v, r));
        }
        out.weight_lattice = out.root_lattice;
        return out;
    }

    out.lattice_from_coroots = true;
    const mpz_class den = denominator_lcm(pairing);
    const SmithForm k_form = smith_normal_form(scale_to_int(pairing, den), s);
    const auto v_inv = inverse(to_matrix(k_form.v, s));
    if (!v_inv) throw OracleMismatch("Smith form: V is not invertible");
    std::vector<mpq_class> step(s);
    for (std::size_t k = 0; k < s; ++k) step[k] = mpq_class(den, k_form.diagonal[k]);
    for (auto& q : step) q.canonicalize();
    std::vector<Vector> lambda_w;  // Lambda basis in W coordinates
    for (std::size_t k = 0; k < s; ++k) {
        Vector v(s);
        for (std::size_t j = 0; j < s; ++j) v[j] = Scalar(mpq_class(k_form.v[j][k] * step[k]));
        lambda_w.push_back(v);
        out.weight_lattice.push_back(combine(w_basis, v, r));
    }

    IntMatrix m(s, std::vector<mpz_class>(root_coords.size()));
    for (std::size_t j = 0; j < root_coords.size(); ++j) {
        const Vector nu = v_inv->apply(root_coords[j]);
        for (std::size_t k = 0; k < s; ++k) {
            const Scalar c = nu[k] / Scalar(step[k]);
            if (!c.is_integer()) throw OracleMismatch("root is not integral on the coroots");
            m[k][j] = c.re().get_num();
        }
    }
    for (const auto& v : column_lattice(m, s, root_coords.size())) out.root_lattice.push_back(combine(out.weight_lattice, v, r));
    const SmithForm q_form = smith_normal_form(m, root_coords.size());
    for (std::size_t k = 0; k < s; ++k) {
        const mpz_class d = k < q_form.diagonal.size() ? q_form.diagonal[k] : mpz_class(0);
        if (d == 1) continue;
        out.quotient.push_back(d);
        out.class_map.push_back(q_form.u[k]);
    }
    return out;
}

}  // namespace superext
