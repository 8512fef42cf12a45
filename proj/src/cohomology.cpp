#include "superext/cohomology.hpp"

#include "superext/classical.hpp"
#include "superext/errors.hpp"
#include "superext/guards.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

namespace superext {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

std::string weight_key(const Vector& w) {
    std::string key;
    for (const auto& x : w) {
        key += x.to_string();
        key += ';';
    }
    return key;
}

Vector negated(Vector w) {
    for (auto& x : w) x = -x;
    return w;
}

bool key_less(std::uint32_t a, std::uint32_t b, const std::vector<Parity>& par) {
    return par[a] != par[b] ? par[a] < par[b] : a < b;
}

// x (front) ^ w rewritten canonically; returns 0 when an even index repeats.
int insert_front(const Word& w, std::uint32_t x, const std::vector<Parity>& par, Word& out) {
    std::size_t pos = 0;
    int sign = 1;
    while (pos < w.size() && key_less(w[pos], x, par)) {
        if (!(par[w[pos]] && par[x])) sign = -sign;
        ++pos;
    }
    if (pos < w.size() && w[pos] == x && !par[x]) return 0;
    out.clear();
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    out.push_back(x);
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
    return sign;
}

Word without(const Word& w, std::size_t i) {
    Word out;
    out.reserve(w.size() - 1);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k != i) out.push_back(w[k]);
    }
    return out;
}

Word without(const Word& w, std::size_t i, std::size_t j) {
    Word out;
    out.reserve(w.size() - 2);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k != i && k != j) out.push_back(w[k]);
    }
    return out;
}

void enumerate_words(const std::vector<std::uint32_t>& even, const std::vector<std::uint32_t>& odd, std::size_t p,
                     std::vector<Word>& out) {
    for (std::size_t i = 0; i <= std::min(p, even.size()); ++i) {
        const std::size_t j = p - i;
        if (j > 0 && odd.empty()) continue;
        std::vector<std::size_t> e(i);
        for (std::size_t k = 0; k < i; ++k) e[k] = k;
        while (true) {
            std::vector<std::size_t> o(j, 0);
            while (true) {
                Word w;
                w.reserve(p);
                for (auto k : e) w.push_back(even[k]);
                for (auto k : o) w.push_back(odd[k]);
                out.push_back(std::move(w));
                // next non-decreasing tuple over the odd indices
                std::ptrdiff_t k = static_cast<std::ptrdiff_t>(j) - 1;
                while (k >= 0 && o[static_cast<std::size_t>(k)] == odd.size() - 1) --k;
                if (k < 0) break;
                const std::size_t v = o[static_cast<std::size_t>(k)] + 1;
                for (std::size_t t = static_cast<std::size_t>(k); t < j; ++t) o[t] = v;
            }
            // next strictly increasing tuple over the even indices
            std::ptrdiff_t k = static_cast<std::ptrdiff_t>(i) - 1;
            while (k >= 0 && e[static_cast<std::size_t>(k)] == even.size() - i + static_cast<std::size_t>(k)) --k;
            if (k < 0) break;
            ++e[static_cast<std::size_t>(k)];
            for (std::size_t t = static_cast<std::size_t>(k) + 1; t < i; ++t) e[t] = e[t - 1] + 1;
        }
    }
}

std::vector<Matrix> transposes(const Representation& r) {
    std::vector<Matrix> out;
    out.reserve(r.actions().size());
    for (const auto& m : r.actions()) out.push_back(m.transpose());
    return out;
}

struct Adapted {
    Representation module;
    std::optional<Matrix> change;  // columns: new basis in old coordinates
};

Adapted adapt(const Representation& m) {
    const auto& l = m.algebra();
    if (l.cartan().empty()) return {m, std::nullopt};
    bool diagonal = true;
    for (auto h : l.cartan()) diagonal = diagonal && m.action(h).is_diagonal();
    if (diagonal) return {m, std::nullopt};
    try {
        const Matrix p = Matrix::from_columns(m.dim(), weight_basis(m));
        return {change_basis(m, p), p};
    } catch (const NonDiagonalizable&) {
        return {m, std::nullopt};
    }
}

struct Prepared {
    Representation module;
    std::optional<Matrix> change;
    std::optional<ToralData> toral;
};

Prepared prepare(const Representation& m, const ComplexOptions& options) {
    if (!options.toral) return {m, std::nullopt, std::nullopt};
    Adapted a = adapt(m);
    auto td = toral_data(a.module.algebra(), a.module);
    if (!td) return {m, std::nullopt, std::nullopt};
    return {std::move(a.module), std::move(a.change), std::move(td)};
}

ChainBasis make_basis(const Prepared& p, std::size_t degree, Side side) {
    return ChainBasis(p.module.algebra(), p.module.parity(), degree, side, p.toral ? &*p.toral : nullptr);
}

std::array<std::size_t, 2> ranks(const Matrix& d, const ChainBasis& source) {
    if (d.rows() == 0 || d.cols() == 0) return {0, 0};
    return rank_by_parity(d, source.parity());
}

[[noreturn]] void leaves_weight_zero() {
    throw OracleMismatch("differential leaves the weight-zero subcomplex");
}

}  // namespace

std::size_t exterior_dim(std::size_t even, std::size_t odd, std::size_t p) {
    std::size_t total = 0;
    for (std::size_t i = 0; i <= p; ++i) {
        const std::size_t j = p - i;
        const std::size_t sym = odd == 0 ? (j == 0 ? 1 : 0) : binomial(odd + j - 1, j);
        total += binomial(even, i) * sym;
    }
    return total;
}

std::size_t ChainBasis::WordHash::operator()(const Word& w) const {
    std::size_t h = w.size();
    for (auto x : w) h = h * 1000003u ^ x;
    return h;
}

ChainBasis::ChainBasis(const LieSuperalgebra& l, const std::vector<Parity>& module_parity, std::size_t p, Side side,
                       const ToralData* toral)
    : degree_(p), module_dim_(module_parity.size()) {
    std::vector<std::uint32_t> even;
    std::vector<std::uint32_t> odd;
    for (std::size_t i = 0; i < l.dim(); ++i) (l.parity(i) ? odd : even).push_back(static_cast<std::uint32_t>(i));
    const std::size_t raw = exterior_dim(even.size(), odd.size(), p);
    if (!toral && raw * module_dim_ > guard_chain_dim()) {
        throw GuardExceeded("chain space of degree " + std::to_string(p) + " has dimension " +
                            std::to_string(raw * module_dim_) + ", above the guard " + std::to_string(guard_chain_dim()));
    }
    enumerate_words(even, odd, p, words_);
    word_index_.reserve(words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k) word_index_.emplace(words_[k], k);

    std::map<std::string, std::vector<std::size_t>> by_weight;
    if (toral) {
        for (std::size_t m = 0; m < module_dim_; ++m) by_weight[weight_key(toral->module_weights[m])].push_back(m);
    }
    const std::size_t cartan = toral && !toral->algebra_weights.empty() ? toral->algebra_weights[0].size() : 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        Parity wp = 0;
        for (auto x : words_[k]) wp ^= l.parity(x);
        auto push = [&](std::size_t m) {
            element_index_.emplace(static_cast<std::uint64_t>(k) * module_dim_ + m, elements_.size());
            elements_.emplace_back(k, m);
            parity_.push_back(wp ^ module_parity[m]);
        };
        if (!toral) {
            for (std::size_t m = 0; m < module_dim_; ++m) push(m);
            continue;
        }
        Vector wt(cartan);
        for (auto x : words_[k]) {
            for (std::size_t c = 0; c < cartan; ++c) wt[c] += toral->algebra_weights[x][c];
        }
        const auto it = by_weight.find(weight_key(side == Side::chains ? negated(wt) : wt));
        if (it == by_weight.end()) continue;
        for (auto m : it->second) push(m);
        if (elements_.size() > guard_chain_dim()) {
            throw GuardExceeded("weight-zero chain space of degree " + std::to_string(p) + " exceeds the guard " +
                                std::to_string(guard_chain_dim()));
        }
    }
}

std::array<std::size_t, 2> ChainBasis::parity_dims() const {
    std::array<std::size_t, 2> out{0, 0};
    for (auto z : parity_) ++out[z];
    return out;
}

std::ptrdiff_t ChainBasis::find(const Word& w, std::size_t m) const {
    const auto wi = word_index_.find(w);
    if (wi == word_index_.end()) return -1;
    const auto ei = element_index_.find(static_cast<std::uint64_t>(wi->second) * module_dim_ + m);
    return ei == element_index_.end() ? -1 : static_cast<std::ptrdiff_t>(ei->second);
}

std::optional<ToralData> toral_data(const LieSuperalgebra& l, const Representation& m) {
    if (l.cartan().empty()) return std::nullopt;
    ToralData out;
    try {
        out.algebra_weights = basis_weights(l);
    } catch (const NonDiagonalizable&) {
        return std::nullopt;
    }
    for (auto h : l.cartan()) {
        if (!m.action(h).is_diagonal()) return std::nullopt;
    }
    out.module_weights.assign(m.dim(), Vector());
    for (std::size_t k = 0; k < m.dim(); ++k) {
        for (auto h : l.cartan()) out.module_weights[k].push_back(m.action(h).at(k, k));
    }
    return out;
}

Representation weight_adapted(const Representation& m) {
    return adapt(m).module;
}

Matrix boundary(const Representation& v, const ChainBasis& source, const ChainBasis& target) {
    const auto& l = v.algebra();
    const std::vector<Matrix> vt = transposes(v);
    const bool reduced = source.dim() != source.words().size() * source.module_dim();
    MatrixBuilder b(target.dim(), source.dim());
    Word scratch;
    for (std::size_t col = 0; col < source.dim(); ++col) {
        const Word& w = source.word(col);
        const std::size_t m = source.module_index(col);
        const std::size_t n = w.size();
        std::vector<int> z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = l.parity(w[i]);
        // first sum, 1-based i: eps_i = i + |x_i|(|x_{i+1}| + ... + |x_n|)
        int tail = 0;
        for (std::size_t i = n; i-- > 0;) {
            const int eps = static_cast<int>(i + 1) + z[i] * tail;
            tail += z[i];
            const Word rest = without(w, i);
            for (const auto& e : vt[w[i]].row(m)) {
                const auto row = target.find(rest, e.col);
                if (row < 0) {
                    if (reduced) leaves_weight_zero();
                    continue;
                }
                b.add(static_cast<std::size_t>(row), col, eps % 2 ? -e.value : e.value);
            }
        }
        // second sum: eps_{j,k} = j + k + eta_j + eta_k + |x_j||x_k|, eta_i = |x_i|(|x_1| + ... + |x_{i-1}|)
        std::vector<int> eta(n);
        int head = 0;
        for (std::size_t i = 0; i < n; ++i) {
            eta[i] = z[i] * head;
            head += z[i];
        }
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const SparseVector& br = l.bracket(w[j], w[k]);
                if (br.empty()) continue;
                const int eps = static_cast<int>(j + 1 + k + 1) + eta[j] + eta[k] + z[j] * z[k];
                const Word rest = without(w, j, k);
                for (const auto& e : br) {
                    const int s = insert_front(rest, static_cast<std::uint32_t>(e.col), l.parity(), scratch);
                    if (s == 0) continue;
                    const auto row = target.find(scratch, m);
                    if (row < 0) {
                        if (reduced) leaves_weight_zero();
                        continue;
                    }
                    const Scalar c = (eps % 2 ? -e.value : e.value) * Scalar(s);
                    b.add(static_cast<std::size_t>(row), col, c);
                }
            }
        }
    }
    return b.build();
}

Matrix coboundary(const Representation& mod, const ChainBasis& source, const ChainBasis& target) {
    const auto& l = mod.algebra();
    const bool reduced = source.dim() != source.words().size() * source.module_dim();
    MatrixBuilder b(target.dim(), source.dim());
    Word scratch;
    for (std::size_t row = 0; row < target.dim(); ++row) {
        const Word& w = target.word(row);
        const std::size_t m = target.module_index(row);
        const int zf = target.parity(row);
        const std::size_t n = w.size();
        std::vector<int> z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = l.parity(w[i]);
        std::vector<int> eta(n);
        int head = 0;
        for (std::size_t i = 0; i < n; ++i) {
            eta[i] = z[i] * head;
            head += z[i];
        }
        // (-1)^{i + eta_i + |x_i||f|} x_i . f(x_0 ... x_i^ ... x_p)
        for (std::size_t i = 0; i < n; ++i) {
            const int eps = static_cast<int>(i) + eta[i] + z[i] * zf;
            const Word rest = without(w, i);
            for (const auto& e : mod.action(w[i]).row(m)) {
                const auto col = source.find(rest, e.col);
                if (col < 0) {
                    if (reduced) leaves_weight_zero();
                    continue;
                }
                b.add(row, static_cast<std::size_t>(col), eps % 2 ? -e.value : e.value);
            }
        }
        // (-1)^{j + k + eta_j + eta_k + |x_j||x_k|} f([x_j, x_k] ^ ...)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const SparseVector& br = l.bracket(w[j], w[k]);
                if (br.empty()) continue;
                const int eps = static_cast<int>(j + k) + eta[j] + eta[k] + z[j] * z[k];
                const Word rest = without(w, j, k);
                for (const auto& e : br) {
                    const int s = insert_front(rest, static_cast<std::uint32_t>(e.col), l.parity(), scratch);
                    if (s == 0) continue;
                    const auto col = source.find(scratch, m);
                    if (col < 0) {
                        if (reduced) leaves_weight_zero();
                        continue;
                    }
                    const Scalar c = (eps % 2 ? -e.value : e.value) * Scalar(s);
                    b.add(row, static_cast<std::size_t>(col), c);
                }
            }
        }
    }
    return b.build();
}

Representation hom_module(const Representation& v, const Representation& u) {
    if (v.algebra_ptr() != u.algebra_ptr() && !(v.algebra() == u.algebra())) {
        throw ValidationError("hom module between modules over different algebras");
    }
    const auto& l = v.algebra();
    const std::size_t nv = v.dim();
    const std::size_t nu = u.dim();
    std::vector<Parity> parity;
    for (std::size_t a = 0; a < nu; ++a) {
        for (std::size_t c = 0; c < nv; ++c) parity.push_back(u.parity(a) ^ v.parity(c));
    }
    std::vector<Matrix> action;
    for (std::size_t x = 0; x < l.dim(); ++x) {
        MatrixBuilder b(nu * nv, nu * nv);
        // rho_U(x) E
        for (std::size_t a = 0; a < nu; ++a) {
            for (const auto& e : u.action(x).row(a)) {
                for (std::size_t c = 0; c < nv; ++c) b.add(a * nv + c, e.col * nv + c, e.value);
            }
        }
        // -(-1)^{|x||E|} E rho_V(x): (E rho_V)_{a c'} = sum_c E_{a c} rho_V(x)_{c c'}
        for (std::size_t c = 0; c < nv; ++c) {
            for (const auto& e : v.action(x).row(c)) {
                for (std::size_t a = 0; a < nu; ++a) {
                    const bool flip = l.parity(x) && (u.parity(a) ^ v.parity(c));
                    b.add(a * nv + e.col, a * nv + c, flip ? e.value : -e.value);
                }
            }
        }
        action.push_back(b.build());
    }
    return Representation(v.algebra_ptr(), std::move(parity), std::move(action));
}

CochainComplex cochain_complex(const Representation& m, std::size_t p_max, const ComplexOptions& options) {
    const Prepared prep = prepare(m, options);
    CochainComplex out;
    out.module = prep.module;
    out.reduced = prep.toral.has_value();
    for (std::size_t p = 0; p <= p_max + 1; ++p) out.spaces.push_back(make_basis(prep, p, Side::cochains));
    for (std::size_t p = 0; p <= p_max; ++p) out.d.push_back(coboundary(prep.module, out.spaces[p], out.spaces[p + 1]));
    return out;
}

Matrix coboundary(std::size_t p, const Representation& v, const Representation& u) {
    const Representation h = hom_module(v, u);
    const ChainBasis source(h.algebra(), h.parity(), p, Side::cochains);
    const ChainBasis target(h.algebra(), h.parity(), p + 1, Side::cochains);
    return coboundary(h, source, target);
}

DegreeDims homology(const Representation& v, std::size_t p, const ComplexOptions& options) {
    const Prepared prep = prepare(v, options);
    const ChainBasis here = make_basis(prep, p, Side::chains);
    const ChainBasis up = make_basis(prep, p + 1, Side::chains);
    std::array<std::size_t, 2> out_rank{0, 0};
    if (p > 0) out_rank = ranks(boundary(prep.module, here, make_basis(prep, p - 1, Side::chains)), here);
    const auto in_rank = ranks(boundary(prep.module, up, here), up);
    const auto dims = here.parity_dims();
    return {p, dims[0] - out_rank[0] - in_rank[0], dims[1] - out_rank[1] - in_rank[1], {}};
}

DegreeDims cohomology(const Representation& u, std::size_t p, const ComplexOptions& options) {
    const Prepared prep = prepare(u, options);
    const ChainBasis here = make_basis(prep, p, Side::cochains);
    const ChainBasis up = make_basis(prep, p + 1, Side::cochains);
    const Matrix d_out = coboundary(prep.module, here, up);
    const auto out_rank = ranks(d_out, here);
    std::array<std::size_t, 2> in_rank{0, 0};
    Matrix d_in;
    if (p > 0) {
        const ChainBasis down = make_basis(prep, p - 1, Side::cochains);
        d_in = coboundary(prep.module, down, here);
        in_rank = ranks(d_in, down);
    }
    const auto dims = here.parity_dims();
    DegreeDims out{p, dims[0] - out_rank[0] - in_rank[0], dims[1] - out_rank[1] - in_rank[1], {}};
    if (options.cocycles && out.total() > 0) {
        Echelon ech(here.dim());
        if (p > 0) {
            const Matrix t = d_in.transpose();
            for (std::size_t k = 0; k < t.rows(); ++k) ech.insert(t.row(k));
        }
        for (const auto& z : homogeneous_basis(kernel_basis(d_out), here.parity())) {
            if (ech.insert(to_sparse(z))) out.cocycles.push_back(z);
        }
        if (out.cocycles.size() != out.total()) throw OracleMismatch("cocycle representatives do not match the dimension");
    }
    return out;
}

namespace {

std::atomic<std::size_t> g_ext_checks{0};

}  // namespace

DegreeDims ext(const Representation& v, const Representation& u, std::size_t p, const ComplexOptions& options) {
    DegreeDims via_hom = cohomology(hom_module(v, u), p, options);
    ComplexOptions plain = options;
    plain.cocycles = false;
    const DegreeDims via_tensor = cohomology(tensor(dual(v), u), p, plain);
    if (!(via_hom == via_tensor)) {
        std::ostringstream os;
        os << "Ext^" << p << " from the hom cocomplex is (" << via_hom.even << "|" << via_hom.odd
           << ") but H^" << p << "(L, V* (x) U) is (" << via_tensor.even << "|" << via_tensor.odd << ")";
        throw OracleMismatch(os.str());
    }
    ++g_ext_checks;
    return via_hom;
}

std::size_t ext_checks_passed() {
    return g_ext_checks.load();
}

LhsReport lhs_low_degree(const Representation& m, const Subspace& ideal, const ComplexOptions& options) {
    const auto& l = m.algebra();
    if (ideal.ambient_dim() != l.dim()) throw ValidationError("ideal lives in the wrong space");
    if (!is_ideal(l, ideal)) throw ValidationError("subspace is not an ideal");
    const auto i_basis = homogeneous_basis(ideal, l.parity());
    for (const auto& y : i_basis) {
        if (!m.act(y).is_zero()) throw ValidationError("the ideal does not act by zero on the module");
    }
    const QuotientAlgebra q = quotient(l, ideal);
    const AlgebraPtr lq = share(q.algebra);
    std::vector<std::size_t> keep;
    for (std::size_t a = 0; a < q.section.cols(); ++a) {
        const Vector s = q.section.column(a);
        std::size_t nz = 0;
        std::size_t at = 0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (!s[k].is_zero()) {
                ++nz;
                at = k;
            }
        }
        if (nz != 1 || s[at] != Scalar(1)) throw OracleMismatch("quotient section is not a coordinate section");
        keep.push_back(at);
    }
    std::vector<Matrix> mq_action;
    for (auto k : keep) mq_action.push_back(m.action(k));
    const Representation mq(lq, m.parity(), std::move(mq_action));

    // I/[I,I] with the induced L/I action.
    const Subspace derived = bracket_span(l, ideal, ideal);
    std::vector<Vector> adapted = homogeneous_basis(derived, l.parity());
    const std::size_t nd = adapted.size();
    Echelon ech(l.dim());
    for (const auto& v : adapted) ech.insert(to_sparse(v));
    std::vector<Parity> ab_parity;
    for (const auto& v : i_basis) {
        if (ech.insert(to_sparse(v))) {
            adapted.push_back(v);
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (!v[k].is_zero()) {
                    ab_parity.push_back(l.parity(k));
                    break;
                }
            }
        }
    }
    const CoordinateSystem cs(l.dim(), adapted);
    const std::size_t s = adapted.size() - nd;
    auto tail = [&](const Vector& y) {
        const Vector c = cs.require(y, "bracket left the ideal");
        return Vector(c.begin() + static_cast<std::ptrdiff_t>(nd), c.end());
    };
    auto project_to_ideal = [&](const Vector& y) {
        const Vector back = q.section.apply(q.projection.apply(y));
        Vector out(y.size());
        for (std::size_t k = 0; k < y.size(); ++k) out[k] = y[k] - back[k];
        return out;
    };
    std::vector<Matrix> ab_action;
    for (auto k : keep) {
        Vector e(l.dim());
        e[k] = 1;
        std::vector<Vector> cols;
        for (std::size_t r = 0; r < s; ++r) cols.push_back(tail(l.bracket(e, adapted[nd + r])));
        ab_action.push_back(Matrix::from_columns(s, cols));
    }
    const Representation ab(lq, ab_parity, std::move(ab_action));

    LhsReport out;
    const HomSpace equivariant = hom_space(ab, mq);
    out.e01 = {0, equivariant.even.size(), equivariant.odd.size(), {}};
    out.e10 = cohomology(mq, 1, options);
    out.e20 = cohomology(mq, 2, options);
    out.h1 = cohomology(m, 1, options);

    // Transgression: phi |-> class of omega(a ^ b) = -phi(pi_I [x_a, x_b]) in H^2(L/I, M).
    const Prepared prep = prepare(mq, options);
    const ChainBasis c1 = make_basis(prep, 1, Side::cochains);
    const ChainBasis c2 = make_basis(prep, 2, Side::cochains);
    const Matrix d1 = coboundary(prep.module, c1, c2);
    const std::optional<Matrix> back = prep.change ? inverse(*prep.change) : std::nullopt;
    Echelon image(c2.dim());
    const Matrix d1t = d1.transpose();
    for (std::size_t k = 0; k < d1t.rows(); ++k) image.insert(d1t.row(k));
    std::array<std::size_t, 2> hit{0, 0};
    std::vector<Vector> tails;
    for (const auto& w : c2.words()) {
        Vector xa(l.dim());
        Vector xb(l.dim());
        xa[keep[w[0]]] = 1;
        xb[keep[w[1]]] = 1;
        tails.push_back(tail(project_to_ideal(l.bracket(xa, xb))));
    }
    for (Parity z = 0; z < 2; ++z) {
        for (const auto& f : z ? equivariant.odd : equivariant.even) {
            SparseVector omega;
            std::map<std::size_t, Scalar> acc;
            for (std::size_t wi = 0; wi < c2.words().size(); ++wi) {
                Vector val = f.apply(tails[wi]);
                if (back) val = back->apply(val);
                for (std::size_t k = 0; k < val.size(); ++k) {
                    if (val[k].is_zero()) continue;
                    const auto idx = c2.find(c2.words()[wi], k);
                    if (idx < 0) {
                        if (prep.toral) leaves_weight_zero();
                        throw OracleMismatch("transgression target outside the cochain basis");
                    }
                    acc[static_cast<std::size_t>(idx)] -= val[k];
                }
            }
            for (const auto& [k, v] : acc) {
                if (!v.is_zero()) omega.push_back({k, v});
            }
            if (image.insert(std::move(omega))) ++hit[z];
        }
    }
    out.transgression_kernel = {0, equivariant.even.size() - hit[0], equivariant.odd.size() - hit[1], {}};
    out.reconstruction_check = out.h1.even == out.e10.even + out.transgression_kernel.even &&
                               out.h1.odd == out.e10.odd + out.transgression_kernel.odd;
    if (!out.reconstruction_check) {
        std::ostringstream os;
        os << "low-degree reconstruction failed: H^1 = (" << out.h1.even << "|" << out.h1.odd << "), E2^{1,0} = ("
           << out.e10.even << "|" << out.e10.odd << "), ker d2 = (" << out.transgression_kernel.even << "|"
           << out.transgression_kernel.odd << ")";
        throw OracleMismatch(os.str());
    }
    return out;
}

}  // namespace superext
