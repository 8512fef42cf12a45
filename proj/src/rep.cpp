#include "superext/rep.hpp"

#include "superext/errors.hpp"
#include "superext/guards.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace superext {

namespace {

constexpr std::size_t kMaxIssues = 64;
// Burnside closure is run directly below this dimension; larger modules try the
// highest-weight certificate first.
constexpr std::size_t kBurnsideDim = 64;

Matrix power_of(const Matrix& m, std::size_t k) {
    Matrix out = Matrix::identity(m.rows());
    for (std::size_t e = 0; e < k; ++e) out = out * m;
    return out;
}

Parity vector_parity(const Vector& v, const std::vector<Parity>& parity, const char* what) {
    int z = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (z >= 0 && z != parity[i]) throw ValidationError(std::string(what) + ": vector is not homogeneous");
        z = parity[i];
    }
    if (z < 0) throw ValidationError(std::string(what) + ": zero vector");
    return static_cast<Parity>(z);
}

std::array<Vector, 2> parity_parts(const Vector& v, const std::vector<Parity>& parity) {
    std::array<Vector, 2> out{Vector(v.size()), Vector(v.size())};
    for (std::size_t i = 0; i < v.size(); ++i) out[parity[i]][i] = v[i];
    return out;
}

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Vector flatten(const Matrix& m) {
    Vector v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (const auto& e : m.row(i)) v[i * m.cols() + e.col] = e.value;
    }
    return v;
}

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
    MatrixBuilder b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (!v[i * cols + j].is_zero()) b.add(i, j, v[i * cols + j]);
        }
    }
    return b.build();
}

Subspace closure(const LieSuperalgebra& l, const std::vector<std::size_t>& gens) {
    std::vector<Vector> start;
    for (auto g : gens) {
        Vector e(l.dim());
        e[g] = 1;
        start.push_back(e);
    }
    Subspace w = Subspace::span(l.dim(), start);
    while (true) {
        Subspace next = sum(w, bracket_span(l, w, w));
        if (next.dim() == w.dim()) return w;
        w = std::move(next);
    }
}

struct GenCache {
    std::mutex mutex;
    std::map<const LieSuperalgebra*, std::pair<std::weak_ptr<const LieSuperalgebra>, std::vector<std::size_t>>> entries;
};

GenCache& gen_cache() {
    static GenCache cache;
    return cache;
}

const std::vector<std::size_t>& cached_generators(const AlgebraPtr& l) {
    auto& cache = gen_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.entries.find(l.get());
        if (it != cache.entries.end() && !it->second.first.expired() && it->second.first.lock() == l) {
            return it->second.second;
        }
    }
    auto gens = generating_set(*l);
    std::lock_guard<std::mutex> lock(cache.mutex);
    for (auto it = cache.entries.begin(); it != cache.entries.end();) {
        it = it->second.first.expired() ? cache.entries.erase(it) : std::next(it);
    }
    auto& slot = cache.entries[l.get()];
    slot = {l, std::move(gens)};
    return slot.second;
}

// Even equivariant Q: V -> W with Q|_W = id; nullopt when W has no invariant complement.
std::optional<Matrix> invariant_projection(const Representation& r, const std::vector<Vector>& w_basis) {
    const std::size_t n = r.dim();
    const std::size_t k = w_basis.size();
    const Representation sub = on_subspace(r, w_basis);
    std::vector<Parity> wpar = sub.parity();
    std::vector<std::ptrdiff_t> var(k * n, -1);
    std::size_t nvars = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (wpar[i] == r.parity(j)) var[i * n + j] = static_cast<std::ptrdiff_t>(nvars++);
        }
    }
    const auto& gens = cached_generators(r.algebra_ptr());
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;
    std::size_t row = 0;
    Vector rhs;
    for (auto g : gens) {
        const Matrix& a = r.action(g);
        const Matrix& aw = sub.action(g);
        // (Q a - aw Q)_{ic} = 0
        std::vector<std::map<std::size_t, Scalar>> eq(k * n);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (var[i * n + j] < 0) continue;
                for (const auto& e : a.row(j)) eq[i * n + e.col][static_cast<std::size_t>(var[i * n + j])] += e.value;
            }
            for (const auto& e : aw.row(i)) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (var[e.col * n + c] < 0) continue;
                    eq[i * n + c][static_cast<std::size_t>(var[e.col * n + c])] -= e.value;
                }
            }
        }
        for (auto& m : eq) {
            bool any = false;
            for (auto& [c, v] : m) {
                if (!v.is_zero()) {
                    entries.emplace_back(row, c, v);
                    any = true;
                }
            }
            if (any) {
                rhs.emplace_back(0);
                ++row;
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
            bool any = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (var[i * n + j] < 0 || w_basis[c][j].is_zero()) continue;
                entries.emplace_back(row, static_cast<std::size_t>(var[i * n + j]), w_basis[c][j]);
                any = true;
            }
            if (!any && i != c) continue;
            rhs.emplace_back(i == c ? 1 : 0);
            ++row;
        }
    }
    MatrixBuilder b(row, nvars);
    for (const auto& [i, j, v] : entries) b.add(i, j, v);
    const auto sol = solve(b.build(), rhs);
    if (!sol) return std::nullopt;
    MatrixBuilder q(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (var[i * n + j] >= 0 && !(*sol)[static_cast<std::size_t>(var[i * n + j])].is_zero()) {
                q.add(i, j, (*sol)[static_cast<std::size_t>(var[i * n + j])]);
            }
        }
    }
    return q.build();
}

std::vector<Vector> graded_basis(const Subspace& s, const std::vector<Parity>& parity) {
    return homogeneous_basis(s, parity);
}

// Highest-weight certificate: a single hw line that generates the module.
bool hw_certificate(const Representation& r) {
    const auto& l = r.algebra();
    if (l.cartan().empty() || l.nilpos().empty()) return false;
    try {
        const WeightData wd = weight_theory(r);
        std::vector<Vector> hw;
        for (const auto& s : wd.highest) hw.insert(hw.end(), s.basis.begin(), s.basis.end());
        if (hw.size() != 1) return false;
        return spin_up(r, hw).dim() == r.dim();
    } catch (const NonDiagonalizable&) {
        return false;
    }
}

bool burnside(const Representation& r) {
    const std::size_t n = r.dim();
    std::vector<Matrix> gens;
    for (auto g : cached_generators(r.algebra_ptr())) gens.push_back(r.action(g));
    gens.push_back(r.parity_operator());
    Echelon ech(n * n);
    std::deque<Matrix> queue;
    const Matrix id = Matrix::identity(n);
    ech.insert(to_sparse(flatten(id)));
    queue.push_back(id);
    while (!queue.empty() && ech.rank() < n * n) {
        const Matrix m = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            Matrix p = m * g;
            if (ech.insert(to_sparse(flatten(p)))) queue.push_back(std::move(p));
        }
    }
    return ech.rank() == n * n;
}

struct Leaf {
    Representation rep;
    Matrix basis;
};

void split(const Representation& r, const Matrix& basis, std::vector<Leaf>& out);

bool try_split_along(const Representation& r, const Matrix& basis, const Subspace& w, std::vector<Leaf>& out) {
    const auto w_basis = graded_basis(w, r.parity());
    const auto q = invariant_projection(r, w_basis);
    if (!q) {
        std::ostringstream os;
        os << "submodule of superdimension " << on_subspace(r, w_basis).superdim() << " inside "
           << r.superdim() << " has no invariant complement";
        throw IndecomposableDetected(os.str());
    }
    const auto c_basis = graded_basis(kernel_basis(*q), r.parity());
    const Matrix wb = Matrix::from_columns(r.dim(), w_basis);
    const Matrix cb = Matrix::from_columns(r.dim(), c_basis);
    split(on_subspace(r, w_basis), basis * wb, out);
    split(on_subspace(r, c_basis), basis * cb, out);
    return true;
}

void split(const Representation& r, const Matrix& basis, std::vector<Leaf>& out) {
    const std::size_t n = r.dim();
    if (n == 0) return;
    if (n == 1 || hw_certificate(r) || (n <= kBurnsideDim && burnside(r))) {
        out.push_back({r, basis});
        return;
    }
    std::vector<Vector> seeds;
    if (!r.algebra().cartan().empty()) {
        try {
            for (const auto& s : weight_theory(r).highest) seeds.insert(seeds.end(), s.basis.begin(), s.basis.end());
        } catch (const NonDiagonalizable&) {
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = 1;
        seeds.push_back(e);
    }
    for (const auto& v : seeds) {
        const Subspace w = spin_up_graded(r, {v});
        if (w.dim() > 0 && w.dim() < n) {
            try_split_along(r, basis, w, out);
            return;
        }
    }
    // Every seed generates the module: split with the even commutant.
    const SuperCommutant c = super_commutant(r);
    for (const auto& m : c.even) {
        if (m.is_diagonal() && std::all_of(m.row(0).begin(), m.row(0).end(), [](const Entry&) { return true; })) {
            bool scalar = true;
            for (std::size_t i = 1; i < n && scalar; ++i) scalar = m.at(i, i) == m.at(0, 0);
            if (scalar) continue;
        }
        const Polynomial mp = minimal_polynomial(m);
        bool complete = false;
        const auto roots = polynomial_roots(mp, complete);
        if (!complete) throw SplitFieldFailure("commutant element has eigenvalues outside Q(i)");
        if (roots.size() == 1) {
            const Matrix nil = m - Matrix::identity(n).scaled(roots[0]);
            try_split_along(r, basis, kernel_basis(nil), out);
            return;
        }
        for (const auto& lambda : roots) {
            const Matrix shifted = m - Matrix::identity(n).scaled(lambda);
            const auto g = graded_basis(kernel_basis(power_of(shifted, n)), r.parity());
            split(on_subspace(r, g), basis * Matrix::from_columns(n, g), out);
        }
        return;
    }
    if (burnside(r)) {
        out.push_back({r, basis});
        return;
    }
    throw IndecomposableDetected("module of superdimension " + r.superdim() +
                                 " is reducible but its even commutant is one-dimensional");
}

}  // namespace

Representation::Representation(AlgebraPtr algebra, std::vector<Parity> parity, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), parity_(std::move(parity)), action_(std::move(action)) {
    if (!algebra_) throw ValidationError("representation without an algebra");
    if (action_.size() != algebra_->dim()) throw ValidationError("representation needs one matrix per basis element");
    for (const auto& m : action_) {
        if (m.rows() != parity_.size() || m.cols() != parity_.size()) {
            throw ValidationError("representation matrix has the wrong size");
        }
    }
}

Matrix Representation::act(const Vector& x) const {
    Matrix out(dim(), dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) out = out + action_[i].scaled(x[i]);
    }
    return out;
}

std::string Representation::superdim() const {
    std::size_t odd = 0;
    for (auto p : parity_) odd += p;
    return "(" + std::to_string(dim() - odd) + "|" + std::to_string(odd) + ")";
}

Matrix Representation::parity_operator() const {
    Matrix p(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) p.set(i, i, Scalar(parity_[i] ? -1 : 1));
    return p;
}

ValidationReport validate(const Representation& r) {
    ValidationReport report;
    const auto& l = r.algebra();
    for (std::size_t i = 0; i < l.dim(); ++i) {
        for (std::size_t a = 0; a < r.dim(); ++a) {
            for (const auto& e : r.action(i).row(a)) {
                if (r.parity(a) != (r.parity(e.col) ^ l.parity(i))) {
                    report.issues.push_back({"parity", {i, a, e.col}, "action shifts parity incorrectly"});
                    break;
                }
            }
            if (report.issues.size() >= kMaxIssues) return report;
        }
    }
    for (std::size_t i = 0; i < l.dim(); ++i) {
        for (std::size_t j = i; j < l.dim(); ++j) {
            Matrix lhs(r.dim(), r.dim());
            for (const auto& e : l.bracket(i, j)) lhs = lhs + r.action(e.col).scaled(e.value);
            if (lhs != supercommutator(r.action(i), l.parity(i), r.action(j), l.parity(j)) &&
                report.issues.size() < kMaxIssues) {
                report.issues.push_back({"action", {i, j}, "rho([x_i,x_j]) != [rho(x_i), rho(x_j)]"});
            }
        }
    }
    return report;
}

void require_valid(const Representation& r, const char* what) {
    const auto report = validate(r);
    if (!report.ok()) throw ValidationError(std::string(what) + " is not a representation: " + report.summary());
}

std::vector<std::size_t> generating_set(const LieSuperalgebra& l) {
    std::vector<std::size_t> order;
    auto push = [&](const std::vector<std::size_t>& idx, int parity) {
        for (auto i : idx) {
            if ((parity < 0 || l.parity(i) == parity) && std::find(order.begin(), order.end(), i) == order.end()) {
                order.push_back(i);
            }
        }
    };
    push(l.nilpos(), 1);
    push(l.nilneg(), 1);
    push(l.nilpos(), 0);
    push(l.nilneg(), 0);
    push(l.cartan(), -1);
    std::vector<std::size_t> all(l.dim());
    for (std::size_t i = 0; i < l.dim(); ++i) all[i] = i;
    push(all, -1);
    std::vector<std::size_t> gens;
    Subspace span(l.dim());
    for (auto i : order) {
        if (span.dim() == l.dim()) break;
        Vector e(l.dim());
        e[i] = 1;
        if (span.contains(e)) continue;
        gens.push_back(i);
        span = closure(l, gens);
    }
    return gens;
}

Representation trivial_rep(AlgebraPtr l, std::size_t even, std::size_t odd) {
    std::vector<Parity> p(even, 0);
    p.insert(p.end(), odd, 1);
    const std::size_t n = even + odd;
    std::vector<Matrix> action(l->dim(), Matrix(n, n));
    return Representation(std::move(l), std::move(p), std::move(action));
}

Representation adjoint_rep(AlgebraPtr l) {
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < l->dim(); ++i) action.push_back(l->ad(i));
    auto p = l->parity();
    return Representation(std::move(l), std::move(p), std::move(action));
}

Representation defining_rep(AlgebraPtr l) {
    if (!l->realization()) throw ValidationError("algebra has no matrix realization for a defining representation");
    const auto& real = *l->realization();
    return Representation(l, real.module_parity, real.matrices);
}

Representation dual(const Representation& r) {
    const auto& l = r.algebra();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < l.dim(); ++i) {
        MatrixBuilder b(r.dim(), r.dim());
        for (std::size_t a = 0; a < r.dim(); ++a) {
            for (const auto& e : r.action(i).row(a)) {
                const bool flip = l.parity(i) && r.parity(a);
                b.add(e.col, a, flip ? e.value : -e.value);
            }
        }
        action.push_back(b.build());
    }
    return Representation(r.algebra_ptr(), r.parity(), std::move(action));
}

Representation tensor(const Representation& r1, const Representation& r2) {
    if (r1.algebra_ptr() != r2.algebra_ptr() && !(r1.algebra() == r2.algebra())) {
        throw ValidationError("tensor product of modules over different algebras");
    }
    check_algebra_dim(0, "tensor");
    const auto& l = r1.algebra();
    const Matrix id2 = Matrix::identity(r2.dim());
    const Matrix id1 = Matrix::identity(r1.dim());
    const Matrix p1 = r1.parity_operator();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < l.dim(); ++i) {
        action.push_back(Matrix::kron(r1.action(i), id2) + Matrix::kron(l.parity(i) ? p1 : id1, r2.action(i)));
    }
    std::vector<Parity> p;
    for (std::size_t a = 0; a < r1.dim(); ++a) {
        for (std::size_t b = 0; b < r2.dim(); ++b) p.push_back(r1.parity(a) ^ r2.parity(b));
    }
    return Representation(r1.algebra_ptr(), std::move(p), std::move(action));
}

Representation direct_sum(const Representation& r1, const Representation& r2) {
    if (r1.algebra_ptr() != r2.algebra_ptr() && !(r1.algebra() == r2.algebra())) {
        throw ValidationError("direct sum of modules over different algebras");
    }
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < r1.algebra().dim(); ++i) action.push_back(Matrix::direct_sum(r1.action(i), r2.action(i)));
    auto p = r1.parity();
    p.insert(p.end(), r2.parity().begin(), r2.parity().end());
    return Representation(r1.algebra_ptr(), std::move(p), std::move(action));
}

Representation pullback(const Representation& r, const AlgebraHom& f) {
    if (f.matrix.rows() != r.algebra().dim()) throw ValidationError("pullback: homomorphism target does not match");
    if (!(*f.target == r.algebra())) throw ValidationError("pullback: module lives over a different algebra");
    std::vector<Matrix> action;
    for (std::size_t j = 0; j < f.matrix.cols(); ++j) action.push_back(r.act(f.matrix.column(j)));
    return Representation(f.source, r.parity(), std::move(action));
}

Representation restrict_to(const Representation& r, AlgebraPtr sub, const Matrix& inclusion) {
    return pullback(r, AlgebraHom{std::move(sub), r.algebra_ptr(), inclusion});
}

Representation outer_tensor(const Representation& r1, const Representation& r2) {
    auto l = share(direct_sum(r1.algebra(), r2.algebra()));
    const Matrix id1 = Matrix::identity(r1.dim());
    const Matrix id2 = Matrix::identity(r2.dim());
    const Matrix p1 = r1.parity_operator();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < r1.algebra().dim(); ++i) action.push_back(Matrix::kron(r1.action(i), id2));
    for (std::size_t j = 0; j < r2.algebra().dim(); ++j) {
        action.push_back(Matrix::kron(r2.algebra().parity(j) ? p1 : id1, r2.action(j)));
    }
    std::vector<Parity> p;
    for (std::size_t a = 0; a < r1.dim(); ++a) {
        for (std::size_t b = 0; b < r2.dim(); ++b) p.push_back(r1.parity(a) ^ r2.parity(b));
    }
    return Representation(std::move(l), std::move(p), std::move(action));
}

Representation on_subspace(const Representation& r, const std::vector<Vector>& basis) {
    const CoordinateSystem cs(r.dim(), basis);
    std::vector<Parity> p;
    for (const auto& v : basis) p.push_back(vector_parity(v, r.parity(), "submodule basis"));
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < r.algebra().dim(); ++i) {
        std::vector<Vector> cols;
        for (const auto& v : basis) cols.push_back(cs.require(r.action(i).apply(v), "subspace is not invariant"));
        action.push_back(Matrix::from_columns(basis.size(), cols));
    }
    return Representation(r.algebra_ptr(), std::move(p), std::move(action));
}

Representation change_basis(const Representation& r, const Matrix& p) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < p.cols(); ++j) cols.push_back(p.column(j));
    if (cols.size() != r.dim()) throw ValidationError("change of basis must be square");
    return on_subspace(r, cols);
}

WeightData weight_theory(const Representation& r) {
    const auto& l = r.algebra();
    if (l.cartan().empty()) throw ValidationError("weight theory needs a recorded Cartan subalgebra");
    std::vector<Matrix> ops;
    for (auto h : l.cartan()) ops.push_back(r.action(h));
    WeightData out;
    out.spaces = simultaneous_eigenspaces(ops, r.dim());
    for (const auto& space : out.spaces) {
        const Matrix b = Matrix::from_columns(r.dim(), space.basis);
        std::vector<Matrix> blocks;
        for (auto e : l.nilpos()) blocks.push_back(r.action(e) * b);
        std::vector<Vector> hw;
        if (blocks.empty()) {
            hw = space.basis;
        } else {
            const Subspace ker = kernel_basis(Matrix::vstack(blocks));
            for (const auto& c : ker.basis_vectors()) hw.push_back(b.apply(c));
        }
        if (hw.empty()) continue;
        out.highest.push_back({space.weight, graded_basis(Subspace::span(r.dim(), hw), r.parity())});
    }
    return out;
}

std::vector<Vector> weight_basis(const Representation& r) {
    std::vector<Vector> out;
    for (const auto& space : weight_theory(r).spaces) {
        const auto g = graded_basis(Subspace::span(r.dim(), space.basis), r.parity());
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

Subspace spin_up(const Representation& r, const std::vector<Vector>& seeds) {
    const auto& gens = cached_generators(r.algebra_ptr());
    Echelon ech(r.dim());
    std::vector<SparseVector> found;
    std::deque<SparseVector> queue;
    for (const auto& v : seeds) {
        auto s = to_sparse(v);
        if (ech.insert(s)) {
            found.push_back(s);
            queue.push_back(std::move(s));
        }
    }
    while (!queue.empty() && ech.rank() < r.dim()) {
        const SparseVector v = std::move(queue.front());
        queue.pop_front();
        for (auto g : gens) {
            SparseVector w = r.action(g).apply(v);
            if (!w.empty() && ech.insert(w)) {
                found.push_back(w);
                queue.push_back(std::move(w));
            }
        }
    }
    return Subspace::span_rows(ech.rref());
}

Subspace spin_up_graded(const Representation& r, const std::vector<Vector>& seeds) {
    std::vector<Vector> parts;
    for (const auto& v : seeds) {
        for (auto& p : parity_parts(v, r.parity())) {
            if (!is_zero_vector(p)) parts.push_back(std::move(p));
        }
    }
    return spin_up(r, parts);
}

Subspace invariants(const Representation& r) {
    std::vector<Matrix> blocks;
    for (auto g : cached_generators(r.algebra_ptr())) blocks.push_back(r.action(g));
    if (blocks.empty()) return Subspace::full(r.dim());
    return kernel_basis(Matrix::vstack(blocks));
}

HomSpace hom_space(const Representation& r1, const Representation& r2) {
    if (r1.algebra_ptr() != r2.algebra_ptr() && !(r1.algebra() == r2.algebra())) {
        throw ValidationError("hom space between modules over different algebras");
    }
    const std::size_t n1 = r1.dim();
    const std::size_t n2 = r2.dim();
    const auto& l = r1.algebra();
    const auto& gens = cached_generators(r1.algebra_ptr());
    HomSpace out;
    for (Parity z = 0; z < 2; ++z) {
        std::vector<std::ptrdiff_t> var(n2 * n1, -1);
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < n2; ++i) {
            for (std::size_t j = 0; j < n1; ++j) {
                if ((r2.parity(i) ^ r1.parity(j)) == z) {
                    var[i * n1 + j] = static_cast<std::ptrdiff_t>(slots.size());
                    slots.emplace_back(i, j);
                }
            }
        }
        if (slots.empty()) continue;
        MatrixBuilder eqs(gens.size() * n2 * n1, slots.size());
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const std::size_t g = gens[gi];
            const Scalar s((z && l.parity(g)) ? -1 : 1);
            const std::size_t base = gi * n2 * n1;
            // (F rho1 - s rho2 F)_{ik}
            for (std::size_t j = 0; j < n1; ++j) {
                for (const auto& e : r1.action(g).row(j)) {
                    for (std::size_t i = 0; i < n2; ++i) {
                        if (var[i * n1 + j] >= 0) eqs.add(base + i * n1 + e.col, static_cast<std::size_t>(var[i * n1 + j]), e.value);
                    }
                }
            }
            for (std::size_t i = 0; i < n2; ++i) {
                for (const auto& e : r2.action(g).row(i)) {
                    for (std::size_t k = 0; k < n1; ++k) {
                        if (var[e.col * n1 + k] >= 0) {
                            eqs.add(base + i * n1 + k, static_cast<std::size_t>(var[e.col * n1 + k]), -s * e.value);
                        }
                    }
                }
            }
        }
        for (const auto& v : kernel_basis(eqs.build()).basis_vectors()) {
            MatrixBuilder f(n2, n1);
            for (std::size_t u = 0; u < slots.size(); ++u) {
                if (!v[u].is_zero()) f.add(slots[u].first, slots[u].second, v[u]);
            }
            (z ? out.odd : out.even).push_back(f.build());
        }
    }
    return out;
}

SuperCommutant super_commutant(const Representation& r) {
    HomSpace h = hom_space(r, r);
    SuperCommutant out{std::move(h.even), std::move(h.odd), std::nullopt};
    const std::size_t n = r.dim();
    std::vector<Matrix> candidates = out.odd;
    for (std::size_t a = 0; a < out.odd.size(); ++a) {
        for (std::size_t b = a + 1; b < out.odd.size(); ++b) candidates.push_back(out.odd[a] + out.odd[b]);
    }
    for (const auto& psi : candidates) {
        const Matrix sq = psi * psi;
        if (!sq.is_diagonal()) continue;
        const Scalar c = sq.at(0, 0);
        if (c.is_zero() || sq != Matrix::identity(n).scaled(c)) continue;
        const auto s = (-c).sqrt();
        if (!s) throw NormalizationFailure("odd endomorphism squares to " + c.to_string() + ", whose square root is outside Q(i)");
        out.phi = psi.scaled(s->inverse());
        break;
    }
    return out;
}

std::optional<Matrix> isomorphism(const Representation& r1, const Representation& r2) {
    if (r1.dim() != r2.dim()) return std::nullopt;
    const HomSpace h = hom_space(r1, r2);
    for (const auto* part : {&h.even, &h.odd}) {
        for (const auto& f : *part) {
            if (inverse(f)) return f;
        }
        if (part->size() > 1) {
            Matrix s(r2.dim(), r1.dim());
            Scalar c = 1;
            for (const auto& f : *part) {
                s = s + f.scaled(c);
                c += Scalar(1);
            }
            if (inverse(s)) return s;
        }
    }
    return std::nullopt;
}

bool is_irreducible(const Representation& r) {
    if (r.dim() == 0) return false;
    if (r.dim() == 1) return true;
    return hw_certificate(r) || burnside(r);
}

Decomposition decompose(const Representation& r) {
    std::vector<Leaf> leaves;
    split(r, Matrix::identity(r.dim()), leaves);
    Decomposition out;
    std::vector<std::size_t> reps;
    std::vector<Matrix> cols;
    for (auto& leaf : leaves) {
        std::size_t cls = reps.size();
        for (std::size_t k = 0; k < reps.size(); ++k) {
            if (isomorphism(out.summands[reps[k]].rep, leaf.rep)) {
                cls = k;
                break;
            }
        }
        if (cls == reps.size()) {
            reps.push_back(out.summands.size());
            out.multiplicities.push_back(0);
        }
        ++out.multiplicities[cls];
        cols.push_back(leaf.basis);
        out.summands.push_back({std::move(leaf.rep), std::move(leaf.basis), cls});
    }
    out.change_of_basis = cols.empty() ? Matrix(r.dim(), 0) : Matrix::hstack(cols);
    return out;
}

IrreducibleProduct irreducible_product(const Representation& r1, const Representation& r2) {
    Representation full = outer_tensor(r1, r2);
    const SuperCommutant c1 = super_commutant(r1);
    const SuperCommutant c2 = super_commutant(r2);
    if (c1.odd.empty() || c2.odd.empty()) return {std::move(full), false, std::nullopt};
    if (!c1.phi || !c2.phi) throw NormalizationFailure("odd commutant has no element squaring to a nonzero scalar");
    const Matrix j = Matrix::kron(*c1.phi * r1.parity_operator(), *c2.phi).scaled(Scalar::i());
    const std::size_t n = full.dim();
    if (j * j != Matrix::identity(n)) throw OracleMismatch("sqrt(-1) phi1 (x) phi2 is not an involution");
    const auto plus = graded_basis(kernel_basis(j - Matrix::identity(n)), full.parity());
    const auto minus = graded_basis(kernel_basis(j + Matrix::identity(n)), full.parity());
    if (2 * plus.size() != n || 2 * minus.size() != n) throw OracleMismatch("V1 (x) V2 does not split into two halves");
    Representation hat = on_subspace(full, plus);
    return {std::move(hat), true, Matrix::from_columns(n, plus)};
}

std::size_t kappa(const std::vector<Representation>& family) {
    if (family.empty()) throw ValidationError("kappa needs a nonempty family");
    Representation w = family[0];
    std::size_t k = 0;
    std::size_t total = family[0].dim();
    for (std::size_t i = 1; i < family.size(); ++i) {
        k += super_commutant(w).odd.size() * super_commutant(family[i]).odd.size();
        total *= family[i].dim();
        w = irreducible_product(w, family[i]).rep;
    }
    if ((w.dim() << k) != total) throw OracleMismatch("tensor product is not 2^kappa copies of the irreducible product");
    return k;
}

Representation build_osp12_irrep(AlgebraPtr osp12, std::size_t lambda) {
    if (osp12->superdim() != "(3|2)" || !osp12->realization() || osp12->cartan().size() != 1) {
        throw ValidationError("build_osp12_irrep needs the osp(1|2) constructor output");
    }
    if (2 * lambda + 1 > guard_dim()) {
        throw GuardExceeded("V(" + std::to_string(lambda) + ") has dimension " + std::to_string(2 * lambda + 1) +
                            " above the guard " + std::to_string(guard_dim()));
    }
    if (lambda == 0) return trivial_rep(osp12, 1);
    const Representation v1 = defining_rep(osp12);
    const std::size_t h = osp12->cartan()[0];
    auto top = [h](const Representation& r) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < r.dim(); ++i) {
            if (sgn((r.action(h).at(i, i) - r.action(h).at(best, best)).re()) > 0) best = i;
        }
        return best;
    };
    Representation v = v1;
    for (std::size_t k = 2; k <= lambda; ++k) {
        const Representation t = tensor(v, v1);
        Vector seed(t.dim());
        seed[top(v) * v1.dim() + top(v1)] = 1;
        const Subspace w = spin_up(t, {seed});
        if (w.dim() != 2 * k + 1) throw OracleMismatch("osp(1|2) highest weight module has the wrong dimension");
        const Representation sub = on_subspace(t, graded_basis(w, t.parity()));
        v = change_basis(sub, Matrix::from_columns(sub.dim(), weight_basis(sub)));
    }
    if (!is_irreducible(v)) throw OracleMismatch("V(lambda) failed the irreducibility certificate");
    return v;
}

}  // namespace superext
