#include "superext/linalg.hpp"

#include "superext/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace superext {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

struct Component {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

// Connected components of the row/column incidence graph; empty rows are dropped.
std::vector<Component> components(const Matrix& m) {
    UnionFind uf(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto& r = m.row(i);
        for (std::size_t k = 1; k < r.size(); ++k) uf.unite(r[0].col, r[k].col);
    }
    std::unordered_map<std::size_t, std::size_t> slot;
    std::vector<Component> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto& r = m.row(i);
        if (r.empty()) continue;
        const std::size_t root = uf.find(r[0].col);
        auto [it, inserted] = slot.try_emplace(root, out.size());
        if (inserted) out.emplace_back();
        out[it->second].rows.push_back(i);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        auto it = slot.find(uf.find(j));
        if (it != slot.end()) out[it->second].cols.push_back(j);
    }
    return out;
}

std::size_t component_rank(const Matrix& m, const Component& c) {
    std::unordered_map<std::size_t, std::size_t> local;
    local.reserve(c.cols.size());
    for (std::size_t k = 0; k < c.cols.size(); ++k) local.emplace(c.cols[k], k);
    std::vector<SparseVector> rows;
    rows.reserve(c.rows.size());
    for (std::size_t i : c.rows) {
        SparseVector r;
        r.reserve(m.row(i).size());
        for (const auto& e : m.row(i)) r.push_back({local.at(e.col), e.value});
        rows.push_back(std::move(r));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SparseVector& a, const SparseVector& b) { return a.size() < b.size(); });
    Echelon e(c.cols.size());
    for (auto& r : rows) {
        e.insert(std::move(r));
        if (e.rank() == c.cols.size()) break;
    }
    return e.rank();
}

using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::size_t modular_component_rank(std::vector<ModRow> rows, std::size_t cols, std::uint64_t p) {
    std::sort(rows.begin(), rows.end(), [](const ModRow& a, const ModRow& b) { return a.size() < b.size(); });
    std::vector<std::ptrdiff_t> pivot_of(cols, -1);
    std::vector<ModRow> pivots;
    for (auto& row : rows) {
        while (!row.empty() && pivot_of[row.front().first] >= 0) {
            const auto& pr = pivots[static_cast<std::size_t>(pivot_of[row.front().first])];
            const std::uint64_t f = p - row.front().second;
            ModRow out;
            out.reserve(row.size() + pr.size());
            std::size_t i = 0;
            std::size_t j = 0;
            while (i < row.size() || j < pr.size()) {
                if (j == pr.size() || (i < row.size() && row[i].first < pr[j].first)) {
                    out.push_back(row[i++]);
                } else if (i == row.size() || pr[j].first < row[i].first) {
                    out.emplace_back(pr[j].first, mulmod(f, pr[j].second, p));
                    ++j;
                } else {
                    const std::uint64_t s = (row[i].second + mulmod(f, pr[j].second, p)) % p;
                    if (s != 0) out.emplace_back(row[i].first, s);
                    ++i;
                    ++j;
                }
            }
            row = std::move(out);
        }
        if (row.empty()) continue;
        const std::uint64_t inv = powmod(row.front().second, p - 2, p);
        for (auto& e : row) e.second = mulmod(e.second, inv, p);
        pivot_of[row.front().first] = static_cast<std::ptrdiff_t>(pivots.size());
        pivots.push_back(std::move(row));
    }
    return pivots.size();
}

struct Prime {
    std::uint64_t p;
    std::uint64_t root;
};

std::uint64_t sqrt_minus_one(std::uint64_t p) {
    for (std::uint64_t g = 2;; ++g) {
        const std::uint64_t r = powmod(g, (p - 1) / 4, p);
        if (mulmod(r, r, p) == p - 1) return r;
    }
}

const std::array<Prime, 2>& check_primes() {
    static const std::array<Prime, 2> primes = {Prime{2147483629ULL, sqrt_minus_one(2147483629ULL)},
                                                Prime{2147483549ULL, sqrt_minus_one(2147483549ULL)}};
    return primes;
}

void modular_assert(const Matrix& m, std::size_t exact) {
    bool checked = false;
    for (const auto& pr : check_primes()) {
        const auto r = modular_rank(m, pr.p, pr.root);
        if (!r) continue;
        checked = true;
        if (*r == exact) return;
    }
    if (checked) {
        throw OracleMismatch("exact rank " + std::to_string(exact) + " disagrees with modular rank on a " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    }
}

}  // namespace

Echelon::Echelon(std::size_t cols) : pivot_of_(cols, -1) {}

void Echelon::reduce(SparseVector& row) const {
    while (!row.empty()) {
        const auto p = pivot_of_[row.front().col];
        if (p < 0) return;
        const Scalar f = -row.front().value;
        axpy(row, f, rows_[static_cast<std::size_t>(p)]);
    }
}

bool Echelon::insert(SparseVector row) {
    reduce(row);
    if (row.empty()) return false;
    const Scalar inv = row.front().value.inverse();
    if (!inv.is_one()) {
        for (auto& e : row) e.value *= inv;
    }
    pivot_of_[row.front().col] = static_cast<std::ptrdiff_t>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

bool Echelon::in_span(SparseVector row) const {
    reduce(row);
    return row.empty();
}

std::vector<std::size_t> Echelon::pivots() const {
    std::vector<std::size_t> out;
    for (const auto& r : rows_) out.push_back(r.front().col);
    std::sort(out.begin(), out.end());
    return out;
}

Matrix Echelon::rref() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().col < rows_[b].front().col; });
    std::vector<SparseVector> reduced(rows_.size());
    std::vector<std::ptrdiff_t> slot_of_col(pivot_of_.size(), -1);
    for (std::size_t k = 0; k < order.size(); ++k) slot_of_col[rows_[order[k]].front().col] = static_cast<std::ptrdiff_t>(k);
    for (std::size_t k = order.size(); k-- > 0;) {
        SparseVector row = rows_[order[k]];
        std::size_t pos = 1;
        while (pos < row.size()) {
            const auto s = slot_of_col[row[pos].col];
            if (s < 0) {
                ++pos;
                continue;
            }
            const Scalar f = -row[pos].value;
            const std::size_t col = row[pos].col;
            axpy(row, f, reduced[static_cast<std::size_t>(s)]);
            pos = static_cast<std::size_t>(std::lower_bound(row.begin(), row.end(), col,
                                                            [](const Entry& e, std::size_t c) { return e.col < c; }) -
                                           row.begin());
        }
        reduced[k] = std::move(row);
    }
    return Matrix::from_rows(pivot_of_.size(), std::move(reduced));
}

RowReduction row_reduce(const Matrix& m) {
    std::vector<std::size_t> order(m.rows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });
    Echelon e(m.cols());
    for (std::size_t i : order) {
        if (e.rank() == m.cols()) break;
        e.insert(m.row(i));
    }
    RowReduction out;
    out.rank = e.rank();
    out.pivots = e.pivots();
    Matrix r = e.rref();
    std::vector<SparseVector> rows;
    for (std::size_t i = 0; i < r.rows(); ++i) rows.push_back(r.row(i));
    rows.resize(m.rows());
    out.rref = Matrix::from_rows(m.cols(), std::move(rows));
    return out;
}

std::size_t rank(const Matrix& m, const RankOptions& options) {
    std::size_t total = 0;
    if (options.split_components) {
        for (const auto& c : components(m)) total += component_rank(m, c);
    } else {
        total = row_reduce(m).rank;
    }
    if (m.cols() > options.modular_threshold) modular_assert(m, total);
    return total;
}

std::array<std::size_t, 2> rank_by_parity(const Matrix& m, const std::vector<Parity>& col_parity,
                                          const RankOptions& options) {
    if (col_parity.size() != m.cols()) throw ValidationError("rank_by_parity: parity vector length mismatch");
    std::array<std::size_t, 2> out{0, 0};
    for (const auto& c : components(m)) {
        const Parity z = col_parity[c.cols.front()];
        for (std::size_t j : c.cols) {
            if (col_parity[j] != z) throw ValidationError("matrix does not preserve parity");
        }
        out[z] += component_rank(m, c);
    }
    if (m.cols() > options.modular_threshold) modular_assert(m, out[0] + out[1]);
    return out;
}

std::optional<std::size_t> modular_rank(const Matrix& m, std::uint64_t p, std::uint64_t root) {
    std::size_t total = 0;
    for (const auto& c : components(m)) {
        std::unordered_map<std::size_t, std::size_t> local;
        for (std::size_t k = 0; k < c.cols.size(); ++k) local.emplace(c.cols[k], k);
        std::vector<ModRow> rows;
        rows.reserve(c.rows.size());
        for (std::size_t i : c.rows) {
            ModRow r;
            for (const auto& e : m.row(i)) {
                const auto v = e.value.mod_p(p, root);
                if (!v) return std::nullopt;
                if (*v != 0) r.emplace_back(local.at(e.col), *v);
            }
            rows.push_back(std::move(r));
        }
        total += modular_component_rank(std::move(rows), c.cols.size(), p);
    }
    return total;
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Echelon e(ambient);
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw ValidationError("span: vector length mismatch");
        e.insert(to_sparse(v));
    }
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = e.rref();
    s.pivots_ = e.pivots();
    return s;
}

Subspace Subspace::span_rows(const Matrix& rows) {
    Echelon e(rows.cols());
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        if (e.rank() == rows.cols()) break;
        e.insert(rows.row(i));
    }
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = e.rref();
    s.pivots_ = e.pivots();
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    return span_rows(Matrix::identity(ambient));
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
    std::vector<SparseVector> rows;
    for (std::size_t k : indices) {
        if (k >= ambient) throw ValidationError("coordinate subspace index out of range");
        rows.push_back({{k, Scalar(1)}});
    }
    return span_rows(Matrix::from_rows(ambient, std::move(rows)));
}

std::vector<Vector> Subspace::basis_vectors() const {
    return basis_.to_dense();
}

Matrix Subspace::basis_columns() const {
    return basis_.transpose();
}

bool Subspace::contains(const Vector& v) const {
    return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw ValidationError("subspace ambient dimension mismatch");
    for (const auto& v : other.basis_vectors()) {
        if (!contains(v)) return false;
    }
    return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw ValidationError("coordinates: vector length mismatch");
    Vector c(pivots_.size());
    SparseVector rest = to_sparse(v);
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        c[k] = v[pivots_[k]];
        axpy(rest, -c[k], basis_.row(k));
    }
    if (!rest.empty()) return std::nullopt;
    return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (k < pivots_.size() && pivots_[k] == j) {
            ++k;
        } else {
            out.push_back(j);
        }
    }
    return out;
}

Subspace kernel_basis(const Matrix& m) {
    const auto rr = row_reduce(m);
    std::vector<std::ptrdiff_t> pivot_row(m.cols(), -1);
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) pivot_row[rr.pivots[k]] = static_cast<std::ptrdiff_t>(k);
    std::vector<std::vector<Entry>> kernel_rows;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (pivot_row[j] < 0) free_cols.push_back(j);
    }
    std::unordered_map<std::size_t, std::size_t> free_slot;
    for (std::size_t k = 0; k < free_cols.size(); ++k) free_slot.emplace(free_cols[k], k);
    std::vector<std::map<std::size_t, Scalar>> acc(free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) acc[k].emplace(free_cols[k], Scalar(1));
    for (std::size_t r = 0; r < rr.rank; ++r) {
        for (const auto& e : rr.rref.row(r)) {
            auto it = free_slot.find(e.col);
            if (it != free_slot.end()) acc[it->second].emplace(rr.pivots[r], -e.value);
        }
    }
    std::vector<SparseVector> rows;
    rows.reserve(free_cols.size());
    for (auto& a : acc) {
        SparseVector v;
        for (auto& [c, val] : a) v.push_back({c, val});
        rows.push_back(std::move(v));
    }
    return Subspace::span_rows(Matrix::from_rows(m.cols(), std::move(rows)));
}

Subspace column_space(const Matrix& m) {
    return Subspace::span_rows(m.transpose());
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw ValidationError("subspace ambient dimension mismatch");
    return Subspace::span_rows(Matrix::vstack({a.basis(), b.basis()}));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw ValidationError("subspace ambient dimension mismatch");
    // Solve sum x_k a_k = sum y_l b_l and map the x part back.
    const Matrix joint = Matrix::hstack({a.basis_columns(), b.basis_columns().scaled(Scalar(-1))});
    const Subspace ker = kernel_basis(joint);
    std::vector<Vector> vecs;
    const Matrix ac = a.basis_columns();
    for (const auto& v : ker.basis_vectors()) {
        Vector x(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(a.dim()));
        vecs.push_back(ac.apply(x));
    }
    return Subspace::span(a.ambient_dim(), vecs);
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
    SubspaceOps out;
    out.sum = sum(a, b);
    out.intersection = intersection(a, b);
    out.quotient_dim = out.sum.dim() - b.dim();
    return out;
}

std::size_t quotient_dim(const Subspace& a) {
    return a.ambient_dim() - a.dim();
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw ValidationError("solve: right-hand side length mismatch");
    Matrix aug = Matrix::hstack({a, Matrix::from_columns(a.rows(), {b})});
    const auto rr = row_reduce(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols());
    for (std::size_t k = 0; k < rr.rank; ++k) x[rr.pivots[k]] = rr.rref.at(k, a.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw ValidationError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    const auto rr = row_reduce(Matrix::hstack({a, Matrix::identity(n)}));
    if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
    std::vector<std::size_t> right(n);
    std::iota(right.begin(), right.end(), n);
    std::vector<std::size_t> top(n);
    std::iota(top.begin(), top.end(), 0);
    return rr.rref.select_rows(top).select_cols(right);
}


CoordinateSystem::CoordinateSystem(std::size_t ambient, std::vector<Vector> basis) : basis_(std::move(basis)) {
    const std::size_t k = basis_.size();
    std::vector<SparseVector> rows;
    rows.reserve(k);
    for (std::size_t r = 0; r < k; ++r) {
        if (basis_[r].size() != ambient) throw ValidationError("coordinate system: vector length mismatch");
        SparseVector row = to_sparse(basis_[r]);
        row.push_back({ambient + r, Scalar(1)});
        rows.push_back(std::move(row));
    }
    const auto rr = row_reduce(Matrix::from_rows(ambient + k, std::move(rows)));
    for (std::size_t r = 0; r < rr.rank; ++r) {
        if (rr.pivots[r] >= ambient) throw ValidationError("coordinate system: vectors are linearly dependent");
    }
    span_ = Subspace::span(ambient, basis_);
    std::vector<std::size_t> top(k);
    std::iota(top.begin(), top.end(), 0);
    std::vector<std::size_t> right(k);
    std::iota(right.begin(), right.end(), ambient);
    echelon_to_basis_ = rr.rref.select_rows(top).select_cols(right);
}

std::optional<Vector> CoordinateSystem::coordinates(const Vector& v) const {
    const auto c = span_.coordinates(v);
    if (!c) return std::nullopt;
    return echelon_to_basis_.transpose().apply(*c);
}

Vector CoordinateSystem::require(const Vector& v, const char* what) const {
    auto c = coordinates(v);
    if (!c) throw ValidationError(std::string(what) + ": vector outside the span");
    return *c;
}

Vector CoordinateSystem::combine(const Vector& coords) const {
    Vector out(ambient_dim());
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_zero()) continue;
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (!basis_[k][j].is_zero()) out[j] += coords[k] * basis_[k][j];
        }
    }
    return out;
}

}  // namespace superext
