#include "superext/spectral.hpp"

#include "superext/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace superext {

namespace {

struct GaussInt {
    mpz_class re;
    mpz_class im;
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Value of a monic Gaussian-integer polynomial at z.
GaussInt horner(const std::vector<GaussInt>& q, const GaussInt& z) {
    GaussInt acc{0, 0};
    for (std::size_t k = q.size(); k-- > 0;) {
        acc = mul(acc, z);
        acc.re += q[k].re;
        acc.im += q[k].im;
    }
    return acc;
}

// Divides by (y - z); assumes z is a root.
std::vector<GaussInt> deflate(const std::vector<GaussInt>& q, const GaussInt& z) {
    const std::size_t d = q.size() - 1;
    std::vector<GaussInt> out(d);
    GaussInt carry{0, 0};
    for (std::size_t k = d; k-- > 0;) {
        GaussInt t = mul(carry, z);
        carry = {q[k + 1].re + t.re, q[k + 1].im + t.im};
        out[k] = carry;
    }
    return out;
}

Polynomial monic(const Polynomial& p) {
    Polynomial q = p;
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    if (q.empty()) throw ValidationError("zero polynomial has no roots to find");
    const Scalar lead = q.back();
    for (auto& c : q) c /= lead;
    return q;
}

}  // namespace

Polynomial minimal_polynomial(const Matrix& a) {
    if (a.rows() != a.cols()) throw ValidationError("minimal polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    auto flatten = [n](const Matrix& m) {
        Vector v(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& e : m.row(i)) v[i * n + e.col] = e.value;
        }
        return v;
    };
    std::vector<Vector> powers;
    Matrix p = Matrix::identity(n);
    Echelon e(n * n);
    for (std::size_t k = 0; k <= n; ++k) {
        Vector v = flatten(p);
        if (!e.insert(to_sparse(v))) {
            const auto c = solve(Matrix::from_columns(n * n, powers), v);
            if (!c) throw OracleMismatch("minimal polynomial: dependent power not solvable");
            Polynomial out(k + 1);
            for (std::size_t j = 0; j < k; ++j) out[j] = -(*c)[j];
            out[k] = 1;
            return out;
        }
        powers.push_back(std::move(v));
        p = p * a;
    }
    throw OracleMismatch("minimal polynomial exceeded the matrix size");
}

std::vector<Scalar> polynomial_roots(const Polynomial& input, bool& complete) {
    Polynomial p = monic(input);
    std::vector<Scalar> roots;
    while (p.size() > 1 && p.front().is_zero()) {
        p.erase(p.begin());
        if (roots.empty()) roots.emplace_back(0);
    }
    const std::size_t d = p.size() - 1;
    if (d == 0) {
        complete = true;
        return roots;
    }
    mpz_class den = 1;
    for (const auto& c : p) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
    }
    std::vector<GaussInt> q(d + 1);
    mpz_class scale = 1;
    for (std::size_t k = d + 1; k-- > 0;) {
        const mpq_class re = p[k].re() * scale;
        const mpq_class im = p[k].im() * scale;
        q[k] = {re.get_num() / re.get_den(), im.get_num() / im.get_den()};
        scale *= den;
    }
    double bound = 0;
    for (const auto& c : q) {
        const double norm = std::sqrt(mpz_class(c.re * c.re + c.im * c.im).get_d());
        bound = std::max(bound, norm);
    }
    const long b = static_cast<long>(bound) + 2;
    if (b > 3000) {
        complete = false;
        return roots;
    }
    const mpz_class n0 = q[0].re * q[0].re + q[0].im * q[0].im;
    for (long x = -b; x <= b && q.size() > 1; ++x) {
        for (long y = -b; y <= b && q.size() > 1; ++y) {
            if (x * x + y * y > b * b) continue;
            const mpz_class nz = x * x + y * y;
            if (nz == 0 || n0 % nz != 0) continue;
            const GaussInt z{x, y};
            bool found = false;
            while (q.size() > 1) {
                const GaussInt v = horner(q, z);
                if (v.re != 0 || v.im != 0) break;
                q = deflate(q, z);
                found = true;
            }
            if (found) {
                mpq_class re(z.re, den);
                mpq_class im(z.im, den);
                re.canonicalize();
                im.canonicalize();
                roots.emplace_back(re, im);
            }
        }
    }
    complete = q.size() == 1;
    return roots;
}

std::optional<std::vector<Scalar>> eigenvalues(const Matrix& a) {
    if (a.is_diagonal()) {
        std::vector<Scalar> out;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const Scalar v = a.at(i, i);
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
        return out;
    }
    const Polynomial mp = minimal_polynomial(a);
    bool complete = false;
    auto roots = polynomial_roots(mp, complete);
    if (!complete || roots.size() + 1 != mp.size()) return std::nullopt;
    return roots;
}

std::vector<WeightSpace> simultaneous_eigenspaces(const std::vector<Matrix>& ops, std::size_t dim) {
    for (const auto& op : ops) {
        if (op.rows() != dim || op.cols() != dim) throw ValidationError("eigenspaces: operator size mismatch");
    }
    const bool diagonal = std::all_of(ops.begin(), ops.end(), [](const Matrix& m) { return m.is_diagonal(); });
    std::vector<WeightSpace> out;
    if (diagonal) {
        for (std::size_t i = 0; i < dim; ++i) {
            Vector w;
            for (const auto& op : ops) w.push_back(op.at(i, i));
            Vector e(dim);
            e[i] = 1;
            auto it = std::find_if(out.begin(), out.end(), [&](const WeightSpace& s) { return s.weight == w; });
            if (it == out.end()) {
                out.push_back({w, {e}});
            } else {
                it->basis.push_back(e);
            }
        }
        return out;
    }
    std::vector<Vector> all;
    for (std::size_t i = 0; i < dim; ++i) {
        Vector e(dim);
        e[i] = 1;
        all.push_back(e);
    }
    out.push_back({{}, all});
    for (std::size_t k = 0; k < ops.size(); ++k) {
        std::vector<WeightSpace> next;
        for (const auto& space : out) {
            const CoordinateSystem cs(dim, space.basis);
            const std::size_t s = space.basis.size();
            std::vector<Vector> cols;
            for (const auto& v : space.basis) cols.push_back(cs.require(ops[k].apply(v), "eigenspaces: operator does not preserve a joint eigenspace"));
            const Matrix restricted = Matrix::from_columns(s, cols);
            const auto evs = eigenvalues(restricted);
            if (!evs) throw NonDiagonalizable("operator " + std::to_string(k) + " is not diagonalizable over Q(i)");
            for (const auto& lambda : *evs) {
                const Subspace ker = kernel_basis(restricted - Matrix::identity(s).scaled(lambda));
                WeightSpace w{space.weight, {}};
                w.weight.push_back(lambda);
                for (const auto& c : ker.basis_vectors()) w.basis.push_back(cs.combine(c));
                next.push_back(std::move(w));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace superext
