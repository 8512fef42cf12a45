#include "superext/smith.hpp"

#include <algorithm>
#include <utility>

namespace superext {

namespace {

IntMatrix int_identity(std::size_t n) {
    IntMatrix m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
    return m;
}

}  // namespace

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b, std::size_t b_cols) {
    IntMatrix out(a.size(), std::vector<mpz_class>(b_cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b_cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

SmithForm smith_normal_form(const IntMatrix& input, std::size_t cols) {
    const std::size_t rows = input.size();
    IntMatrix a = input;
    IntMatrix u = int_identity(rows);
    IntMatrix v = int_identity(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& r : a) std::swap(r[i], r[j]);
        for (auto& r : v) std::swap(r[i], r[j]);
    };
    // row_i += f * row_j
    auto add_row = [&](std::size_t i, std::size_t j, const mpz_class& f) {
        for (std::size_t c = 0; c < cols; ++c) a[i][c] += f * a[j][c];
        for (std::size_t c = 0; c < rows; ++c) u[i][c] += f * u[j][c];
    };
    auto add_col = [&](std::size_t i, std::size_t j, const mpz_class& f) {
        for (auto& r : a) r[i] += f * r[j];
        for (auto& r : v) r[i] += f * r[j];
    };

    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t bi = rows;
            std::size_t bj = cols;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (bi == rows) break;
            swap_rows(t, bi);
            swap_cols(t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                add_row(i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                add_col(j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (t < rows && t < cols && a[t][t] < 0) {
            for (std::size_t c = 0; c < cols; ++c) a[t][c] = -a[t][c];
            for (std::size_t c = 0; c < rows; ++c) u[t][c] = -u[t][c];
        }
    }
    SmithForm out;
    for (std::size_t t = 0; t < n; ++t) out.diagonal.push_back(a[t][t]);
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

}  // namespace superext
