#pragma once

// Small dense reference routines used to cross-check the sparse engine.

#include "superext/matrix.hpp"

#include <random>
#include <vector>

namespace oracle {

using superext::Scalar;
using DenseMatrix = std::vector<std::vector<Scalar>>;

// Dense Gaussian elimination with first-nonzero pivoting, no sparsity tricks.
inline std::size_t dense_rank(DenseMatrix a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            const Scalar f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t dense_rank(const superext::Matrix& m) {
    return dense_rank(m.to_dense());
}

inline DenseMatrix dense_product(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k ? b[0].size() : 0;
    DenseMatrix out(n, std::vector<Scalar>(m));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    }
    return out;
}

inline Scalar random_scalar(std::mt19937& rng, int range, bool gaussian) {
    std::uniform_int_distribution<int> d(-range, range);
    if (gaussian) return Scalar(mpq_class(d(rng)), mpq_class(d(rng)));
    return Scalar(d(rng));
}

inline superext::Matrix random_sparse(std::mt19937& rng, std::size_t rows, std::size_t cols, double density,
                                      bool gaussian = true) {
    std::bernoulli_distribution fill(density);
    superext::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (fill(rng)) m.set(i, j, random_scalar(rng, 3, gaussian));
        }
    }
    return m;
}

}  // namespace oracle
