#pragma once

#include <gmpxx.h>

#include <vector>

namespace superext {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// U * A * V = D with U, V unimodular and d_0 | d_1 | ... on the diagonal (nonnegative).
struct SmithForm {
    std::vector<mpz_class> diagonal;
    IntMatrix u;
    IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b, std::size_t b_cols);

}  // namespace superext
