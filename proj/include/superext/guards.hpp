#pragma once

#include <cstddef>

namespace superext {

// Largest algebra dimension accepted by constructors (default 200, env SUPEREXT_GUARD_DIM).
std::size_t guard_dim();
void set_guard_dim(std::size_t dim);

// Largest (co)chain space dimension assembled in one degree.
std::size_t guard_chain_dim();
void set_guard_chain_dim(std::size_t dim);

void check_algebra_dim(std::size_t dim, const char* what);

}  // namespace superext
