#include "superext/guards.hpp"

#include "superext/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace superext {

namespace {

std::atomic<std::size_t> g_dim_override{0};
std::atomic<std::size_t> g_chain_dim{4'000'000};

}  // namespace

std::size_t guard_dim() {
    if (const std::size_t v = g_dim_override.load()) return v;
    if (const char* env = std::getenv("SUPEREXT_GUARD_DIM")) {
        try {
            const long parsed = std::stol(env);
            if (parsed > 0) return static_cast<std::size_t>(parsed);
        } catch (const std::exception&) {
            throw ValidationError(std::string("SUPEREXT_GUARD_DIM is not a positive integer: ") + env);
        }
    }
    return 200;
}

void set_guard_dim(std::size_t dim) {
    g_dim_override.store(dim);
}

std::size_t guard_chain_dim() {
    return g_chain_dim.load();
}

void set_guard_chain_dim(std::size_t dim) {
    g_chain_dim.store(dim);
}

void check_algebra_dim(std::size_t dim, const char* what) {
    if (dim > guard_dim()) {
        throw GuardExceeded(std::string(what) + " has dimension " + std::to_string(dim) + ", above the guard " +
                            std::to_string(guard_dim()));
    }
}

}  // namespace superext
