#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "pstego/kernels.hpp"

namespace pstego::kernels {

namespace {

Backend detect() {
    if (const char* env = std::getenv("PSTEGO_SIMD"); env != nullptr && std::string(env) == "scalar")
        return Backend::scalar;
#if defined(PSTEGO_WITH_AVX2)
    if (backend_available(Backend::avx2)) return Backend::avx2;
#endif
#if defined(PSTEGO_WITH_NEON)
    return Backend::neon;
#endif
    return Backend::scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{detect()};
    return b;
}

}  // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "unknown";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2:
#if defined(PSTEGO_WITH_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
            return false;
#endif
        case Backend::neon:
#if defined(PSTEGO_WITH_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table(Backend b) {
    switch (b) {
        case Backend::scalar: return detail::scalar_table();
#if defined(PSTEGO_WITH_AVX2)
        case Backend::avx2: return detail::avx2_table();
#endif
#if defined(PSTEGO_WITH_NEON)
        case Backend::neon: return detail::neon_table();
#endif
        default: break;
    }
    throw std::invalid_argument("kernel backend not compiled in: " + std::string(backend_name(b)));
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void select_backend(Backend b) {
    if (!backend_available(b))
        throw std::invalid_argument("kernel backend unavailable on this CPU: " + std::string(backend_name(b)));
    current().store(b, std::memory_order_relaxed);
}

}  // namespace pstego::kernels
