#include "hardy/kernels.hpp"

#include <atomic>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hardy::kernels {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel_enabled(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::size_t detail::chunk_count(std::size_t n) {
    return n == 0 ? 0 : (n - 1) / kChunk + 1;
}

namespace {

inline double poisson_term(const std::vector<double>& f, Complex z, double one_minus_zz,
                           std::size_t j) {
    const std::size_t m = f.size();
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(m) - kPi;
    const Complex xi{std::cos(theta), std::sin(theta)};
    return one_minus_zz / std::norm(xi - z) * f[j];
}

inline Complex herglotz_term(const std::vector<double>& f, Complex z, std::size_t j) {
    const std::size_t m = f.size();
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(m) - kPi;
    const Complex xi{std::cos(theta), std::sin(theta)};
    return (xi + z) / (xi - z) * f[j];
}

}  // namespace

double poisson_sum_serial(const std::vector<double>& f, Complex z) {
    const double one_minus_zz = 1.0 - std::norm(z);
    const double s = chunked_sum_serial<double>(
        f.size(), [&](std::size_t j) { return poisson_term(f, z, one_minus_zz, j); });
    return s / static_cast<double>(f.size());
}

double poisson_sum_parallel(const std::vector<double>& f, Complex z) {
    const double one_minus_zz = 1.0 - std::norm(z);
    const double s = chunked_sum_parallel<double>(
        f.size(), [&](std::size_t j) { return poisson_term(f, z, one_minus_zz, j); });
    return s / static_cast<double>(f.size());
}

double poisson_sum(const std::vector<double>& f, Complex z) {
    if (parallel_enabled() && f.size() >= kParallelCutoff) return poisson_sum_parallel(f, z);
    return poisson_sum_serial(f, z);
}

Complex herglotz_sum_serial(const std::vector<double>& f, Complex z) {
    const Complex s = chunked_sum_serial<Complex>(
        f.size(), [&](std::size_t j) { return herglotz_term(f, z, j); });
    return s / static_cast<double>(f.size());
}

Complex herglotz_sum_parallel(const std::vector<double>& f, Complex z) {
    const Complex s = chunked_sum_parallel<Complex>(
        f.size(), [&](std::size_t j) { return herglotz_term(f, z, j); });
    return s / static_cast<double>(f.size());
}

Complex herglotz_sum(const std::vector<double>& f, Complex z) {
    if (parallel_enabled() && f.size() >= kParallelCutoff) return herglotz_sum_parallel(f, z);
    return herglotz_sum_serial(f, z);
}

}  // namespace hardy::kernels
