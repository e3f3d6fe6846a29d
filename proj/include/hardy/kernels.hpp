#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "hardy/common.hpp"

namespace hardy::kernels {

// Fixed chunk width for deterministic reductions: each chunk is summed
// serially in index order and the chunk partials are combined serially, so
// the result is bit-identical for any thread count.
inline constexpr std::size_t kChunk = 4096;

// Parallelism is worth it only past this size.
inline constexpr std::size_t kParallelCutoff = 2 * kChunk;

bool parallel_enabled();
void set_parallel_enabled(bool on);
int max_threads();

namespace detail {
std::size_t chunk_count(std::size_t n);
}

template <typename T, typename F>
T chunked_sum_serial(std::size_t n, F&& term) {
    T total{};
    const std::size_t chunks = detail::chunk_count(n);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        T part{};
        for (std::size_t i = lo; i < hi; ++i) part += term(i);
        total += part;
    }
    return total;
}

template <typename T, typename F>
T chunked_sum_parallel(std::size_t n, F&& term) {
    const std::size_t chunks = detail::chunk_count(n);
    std::vector<T> parts(chunks, T{});
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        T part{};
        for (std::size_t i = lo; i < hi; ++i) part += term(i);
        parts[static_cast<std::size_t>(c)] = part;
    }
    T total{};
    for (const T& p : parts) total += p;
    return total;
}

template <typename T, typename F>
T chunked_sum(std::size_t n, F&& term) {
    if (parallel_enabled() && n >= kParallelCutoff)
        return chunked_sum_parallel<T>(n, term);
    return chunked_sum_serial<T>(n, term);
}

// Grid sums for the circle evaluators.  theta_j = 2*pi*j/M - pi.
// Serial variants are the reference implementations kept for testing and
// benchmarking; the unsuffixed entry points dispatch on size.

// sum_j P(z, e^{i theta_j}) f_j / M  with P the Poisson kernel.
double poisson_sum_serial(const std::vector<double>& f, Complex z);
double poisson_sum_parallel(const std::vector<double>& f, Complex z);
double poisson_sum(const std::vector<double>& f, Complex z);

// sum_j (xi_j + z)/(xi_j - z) f_j / M.
Complex herglotz_sum_serial(const std::vector<double>& f, Complex z);
Complex herglotz_sum_parallel(const std::vector<double>& f, Complex z);
Complex herglotz_sum(const std::vector<double>& f, Complex z);

// max(exact) over chunks; associative, so order never matters.
template <typename F>
double max_over_serial(std::size_t n, F&& value) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) best = std::max(best, value(i));
    return best;
}

template <typename F>
double max_over_parallel(std::size_t n, F&& value) {
    double best = -std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(max : best) schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        best = std::max(best, value(static_cast<std::size_t>(i)));
    return best;
}

template <typename F>
double max_over(std::size_t n, F&& value) {
    if (parallel_enabled() && n >= kParallelCutoff)
        return max_over_parallel(n, value);
    return max_over_serial(n, value);
}

// Fills out[k] = compute(k) for k < out.size(); independent evaluations,
// deterministic because each slot is written exactly once.
template <typename T, typename F>
void parallel_map(std::vector<T>& out, F&& compute) {
    const long long n = static_cast<long long>(out.size());
    if (parallel_enabled() && out.size() >= 8) {
#pragma omp parallel for schedule(dynamic)
        for (long long k = 0; k < n; ++k)
            out[static_cast<std::size_t>(k)] = compute(static_cast<std::size_t>(k));
    } else {
        for (long long k = 0; k < n; ++k)
            out[static_cast<std::size_t>(k)] = compute(static_cast<std::size_t>(k));
    }
}

}  // namespace hardy::kernels
