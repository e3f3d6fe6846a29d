#pragma once

#include <array>
#include <cstddef>

namespace hardy {

// 16-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre16 {
    static constexpr std::array<double, 8> abscissa = {
        0.0950125098376374401853193, 0.2816035507792589132304605,
        0.4580167776572273863424194, 0.6178762444026437484466718,
        0.7554044083550030338951012, 0.8656312023878317438804679,
        0.9445750230732325760779884, 0.9894009349916499325961542};
    static constexpr std::array<double, 8> weight = {
        0.1894506104550684962853967, 0.1826034150449235888667637,
        0.1691565193950025381893121, 0.1495959888165767320815017,
        0.1246289712555338720524763, 0.0951585116824927848099251,
        0.0622535239386478928628438, 0.0271524594117540948517806};
};

// Integrates f over [a, b] with a single 16-point panel.
template <typename F>
double gl16_panel(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        const double dx = half * GaussLegendre16::abscissa[i];
        acc += GaussLegendre16::weight[i] * (f(mid - dx) + f(mid + dx));
    }
    return acc * half;
}

// Complex-valued variant.
template <typename F>
auto gl16_panel_c(F&& f, double a, double b) -> decltype(f(a)) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    decltype(f(a)) acc = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        const double dx = half * GaussLegendre16::abscissa[i];
        acc += GaussLegendre16::weight[i] * (f(mid - dx) + f(mid + dx));
    }
    return acc * half;
}

}  // namespace hardy
