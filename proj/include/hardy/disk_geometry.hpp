#pragma once

#include <optional>
#include <vector>

#include "hardy/common.hpp"

namespace hardy {

// Finite sequence of distinct points in the open unit disk.  Infinite
// sequences are represented by truncations, optionally produced by a
// generator (see exponential()).
class PointSequence {
public:
    explicit PointSequence(std::vector<Complex> points, double boundary_guard = kBoundaryGuard);

    // lambda_n = 1 - ratio^n, n = 1..count.  ratio in (0,1).
    static PointSequence exponential(double ratio, int count);

    const std::vector<Complex>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    Complex operator[](std::size_t n) const { return points_[n]; }
    bool is_real_increasing() const { return real_increasing_; }

private:
    std::vector<Complex> points_;
    bool real_increasing_ = false;
};

struct SeparationReport {
    double delta = 1.0;                       // min over per-point products
    std::vector<double> per_point_products;   // prod_{k != n} rho(lambda_k, lambda_n)
    std::optional<double> exponential_ratio;  // sup (1-l_{n+1})/(1-l_n), real-increasing only
    double carleson_seed = 0.25;              // delta^2/4
};

// Pseudo-hyperbolic distance |z-w| / |1 - conj(w) z|.
double pseudo_hyperbolic(Complex z, Complex w);

// Separation constants of the sequence.  Empty products are 1.
SeparationReport separation_delta(const PointSequence& seq);

// max over n of (1 - l_{n+1}) / (1 - l_n); nullopt for fewer than two points.
// Requires a real increasing sequence.
std::optional<double> exponential_ratio(const PointSequence& seq);

// Conservative lower-bound seed delta^2/4 for the interpolation constant.
// Never certifies feasibility by itself; pipelines validate per instance.
double carleson_seed(double delta);

}  // namespace hardy
