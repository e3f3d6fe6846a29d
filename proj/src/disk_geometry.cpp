#include "hardy/disk_geometry.hpp"

#include <cmath>

namespace hardy {

PointSequence::PointSequence(std::vector<Complex> points, double boundary_guard)
    : points_(std::move(points)) {
    require(!points_.empty(), "PointSequence: empty sequence");
    for (const Complex& p : points_) {
        if (!(std::abs(p) < 1.0 - boundary_guard))
            throw InputError("PointSequence: point too close to the unit circle");
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (pseudo_hyperbolic(points_[i], points_[j]) == 0.0)
                throw InputError("PointSequence: repeated point");

    real_increasing_ = true;
    double prev = 0.0;
    for (const Complex& p : points_) {
        if (p.imag() != 0.0 || p.real() <= prev || p.real() >= 1.0) {
            real_increasing_ = false;
            break;
        }
        prev = p.real();
    }
}

PointSequence PointSequence::exponential(double ratio, int count) {
    require(ratio > 0.0 && ratio < 1.0, "exponential sequence: ratio must be in (0,1)");
    require(count >= 1, "exponential sequence: count must be positive");
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(count));
    double gap = 1.0;
    for (int n = 1; n <= count; ++n) {
        gap *= ratio;
        pts.emplace_back(1.0 - gap, 0.0);
    }
    return PointSequence(std::move(pts));
}

double pseudo_hyperbolic(Complex z, Complex w) {
    if (!in_open_disk(z) || !in_open_disk(w))
        throw InputError("pseudo_hyperbolic: arguments must lie in the open disk");
    return std::abs(z - w) / std::abs(1.0 - std::conj(w) * z);
}

SeparationReport separation_delta(const PointSequence& seq) {
    const auto& pts = seq.points();
    SeparationReport report;
    report.per_point_products.resize(pts.size(), 1.0);
    for (std::size_t n = 0; n < pts.size(); ++n) {
        double prod = 1.0;
        for (std::size_t k = 0; k < pts.size(); ++k)
            if (k != n) prod *= pseudo_hyperbolic(pts[k], pts[n]);
        report.per_point_products[n] = prod;
    }
    report.delta = 1.0;
    for (double p : report.per_point_products) report.delta = std::min(report.delta, p);
    if (seq.is_real_increasing()) report.exponential_ratio = exponential_ratio(seq);
    report.carleson_seed = carleson_seed(report.delta);
    return report;
}

std::optional<double> exponential_ratio(const PointSequence& seq) {
    require(seq.is_real_increasing(), "exponential_ratio: sequence must be real increasing");
    const auto& pts = seq.points();
    if (pts.size() < 2) return std::nullopt;
    double worst = 0.0;
    for (std::size_t n = 0; n + 1 < pts.size(); ++n)
        worst = std::max(worst, (1.0 - pts[n + 1].real()) / (1.0 - pts[n].real()));
    return worst;
}

double carleson_seed(double delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw InputError("carleson_seed: delta must lie in (0, 1]");
    return 0.25 * delta * delta;
}

}  // namespace hardy
