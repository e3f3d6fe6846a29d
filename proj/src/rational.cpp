#include "hardy/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hardy {

Complex poly_eval(const Poly& p, Complex z) {
    Complex acc{0.0, 0.0};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Poly poly_scale(const Poly& a, Complex s) {
    Poly out = a;
    for (Complex& c : out) c *= s;
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

int poly_degree(const Poly& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (std::abs(p[i - 1]) > 0.0) return static_cast<int>(i - 1);
    return -1;
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require(poly_degree(den_) >= 0, "rational function: zero denominator");
    if (num_.empty()) num_ = {Complex{0.0, 0.0}};
}

RationalFunction RationalFunction::constant(Complex c) {
    return RationalFunction({c}, {Complex{1.0, 0.0}});
}

Complex RationalFunction::eval(Complex z) const {
    return poly_eval(num_, z) / poly_eval(den_, z);
}

RationalFunction RationalFunction::affine(Complex a, Complex b) const {
    return RationalFunction(poly_add(poly_scale(den_, a), poly_scale(num_, b)), den_);
}

RationalFunction RationalFunction::multiply(const RationalFunction& other) const {
    return RationalFunction(poly_mul(num_, other.num_), poly_mul(den_, other.den_));
}

int RationalFunction::degree() const { return std::max(poly_degree(num_), poly_degree(den_)); }

double RationalFunction::min_denominator_on_circle(std::size_t grid) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < grid; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(grid) - kPi;
        best = std::min(best, std::abs(poly_eval(den_, Complex{std::cos(t), std::sin(t)})));
    }
    return best;
}

}  // namespace hardy
