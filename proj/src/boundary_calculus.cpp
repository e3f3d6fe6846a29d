#include "hardy/boundary_calculus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

#include "hardy/fft.hpp"
#include "hardy/gauss_legendre.hpp"
#include "hardy/kernels.hpp"

namespace hardy {

namespace {

std::atomic<std::size_t> g_max_grid{std::size_t{1} << 22};

// Innermost breakpoint of the graded subdivision.  The closed-form head
// covers [0, t_min].
constexpr double kGradedTmin = 1e-18;
constexpr int kGradedPanels = 40;
constexpr double kKappa = 4.0;  // grid admissibility factor

std::vector<double> graded_breakpoints(double t_min, double t_max, int panels) {
    std::vector<double> bp(static_cast<std::size_t>(panels) + 1);
    const double ratio = std::log(t_max / t_min) / panels;
    for (int k = 0; k <= panels; ++k) bp[static_cast<std::size_t>(k)] = t_min * std::exp(ratio * k);
    bp.front() = t_min;
    bp.back() = t_max;
    return bp;
}

double head_value(const SymmetricBoundaryData& w, double t_min) {
    if (w.head_integral) return w.head_integral(t_min);
    return w.value(t_min) * t_min;  // bounded data: rectangle stub
}

}  // namespace

std::size_t max_grid_size() { return g_max_grid.load(std::memory_order_relaxed); }

void set_max_grid_size(std::size_t m) {
    require(is_power_of_two(m) && m >= 64, "max grid must be a power of two >= 64");
    g_max_grid.store(m, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// WeightProfile

WeightProfile WeightProfile::power(double alpha) {
    require(alpha > 0.0 && alpha < 1.0, "power profile: alpha must lie in (0,1)");
    WeightProfile h;
    h.kind_ = Kind::Power;
    h.alpha_ = alpha;
    h.zygmund_ = true;
    h.conjugate_bounded_ = true;
    return h;
}

WeightProfile WeightProfile::log_power(double c, double p) {
    require(p > 1.0, "log_power profile: p must exceed 1");
    require(std::log(c) > p, "log_power profile: log(C) must exceed p for monotonicity");
    WeightProfile h;
    h.kind_ = Kind::LogPower;
    h.c_ = c;
    h.p_ = p;
    h.zygmund_ = true;            // h log+ h integrable for p > 1
    h.conjugate_bounded_ = false; // not asserted
    return h;
}

WeightProfile WeightProfile::sampled(std::vector<double> ts, std::vector<double> values,
                                     bool zygmund, bool conjugate_bounded) {
    require(!ts.empty() && ts.size() == values.size(), "sampled profile: size mismatch");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        require(ts[i] > 0.0 && ts[i] <= 1.0, "sampled profile: abscissae must lie in (0,1]");
        if (i > 0) {
            require(ts[i] > ts[i - 1], "sampled profile: abscissae must increase");
            require(values[i] <= values[i - 1] + 1e-14, "sampled profile: values must not increase");
        }
        require(values[i] >= 0.0, "sampled profile: values must be nonnegative");
    }
    WeightProfile h;
    h.kind_ = Kind::Sampled;
    h.ts_ = std::move(ts);
    h.values_ = std::move(values);
    h.zygmund_ = zygmund;
    h.conjugate_bounded_ = conjugate_bounded;
    return h;
}

double WeightProfile::value(double t) const {
    if (t > 1.0) return 0.0;  // zero extension on (1, pi]
    require(t > 0.0, "profile value: t must be positive");
    switch (kind_) {
        case Kind::Power:
            return (1.0 - alpha_) * std::pow(t, -alpha_);
        case Kind::LogPower:
            return 2.0 / (t * std::pow(std::log(c_ / t), p_));
        case Kind::Sampled: {
            if (t <= ts_.front()) return values_.front();
            if (t >= ts_.back()) return values_.back();
            const auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
            const std::size_t i = static_cast<std::size_t>(it - ts_.begin());
            const double w = (t - ts_[i - 1]) / (ts_[i] - ts_[i - 1]);
            return values_[i - 1] + w * (values_[i] - values_[i - 1]);
        }
    }
    return 0.0;
}

double WeightProfile::integral_to(double x) const {
    require(x > 0.0, "profile integral: x must be positive");
    x = std::min(x, 1.0);
    switch (kind_) {
        case Kind::Power:
            return std::pow(x, 1.0 - alpha_);
        case Kind::LogPower:
            return 2.0 / ((p_ - 1.0) * std::pow(std::log(c_ / x), p_ - 1.0));
        case Kind::Sampled: {
            // piecewise-linear antiderivative; constant below the first node
            double acc = 0.0;
            double prev_t = 0.0, prev_v = values_.front();
            for (std::size_t i = 0; i <= ts_.size(); ++i) {
                const double t = (i < ts_.size()) ? ts_[i] : 1.0;
                const double v = (i < ts_.size()) ? values_[i] : values_.back();
                const double hi = std::min(x, t);
                if (hi > prev_t) {
                    const double w0 = prev_v;
                    const double w1 = (t > prev_t) ? prev_v + (v - prev_v) * (hi - prev_t) / (t - prev_t)
                                                   : v;
                    acc += 0.5 * (w0 + w1) * (hi - prev_t);
                }
                if (x <= t) break;
                prev_t = t;
                prev_v = v;
            }
            return acc;
        }
    }
    return 0.0;
}

double WeightProfile::superlevel_end(double y) const {
    if (y <= 0.0) return 1.0;
    switch (kind_) {
        case Kind::Power: {
            if (value(1.0) >= y) return 1.0;
            return std::pow((1.0 - alpha_) / y, 1.0 / alpha_);
        }
        case Kind::LogPower: {
            if (value(1.0) >= y) return 1.0;
            double lo = 1e-300, hi = 1.0;
            for (int it = 0; it < 200; ++it) {
                const double mid = std::sqrt(lo * hi);  // geometric bisection
                (value(mid) >= y ? lo : hi) = mid;
            }
            return std::sqrt(lo * hi);
        }
        case Kind::Sampled: {
            double end = 0.0;
            for (std::size_t i = 0; i < ts_.size(); ++i)
                if (values_[i] >= y) end = ts_[i];
            if (!ts_.empty() && values_.back() >= y) end = 1.0;
            return end;
        }
    }
    return 0.0;
}

double profile_integral(const WeightProfile& h, double x) {
    require(x > 0.0 && x <= 1.0, "profile_integral: x must lie in (0,1]");
    return h.integral_to(x);
}

// ---------------------------------------------------------------------------
// Symmetric boundary data and graded quadrature

SymmetricBoundaryData profile_boundary_data(const WeightProfile& h, double scale) {
    SymmetricBoundaryData data;
    data.value = [h, scale](double t) { return scale * h.value(t); };
    data.head_integral = [h, scale](double x) { return scale * h.integral_to(std::min(x, 1.0)); };
    data.singular_at_zero = true;
    data.support_end = 1.0;
    data.zygmund = h.zygmund();
    data.conjugate_bounded = h.conjugate_bounded();
    return data;
}

SymmetricBoundaryData log_abs_one_minus_data() {
    SymmetricBoundaryData data;
    data.value = [](double t) { return std::log(2.0 * std::sin(0.5 * t)); };
    // \int_0^x log t dt = x log x - x; the 2 sin(t/2)/t correction is O(x^3)
    data.head_integral = [](double x) { return x * std::log(x) - x; };
    data.singular_at_zero = true;
    data.support_end = kPi;
    data.zygmund = true;
    data.conjugate_bounded = true;  // arg(1 - e^{i theta}) = (theta -+ pi)/2
    return data;
}

Complex herglotz_symmetric(const SymmetricBoundaryData& w, Complex z) {
    require(std::abs(z) < 1.0 - kBoundaryGuard / 2,
            "herglotz_symmetric: z too close to the circle");
    const auto kern = [&z](double t) -> Complex {
        const Complex xi{std::cos(t), std::sin(t)};
        const Complex xic = std::conj(xi);
        return (xi + z) / (xi - z) + (xic + z) / (xic - z);
    };
    // head uses the kernel frozen at t = 0; the variation over [0, t_min] is
    // O(t_min / (1 - |z|)), negligible against the boundary guard
    Complex acc = 2.0 * (1.0 + z) / (1.0 - z) * head_value(w, kGradedTmin);
    const auto bp = graded_breakpoints(kGradedTmin, w.support_end, kGradedPanels);
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        acc += gl16_panel_c([&](double t) { return kern(t) * w.value(t); }, bp[k], bp[k + 1]);
    }
    return acc / kTwoPi;
}

double poisson_symmetric(const SymmetricBoundaryData& w, Complex z) {
    return herglotz_symmetric(w, z).real();
}

double symmetric_mean(const SymmetricBoundaryData& w) {
    double acc = head_value(w, kGradedTmin);
    const auto bp = graded_breakpoints(kGradedTmin, w.support_end, kGradedPanels);
    for (std::size_t k = 0; k + 1 < bp.size(); ++k)
        acc += gl16_panel([&](double t) { return w.value(t); }, bp[k], bp[k + 1]);
    return acc / kPi;
}

double conjugate_symmetric(const SymmetricBoundaryData& w, double theta) {
    require(theta > -kPi - 1e-15 && theta < kPi + 1e-15, "conjugate_symmetric: theta range");
    if (theta == 0.0 || std::abs(std::abs(theta) - kPi) < 1e-15) return 0.0;
    if (theta < 0.0) return -conjugate_symmetric(w, -theta);

    const double d = 0.5 * std::min(theta, kPi - theta);
    double acc = 0.0;

    // [0, theta - d]: graded toward the singularity of W at 0
    {
        const double right = theta - d;
        const auto kern = [&](double t) {
            return 1.0 / std::tan(0.5 * (theta - t)) + 1.0 / std::tan(0.5 * (theta + t));
        };
        acc += kern(0.0) * head_value(w, kGradedTmin);
        const auto bp = graded_breakpoints(kGradedTmin, right, kGradedPanels);
        for (std::size_t k = 0; k + 1 < bp.size(); ++k)
            acc += gl16_panel([&](double t) { return kern(t) * w.value(t); }, bp[k], bp[k + 1]);
    }

    // principal-value window [theta - d, theta + d], folded around t = theta
    {
        const double s_min = std::max(1e-14, 1e-12 * d);
        const auto folded = [&](double s) {
            return (w.value(theta - s) - w.value(theta + s)) / std::tan(0.5 * s);
        };
        const auto bp = graded_breakpoints(s_min, d, 30);
        for (std::size_t k = 0; k + 1 < bp.size(); ++k)
            acc += gl16_panel(folded, bp[k], bp[k + 1]);
        // cot((theta+t)/2) part is smooth across the window
        acc += gl16_panel([&](double t) { return w.value(t) / std::tan(0.5 * (theta + t)); },
                          theta - d, theta + d);
    }

    // [theta + d, pi]: smooth; refine toward the window edge
    if (theta + d < kPi) {
        const auto kern = [&](double t) {
            return 1.0 / std::tan(0.5 * (theta - t)) + 1.0 / std::tan(0.5 * (theta + t));
        };
        const auto bp = graded_breakpoints(d, kPi - theta, 24);
        for (std::size_t k = 0; k + 1 < bp.size(); ++k)
            acc += gl16_panel([&](double t) { return kern(t) * w.value(t); }, theta + bp[k],
                              theta + bp[k + 1]);
    }
    return acc / kTwoPi;
}

// ---------------------------------------------------------------------------
// BoundaryFunction

double BoundaryFunction::Generator::sample(double theta) const {
    switch (kind) {
        case Kind::Constant:
            return constant;
        case Kind::Harmonic:
            return cos_amp * std::cos(harmonic_k * theta) + sin_amp * std::sin(harmonic_k * theta);
        case Kind::SymmetricData:
            return symmetric->value(std::abs(theta));
        case Kind::Custom:
            return custom(theta);
    }
    return 0.0;
}

namespace {
void check_grid_size(std::size_t m) {
    require(m >= 64 && is_power_of_two(m), "grid size must be a power of two >= 64");
}

std::vector<double> sample_generator(const BoundaryFunction::Generator& gen, std::size_t m) {
    std::vector<double> s(m);
    if (gen.kind == BoundaryFunction::Generator::Kind::SymmetricData &&
        gen.symmetric->singular_at_zero) {
        // fill every node except theta = 0, then choose that node so the grid
        // mean matches the exact mean
        const std::size_t j0 = m / 2;
        double sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == j0) continue;
            const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(m) - kPi;
            s[j] = gen.symmetric->value(std::abs(theta));
            sum += s[j];
        }
        const double exact_mean = symmetric_mean(*gen.symmetric);
        s[j0] = exact_mean * static_cast<double>(m) - sum;
        return s;
    }
    for (std::size_t j = 0; j < m; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(m) - kPi;
        s[j] = gen.sample(theta);
    }
    return s;
}
}  // namespace

BoundaryFunction BoundaryFunction::from_samples(std::vector<double> samples, bool symmetric) {
    check_grid_size(samples.size());
    BoundaryFunction f;
    f.samples_ = std::move(samples);
    f.symmetric_ = symmetric;
    if (symmetric) {
        const std::size_t m = f.samples_.size();
        for (std::size_t j = 1; j < m; ++j)
            require(std::abs(f.samples_[j] - f.samples_[m - j]) <= 1e-10,
                    "symmetric flag set but samples are not even");
    }
    return f;
}

BoundaryFunction BoundaryFunction::constant(double c, std::size_t m) {
    check_grid_size(m);
    BoundaryFunction f;
    Generator gen;
    gen.kind = Generator::Kind::Constant;
    gen.constant = c;
    f.samples_.assign(m, c);
    f.generator_ = std::move(gen);
    f.symmetric_ = true;
    return f;
}

BoundaryFunction BoundaryFunction::harmonic(int k, double cos_amp, double sin_amp, std::size_t m) {
    check_grid_size(m);
    require(k >= 1, "harmonic: k must be positive");
    BoundaryFunction f;
    Generator gen;
    gen.kind = Generator::Kind::Harmonic;
    gen.harmonic_k = k;
    gen.cos_amp = cos_amp;
    gen.sin_amp = sin_amp;
    f.samples_ = sample_generator(gen, m);
    f.generator_ = std::move(gen);
    f.symmetric_ = (sin_amp == 0.0);
    return f;
}

BoundaryFunction BoundaryFunction::from_function(std::function<double(double)> fn, std::size_t m) {
    check_grid_size(m);
    BoundaryFunction f;
    Generator gen;
    gen.kind = Generator::Kind::Custom;
    gen.custom = std::move(fn);
    f.samples_ = sample_generator(gen, m);
    f.generator_ = std::move(gen);
    return f;
}

BoundaryFunction BoundaryFunction::from_symmetric_data(SymmetricBoundaryData data, std::size_t m) {
    check_grid_size(m);
    BoundaryFunction f;
    Generator gen;
    gen.kind = Generator::Kind::SymmetricData;
    gen.symmetric = std::move(data);
    f.samples_ = sample_generator(gen, m);
    f.generator_ = std::move(gen);
    f.symmetric_ = true;
    return f;
}

double BoundaryFunction::theta(std::size_t j) const {
    return kTwoPi * static_cast<double>(j) / static_cast<double>(samples_.size()) - kPi;
}

double BoundaryFunction::mean() const {
    const double s = kernels::chunked_sum_serial<double>(
        samples_.size(), [&](std::size_t j) { return samples_[j]; });
    return s / static_cast<double>(samples_.size());
}

BoundaryFunction BoundaryFunction::regridded(std::size_t m) const {
    check_grid_size(m);
    require(generator_.has_value(), "regrid requires a generator");
    BoundaryFunction f;
    f.samples_ = sample_generator(*generator_, m);
    f.generator_ = generator_;
    f.symmetric_ = symmetric_;
    return f;
}

// ---------------------------------------------------------------------------
// Evaluators

namespace {

// Smallest admissible grid for evaluation at z: M >= kappa 2 pi / (1 - |z|).
std::size_t required_grid(Complex z) {
    const double need = kKappa * kTwoPi / (1.0 - std::abs(z));
    std::size_t m = 64;
    while (static_cast<double>(m) < need) m <<= 1;
    return m;
}

const BoundaryFunction* prepare_grid(const BoundaryFunction& f, Complex z,
                                     std::optional<BoundaryFunction>& storage) {
    const std::size_t need = required_grid(z);
    if (f.grid_size() >= need) return &f;
    if (!f.can_regrid())
        throw NumericError("grid too coarse for evaluation point and refinement unavailable");
    if (need > max_grid_size())
        throw NumericError("evaluation point requires a grid beyond the configured maximum");
    storage = f.regridded(need);
    return &*storage;
}

bool use_symmetric_quadrature(const BoundaryFunction& f) {
    return f.generator() &&
           f.generator()->kind == BoundaryFunction::Generator::Kind::SymmetricData;
}

}  // namespace

double poisson_eval(const BoundaryFunction& f, Complex z) {
    require(in_open_disk(z, kBoundaryGuard / 2), "poisson_eval: z must lie inside the disk");
    if (use_symmetric_quadrature(f)) return poisson_symmetric(*f.generator()->symmetric, z);
    std::optional<BoundaryFunction> storage;
    const BoundaryFunction* g = prepare_grid(f, z, storage);
    return kernels::poisson_sum(g->samples(), z);
}

Complex herglotz_eval(const BoundaryFunction& w, Complex z) {
    require(in_open_disk(z, kBoundaryGuard / 2), "herglotz_eval: z must lie inside the disk");
    if (use_symmetric_quadrature(w)) return herglotz_symmetric(*w.generator()->symmetric, z);
    std::optional<BoundaryFunction> storage;
    const BoundaryFunction* g = prepare_grid(w, z, storage);
    return kernels::herglotz_sum(g->samples(), z);
}

BoundaryFunction conjugate_function(const BoundaryFunction& w) {
    const std::size_t m = w.grid_size();
    std::vector<Complex> spec(m);
    for (std::size_t j = 0; j < m; ++j) spec[j] = Complex{w.samples()[j], 0.0};
    fft_radix2(spec, false);
    spec[0] = 0.0;       // zero mean
    spec[m / 2] = 0.0;   // drop the Nyquist bin to keep the output real
    const Complex minus_i{0.0, -1.0};
    for (std::size_t k = 1; k < m / 2; ++k) {
        spec[k] *= minus_i;       // positive frequencies
        spec[m - k] *= -minus_i;  // negative frequencies
    }
    fft_radix2(spec, true);
    std::vector<double> out(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = spec[j].real();
    return BoundaryFunction::from_samples(std::move(out));
}

RearrangementResult rearrange_decreasing(const BoundaryFunction& f) {
    const std::size_t m = f.grid_size();
    for (double v : f.samples())
        if (v < 0.0) throw InputError("rearrange_decreasing: data must be nonnegative");

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return f.samples()[a] > f.samples()[b];
    });

    // positions visited outward from theta = 0, + side before - side
    std::vector<std::size_t> pos;
    pos.reserve(m);
    pos.push_back(m / 2);
    for (std::size_t d = 1; d < m / 2; ++d) {
        pos.push_back(m / 2 + d);
        pos.push_back(m / 2 - d);
    }
    pos.push_back(0);  // theta = -pi

    RearrangementResult res;
    res.star_samples.resize(m);
    res.permutation.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        res.star_samples[pos[r]] = f.samples()[order[r]];
        res.permutation[pos[r]] = order[r];
    }
    return res;
}

PairingCheck hl_pairing_check(const BoundaryFunction& f, const BoundaryFunction& g) {
    if (f.grid_size() != g.grid_size())
        throw InputError("hl_pairing_check: grids must have equal size");
    const std::size_t m = f.grid_size();
    const auto fs = rearrange_decreasing(f);
    const auto gs = rearrange_decreasing(g);
    PairingCheck chk;
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        lhs += f.samples()[j] * g.samples()[j];
        rhs += fs.star_samples[j] * gs.star_samples[j];
    }
    chk.lhs = lhs / static_cast<double>(m) * kTwoPi;
    chk.rhs = rhs / static_cast<double>(m) * kTwoPi;
    chk.holds = chk.lhs <= chk.rhs + 1e-12;
    return chk;
}

AhResult a_h(double r, const WeightProfile& h) {
    require(r >= 0.0 && r < 1.0, "a_h: r must lie in [0,1)");
    AhResult res;
    const double gap = 1.0 - r;
    res.value = gap * poisson_symmetric(profile_boundary_data(h, 1.0), Complex{r, 0.0});
    const double tail = h.integral_to(std::min(gap, 1.0));
    res.lower = tail / kTwoPi;
    res.upper = (2.0 + kPi) / kPi * tail;
    if (!(res.value >= res.lower - 1e-12 && res.value <= res.upper + 1e-12))
        throw NumericError("a_h: sandwich bound violated; quadrature failure");
    return res;
}

}  // namespace hardy
