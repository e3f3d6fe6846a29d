#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hardy/common.hpp"

namespace hardy {

inline constexpr std::size_t kDefaultGridSize = 4096;

// Largest grid the transparent refinement is allowed to reach.  The CLI can
// lower it through HARDY_INTERP_MAX_GRID.
std::size_t max_grid_size();
void set_max_grid_size(std::size_t m);

// Positive, non-increasing, integrable weight on (0, 1], extended by zero on
// (1, pi].  Catalog kinds carry exact integrals; the sampled kind integrates
// its piecewise-linear interpolant.
class WeightProfile {
public:
    enum class Kind { Power, LogPower, Sampled };

    // h(t) = (1 - alpha) t^{-alpha}, 0 < alpha < 1.  Integral x^{1-alpha}.
    static WeightProfile power(double alpha);
    // h(t) = 2 / (t log^p(C/t)), p > 1, log C > p.
    static WeightProfile log_power(double c, double p);
    // Piecewise-linear data on (0, 1]; values positive and non-increasing.
    static WeightProfile sampled(std::vector<double> ts, std::vector<double> values,
                                 bool zygmund = false, bool conjugate_bounded = false);

    Kind kind() const { return kind_; }
    double value(double t) const;        // h(t) for t in (0, pi]; zero past 1
    double integral_to(double x) const;  // \int_0^x h(t) dt, x in (0, 1]
    // Largest t in (0, 1] with h(t) >= y; 0 when even h(1) < y... see impl.
    double superlevel_end(double y) const;
    bool zygmund() const { return zygmund_; }
    bool conjugate_bounded() const { return conjugate_bounded_; }

    double alpha() const { return alpha_; }
    double log_c() const { return c_; }
    double log_p() const { return p_; }
    const std::vector<double>& sample_ts() const { return ts_; }
    const std::vector<double>& sample_values() const { return values_; }

private:
    WeightProfile() = default;
    Kind kind_ = Kind::Power;
    double alpha_ = 0.5;
    double c_ = 0.0, p_ = 0.0;
    std::vector<double> ts_, values_;
    bool zygmund_ = false;
    bool conjugate_bounded_ = false;
};

// \int_0^x h(t) dt.  Exact for catalog kinds.
double profile_integral(const WeightProfile& h, double x);

// Real even boundary data W(|t|) given on (0, pi], integrated by graded
// quadrature; head_integral supplies \int_0^x W exactly near the origin when
// W is singular there.
struct SymmetricBoundaryData {
    std::function<double(double)> value;
    std::function<double(double)> head_integral;
    bool singular_at_zero = false;
    double support_end = kPi;  // W vanishes on (support_end, pi]
    // catalog facts about the conjugate of W, set by constructors
    bool zygmund = true;
    bool conjugate_bounded = false;
};

SymmetricBoundaryData profile_boundary_data(const WeightProfile& h, double scale);
// W(t) = log|1 - e^{it}| = log(2 sin(t/2)).
SymmetricBoundaryData log_abs_one_minus_data();

// (1/2pi) \int_{-pi}^{pi} (xi + z)/(xi - z) W(|t|) dt by graded panels.
Complex herglotz_symmetric(const SymmetricBoundaryData& w, Complex z);
double poisson_symmetric(const SymmetricBoundaryData& w, Complex z);
// (1/2pi) \int W(|t|) dt.
double symmetric_mean(const SymmetricBoundaryData& w);
// Conjugate function (PV integral against cot((theta-t)/2)) of W(|t|) at
// theta in (-pi, pi).  Odd in theta; zero at 0 and +-pi.
double conjugate_symmetric(const SymmetricBoundaryData& w, double theta);

// Uniform samples on theta_j = 2 pi j / M - pi.  A generator, when present,
// lets the evaluators refine the grid transparently.
class BoundaryFunction {
public:
    struct Generator {
        enum class Kind { Constant, Harmonic, SymmetricData, Custom };
        Kind kind = Kind::Custom;
        double constant = 0.0;
        int harmonic_k = 1;
        double cos_amp = 0.0, sin_amp = 0.0;
        std::optional<SymmetricBoundaryData> symmetric;
        std::function<double(double)> custom;
        double sample(double theta) const;
    };

    static BoundaryFunction from_samples(std::vector<double> samples, bool symmetric = false);
    static BoundaryFunction constant(double c, std::size_t m = kDefaultGridSize);
    // a * cos(k theta) + b * sin(k theta)
    static BoundaryFunction harmonic(int k, double cos_amp, double sin_amp,
                                     std::size_t m = kDefaultGridSize);
    static BoundaryFunction from_function(std::function<double(double)> f,
                                          std::size_t m = kDefaultGridSize);
    // Even data with an integrable singularity at theta = 0; the sample at
    // the singular node is filled so that the grid mean matches the exact
    // mean.  Accurate transforms route through the graded quadrature.
    static BoundaryFunction from_symmetric_data(SymmetricBoundaryData data,
                                                std::size_t m = kDefaultGridSize);

    std::size_t grid_size() const { return samples_.size(); }
    const std::vector<double>& samples() const { return samples_; }
    double theta(std::size_t j) const;
    double mean() const;
    bool symmetric_flag() const { return symmetric_; }
    bool can_regrid() const { return generator_.has_value(); }
    const std::optional<Generator>& generator() const { return generator_; }
    BoundaryFunction regridded(std::size_t m) const;

private:
    BoundaryFunction() = default;
    std::vector<double> samples_;
    std::optional<Generator> generator_;
    bool symmetric_ = false;
};

// Poisson integral of f at z.  Requires M >= kappa 2 pi / (1 - |z|)
// (kappa = 4); refines through the generator when available, otherwise
// throws NumericError.  Symmetric singular data routes to graded quadrature.
double poisson_eval(const BoundaryFunction& f, Complex z);

// Herglotz integral; real part equals poisson_eval.
Complex herglotz_eval(const BoundaryFunction& w, Complex z);

// Circle conjugate by the Fourier multiplier -i sign(n); zero mean output.
// Accuracy degrades for data that is not smooth on the grid scale.
BoundaryFunction conjugate_function(const BoundaryFunction& w);

struct RearrangementResult {
    std::vector<double> star_samples;     // symmetric, non-increasing in |theta|
    std::vector<std::size_t> permutation; // permutation[pos] = source index
};

// Symmetric decreasing rearrangement of nonnegative grid data.
RearrangementResult rearrange_decreasing(const BoundaryFunction& f);

struct PairingCheck {
    double lhs = 0.0;  // \int f g
    double rhs = 0.0;  // \int f* g*
    bool holds = false;
};

// Hardy-Littlewood pairing  \int f g <= \int f* g*.
PairingCheck hl_pairing_check(const BoundaryFunction& f, const BoundaryFunction& g);

struct AhResult {
    double value = 0.0;
    double lower = 0.0;  // (1/2pi) \int_0^{1-r} h
    double upper = 0.0;  // ((2+pi)/pi) \int_0^{1-r} h
};

// A_h(r) = (1-r) (1/2pi) \int P_r(t) h(|t|) dt with the two-sided bound
// checked as a postcondition; violations signal quadrature failure.
AhResult a_h(double r, const WeightProfile& h);

}  // namespace hardy
