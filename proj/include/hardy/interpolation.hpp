#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardy/boundary_calculus.hpp"
#include "hardy/common.hpp"
#include "hardy/disk_geometry.hpp"
#include "hardy/hardy_functions.hpp"

namespace hardy {

// Complex targets aligned with a PointSequence, optionally produced by a
// closed-form generator tied to the nodes.
class TargetSequence {
public:
    struct Generator {
        enum class Kind {
            ExpNegCOverGap,    // w = exp(-c / (1 - |lambda|))
            ExpNegCOverGapSq,  // w = exp(-c / (1 - |lambda|)^2)
            GapPower,          // w = (1 - lambda)^{d_n}, real nodes
            ProfileDecay,      // w = exp(-(1/(1-lambda)) \int_0^{1-lambda} h)
            BoundedBand,       // no formula; asserts the extension stays in [m, M]
        };
        Kind kind = Kind::ExpNegCOverGap;
        double c = 1.0;
        std::vector<double> exponents;  // GapPower
        std::optional<WeightProfile> profile;
        double band_min = 0.0, band_max = 0.0;
    };

    static TargetSequence from_values(std::vector<Complex> values);
    static TargetSequence from_generator(const Generator& gen, const PointSequence& points);
    // explicit values plus the asserted-band generator
    static TargetSequence from_values_with_band(std::vector<Complex> values, double band_min,
                                                double band_max);

    const std::vector<Complex>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double inf_modulus() const;
    double sup_modulus() const;
    const std::optional<Generator>& generator() const { return generator_; }

private:
    std::vector<Complex> values_;
    std::optional<Generator> generator_;
};

struct PickResult {
    std::vector<Complex> matrix;  // row-major n x n
    std::size_t n = 0;
    std::vector<double> eigenvalues;  // ascending
    double min_eigenvalue = 0.0;
    double norm = 0.0;  // spectral norm
    bool psd = false;   // min eig >= -1e-10 * norm
    bool strictly_psd = false;
};

// Nevanlinna-Pick matrix [(1 - conj(w_j) w_i) / (1 - conj(lambda_j) lambda_i)].
PickResult pick_matrix(const PointSequence& points, const TargetSequence& targets);

struct InterpolationCertificate {
    std::vector<double> residuals_abs;
    std::vector<double> residuals_rel;
    double max_rel_residual = 0.0;
    double sup_bound = 0.0;  // sampled boundary sup
    OuterStatus outer_status = OuterStatus::Uncertified;
    std::optional<double> positivity;  // min over grid of Re(e^{-i alpha} f)
    std::optional<double> deficit;
    std::vector<std::string> warnings;
};

struct LadderRung {
    double c_eff = 0.0;
    int k = 1;
    double min_pick_eigenvalue = 0.0;
    bool feasible = false;
};

struct InterpolationResult {
    HardyFunction f;
    InterpolationCertificate certificate;
    double c_eff = 0.0;           // validated working index
    int root_order = 1;           // k of the k-th root bootstrap (1 if unused)
    std::vector<LadderRung> ladder;
};

// Classical Schur recursion through the nodes; requires a strictly PSD Pick
// matrix.  Returns a rational Schur-class interpolant with sup norm <= 1.
HardyFunction schur_interpolate(const PointSequence& points, const TargetSequence& targets);

// Targets inside the closed disk D(a, r) with r/|a| below the validated
// working index: interpolation by a bounded outer function taking values in
// a half-plane.
InterpolationResult circle_interpolate(const PointSequence& points, const TargetSequence& targets,
                                       Complex a, double r);

// Bounded targets with inf |w_n| > 0: k-th root bootstrap through
// circle_interpolate.  Positive real targets keep Re f > 0 when the sector
// bound allows.
InterpolationResult outer_interpolate_bounded_below(const PointSequence& points,
                                                    const TargetSequence& targets);

// base interpolates from; returns base * F with F interpolating to/from.
InterpolationResult transfer_ratio(const PointSequence& points,
                                   const std::vector<Complex>& from_targets,
                                   const std::vector<Complex>& to_targets,
                                   const HardyFunction& base);

struct GrowthResult {
    HardyFunction phi0;  // outer model with boundary modulus e^{-h}
    HardyFunction psi;   // transfers phi0 values to |phi0| at the nodes
    std::vector<double> node_ratios;  // -(1-l) log|phi0(l)| / \int_0^{1-l} h
    InterpolationCertificate certificate;
};

// Decay-profile interpolant with per-node sandwich ratios.
GrowthResult growth_interpolate(const PointSequence& points, const WeightProfile& h);

struct ExactDecayResult {
    HardyFunction f;    // phi0^psi
    HardyFunction psi;  // bounded outer, Re psi > 0, psi(l_n) = 1/d_n
    std::vector<double> d_values;
    std::vector<Complex> targets;
    InterpolationCertificate certificate;
};

// Exact interpolation of profile-decay targets by phi0^psi.
ExactDecayResult exact_decay_interpolate(const PointSequence& points, const WeightProfile& h);

}  // namespace hardy
