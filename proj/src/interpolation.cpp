#include "hardy/interpolation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <sstream>

namespace hardy {

namespace {

constexpr double kSandwichLow = 1.0 / kTwoPi;
constexpr double kSandwichHigh = (2.0 + kPi) / kPi;

Complex unit_circle(double theta) { return Complex{std::cos(theta), std::sin(theta)}; }

}  // namespace

// ---------------------------------------------------------------------------
// TargetSequence

TargetSequence TargetSequence::from_values(std::vector<Complex> values) {
    require(!values.empty(), "TargetSequence: empty targets");
    for (const Complex& w : values)
        require(std::isfinite(w.real()) && std::isfinite(w.imag()),
                "TargetSequence: targets must be finite");
    TargetSequence t;
    t.values_ = std::move(values);
    return t;
}

TargetSequence TargetSequence::from_generator(const Generator& gen, const PointSequence& points) {
    std::vector<Complex> values;
    values.reserve(points.size());
    switch (gen.kind) {
        case Generator::Kind::ExpNegCOverGap:
            for (const Complex& l : points.points())
                values.emplace_back(std::exp(-gen.c / (1.0 - std::abs(l))), 0.0);
            break;
        case Generator::Kind::ExpNegCOverGapSq:
            for (const Complex& l : points.points()) {
                const double gap = 1.0 - std::abs(l);
                values.emplace_back(std::exp(-gen.c / (gap * gap)), 0.0);
            }
            break;
        case Generator::Kind::GapPower: {
            require(points.is_real_increasing(), "gap_power targets need real increasing nodes");
            require(gen.exponents.size() == points.size(),
                    "gap_power targets: exponent count mismatch");
            for (std::size_t n = 0; n < points.size(); ++n)
                values.emplace_back(std::pow(1.0 - points[n].real(), gen.exponents[n]), 0.0);
            break;
        }
        case Generator::Kind::ProfileDecay: {
            require(points.is_real_increasing(),
                    "profile_decay targets need real increasing nodes");
            require(gen.profile.has_value(), "profile_decay targets need a profile");
            for (const Complex& l : points.points()) {
                const double gap = 1.0 - l.real();
                values.emplace_back(std::exp(-gen.profile->integral_to(gap) / gap), 0.0);
            }
            break;
        }
        case Generator::Kind::BoundedBand:
            throw InputError("bounded_band generator carries no formula; use explicit values");
    }
    TargetSequence t = from_values(std::move(values));
    t.generator_ = gen;
    return t;
}

TargetSequence TargetSequence::from_values_with_band(std::vector<Complex> values, double band_min,
                                                     double band_max) {
    require(band_min > 0.0 && band_max >= band_min, "bounded band: need 0 < m <= M");
    TargetSequence t = from_values(std::move(values));
    for (const Complex& w : t.values_)
        require(std::abs(w) >= band_min * (1.0 - 1e-12) && std::abs(w) <= band_max * (1.0 + 1e-12),
                "bounded band: values leave the asserted band");
    Generator gen;
    gen.kind = Generator::Kind::BoundedBand;
    gen.band_min = band_min;
    gen.band_max = band_max;
    t.generator_ = gen;
    return t;
}

double TargetSequence::inf_modulus() const {
    double m = std::numeric_limits<double>::infinity();
    for (const Complex& w : values_) m = std::min(m, std::abs(w));
    return m;
}

double TargetSequence::sup_modulus() const {
    double m = 0.0;
    for (const Complex& w : values_) m = std::max(m, std::abs(w));
    return m;
}

// ---------------------------------------------------------------------------
// Pick matrix

PickResult pick_matrix(const PointSequence& points, const TargetSequence& targets) {
    const std::size_t n = points.size();
    require(targets.size() == n, "pick_matrix: dimension mismatch");
    PickResult res;
    res.n = n;
    res.matrix.resize(n * n);
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex v = (1.0 - std::conj(targets.values()[j]) * targets.values()[i]) /
                              (1.0 - std::conj(points[j]) * points[i]);
            res.matrix[i * n + j] = v;
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    res.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        res.eigenvalues[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    res.min_eigenvalue = res.eigenvalues.front();
    res.norm = std::max(std::abs(res.eigenvalues.front()), std::abs(res.eigenvalues.back()));
    const double floor = 1e-10 * std::max(res.norm, 1e-30);
    res.psd = res.min_eigenvalue >= -floor;
    res.strictly_psd = res.min_eigenvalue > floor;
    return res;
}

// ---------------------------------------------------------------------------
// Schur recursion

namespace {

RationalFunction schur_rational(const std::vector<Complex>& nodes,
                                const std::vector<Complex>& targets,
                                std::vector<std::string>& warnings) {
    const std::size_t n = nodes.size();
    if (n == 1) return RationalFunction::constant(targets[0]);

    const Complex gamma = targets[0];
    if (std::abs(gamma) >= 1.0)
        throw NumericError("schur recursion: parameter reached the unit circle");
    if (std::abs(gamma) > 1.0 - 1e-12)
        warnings.push_back("schur recursion: parameter within 1e-12 of the circle");

    std::vector<Complex> sub_nodes(nodes.begin() + 1, nodes.end());
    std::vector<Complex> sub_targets(n - 1);
    for (std::size_t j = 1; j < n; ++j) {
        const Complex moved = (targets[j] - gamma) / (1.0 - std::conj(gamma) * targets[j]);
        const Complex blaschke =
            (nodes[j] - nodes[0]) / (1.0 - std::conj(nodes[0]) * nodes[j]);
        sub_targets[j - 1] = moved / blaschke;
        if (std::abs(sub_targets[j - 1]) >= 1.0)
            throw NumericError("schur recursion: reduced target left the disk");
    }
    const RationalFunction f1 = schur_rational(sub_nodes, sub_targets, warnings);

    // f = (gamma + b f1) / (1 + conj(gamma) b f1), b = (z - l0)/(1 - conj(l0) z)
    const Complex l0 = nodes[0];
    const Poly b_num = {-l0, Complex{1.0, 0.0}};
    const Poly b_den = {Complex{1.0, 0.0}, -std::conj(l0)};
    const Poly num =
        poly_add(poly_scale(poly_mul(b_den, f1.den()), gamma), poly_mul(b_num, f1.num()));
    const Poly den = poly_add(poly_mul(b_den, f1.den()),
                              poly_scale(poly_mul(b_num, f1.num()), std::conj(gamma)));
    return RationalFunction(num, den);
}

double max_rel_residual(const RationalFunction& f, const std::vector<Complex>& nodes,
                        const std::vector<Complex>& targets) {
    double worst = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const double denom = std::max(std::abs(targets[j]), 1e-30);
        worst = std::max(worst, std::abs(f.eval(nodes[j]) - targets[j]) / denom);
    }
    return worst;
}

double rational_boundary_sup(const RationalFunction& f, std::size_t grid = std::size_t{1} << 14) {
    double best = 0.0;
    for (std::size_t j = 0; j < grid; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(grid) - kPi;
        best = std::max(best, std::abs(f.eval(unit_circle(t))));
    }
    return best;
}

}  // namespace

HardyFunction schur_interpolate(const PointSequence& points, const TargetSequence& targets) {
    require(points.size() == targets.size(), "schur_interpolate: dimension mismatch");
    const PickResult pick = pick_matrix(points, targets);
    if (!pick.strictly_psd)
        throw InfeasibleError("schur_interpolate: Pick matrix is not strictly positive definite");

    std::vector<std::string> warnings;
    if (pick.min_eigenvalue < 1e-12 * pick.norm)
        warnings.push_back("schur_interpolate: Pick matrix is near singular");

    const RationalFunction f = schur_rational(points.points(), targets.values(), warnings);

    const double res = max_rel_residual(f, points.points(), targets.values());
    if (res > 1e-8)
        throw NumericError("schur_interpolate: interpolation residual exceeds 1e-8");
    const double sup = rational_boundary_sup(f);
    if (sup > 1.0 + 1e-6)
        throw NumericError("schur_interpolate: boundary sup exceeds 1 + 1e-6");

    return HardyFunction::rational(f);
}

// ---------------------------------------------------------------------------
// circle_interpolate

namespace {

InterpolationCertificate build_certificate(const HardyFunction& f,
                                           const std::vector<Complex>& nodes,
                                           const std::vector<Complex>& targets,
                                           std::size_t sup_grid = std::size_t{1} << 14) {
    InterpolationCertificate cert;
    cert.residuals_abs.reserve(nodes.size());
    cert.residuals_rel.reserve(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const Complex v = f.eval(nodes[j]);
        const double abs_err = std::abs(v - targets[j]);
        cert.residuals_abs.push_back(abs_err);
        cert.residuals_rel.push_back(abs_err / std::max(std::abs(targets[j]), 1e-30));
        cert.max_rel_residual = std::max(cert.max_rel_residual, cert.residuals_rel.back());
    }
    cert.sup_bound = f.boundary_sup(sup_grid);
    cert.outer_status = f.status();
    return cert;
}

double grid_positivity(const HardyFunction& f, double alpha,
                       std::size_t grid = std::size_t{1} << 14) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < grid; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(grid) - kPi;
        const Complex v = f.boundary_value_internal(t);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) continue;
        worst = std::min(worst, (std::exp(Complex{0.0, -alpha}) * v).real());
    }
    return worst;
}

}  // namespace

InterpolationResult circle_interpolate(const PointSequence& points, const TargetSequence& targets,
                                       Complex a, double r) {
    require(a != Complex{0.0, 0.0}, "circle_interpolate: center must be nonzero");
    require(r >= 0.0, "circle_interpolate: radius must be nonnegative");
    require(points.size() == targets.size(), "circle_interpolate: dimension mismatch");
    const double ratio = r / std::abs(a);
    require(ratio < 1.0, "circle_interpolate: r/|a| must be below 1");
    for (const Complex& w : targets.values())
        require(std::abs(w - a) <= r * (1.0 + 1e-9) + 1e-15,
                "circle_interpolate: target outside the disk D(a, r)");

    const SeparationReport sep = separation_delta(points);
    double c0 = sep.carleson_seed;
    if (c0 <= ratio) c0 = 0.5 * (ratio + 1.0);  // seed below the positivity floor: climb

    InterpolationResult out{HardyFunction::constant(Complex{1.0, 0.0})};
    const double r_safe = std::max(r, 1e-30);
    for (int k = 0; k <= 20; ++k) {
        const double c_eff = c0 * std::pow(0.5, k);
        if (c_eff <= ratio) break;
        std::vector<Complex> scaled(targets.size());
        for (std::size_t j = 0; j < targets.size(); ++j)
            scaled[j] = c_eff * (targets.values()[j] - a) / r_safe;
        const TargetSequence t = TargetSequence::from_values(std::move(scaled));
        const PickResult pick = pick_matrix(points, t);
        out.ladder.push_back(LadderRung{c_eff, 1, pick.min_eigenvalue, pick.strictly_psd});
        if (!pick.strictly_psd) continue;

        std::vector<std::string> warnings;
        const RationalFunction g = schur_rational(points.points(), t.values(), warnings);
        const RationalFunction phi = g.affine(a, r_safe / c_eff);
        const double alpha = std::arg(a);
        HardyFunction f = HardyFunction::rational(phi, alpha);

        out.f = f;
        out.c_eff = c_eff;
        out.certificate = build_certificate(f, points.points(), targets.values());
        out.certificate.warnings = std::move(warnings);
        out.certificate.positivity = grid_positivity(f, alpha);
        out.certificate.deficit = outer_deficit(f).deficit;
        if (out.certificate.max_rel_residual > 1e-6)
            throw NumericError("circle_interpolate: residual exceeds tolerance");
        return out;
    }
    std::ostringstream msg;
    msg << "circle_interpolate: infeasible after ladder of " << out.ladder.size() << " rungs (";
    for (const auto& rung : out.ladder) msg << " C=" << rung.c_eff;
    msg << " ); r/|a| = " << ratio;
    throw InfeasibleError(msg.str());
}

// ---------------------------------------------------------------------------
// outer_interpolate_bounded_below

InterpolationResult outer_interpolate_bounded_below(const PointSequence& points,
                                                    const TargetSequence& targets) {
    require(points.size() == targets.size(),
            "outer_interpolate_bounded_below: dimension mismatch");
    const double m = targets.inf_modulus();
    const double big = targets.sup_modulus();
    require(m > 0.0, "outer_interpolate_bounded_below: targets must be bounded below");
    require(big / m <= 1e12, "outer_interpolate_bounded_below: target moduli span exceeds 1e12");

    // principal logs, fixed once per target
    std::vector<Complex> logs(targets.size());
    for (std::size_t j = 0; j < targets.size(); ++j) logs[j] = std::log(targets.values()[j]);

    bool positive_real = true;
    for (const Complex& w : targets.values())
        if (w.imag() != 0.0 || w.real() <= 0.0) positive_real = false;

    const SeparationReport sep = separation_delta(points);
    InterpolationResult out{HardyFunction::constant(Complex{1.0, 0.0})};

    for (int rung = 0; rung <= 20; ++rung) {
        const double rho = sep.carleson_seed * std::pow(0.5, rung);
        const double r_goal = 0.5 * rho;

        // smallest k with the principal k-th roots inside D(a_k, r_goal) and
        // the disk clear of the origin by a margin
        int k = 0;
        Complex center{1.0, 0.0};
        double radius = 0.0;
        for (int kk = 1; kk <= (1 << 16); ++kk) {
            double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
            for (const Complex& lw : logs) {
                const double av = std::abs(std::exp(lw / static_cast<double>(kk)));
                lo = std::min(lo, av);
                hi = std::max(hi, av);
            }
            const Complex a_k = positive_real ? Complex{0.5 * (lo + hi), 0.0} : Complex{1.0, 0.0};
            double rad = 0.0;
            for (const Complex& lw : logs)
                rad = std::max(rad, std::abs(std::exp(lw / static_cast<double>(kk)) - a_k));
            if (rad <= r_goal * 0.999 && rad < 0.9 * rho * std::abs(a_k)) {
                k = kk;
                center = a_k;
                radius = std::max(rad * (1.0 + 1e-9), 1e-30);
                break;
            }
        }
        if (k == 0) continue;

        std::vector<Complex> roots(targets.size());
        for (std::size_t j = 0; j < targets.size(); ++j)
            roots[j] = std::exp(logs[j] / static_cast<double>(k));
        std::vector<Complex> scaled(targets.size());
        for (std::size_t j = 0; j < targets.size(); ++j)
            scaled[j] = rho * (roots[j] - center) / radius;
        const TargetSequence t = TargetSequence::from_values(std::move(scaled));
        const PickResult pick = pick_matrix(points, t);
        out.ladder.push_back(LadderRung{rho, k, pick.min_eigenvalue, pick.strictly_psd});
        if (!pick.strictly_psd) continue;

        std::vector<std::string> warnings;
        const RationalFunction g = schur_rational(points.points(), t.values(), warnings);
        const RationalFunction chi = g.affine(center, radius / rho);
        const double alpha = std::arg(center);  // 0 on both paths
        HardyFunction chi_fn = HardyFunction::rational(chi, alpha);
        HardyFunction f = HardyFunction::power(chi_fn, static_cast<double>(k))
                              .with_status(OuterStatus::CertifiedBoundedOuter);

        out.f = f;
        out.c_eff = rho;
        out.root_order = k;
        out.certificate = build_certificate(f, points.points(), targets.values());
        out.certificate.warnings = std::move(warnings);
        if (positive_real) out.certificate.positivity = grid_positivity(f, 0.0);
        out.certificate.deficit = static_cast<double>(k) * outer_deficit(chi_fn).deficit;
        if (out.certificate.max_rel_residual > 1e-6)
            throw NumericError("outer_interpolate_bounded_below: residual exceeds tolerance");
        return out;
    }
    std::ostringstream msg;
    msg << "outer_interpolate_bounded_below: ladder exhausted;";
    if (!out.ladder.empty())
        msg << " final rung C=" << out.ladder.back().c_eff << " k=" << out.ladder.back().k;
    throw InfeasibleError(msg.str());
}

// ---------------------------------------------------------------------------
// transfer_ratio and the growth pipelines

InterpolationResult transfer_ratio(const PointSequence& points,
                                   const std::vector<Complex>& from_targets,
                                   const std::vector<Complex>& to_targets,
                                   const HardyFunction& base) {
    require(from_targets.size() == points.size() && to_targets.size() == points.size(),
            "transfer_ratio: dimension mismatch");
    std::vector<Complex> ratios(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        require(from_targets[j] != Complex{0.0, 0.0}, "transfer_ratio: zero source target");
        ratios[j] = to_targets[j] / from_targets[j];
    }
    InterpolationResult factor =
        outer_interpolate_bounded_below(points, TargetSequence::from_values(ratios));
    InterpolationResult out{HardyFunction::product(base, factor.f)};
    out.c_eff = factor.c_eff;
    out.root_order = factor.root_order;
    out.ladder = std::move(factor.ladder);
    out.certificate = build_certificate(out.f, points.points(), to_targets,
                                        /*sup_grid=*/std::size_t{1} << 12);
    return out;
}

GrowthResult growth_interpolate(const PointSequence& points, const WeightProfile& h) {
    require(points.is_real_increasing(), "growth_interpolate: nodes must be real increasing");
    GrowthResult out{outer_from_log_modulus(h, -1.0), HardyFunction::constant(Complex{1.0, 0.0}),
                     {}, {}};

    std::vector<Complex> phi_values(points.size());
    std::vector<Complex> abs_values(points.size());
    out.node_ratios.resize(points.size());
    for (std::size_t n = 0; n < points.size(); ++n) {
        const double lambda = points[n].real();
        const Complex logphi = out.phi0.log_eval(points[n]);
        if (std::abs(logphi.imag()) > 1e-10)
            throw NumericError("growth_interpolate: phi0 not real at a real node");
        const double gap = 1.0 - lambda;
        const double ratio = -gap * logphi.real() / h.integral_to(gap);
        if (ratio < kSandwichLow - 1e-8 || ratio > kSandwichHigh + 1e-8)
            throw NumericError("growth_interpolate: node ratio violates the sandwich bound");
        out.node_ratios[n] = ratio;
        phi_values[n] = std::exp(logphi);
        abs_values[n] = Complex{std::exp(logphi.real()), 0.0};
    }

    InterpolationResult transferred = transfer_ratio(points, phi_values, abs_values, out.phi0);
    out.psi = transferred.f;
    out.certificate = std::move(transferred.certificate);
    return out;
}

ExactDecayResult exact_decay_interpolate(const PointSequence& points, const WeightProfile& h) {
    require(points.is_real_increasing(), "exact_decay_interpolate: nodes must be real increasing");

    TargetSequence::Generator gen;
    gen.kind = TargetSequence::Generator::Kind::ProfileDecay;
    gen.profile = h;
    const TargetSequence targets = TargetSequence::from_generator(gen, points);

    HardyFunction phi0 = outer_from_log_modulus(h, -1.0);
    std::vector<double> d_values(points.size());
    std::vector<Complex> psi_targets(points.size());
    for (std::size_t n = 0; n < points.size(); ++n) {
        const double gap = 1.0 - points[n].real();
        const Complex logphi = phi0.log_eval(points[n]);
        if (std::abs(logphi.imag()) > 1e-10)
            throw NumericError("exact_decay_interpolate: phi0 not real at a real node");
        const double logw = -h.integral_to(gap) / gap;
        const double d = logphi.real() / logw;  // = A_h(lambda) / \int_0^{1-lambda} h
        if (d < kSandwichLow - 1e-8 || d > kSandwichHigh + 1e-8)
            throw NumericError("exact_decay_interpolate: d_n violates the sandwich bound");
        d_values[n] = d;
        psi_targets[n] = Complex{1.0 / d, 0.0};
    }

    InterpolationResult psi_res =
        outer_interpolate_bounded_below(points, TargetSequence::from_values(psi_targets));
    const bool psi_positive = psi_res.certificate.positivity.has_value() &&
                              *psi_res.certificate.positivity > 0.0;
    HardyFunction f = power_fn(phi0, psi_res.f, psi_positive);

    ExactDecayResult out{f, psi_res.f, std::move(d_values), targets.values(), {}};
    out.certificate = build_certificate(f, points.points(), targets.values(),
                                        /*sup_grid=*/std::size_t{1} << 10);
    out.certificate.positivity = psi_res.certificate.positivity;
    out.certificate.outer_status = f.status();
    if (out.certificate.max_rel_residual > 1e-6)
        throw NumericError("exact_decay_interpolate: residual exceeds tolerance");
    return out;
}

}  // namespace hardy
