#include "hardy/hardy_functions.hpp"

#include <cmath>
#include <limits>

namespace hardy {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kInf = std::numeric_limits<double>::infinity();

Complex unit_circle(double theta) { return Complex{std::cos(theta), std::sin(theta)}; }

// single normalized Blaschke factor, b_a(0) = |a| for a != 0
Complex blaschke_factor(Complex a, Complex z) {
    if (a == Complex{0.0, 0.0}) return z;
    return (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
}

}  // namespace

const char* to_string(OuterStatus s) {
    switch (s) {
        case OuterStatus::CertifiedOuter: return "certified-outer";
        case OuterStatus::CertifiedBoundedOuter: return "certified-bounded-outer";
        case OuterStatus::NumericallyConsistent: return "numerically-consistent";
        case OuterStatus::HasInnerPart: return "has-inner-part";
        case OuterStatus::Uncertified: return "uncertified";
    }
    return "uncertified";
}

// ---------------------------------------------------------------------------
// InnerSpec

InnerSpec::InnerSpec(std::vector<Complex> blaschke_zeros, std::vector<SingularAtom> atoms,
                     Complex unimodular)
    : zeros_(std::move(blaschke_zeros)), atoms_(std::move(atoms)), unimodular_(unimodular) {
    for (const Complex& a : zeros_)
        require(std::abs(a) < 1.0, "InnerSpec: Blaschke zeros must lie in the open disk");
    for (SingularAtom& atom : atoms_) {
        require(atom.mass > 0.0, "InnerSpec: atom masses must be positive");
        require(std::abs(std::abs(atom.zeta) - 1.0) <= 1e-12,
                "InnerSpec: atom locations must be unimodular");
        atom.zeta /= std::abs(atom.zeta);
    }
    require(std::abs(std::abs(unimodular_) - 1.0) <= 1e-12,
            "InnerSpec: constant must be unimodular");
    unimodular_ /= std::abs(unimodular_);
}

InnerSpec InnerSpec::single_atom(Complex zeta, double mass) {
    return InnerSpec({}, {SingularAtom{zeta, mass}});
}

double InnerSpec::total_singular_mass() const {
    double m = 0.0;
    for (const auto& a : atoms_) m += a.mass;
    return m;
}

Complex InnerSpec::eval(Complex z) const {
    Complex acc = unimodular_;
    for (const Complex& a : zeros_) acc *= blaschke_factor(a, z);
    for (const auto& atom : atoms_) acc *= std::exp(-atom.mass * (atom.zeta + z) / (atom.zeta - z));
    return acc;
}

Complex InnerSpec::log_eval(Complex z) const {
    require(zeros_.empty(), "InnerSpec::log_eval: Blaschke zeros present");
    Complex acc = std::log(unimodular_);
    for (const auto& atom : atoms_) acc += -atom.mass * (atom.zeta + z) / (atom.zeta - z);
    return acc;
}

double InnerSpec::boundary_arg(double theta) const {
    const Complex xi = unit_circle(theta);
    double arg = std::arg(unimodular_);
    for (const auto& atom : atoms_) {
        // (zeta+xi)/(zeta-xi) is purely imaginary on the circle
        const double im = 2.0 * std::imag(xi * std::conj(atom.zeta)) / std::norm(atom.zeta - xi);
        arg += -atom.mass * im;
    }
    for (const Complex& a : zeros_) arg += std::arg(blaschke_factor(a, xi));
    return arg;
}

// ---------------------------------------------------------------------------
// OuterData

OuterData OuterData::const_log(double c) {
    OuterData d;
    d.kind_ = Kind::ConstLog;
    d.const_log_ = c;
    d.sup_log_ = c;
    d.zygmund_ = true;
    d.conjugate_bounded_ = true;
    return d;
}

OuterData OuterData::grid(BoundaryFunction w) {
    OuterData d;
    d.kind_ = Kind::Grid;
    d.grid_conjugate_ = conjugate_function(w);
    double sup = -kInf;
    for (double v : w.samples()) sup = std::max(sup, v);
    d.sup_log_ = sup;
    d.grid_ = std::move(w);
    d.zygmund_ = true;  // bounded samples
    d.conjugate_bounded_ = false;
    return d;
}

OuterData OuterData::symmetric(SymmetricBoundaryData w, bool zygmund, bool conjugate_bounded) {
    OuterData d;
    d.kind_ = Kind::Symmetric;
    // probe the sup; singular data diverging at 0 reports +inf
    double sup = w.value(w.support_end);
    for (double t = w.support_end; t > 1e-13; t *= 0.5) sup = std::max(sup, w.value(t));
    if (w.singular_at_zero && w.value(1e-13) > sup - 1.0 && w.value(1e-13) > w.value(1e-6) + 1e-9)
        sup = kInf;
    d.sup_log_ = sup;
    d.symmetric_ = std::move(w);
    d.zygmund_ = zygmund;
    d.conjugate_bounded_ = conjugate_bounded;
    return d;
}

Complex OuterData::log_eval(Complex z) const {
    switch (kind_) {
        case Kind::ConstLog: return Complex{const_log_, 0.0};
        case Kind::Grid: return herglotz_eval(*grid_, z);
        case Kind::Symmetric: return herglotz_symmetric(*symmetric_, z);
    }
    return {};
}

double OuterData::mean_log() const {
    switch (kind_) {
        case Kind::ConstLog: return const_log_;
        case Kind::Grid: return grid_->mean();
        case Kind::Symmetric: return symmetric_mean(*symmetric_);
    }
    return 0.0;
}

double OuterData::boundary_log_abs(double theta) const {
    switch (kind_) {
        case Kind::ConstLog:
            return const_log_;
        case Kind::Grid: {
            const std::size_t m = grid_->grid_size();
            const double pos = (theta + kPi) / kTwoPi * static_cast<double>(m);
            const std::size_t j = static_cast<std::size_t>(std::llround(pos)) % m;
            return grid_->samples()[j];
        }
        case Kind::Symmetric:
            return symmetric_->value(std::max(std::abs(theta), 1e-15));
    }
    return 0.0;
}

double OuterData::boundary_arg(double theta) const {
    switch (kind_) {
        case Kind::ConstLog:
            return 0.0;
        case Kind::Grid: {
            const std::size_t m = grid_conjugate_->grid_size();
            const double pos = (theta + kPi) / kTwoPi * static_cast<double>(m);
            const std::size_t j = static_cast<std::size_t>(std::llround(pos)) % m;
            return grid_conjugate_->samples()[j];
        }
        case Kind::Symmetric:
            return conjugate_symmetric(*symmetric_, theta);
    }
    return 0.0;
}

double OuterData::sup_log() const { return sup_log_; }

// ---------------------------------------------------------------------------
// HardyFunction basics

namespace {

using detail::ClosedFormNode;
using detail::ConstNode;
using detail::Node;
using detail::PowerFnNode;
using detail::PowerNode;
using detail::ProductNode;
using detail::RationalNode;
using detail::StructuredNode;

std::shared_ptr<const Node> make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

Complex closed_form_log(const ClosedFormNode& n, Complex z) {
    const Complex one_minus = 1.0 - z;  // right half-plane: principal log is safe
    if (n.kind == ClosedFormNode::Kind::OneMinusZ) return std::log(one_minus);
    return -n.c * std::exp(-n.alpha * std::log(one_minus));
}

// boundary log|.| and arg of the closed forms, theta != 0 (a.e.)
double closed_form_boundary_log_abs(const ClosedFormNode& n, double theta) {
    const double t = std::max(std::abs(theta), 1e-15);
    const double s = 2.0 * std::sin(0.5 * t);
    if (n.kind == ClosedFormNode::Kind::OneMinusZ) return std::log(s);
    return -n.c * std::pow(s, -n.alpha) * std::cos(n.alpha * 0.5 * (kPi - t));
}

double closed_form_boundary_arg(const ClosedFormNode& n, double theta) {
    if (theta == 0.0) return 0.0;
    const double t = std::abs(theta);
    const double sign = theta > 0.0 ? 1.0 : -1.0;
    if (n.kind == ClosedFormNode::Kind::OneMinusZ) return sign * 0.5 * (t - kPi);
    const double s = 2.0 * std::sin(0.5 * t);
    return sign * (-n.c) * std::pow(s, -n.alpha) * std::sin(n.alpha * 0.5 * (kPi - t));
}

}  // namespace

const detail::Node& HardyFunction::node() const { return *node_; }

HardyFunction HardyFunction::with_status(OuterStatus s) const { return HardyFunction(node_, s); }

HardyFunction HardyFunction::constant(Complex c) {
    const OuterStatus s = (c != Complex{0.0, 0.0}) ? OuterStatus::CertifiedBoundedOuter
                                                   : OuterStatus::Uncertified;
    return HardyFunction(make_node(Node{ConstNode{c}}), s);
}

HardyFunction HardyFunction::structured(InnerSpec inner, OuterData outer) {
    OuterStatus s;
    if (!inner.trivial_part() &&
        (!inner.blaschke_zeros().empty() || inner.total_singular_mass() > 0.0)) {
        s = OuterStatus::HasInnerPart;
    } else {
        s = std::isfinite(outer.sup_log()) ? OuterStatus::CertifiedBoundedOuter
                                           : OuterStatus::CertifiedOuter;
    }
    return HardyFunction(make_node(Node{StructuredNode{std::move(inner), std::move(outer)}}), s);
}

HardyFunction HardyFunction::rational(RationalFunction f, std::optional<double> halfplane_alpha) {
    OuterStatus s = OuterStatus::Uncertified;
    if (halfplane_alpha) {
        double den_scale = 0.0;
        for (const Complex& c : f.den()) den_scale += std::abs(c);
        const bool poles_clear = f.min_denominator_on_circle() > 1e-9 * den_scale;
        s = poles_clear ? OuterStatus::CertifiedBoundedOuter : OuterStatus::CertifiedOuter;
    }
    return HardyFunction(make_node(Node{RationalNode{std::move(f), halfplane_alpha}}), s);
}

HardyFunction HardyFunction::one_minus_z() {
    return HardyFunction(make_node(Node{ClosedFormNode{ClosedFormNode::Kind::OneMinusZ}}),
                         OuterStatus::CertifiedBoundedOuter);
}

HardyFunction HardyFunction::exp_neg_power(double c, double alpha) {
    require(c > 0.0, "exp_neg_power: c must be positive");
    require(alpha > 0.0 && alpha < 1.0, "exp_neg_power: alpha must lie in (0,1)");
    return HardyFunction(
        make_node(Node{ClosedFormNode{ClosedFormNode::Kind::ExpNegPower, c, alpha}}),
        OuterStatus::CertifiedBoundedOuter);
}

HardyFunction HardyFunction::exp_neg_c_over_one_minus_z(double c) {
    require(c > 0.0, "exp_neg_c_over_one_minus_z: c must be positive");
    // exp(-c/(1-z)) = e^{-c/2} exp(-(c/2)(1+z)/(1-z))
    return structured(InnerSpec::single_atom(Complex{1.0, 0.0}, 0.5 * c),
                      OuterData::const_log(-0.5 * c));
}

HardyFunction HardyFunction::product(const HardyFunction& a, const HardyFunction& b) {
    OuterStatus s = OuterStatus::Uncertified;
    const auto rank = [](OuterStatus st) {
        switch (st) {
            case OuterStatus::CertifiedBoundedOuter: return 0;
            case OuterStatus::CertifiedOuter: return 1;
            case OuterStatus::NumericallyConsistent: return 2;
            case OuterStatus::Uncertified: return 3;
            case OuterStatus::HasInnerPart: return 4;
        }
        return 3;
    };
    s = rank(a.status()) >= rank(b.status()) ? a.status() : b.status();
    return HardyFunction(make_node(Node{ProductNode{a, b}}), s);
}

HardyFunction HardyFunction::power(const HardyFunction& base, double c) {
    require(c > 0.0, "power: exponent must be positive");
    require(base.zero_free(), "power: base must be zero-free");
    return HardyFunction(make_node(Node{PowerNode{base, c}}), base.status());
}

HardyFunction HardyFunction::power_fn_node(const HardyFunction& base,
                                           const HardyFunction& exponent) {
    require(base.zero_free(), "power_fn: base must be zero-free");
    return HardyFunction(make_node(Node{PowerFnNode{base, exponent}}), OuterStatus::Uncertified);
}

// ---------------------------------------------------------------------------
// Evaluation

Complex HardyFunction::eval(Complex z) const {
    return std::visit(
        overloaded{
            [&](const ConstNode& n) { return n.c; },
            [&](const StructuredNode& n) {
                return n.inner.eval(z) * std::exp(n.outer.log_eval(z));
            },
            [&](const RationalNode& n) { return n.f.eval(z); },
            [&](const ClosedFormNode& n) {
                if (n.kind == ClosedFormNode::Kind::OneMinusZ) return 1.0 - z;
                return std::exp(closed_form_log(n, z));
            },
            [&](const ProductNode& n) { return n.a.eval(z) * n.b.eval(z); },
            [&](const PowerNode& n) { return std::exp(n.c * n.base.log_eval(z)); },
            [&](const PowerFnNode& n) {
                return std::exp(n.exponent.eval(z) * n.base.log_eval(z));
            },
        },
        node_->v);
}

Complex HardyFunction::log_eval(Complex z) const {
    return std::visit(
        overloaded{
            [&](const ConstNode& n) {
                require(n.c != Complex{0.0, 0.0}, "log_eval: zero constant");
                return std::log(n.c);
            },
            [&](const StructuredNode& n) { return n.inner.log_eval(z) + n.outer.log_eval(z); },
            [&](const RationalNode& n) {
                require(n.halfplane_alpha.has_value(),
                        "log_eval: rational model lacks a half-plane certificate");
                const double alpha = *n.halfplane_alpha;
                const Complex rotated = std::exp(Complex{0.0, -alpha}) * n.f.eval(z);
                return std::log(rotated) + Complex{0.0, alpha};
            },
            [&](const ClosedFormNode& n) { return closed_form_log(n, z); },
            [&](const ProductNode& n) { return n.a.log_eval(z) + n.b.log_eval(z); },
            [&](const PowerNode& n) { return n.c * n.base.log_eval(z); },
            [&](const PowerFnNode& n) { return n.exponent.eval(z) * n.base.log_eval(z); },
        },
        node_->v);
}

bool HardyFunction::zero_free() const {
    return std::visit(
        overloaded{
            [&](const ConstNode& n) { return n.c != Complex{0.0, 0.0}; },
            [&](const StructuredNode& n) { return n.inner.blaschke_zeros().empty(); },
            [&](const RationalNode& n) { return n.halfplane_alpha.has_value(); },
            [&](const ClosedFormNode&) { return true; },
            [&](const ProductNode& n) { return n.a.zero_free() && n.b.zero_free(); },
            [&](const PowerNode&) { return true; },
            [&](const PowerFnNode&) { return true; },
        },
        node_->v);
}

bool HardyFunction::has_declared_inner() const {
    return std::visit(
        overloaded{
            [&](const StructuredNode& n) { return !n.inner.trivial_part(); },
            [&](const ProductNode& n) {
                return n.a.has_declared_inner() || n.b.has_declared_inner();
            },
            [&](const PowerNode& n) { return n.base.has_declared_inner(); },
            [&](const auto&) { return false; },
        },
        node_->v);
}

std::vector<Complex> HardyFunction::declared_blaschke_zeros() const {
    return std::visit(
        overloaded{
            [&](const StructuredNode& n) { return n.inner.blaschke_zeros(); },
            [&](const ProductNode& n) {
                auto zs = n.a.declared_blaschke_zeros();
                const auto zb = n.b.declared_blaschke_zeros();
                zs.insert(zs.end(), zb.begin(), zb.end());
                return zs;
            },
            [&](const auto&) { return std::vector<Complex>{}; },
        },
        node_->v);
}

double HardyFunction::declared_singular_mass() const {
    return std::visit(
        overloaded{
            [&](const StructuredNode& n) { return n.inner.total_singular_mass(); },
            [&](const ProductNode& n) {
                return n.a.declared_singular_mass() + n.b.declared_singular_mass();
            },
            [&](const PowerNode& n) { return n.c * n.base.declared_singular_mass(); },
            [&](const auto&) { return 0.0; },
        },
        node_->v);
}

// ---------------------------------------------------------------------------
// Boundary values

double HardyFunction::boundary_log_abs(double theta) const {
    return std::visit(
        overloaded{
            [&](const ConstNode& n) { return std::log(std::abs(n.c)); },
            [&](const StructuredNode& n) { return n.outer.boundary_log_abs(theta); },
            [&](const RationalNode& n) { return std::log(std::abs(n.f.eval(unit_circle(theta)))); },
            [&](const ClosedFormNode& n) { return closed_form_boundary_log_abs(n, theta); },
            [&](const ProductNode& n) {
                return n.a.boundary_log_abs(theta) + n.b.boundary_log_abs(theta);
            },
            [&](const PowerNode& n) { return n.c * n.base.boundary_log_abs(theta); },
            [&](const PowerFnNode& n) {
                const Complex psi = n.exponent.boundary_value_internal(theta);
                const Complex logphi{n.base.boundary_log_abs(theta), n.base.boundary_arg(theta)};
                return (psi * logphi).real();
            },
        },
        node_->v);
}

bool HardyFunction::has_boundary_arg() const {
    return std::visit(
        overloaded{
            [&](const ConstNode&) { return true; },
            [&](const StructuredNode&) { return true; },
            [&](const RationalNode& n) { return n.halfplane_alpha.has_value(); },
            [&](const ClosedFormNode&) { return true; },
            [&](const ProductNode& n) {
                return n.a.has_boundary_arg() && n.b.has_boundary_arg();
            },
            [&](const PowerNode& n) { return n.base.has_boundary_arg(); },
            [&](const PowerFnNode& n) {
                return n.base.has_boundary_arg() && n.exponent.has_boundary_arg();
            },
        },
        node_->v);
}

double HardyFunction::boundary_arg(double theta) const {
    return std::visit(
        overloaded{
            [&](const ConstNode& n) { return std::arg(n.c); },
            [&](const StructuredNode& n) {
                return n.inner.boundary_arg(theta) + n.outer.boundary_arg(theta);
            },
            [&](const RationalNode& n) {
                require(n.halfplane_alpha.has_value(),
                        "boundary_arg: rational model lacks a half-plane certificate");
                const double alpha = *n.halfplane_alpha;
                const Complex rotated =
                    std::exp(Complex{0.0, -alpha}) * n.f.eval(unit_circle(theta));
                return std::arg(rotated) + alpha;
            },
            [&](const ClosedFormNode& n) { return closed_form_boundary_arg(n, theta); },
            [&](const ProductNode& n) {
                return n.a.boundary_arg(theta) + n.b.boundary_arg(theta);
            },
            [&](const PowerNode& n) { return n.c * n.base.boundary_arg(theta); },
            [&](const PowerFnNode& n) {
                const Complex psi = n.exponent.boundary_value_internal(theta);
                const Complex logphi{n.base.boundary_log_abs(theta), n.base.boundary_arg(theta)};
                return (psi * logphi).imag();
            },
        },
        node_->v);
}

Complex HardyFunction::boundary_value_internal(double theta) const {
    return std::visit(
        overloaded{
            [&](const ConstNode& n) { return n.c; },
            [&](const RationalNode& n) { return n.f.eval(unit_circle(theta)); },
            [&](const StructuredNode& n) {
                const Complex outer = std::exp(
                    Complex{n.outer.boundary_log_abs(theta), n.outer.boundary_arg(theta)});
                return n.inner.eval(unit_circle(theta)) * outer;
            },
            [&](const ClosedFormNode& n) {
                return std::exp(Complex{closed_form_boundary_log_abs(n, theta),
                                        closed_form_boundary_arg(n, theta)});
            },
            [&](const ProductNode& n) {
                return n.a.boundary_value_internal(theta) * n.b.boundary_value_internal(theta);
            },
            [&](const PowerNode& n) {
                return std::exp(n.c * Complex{n.base.boundary_log_abs(theta),
                                              n.base.boundary_arg(theta)});
            },
            [&](const PowerFnNode& n) {
                const Complex psi = n.exponent.boundary_value_internal(theta);
                const Complex logphi{n.base.boundary_log_abs(theta), n.base.boundary_arg(theta)};
                return std::exp(psi * logphi);
            },
        },
        node_->v);
}

namespace {

// quadrature mean of log|f| over the circle, skipping non-finite nodes
double circle_mean_log(const HardyFunction& f, std::size_t grid_start) {
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t m = grid_start; m <= (std::size_t{1} << 18); m <<= 1) {
        double acc = 0.0;
        std::size_t used = 0;
        for (std::size_t j = 0; j < m; ++j) {
            const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(m) - kPi;
            const double v = f.boundary_log_abs(theta);
            if (std::isfinite(v)) {
                acc += v;
                ++used;
            }
        }
        require(used > 0, "boundary mean: no finite samples");
        const double mean = acc / static_cast<double>(used);
        if (std::isfinite(prev) && std::abs(mean - prev) <= 1e-11) return mean;
        prev = mean;
    }
    return prev;
}

}  // namespace

double HardyFunction::boundary_mean_log(std::size_t grid) const {
    return std::visit(
        overloaded{
            [&](const ConstNode& n) { return std::log(std::abs(n.c)); },
            [&](const StructuredNode& n) { return n.outer.mean_log(); },
            [&](const RationalNode&) { return circle_mean_log(*this, std::max<std::size_t>(grid, 4096)); },
            [&](const ClosedFormNode& n) {
                // mean of Re log phi over the circle = Re log phi(0) for these
                // H^1 logarithms
                return n.kind == ClosedFormNode::Kind::OneMinusZ ? 0.0 : -n.c;
            },
            [&](const ProductNode& n) {
                return n.a.boundary_mean_log(grid) + n.b.boundary_mean_log(grid);
            },
            [&](const PowerNode& n) { return n.c * n.base.boundary_mean_log(grid); },
            [&](const PowerFnNode&) {
                // single-pass quadrature; the argument integrand may need PV
                // conjugates per node, so no doubling here
                double acc = 0.0;
                std::size_t used = 0;
                for (std::size_t j = 0; j < grid; ++j) {
                    const double theta =
                        kTwoPi * static_cast<double>(j) / static_cast<double>(grid) - kPi;
                    const double v = boundary_log_abs(theta);
                    if (std::isfinite(v)) {
                        acc += v;
                        ++used;
                    }
                }
                require(used > 0, "boundary mean: no finite samples");
                return acc / static_cast<double>(used);
            },
        },
        node_->v);
}

double HardyFunction::boundary_sup(std::size_t grid) const {
    double best = -kInf;
    for (std::size_t j = 0; j < grid; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(grid) - kPi;
        const double v = boundary_log_abs(theta);
        if (std::isfinite(v)) best = std::max(best, v);
    }
    return std::exp(best);
}

// ---------------------------------------------------------------------------
// Structural flags

bool HardyFunction::arg_l1() const {
    return std::visit(
        overloaded{
            [&](const ConstNode&) { return true; },
            [&](const StructuredNode& n) {
                return n.inner.trivial_part() && n.outer.zygmund();
            },
            [&](const RationalNode& n) { return n.halfplane_alpha.has_value(); },
            [&](const ClosedFormNode&) { return true; },
            [&](const ProductNode& n) { return n.a.arg_l1() && n.b.arg_l1(); },
            [&](const PowerNode& n) { return n.base.arg_l1(); },
            [&](const PowerFnNode&) { return false; },
        },
        node_->v);
}

bool HardyFunction::arg_bounded() const {
    return std::visit(
        overloaded{
            [&](const ConstNode&) { return true; },
            [&](const StructuredNode& n) {
                return n.inner.trivial_part() && n.outer.conjugate_bounded();
            },
            [&](const RationalNode& n) { return n.halfplane_alpha.has_value(); },
            [&](const ClosedFormNode& n) { return n.kind == ClosedFormNode::Kind::OneMinusZ; },
            [&](const ProductNode& n) { return n.a.arg_bounded() && n.b.arg_bounded(); },
            [&](const PowerNode& n) { return n.base.arg_bounded(); },
            [&](const PowerFnNode&) { return false; },
        },
        node_->v);
}

bool HardyFunction::bounded_certified() const {
    return std::visit(
        overloaded{
            [&](const ConstNode&) { return true; },
            [&](const StructuredNode& n) { return std::isfinite(n.outer.sup_log()); },
            [&](const RationalNode& n) {
                double den_scale = 0.0;
                for (const Complex& c : n.f.den()) den_scale += std::abs(c);
                return n.f.min_denominator_on_circle() > 1e-9 * den_scale;
            },
            [&](const ClosedFormNode&) { return true; },
            [&](const ProductNode& n) {
                return n.a.bounded_certified() && n.b.bounded_certified();
            },
            [&](const PowerNode& n) { return n.base.bounded_certified(); },
            [&](const PowerFnNode&) { return status_ == OuterStatus::CertifiedBoundedOuter; },
        },
        node_->v);
}

// ---------------------------------------------------------------------------
// Module operations

HardyFunction outer_from_log_modulus(const BoundaryFunction& w) {
    if (w.generator() &&
        w.generator()->kind == BoundaryFunction::Generator::Kind::SymmetricData) {
        const auto& data = *w.generator()->symmetric;
        return HardyFunction::structured(InnerSpec::trivial(),
                                         OuterData::symmetric(data, data.zygmund,
                                                              data.conjugate_bounded));
    }
    return HardyFunction::structured(InnerSpec::trivial(), OuterData::grid(w));
}

HardyFunction outer_from_log_modulus(const WeightProfile& h, double scale) {
    return HardyFunction::structured(
        InnerSpec::trivial(),
        OuterData::symmetric(profile_boundary_data(h, scale), h.zygmund(), h.conjugate_bounded()));
}

DeficitReport outer_deficit(const HardyFunction& f, std::size_t grid) {
    DeficitReport rep;
    if (f.zero_free()) {
        rep.log_mod_at_0 = f.log_eval(Complex{0.0, 0.0}).real();
    } else {
        const Complex v0 = f.eval(Complex{0.0, 0.0});
        require(v0 != Complex{0.0, 0.0}, "outer_deficit: f(0) = 0");
        rep.log_mod_at_0 = std::log(std::abs(v0));
    }
    rep.boundary_mean_log = f.boundary_mean_log(grid);
    double mass = 0.0;
    for (const Complex& z : f.declared_blaschke_zeros()) {
        require(z != Complex{0.0, 0.0}, "outer_deficit: declared zero at the origin");
        mass += std::log(1.0 / std::abs(z));
    }
    rep.blaschke_mass = mass;
    rep.deficit = rep.boundary_mean_log - rep.log_mod_at_0 - rep.blaschke_mass;
    rep.singular_mass_estimate = rep.deficit;
    return rep;
}

HardyFunction power_outer(const HardyFunction& f, double c) {
    require(c > 0.0, "power_outer: exponent must be positive");
    require(f.status() == OuterStatus::CertifiedOuter ||
                f.status() == OuterStatus::CertifiedBoundedOuter,
            "power_outer: base must be certified outer");
    return HardyFunction::power(f, c).with_status(f.status());
}

HardyFunction power_fn(const HardyFunction& phi, const HardyFunction& psi,
                       bool psi_positive_certified) {
    HardyFunction f = HardyFunction::power_fn_node(phi, psi);
    const bool phi_outer = phi.status() == OuterStatus::CertifiedOuter ||
                           phi.status() == OuterStatus::CertifiedBoundedOuter;
    const bool psi_outer = psi.status() == OuterStatus::CertifiedOuter ||
                           psi.status() == OuterStatus::CertifiedBoundedOuter;
    const bool psi_bounded_outer = psi_outer && psi.bounded_certified();
    if (phi_outer && psi_bounded_outer && phi.arg_l1()) {
        if (phi.arg_bounded() && psi_positive_certified)
            return f.with_status(OuterStatus::CertifiedBoundedOuter);
        return f.with_status(OuterStatus::CertifiedOuter);
    }
    return f.with_status(OuterStatus::Uncertified);
}

}  // namespace hardy
