#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "hardy/boundary_calculus.hpp"
#include "hardy/common.hpp"
#include "hardy/rational.hpp"

namespace hardy {

// Outerness is not decidable from finitely many samples; certificates record
// how much structure backs the claim.
enum class OuterStatus {
    CertifiedOuter,
    CertifiedBoundedOuter,
    NumericallyConsistent,
    HasInnerPart,
    Uncertified,
};

const char* to_string(OuterStatus s);

struct SingularAtom {
    Complex zeta;  // unimodular location
    double mass;   // positive
};

// Inner part: unimodular constant x finite Blaschke part x atomic singular part.
class InnerSpec {
public:
    InnerSpec() = default;
    InnerSpec(std::vector<Complex> blaschke_zeros, std::vector<SingularAtom> atoms,
              Complex unimodular = Complex{1.0, 0.0});

    static InnerSpec trivial() { return InnerSpec(); }
    static InnerSpec single_atom(Complex zeta, double mass);

    bool trivial_part() const {
        return zeros_.empty() && atoms_.empty() && unimodular_ == Complex{1.0, 0.0};
    }
    const std::vector<Complex>& blaschke_zeros() const { return zeros_; }
    const std::vector<SingularAtom>& atoms() const { return atoms_; }
    Complex unimodular() const { return unimodular_; }
    double total_singular_mass() const;

    Complex eval(Complex z) const;
    // log of the zero-free part; requires no Blaschke zeros
    Complex log_eval(Complex z) const;
    // boundary argument of the atomic part (a.e.)
    double boundary_arg(double theta) const;

private:
    std::vector<Complex> zeros_;
    std::vector<SingularAtom> atoms_;
    Complex unimodular_{1.0, 0.0};
};

// Log-modulus data of an outer factor.
class OuterData {
public:
    enum class Kind { ConstLog, Grid, Symmetric };

    static OuterData one() { return const_log(0.0); }
    static OuterData const_log(double c);
    static OuterData grid(BoundaryFunction w);
    static OuterData symmetric(SymmetricBoundaryData w, bool zygmund, bool conjugate_bounded);

    Kind kind() const { return kind_; }
    Complex log_eval(Complex z) const;  // Herglotz integral of the data
    double mean_log() const;            // boundary mean of W
    double boundary_log_abs(double theta) const;
    double boundary_arg(double theta) const;  // circle conjugate of W
    double sup_log() const;                   // sup of W over the boundary (may be +inf)
    bool zygmund() const { return zygmund_; }
    bool conjugate_bounded() const { return conjugate_bounded_; }
    const std::optional<BoundaryFunction>& grid_data() const { return grid_; }

private:
    Kind kind_ = Kind::ConstLog;
    double const_log_ = 0.0;
    std::optional<BoundaryFunction> grid_;
    std::optional<BoundaryFunction> grid_conjugate_;
    std::optional<SymmetricBoundaryData> symmetric_;
    double sup_log_ = 0.0;
    bool zygmund_ = true;
    bool conjugate_bounded_ = false;
};

namespace detail {
struct Node;
}

// Immutable model of an H-infinity / Smirnov-class function: a small
// expression tree over structured leaves, with certificate metadata.
class HardyFunction {
public:
    static HardyFunction constant(Complex c);
    static HardyFunction structured(InnerSpec inner, OuterData outer);
    static HardyFunction rational(RationalFunction f,
                                  std::optional<double> halfplane_alpha = std::nullopt);
    static HardyFunction one_minus_z();
    // exp(-c (1-z)^{-alpha}), 0 < alpha < 1 (bounded outer by catalog)
    static HardyFunction exp_neg_power(double c, double alpha);
    // exp(-c / (1-z)) = e^{-c/2} x singular atom at 1 with mass c/2
    static HardyFunction exp_neg_c_over_one_minus_z(double c);
    static HardyFunction product(const HardyFunction& a, const HardyFunction& b);
    static HardyFunction power(const HardyFunction& base, double c);
    static HardyFunction power_fn_node(const HardyFunction& base, const HardyFunction& exponent);

    Complex eval(Complex z) const;
    // log f via structural branch data (never log of eval); requires zero_free()
    Complex log_eval(Complex z) const;
    bool zero_free() const;
    bool has_declared_inner() const;
    std::vector<Complex> declared_blaschke_zeros() const;
    double declared_singular_mass() const;

    // boundary machinery (a.e. values)
    double boundary_log_abs(double theta) const;
    bool has_boundary_arg() const;
    double boundary_arg(double theta) const;
    // boundary value rebuilt from structural modulus/argument data
    Complex boundary_value_internal(double theta) const;
    double boundary_mean_log(std::size_t grid = kDefaultGridSize) const;
    double boundary_sup(std::size_t grid = std::size_t{1} << 14) const;

    // structural flags feeding phi^psi certificates
    bool arg_l1() const;       // arg f integrable on the circle
    bool arg_bounded() const;  // arg f essentially bounded
    bool bounded_certified() const;

    OuterStatus status() const { return status_; }
    HardyFunction with_status(OuterStatus s) const;
    const detail::Node& node() const;

private:
    explicit HardyFunction(std::shared_ptr<const detail::Node> node,
                           OuterStatus status = OuterStatus::Uncertified)
        : node_(std::move(node)), status_(status) {}
    std::shared_ptr<const detail::Node> node_;
    OuterStatus status_ = OuterStatus::Uncertified;
};

namespace detail {

struct ConstNode {
    Complex c;
};
struct StructuredNode {
    InnerSpec inner;
    OuterData outer;
};
struct RationalNode {
    RationalFunction f;
    // alpha with Re(e^{-i alpha} f) > 0 on the disk, when structurally known;
    // fixes the branch of log f
    std::optional<double> halfplane_alpha;
};
struct ClosedFormNode {
    enum class Kind { OneMinusZ, ExpNegPower } kind;  // 1-z  /  exp(-c (1-z)^{-alpha})
    double c = 1.0;
    double alpha = 0.5;
};
struct ProductNode {
    HardyFunction a, b;
};
struct PowerNode {
    HardyFunction base;
    double c;
};
struct PowerFnNode {
    HardyFunction base, exponent;
};

struct Node {
    std::variant<ConstNode, StructuredNode, RationalNode, ClosedFormNode, ProductNode, PowerNode,
                 PowerFnNode>
        v;
};

}  // namespace detail

// Outer function with boundary log-modulus W: exp of the Herglotz integral.
HardyFunction outer_from_log_modulus(const BoundaryFunction& w);
// W = scale * h(|t|) for a catalog profile (scale defaults to -1).
HardyFunction outer_from_log_modulus(const WeightProfile& h, double scale = -1.0);

struct DeficitReport {
    double boundary_mean_log = 0.0;
    double log_mod_at_0 = 0.0;
    double blaschke_mass = 0.0;           // sum log(1/|z_j|) over declared zeros
    double singular_mass_estimate = 0.0;  // the deficit
    double deficit = 0.0;
};

// deficit = boundary mean of log|f| - log|f(0)| - declared Blaschke mass.
// Zero (within tolerance) certifies consistency with outerness; positive
// values estimate undeclared singular mass.
DeficitReport outer_deficit(const HardyFunction& f, std::size_t grid = kDefaultGridSize);

// f^c for certified outer f, c > 0.
HardyFunction power_outer(const HardyFunction& f, double c);

// phi^psi = exp(psi log phi).  Certification follows the structural flags:
// arg phi integrable => outer; additionally Re psi > 0 certified and arg phi
// bounded => bounded outer.  Anything less yields Uncertified.
HardyFunction power_fn(const HardyFunction& phi, const HardyFunction& psi,
                       bool psi_positive_certified = false);

}  // namespace hardy
