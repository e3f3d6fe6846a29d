#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Guard band on |lambda| keeping quadrature conditioned.
inline constexpr double kBoundaryGuard = 1e-12;

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input, violated precondition, schema failure.  CLI exit code 1.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

// Mathematically infeasible instance (e.g. Pick matrix not PSD after the
// validation ladder) or a result that could not be certified.  Exit code 2.
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& what) : Error(what) {}
};

// Numerical failure: quadrature divergence, accuracy loss near the boundary,
// sandwich violation.  Exit code 3.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(what) {}
};

struct Tolerances {
    double outer_deficit = 1e-6;   // |deficit| below which a model is outer-consistent
    double residual_rel = 1e-6;    // relative interpolation residual
    double schur_residual = 1e-8;  // relative residual for the Schur recursion
    double psd_floor = 1e-10;      // eigenvalue floor scale for the Pick test
    double decay_tail = 1e-2;      // radial decay tail threshold
    double grid_eval = 1e-10;      // grid quadrature target
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}

inline bool in_open_disk(Complex z, double guard = 0.0) {
    return std::abs(z) < 1.0 - guard;
}

}  // namespace hardy
