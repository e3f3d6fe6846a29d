#pragma once

#include <vector>

#include "hardy/common.hpp"

namespace hardy {

// Dense polynomial with complex coefficients, ascending order.
using Poly = std::vector<Complex>;

Complex poly_eval(const Poly& p, Complex z);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Complex s);
Poly poly_mul(const Poly& a, const Poly& b);
int poly_degree(const Poly& p);

// Quotient of two polynomials.  Evaluable on the closed disk away from
// denominator zeros.
class RationalFunction {
public:
    RationalFunction(Poly num, Poly den);
    static RationalFunction constant(Complex c);

    Complex eval(Complex z) const;
    // a + b * f
    RationalFunction affine(Complex a, Complex b) const;
    RationalFunction multiply(const RationalFunction& other) const;
    int degree() const;

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    // min |den| over a circle grid; zero-free denominators on the closed disk
    // keep evaluation stable up to the boundary
    double min_denominator_on_circle(std::size_t grid = 4096) const;

private:
    Poly num_, den_;
};

}  // namespace hardy
