#ifndef UMLAB_ALGEBRAIC_HPP
#define UMLAB_ALGEBRAIC_HPP

#include "umlab/interval.hpp"
#include "umlab/intpoly.hpp"

#include <optional>
#include <vector>

namespace umlab::exactnum {

using polyring::IntPoly;

// Interval/box evaluation of integer polynomials (Horner).
Interval eval_interval(const IntPoly& f, const Interval& x);
ComplexBox eval_box(const IntPoly& f, const ComplexBox& z);

// Exact evaluation at a Gaussian rational.
std::pair<Rational, Rational> eval_gaussian(const IntPoly& f, const Rational& re,
                                            const Rational& im);

// Number of roots of f (with multiplicity) strictly inside the box, by the
// argument principle: the boundary is subdivided until the image of each
// sub-segment excludes zero, then the winding number of the exact polygonal
// image path is counted with rational crossing tests.
// Throws if a root is on (or indistinguishably near) the boundary.
int winding_number(const IntPoly& f, const ComplexBox& box);

// Number of real roots of squarefree f in (a, b], by Sturm's theorem.
int sturm_count(const IntPoly& f, const Rational& a, const Rational& b);

// Cauchy bound: all complex roots have modulus < bound.
Rational root_modulus_bound(const IntPoly& f);

// Isolating boxes for all distinct roots of f (squarefree part is taken
// internally). Real roots come back with im = [0,0]; non-real roots in
// conjugate pairs with boxes strictly off the real axis. Deterministic order:
// real ascending, then pairs by increasing real midpoint (upper first).
std::vector<ComplexBox> isolate_roots(const IntPoly& f);

// An exact algebraic number: primitive integer minimal polynomial with
// positive leading coefficient plus an isolating box containing exactly one
// of its roots. Irreducibility is a certified flag, never assumed.
struct AlgebraicNumber {
    IntPoly minpoly;
    ComplexBox isolator;
    bool irreducible_certified = false;
    std::string irreducibility_reason;

    static AlgebraicNumber from_rational(const Rational& r);
    bool is_rational() const { return minpoly.degree() == 1; }
    bool is_real() const { return isolator.is_real_line(); }
    long degree() const { return minpoly.degree(); }
};

// Checks the defining invariant (exactly one root in the isolator; squarefree
// minpoly); throws on violation.
void validate(const AlgebraicNumber& x);

// Shrinks the isolator until its widest side is <= target_width. Interval
// Newton with bisection fallback; the minimal polynomial is unchanged.
AlgebraicNumber refine_isolator(const AlgebraicNumber& x, const Rational& target_width);

// Same-root test for two validated algebraic numbers.
bool same_algebraic_number(const AlgebraicNumber& a, const AlgebraicNumber& b);

// gamma + r exactly: translated minpoly, shifted isolator.
AlgebraicNumber translate(const AlgebraicNumber& x, const Rational& r);

} // namespace umlab::exactnum

#endif
