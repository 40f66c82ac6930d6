#ifndef UMLAB_INTPOLY_HPP
#define UMLAB_INTPOLY_HPP

#include "umlab/numbers.hpp"

#include <string>
#include <vector>

namespace umlab::polyring {

using umlab::Int;
using umlab::Rational;

// Dense univariate polynomial over Z, coefficients low-to-high, highest
// coefficient nonzero unless the zero polynomial.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const Int& c);
    static IntPoly monomial(const Int& c, size_t k);
    // X - r cleared to integers: den*X - num.
    static IntPoly linear_root(const Rational& r);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Int& lc() const;
    const Int& operator[](size_t i) const { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }

    Int content() const;             // >= 0; 0 only for the zero polynomial
    IntPoly primitive_part() const;  // content removed, lc > 0
    bool is_primitive() const;
    IntPoly derivative() const;

    Rational eval(const Rational& x) const;
    Int eval_int(const Int& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const Int& c) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    // Exact division; throws if the division leaves a remainder.
    IntPoly exact_div(const IntPoly& d) const;
    // Exact division by X^k; throws if any of the k low coefficients is nonzero.
    IntPoly shift_down(size_t k) const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Int> c_;
    void normalize();
};

// Polynomials over Q, used internally for Sturm sequences, Yun's algorithm
// and interpolation. Kept minimal.
using RatPoly = std::vector<Rational>;

RatPoly to_rat(const IntPoly& f);
IntPoly clear_denominators(const RatPoly& f); // primitive part, lc > 0 not forced
long rat_degree(const RatPoly& f);
RatPoly rat_derivative(const RatPoly& f);
RatPoly rat_mul(const RatPoly& a, const RatPoly& b);
RatPoly rat_sub(const RatPoly& a, const RatPoly& b);
// division with remainder over Q; quotient into *q if non-null
RatPoly rat_rem(const RatPoly& a, const RatPoly& b, RatPoly* q = nullptr);
Rational rat_eval(const RatPoly& f, const Rational& x);

struct MultiplicityProfile {
    struct Factor {
        IntPoly poly;  // primitive, squarefree, lc > 0
        unsigned mult; // >= 1
    };
    std::vector<Factor> factors; // pairwise coprime
    Rational unit;               // input == unit * prod poly^mult

    long simple_part_degree() const;
};

// Primitive gcd with positive leading coefficient, correct over Q.
// Primitive-part reduction at every pseudo-division step keeps coefficient
// growth near-linear.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

bool is_squarefree(const IntPoly& f);

// Yun decomposition into pairwise-coprime squarefree factors.
MultiplicityProfile squarefree_decomposition(const IntPoly& f);

// Number of simple zeros in the algebraic closure = degree of the
// multiplicity-one part of the Yun decomposition.
long count_simple_roots(const IntPoly& f);

// true iff a == c^p for some rational c (p prime; odd p allows negative a).
bool is_pth_power(const Rational& a, unsigned long p);

struct BinomialVerdict {
    bool irreducible;
    std::string reason; // failing prime witness or the -4c^4 witness when reducible
};

// Irreducibility of X^m - a over Q, decided by the binomial criterion
// (Lang, Algebra VI.9, which is an equivalence): irreducible iff a is not a
// p-th power for any prime p | m, and additionally a is not in -4*Q^4 when 4 | m.
BinomialVerdict binomial_irreducible(unsigned long m, const Rational& a);

// Res(f, g) = lc(f)^{deg g} * prod_{f(alpha)=0} g(alpha).
// Subresultant polynomial remainder sequence, no floating point.
Int resultant(const IntPoly& f, const IntPoly& g);

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), an integer for integer f.
Int discriminant(const IntPoly& f);

// D(X) = Res_Y(f(Y), f(Y+X)) / X^m for squarefree f of degree m >= 2.
// deg D = m(m-1); the roots of D are exactly the pairwise differences of
// distinct roots of f. The X^m division is checked to be exact.
IntPoly difference_polynomial(const IntPoly& f);

// Minimal-polynomial candidate of (root of f) + r: primitive part of
// den(r)^deg * f(X - r). Irreducible iff f is.
IntPoly translate_roots(const IntPoly& f, const Rational& r);

// f(c*X) cleared to primitive integer coefficients.
IntPoly scale_roots(const IntPoly& f, const Rational& c);

// Parses either a dense coefficient list "[a0,a1,...]" (low-to-high) or a
// human-readable sum of monomials like "x^2 - 2" / "3x^4+x-7/2".
// Rational coefficients are accepted but the cleared polynomial is returned.
IntPoly parse_poly(const std::string& text);

} // namespace umlab::polyring

#endif
