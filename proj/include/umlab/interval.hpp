#ifndef UMLAB_INTERVAL_HPP
#define UMLAB_INTERVAL_HPP

#include "umlab/numbers.hpp"

#include <string>

namespace umlab {

// Endpoint bit budget: results of interval arithmetic are rounded outward to
// dyadic rationals once an endpoint exceeds this many bits, so iterated
// computations cannot blow up endpoint sizes. Containment is never weakened.
unsigned endpoint_bit_budget();
void set_endpoint_bit_budget(unsigned bits);

// Raises the budget for the lifetime of a computation that needs endpoints
// finer than the ambient setting; never lowers it.
struct ScopedEndpointBudget {
    unsigned saved;
    explicit ScopedEndpointBudget(unsigned bits) : saved(endpoint_bit_budget()) {
        if (bits > saved) set_endpoint_bit_budget(bits);
    }
    ~ScopedEndpointBudget() { set_endpoint_bit_budget(saved); }
    ScopedEndpointBudget(const ScopedEndpointBudget&) = delete;
    ScopedEndpointBudget& operator=(const ScopedEndpointBudget&) = delete;
};

// Closed interval with exact rational endpoints. The defining contract of
// every operation: the result contains the exact image of the inputs.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h);
    static Interval point(const Rational& v) { return Interval(v, v); }

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool strictly_positive() const { return sgn(lo) > 0; }
    bool strictly_negative() const { return sgn(hi) < 0; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

    std::string str() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b); // b must exclude 0
Interval operator+(const Interval& a, const Rational& b);
Interval operator-(const Interval& a, const Rational& b);
Interval operator*(const Interval& a, const Rational& b);

Interval abs(const Interval& a);
Interval square(const Interval& a);
Interval pow(const Interval& a, long e);
Interval hull(const Interval& a, const Interval& b);
// Empty intersection is a caller error; test with intersects() first.
Interval intersect(const Interval& a, const Interval& b);
// Unconditional outward dyadic rounding of both endpoints to ~bits.
Interval round_outward(const Interval& a, unsigned bits);

// Transcendental endpoints, outward-rounded at `bits` working precision.
Interval log_interval(const Interval& a, unsigned bits);   // needs lo > 0
Interval exp_interval(const Interval& a, unsigned bits);
Interval sqrt_interval(const Interval& a, unsigned bits);  // needs lo >= 0
// n-th root. Even n requires lo > 0; odd n is defined on the whole line.
// Inputs straddling 0 with even n are rejected, not split.
Interval nth_root(const Interval& a, unsigned long n, unsigned bits);
// cos/sin on [a], rigorous for any width (Lipschitz fallback around midpoint).
Interval cos_interval(const Interval& a, unsigned bits);
Interval sin_interval(const Interval& a, unsigned bits);
Interval pi_interval(unsigned bits);

// Axis-aligned box enclosing a complex value.
struct ComplexBox {
    Interval re;
    Interval im;

    ComplexBox() = default;
    ComplexBox(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
    static ComplexBox point(const Rational& r, const Rational& i) {
        return ComplexBox(Interval::point(r), Interval::point(i));
    }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool is_real_line() const { return im.lo == 0 && im.hi == 0; }
    Rational max_side() const { return std::max(re.width(), im.width()); }
    bool contains_box(const ComplexBox& inner) const;
    bool intersects(const ComplexBox& o) const {
        return re.intersects(o.re) && im.intersects(o.im);
    }
    std::string str() const;
};

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator/(const ComplexBox& a, const ComplexBox& b); // |b| must exclude 0
ComplexBox shift(const ComplexBox& a, const Rational& re, const Rational& im = Rational(0));

Interval abs_squared(const ComplexBox& a);
Interval abs_box(const ComplexBox& a, unsigned bits);

ComplexBox hull(const ComplexBox& a, const ComplexBox& b);
ComplexBox intersect(const ComplexBox& a, const ComplexBox& b);

} // namespace umlab

#endif
