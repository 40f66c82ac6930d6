#include "umlab/interval.hpp"

#include <mpfr.h>

#include <atomic>

namespace umlab {

namespace {

std::atomic<unsigned> g_endpoint_bits{4096};

Rational maybe_round(const Rational& v, bool up) {
    const unsigned budget = g_endpoint_bits.load(std::memory_order_relaxed);
    if (rational_bit_size(v) <= budget) return v;
    return round_dyadic(v, budget, up);
}

struct Fr {
    mpfr_t x;
    explicit Fr(unsigned bits) { mpfr_init2(x, bits < 2 ? 2 : bits); }
    ~Fr() { mpfr_clear(x); }
    Fr(const Fr&) = delete;
    Fr& operator=(const Fr&) = delete;
};

Rational fr_to_rational(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rational(0);
    Int mant;
    const mp_exp_t e2 = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rational r(mant);
    if (e2 >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e2));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e2));
    }
    return r;
}

// Directed evaluation of a monotone increasing mpfr function on one endpoint.
template <typename F>
Rational endpoint_fn(const Rational& v, unsigned bits, bool up, F&& fn) {
    Fr in(bits + 8), out(bits);
    mpfr_set_q(in.x, v.get_mpq_t(), up ? MPFR_RNDU : MPFR_RNDD);
    fn(out.x, in.x, up ? MPFR_RNDU : MPFR_RNDD);
    return fr_to_rational(out.x);
}

} // namespace

unsigned endpoint_bit_budget() { return g_endpoint_bits.load(std::memory_order_relaxed); }
void set_endpoint_bit_budget(unsigned bits) {
    g_endpoint_bits.store(bits < 16 ? 16 : bits, std::memory_order_relaxed);
}

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw Error("interval with lo > hi: [" + to_string(lo) + ", " + to_string(hi) + "]");
}

std::string Interval::str() const {
    return "[" + to_string(lo) + ", " + to_string(hi) + "]";
}

namespace {
Interval rounded(Rational lo, Rational hi) {
    return Interval(maybe_round(lo, false), maybe_round(hi, true));
}
} // namespace

Interval operator+(const Interval& a, const Interval& b) { return rounded(a.lo + b.lo, a.hi + b.hi); }
Interval operator-(const Interval& a, const Interval& b) { return rounded(a.lo - b.hi, a.hi - b.lo); }
Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Rational lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (c[i] > hi) hi = c[i];
    }
    return rounded(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero())
        throw Error("interval division by an interval containing zero: " + b.str());
    Rational c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    Rational lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (c[i] > hi) hi = c[i];
    }
    return rounded(std::move(lo), std::move(hi));
}

Interval operator+(const Interval& a, const Rational& b) { return rounded(a.lo + b, a.hi + b); }
Interval operator-(const Interval& a, const Rational& b) { return rounded(a.lo - b, a.hi - b); }
Interval operator*(const Interval& a, const Rational& b) {
    if (sgn(b) >= 0) return rounded(a.lo * b, a.hi * b);
    return rounded(a.hi * b, a.lo * b);
}

Interval abs(const Interval& a) {
    if (sgn(a.lo) >= 0) return a;
    if (sgn(a.hi) <= 0) return Interval(-a.hi, -a.lo);
    return Interval(Rational(0), std::max(Rational(-a.lo), a.hi));
}

Interval square(const Interval& a) {
    Interval m = abs(a);
    return rounded(m.lo * m.lo, m.hi * m.hi);
}

Interval pow(const Interval& a, long e) {
    if (e == 0) return Interval::point(Rational(1));
    if (e < 0) return Interval::point(Rational(1)) / pow(a, -e);
    Interval r = Interval::point(Rational(1));
    Interval base = a;
    unsigned long k = static_cast<unsigned long>(e);
    // Correlated powers: even exponent tightened via square().
    if (k % 2 == 0) {
        base = square(a);
        k /= 2;
    }
    while (k > 0) {
        if (k & 1) r = r * base;
        base = square(base);
        k >>= 1;
    }
    return r;
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Interval intersect(const Interval& a, const Interval& b) {
    if (!a.intersects(b)) throw Error("empty interval intersection");
    return Interval(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}

Interval round_outward(const Interval& a, unsigned bits) {
    return Interval(round_dyadic(a.lo, bits, false), round_dyadic(a.hi, bits, true));
}

Interval log_interval(const Interval& a, unsigned bits) {
    if (sgn(a.lo) <= 0) throw Error("log of interval not strictly positive: " + a.str());
    return Interval(endpoint_fn(a.lo, bits, false, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_log(o, i, r); }),
                    endpoint_fn(a.hi, bits, true, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_log(o, i, r); }));
}

Interval exp_interval(const Interval& a, unsigned bits) {
    return Interval(endpoint_fn(a.lo, bits, false, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_exp(o, i, r); }),
                    endpoint_fn(a.hi, bits, true, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_exp(o, i, r); }));
}

Interval sqrt_interval(const Interval& a, unsigned bits) {
    if (sgn(a.lo) < 0) throw Error("sqrt of interval with negative part: " + a.str());
    return Interval(endpoint_fn(a.lo, bits, false, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_sqrt(o, i, r); }),
                    endpoint_fn(a.hi, bits, true, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_sqrt(o, i, r); }));
}

Interval nth_root(const Interval& a, unsigned long n, unsigned bits) {
    if (n == 0) throw Error("zeroth root");
    if (n == 1) return a;
    if (n % 2 == 0 && sgn(a.lo) <= 0)
        throw Error("even root of interval not strictly positive: " + a.str());
    auto root = [n](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_rootn_ui(o, i, n, r); };
    // mpfr_rootn_ui handles negative odd-n inputs with the real branch.
    return Interval(endpoint_fn(a.lo, bits, false, root), endpoint_fn(a.hi, bits, true, root));
}

Interval pi_interval(unsigned bits) {
    Fr lo(bits), hi(bits);
    mpfr_const_pi(lo.x, MPFR_RNDD);
    mpfr_const_pi(hi.x, MPFR_RNDU);
    return Interval(fr_to_rational(lo.x), fr_to_rational(hi.x));
}

namespace {

// cos/sin are 1-Lipschitz: evaluate at the midpoint with directed rounding and
// widen by the radius. Tight enough for the narrow arguments used here.
template <typename F>
Interval lipschitz1(const Interval& a, unsigned bits, F&& fn) {
    const Rational m = a.mid();
    const Rational r = a.width() / 2;
    Fr in(bits + 8), lo(bits), hi(bits);
    mpfr_set_q(in.x, m.get_mpq_t(), MPFR_RNDN);
    // |m - rounded(m)| <= ulp; absorb into an extra outward margin.
    fn(lo.x, in.x, MPFR_RNDD);
    fn(hi.x, in.x, MPFR_RNDU);
    Rational margin = r + round_dyadic(Rational(1), 8, true) / pow_int(Int(2), bits > 16 ? bits - 8 : 8);
    return Interval(fr_to_rational(lo.x) - margin, fr_to_rational(hi.x) + margin);
}

} // namespace

Interval cos_interval(const Interval& a, unsigned bits) {
    return lipschitz1(a, bits, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_cos(o, i, r); });
}

Interval sin_interval(const Interval& a, unsigned bits) {
    return lipschitz1(a, bits, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { mpfr_sin(o, i, r); });
}

bool ComplexBox::contains_box(const ComplexBox& inner) const {
    return re.lo <= inner.re.lo && inner.re.hi <= re.hi && im.lo <= inner.im.lo &&
           inner.im.hi <= im.hi;
}

std::string ComplexBox::str() const { return re.str() + " + i*" + im.str(); }

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(a.re + b.re, a.im + b.im);
}

ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(a.re - b.re, a.im - b.im);
}

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
    Interval d = abs_squared(b);
    if (d.contains_zero())
        throw Error("complex box division by a box whose modulus may vanish: " + b.str());
    return ComplexBox((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

ComplexBox shift(const ComplexBox& a, const Rational& re, const Rational& im) {
    return ComplexBox(a.re + re, a.im + im);
}

Interval abs_squared(const ComplexBox& a) { return square(a.re) + square(a.im); }

Interval abs_box(const ComplexBox& a, unsigned bits) {
    if (a.is_real_line()) return abs(a.re);
    return sqrt_interval(abs_squared(a), bits);
}

ComplexBox hull(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(hull(a.re, b.re), hull(a.im, b.im));
}

ComplexBox intersect(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(intersect(a.re, b.re), intersect(a.im, b.im));
}

} // namespace umlab
