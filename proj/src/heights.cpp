#include "umlab/heights.hpp"

namespace umlab::exactnum {

LogExpr height_rational(const Rational& r) {
    if (sgn(r) == 0) return LogExpr::zero();
    Int n = abs(num(r));
    const Int& d = den(r);
    return LogExpr::log_of(n > d ? n : d);
}

LogExpr height_of_binomial_root(unsigned long m, const Rational& a,
                                const polyring::BinomialVerdict& certificate) {
    if (sgn(a) == 0) throw Error("binomial root of zero");
    if (!certificate.irreducible)
        throw Error("height_of_binomial_root requires a certified-irreducible binomial; "
                    "refusing (" + certificate.reason + ")");
    return height_rational(a) * Rational(1, static_cast<unsigned long>(m));
}

Rational LiouvilleBound::value_floor(unsigned bits) const {
    if (auto exact = log_bound.exp_exact()) return *exact;
    Interval e = log_bound.enclose(bits);
    Interval v = exp_interval(Interval::point(e.lo), bits);
    return v.lo;
}

LiouvilleBound liouville_lower_bound(long d, long d_prime, const LogExpr& h,
                                     const LogExpr& h_prime) {
    if (d < 1 || d_prime < 1) throw Error("Liouville bound needs degrees >= 1");
    LogExpr sum = h + h_prime + LogExpr::log_of(Int(2));
    return {sum * Rational(-(d * d_prime))};
}

Interval mahler_measure_enclosure(const polyring::IntPoly& f, unsigned bits) {
    if (f.degree() < 1) throw Error("Mahler measure enclosure needs degree >= 1");
    if (!polyring::is_squarefree(f))
        throw Error("Mahler measure enclosure expects a squarefree polynomial");
    const Rational eps = Rational(1) / pow_int(Int(2), bits);
    IntPoly norm = f.primitive_part();
    std::vector<ComplexBox> roots = isolate_roots(norm);
    Interval prod = Interval::point(abs(Rational(f.lc())));
    for (const ComplexBox& box : roots) {
        AlgebraicNumber x{norm, box, false, ""};
        ComplexBox tight = refine_isolator(x, eps).isolator;
        Interval mod = abs_box(tight, bits + 16);
        Interval clamped(std::max(mod.lo, Rational(1)), std::max(mod.hi, Rational(1)));
        prod = prod * clamped;
    }
    return prod;
}

Interval height_enclosure(const polyring::IntPoly& minpoly, unsigned bits) {
    Interval m = mahler_measure_enclosure(minpoly, bits);
    Interval lg = log_interval(m, bits + 16);
    return lg * Rational(1, static_cast<unsigned long>(minpoly.degree()));
}

} // namespace umlab::exactnum
