#ifndef UMLAB_HEIGHTS_HPP
#define UMLAB_HEIGHTS_HPP

#include "umlab/algebraic.hpp"
#include "umlab/logexpr.hpp"

namespace umlab::exactnum {

// Absolute logarithmic height of a reduced fraction: log max(|num|, den).
// Exact symbolic form; render floats from it, never the other way round.
LogExpr height_rational(const Rational& r);

// Height of the root of X^m - a for certified-irreducible X^m - a:
// exactly (1/m) * height(a), the Mahler-measure height of den*X^m - num.
// Uncertified input is rejected to prevent silent degree collapse.
LogExpr height_of_binomial_root(unsigned long m, const Rational& a,
                                const polyring::BinomialVerdict& certificate);

// Liouville's inequality: distinct algebraic numbers of degrees d, d' and
// heights h, h' satisfy |b - b'| >= exp(-d*d'*(h + h' + log 2)).
// Returns the exact exponent expression -d*d'*(h + h' + log 2); exp_floor
// gives a rational <= the true bound for grid comparisons.
struct LiouvilleBound {
    LogExpr log_bound; // exact exponent (a log-linear expression)
    Rational value_floor(unsigned bits = 192) const;
};

LiouvilleBound liouville_lower_bound(long d, long d_prime, const LogExpr& h,
                                     const LogExpr& h_prime);

// Certified enclosure of the Mahler measure |lc| * prod max(1, |root|) of a
// squarefree integer polynomial, via isolating boxes refined to `bits`.
Interval mahler_measure_enclosure(const polyring::IntPoly& f, unsigned bits = 128);

// Certified enclosure of the height (1/deg) * log(Mahler measure) of an
// algebraic number given by its (squarefree, primitive) minimal polynomial.
Interval height_enclosure(const polyring::IntPoly& minpoly, unsigned bits = 128);

} // namespace umlab::exactnum

#endif
