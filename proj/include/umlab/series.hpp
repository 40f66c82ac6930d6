#ifndef UMLAB_SERIES_HPP
#define UMLAB_SERIES_HPP

#include "umlab/interval.hpp"
#include "umlab/numbers.hpp"

#include <string>
#include <vector>

namespace umlab::certify {

// The approximation series alpha_n = sum_{j<=n} b^{-e_j} with strictly
// increasing positive integer exponents, indexed from n = 1. The factorial
// kind is e_n = n!; the list kind certifies any series extending the listed
// exponents (tail bounds below are valid for every strictly increasing
// continuation).
struct LiouvilleSeries {
    enum class Kind { factorial, list };

    unsigned long base = 2;
    Kind kind = Kind::factorial;
    std::vector<unsigned long> exponents; // used by Kind::list

    static LiouvilleSeries factorial(unsigned long base);
    static LiouvilleSeries from_list(unsigned long base, std::vector<unsigned long> exponents);

    // e_n, n >= 1
    unsigned long exponent(unsigned long n) const;
    // Largest n with e_{n+1} available (list kind); unbounded for factorial
    // up to the overflow guard.
    unsigned long max_row() const;

    // alpha_n, exact and in lowest terms (the j = n term makes the numerator
    // congruent to 1 mod b, so the denominator is exactly b^{e_n}).
    Rational partial_sum(unsigned long n) const;

    // Exact enclosure of lambda - alpha_n:
    // [b^{-e_{n+1}}, (b/(b-1)) * b^{-e_{n+1}}].
    Interval tail_enclosure(unsigned long n) const;

    // [alpha_K, alpha_K + tail_hi(K)] contains lambda.
    Interval lambda_enclosure(unsigned long level) const;

    // v_n = (e_{n+1} - 1)/e_n: the exponent certified by the tail bound,
    // since (b/(b-1)) * b^{-e_{n+1}} <= b^{-(e_{n+1}-1)} = e^{-v_n h(alpha_n)}
    // (equality for b = 2).
    Rational v_lower(unsigned long n) const;

    // bits needed for the row-n tail; used against the denominator budget
    double bits_for_row(unsigned long n) const;

    std::string describe() const;
};

} // namespace umlab::certify

#endif
