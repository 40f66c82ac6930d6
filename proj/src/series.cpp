#include "umlab/series.hpp"

#include <cmath>

namespace umlab::certify {

LiouvilleSeries LiouvilleSeries::factorial(unsigned long base) {
    if (base < 2) throw Error("series base must be >= 2");
    LiouvilleSeries s;
    s.base = base;
    s.kind = Kind::factorial;
    return s;
}

LiouvilleSeries LiouvilleSeries::from_list(unsigned long base, std::vector<unsigned long> exps) {
    if (base < 2) throw Error("series base must be >= 2");
    if (exps.empty()) throw Error("exponent list must be non-empty");
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0 || (i > 0 && exps[i] <= exps[i - 1]))
            throw Error("exponents must be strictly increasing positive integers");
    }
    LiouvilleSeries s;
    s.base = base;
    s.kind = Kind::list;
    s.exponents = std::move(exps);
    return s;
}

unsigned long LiouvilleSeries::exponent(unsigned long n) const {
    if (n < 1) throw Error("series rows are indexed from 1");
    if (kind == Kind::factorial) {
        if (n > 20) throw Error("factorial exponent overflow for n = " + std::to_string(n));
        unsigned long e = 1;
        for (unsigned long k = 2; k <= n; ++k) e *= k;
        return e;
    }
    if (n > exponents.size())
        throw Error("exponent list has no entry for n = " + std::to_string(n));
    return exponents[n - 1];
}

unsigned long LiouvilleSeries::max_row() const {
    if (kind == Kind::factorial) return 19;
    return exponents.size() >= 2 ? exponents.size() - 1 : 0;
}

Rational LiouvilleSeries::partial_sum(unsigned long n) const {
    const unsigned long en = exponent(n);
    Int numerator(0);
    const Int b(base);
    for (unsigned long j = 1; j <= n; ++j)
        numerator += pow_int(b, en - exponent(j));
    return make_rational(numerator, pow_int(b, en));
}

Interval LiouvilleSeries::tail_enclosure(unsigned long n) const {
    const unsigned long next = exponent(n + 1);
    const Rational lo = make_rational(Int(1), pow_int(Int(base), next));
    const Rational hi = lo * Rational(base, base - 1);
    return Interval(lo, hi);
}

Interval LiouvilleSeries::lambda_enclosure(unsigned long level) const {
    const Rational a = partial_sum(level);
    return Interval(a, a + tail_enclosure(level).hi);
}

Rational LiouvilleSeries::v_lower(unsigned long n) const {
    return make_rational(Int(exponent(n + 1) - 1), Int(exponent(n)));
}

double LiouvilleSeries::bits_for_row(unsigned long n) const {
    return static_cast<double>(exponent(n + 1)) * std::log2(static_cast<double>(base));
}

std::string LiouvilleSeries::describe() const {
    if (kind == Kind::factorial) return "base " + std::to_string(base) + ", e_n = n!";
    return "base " + std::to_string(base) + ", listed exponents (" +
           std::to_string(exponents.size()) + " entries)";
}

} // namespace umlab::certify
