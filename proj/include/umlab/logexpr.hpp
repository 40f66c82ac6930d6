#ifndef UMLAB_LOGEXPR_HPP
#define UMLAB_LOGEXPR_HPP

#include "umlab/numbers.hpp"

#include <optional>
#include <vector>

namespace umlab {

struct Interval;

// Exact real number of the form c0 + sum_i coeff_i * log(base_i) with
// rational c0 and integer bases > 1. Heights and the exponents of certificate
// bounds are all of this shape, so inequalities between them can be decided
// without rounding disputes: canonical forms settle equality (logs of distinct
// primes together with 1 are linearly independent over Q), adaptive directed
// rounding settles the rest.
class LogExpr {
public:
    struct Term {
        Rational coeff; // nonzero
        Int base;       // > 1
    };

    LogExpr() = default;
    explicit LogExpr(const Rational& constant) : constant_(constant) {}

    static LogExpr zero() { return LogExpr(); }
    // coeff * log(base), base >= 1
    static LogExpr log_of(const Int& base, const Rational& coeff = Rational(1));
    // log |q| for q != 0, as log|num| - log(den)
    static LogExpr log_abs(const Rational& q);

    bool is_zero() const { return terms_.empty() && sgn(constant_) == 0; }
    const std::vector<Term>& terms() const { return terms_; }
    const Rational& constant() const { return constant_; }

    LogExpr operator+(const LogExpr& o) const;
    LogExpr operator-(const LogExpr& o) const;
    LogExpr operator-() const;
    LogExpr operator*(const Rational& c) const;

    bool operator==(const LogExpr& o) const;

    // Rational enclosure [lo, hi] of the value with ~bits of working precision.
    Interval enclose(unsigned bits) const;
    double to_double() const;
    std::string decimal(unsigned digits = 30) const;

    // exp(this) as an exact rational, when every term exponentiates to one.
    std::optional<Rational> exp_exact() const;

    // -1, 0, +1; escalates precision up to max_bits, then gives up (nullopt)
    // for values that are provably unequal in canonical form but too close to
    // separate within the budget.
    static std::optional<int> compare(const LogExpr& a, const LogExpr& b,
                                      unsigned max_bits = 1u << 20);

    // Three-way comparison that throws on budget exhaustion.
    static int compare_strict(const LogExpr& a, const LogExpr& b);

    bool operator<=(const LogExpr& o) const { return compare_strict(*this, o) <= 0; }
    bool operator<(const LogExpr& o) const { return compare_strict(*this, o) < 0; }
    bool operator>=(const LogExpr& o) const { return compare_strict(*this, o) >= 0; }
    bool operator>(const LogExpr& o) const { return compare_strict(*this, o) > 0; }

private:
    // Canonical: bases strictly increasing, coefficients nonzero, every base
    // stripped of prime factors below 1000 and of perfect-power structure
    // cheap enough to detect.
    Rational constant_ = Rational(0);
    std::vector<Term> terms_;

    void add_term(Rational coeff, Int base);
    void normalize();
};

inline LogExpr operator+(const Rational& c, const LogExpr& e) { return e + LogExpr(c); }

} // namespace umlab

#endif
